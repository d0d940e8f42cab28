#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tsym {

/// An edge is a sorted list of distinct 0-based vertex indices.
using Edge = std::vector<int>;

/// An m-uniform hypergraph on vertices 0..n-1.
///
/// Text files and reports use 1-based labels; everything in memory is
/// 0-based. Construction validates uniformity, ranges and rejects duplicate
/// edges (traces assume a set of edges).
class Hypergraph {
 public:
  Hypergraph(int n, int m, std::vector<Edge> edges);

  /// Same as the constructor but takes 1-based vertex labels.
  static Hypergraph from_labels(int n, int m,
                                const std::vector<std::vector<int>>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::vector<int> degrees() const;
  bool has_edge(const Edge& sorted_edge) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  int m_;
  std::vector<Edge> edges_;
};

/// Parameters of the generalized power G^{m,s} of a t-uniform base.
struct GeneralizedPowerSpec {
  Hypergraph base;
  int m;
  int s;
};

/// Blows each base vertex into an s-set and pads each edge with its own
/// (m - t*s)-set. Vertex layout: vertex v of the base becomes labels
/// v*s .. v*s+s-1, then the filler sets follow in base edge order.
Hypergraph build_generalized_power(const GeneralizedPowerSpec& spec);

bool is_connected(const Hypergraph& g);

struct PhmBipartition {
  std::vector<int> part;  // V1, sorted, 0-based
  int p;
};

/// Finds a vertex set V1 meeting every edge in exactly p vertices,
/// 1 <= p <= m-1, with V1 a nonempty proper subset. Minimizes p; among
/// equal p prefers earlier vertices in V1 (depth-first, include-first).
/// Exhaustive backtracking, practical up to roughly n = 30.
std::optional<PhmBipartition> find_p_hm_bipartition(const Hypergraph& g);

/// True iff some m+1 vertices have all of their m-subsets as edges.
bool contains_simplex(const Hypergraph& g);

/// Reads the `n m` header followed by one edge of m 1-based labels per line.
/// `#` starts a comment line.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph load_hypergraph(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& g);

// Small named families used by tests, the CLI and the acceptance suite.
Hypergraph complete_graph(int n);
Hypergraph cycle_graph(int n);
/// All m-subsets of n vertices.
Hypergraph complete_hypergraph(int n, int m);

}  // namespace tsym
