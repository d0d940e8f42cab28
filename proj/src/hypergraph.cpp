#include "tsym/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "tsym/error.hpp"

namespace tsym {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

Hypergraph::Hypergraph(int n, int m, std::vector<Edge> edges)
    : n_(n), m_(m), edges_(std::move(edges)) {
  if (n_ < 1) throw ParameterError("hypergraph needs at least one vertex");
  if (m_ < 2) throw ParameterError("edge size must be at least 2");
  std::set<Edge> seen;
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != m_)
      throw ParameterError("edge of size " + std::to_string(e.size()) +
                           " in a " + std::to_string(m_) + "-uniform hypergraph");
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw ParameterError("edge with a repeated vertex");
    if (e.front() < 0 || e.back() >= n_)
      throw ParameterError("vertex label out of range");
    if (!seen.insert(e).second) throw ParameterError("duplicate edge");
  }
}

Hypergraph Hypergraph::from_labels(int n, int m,
                                   const std::vector<std::vector<int>>& edges) {
  std::vector<Edge> shifted;
  shifted.reserve(edges.size());
  for (const auto& e : edges) {
    Edge z;
    for (int v : e) z.push_back(v - 1);
    shifted.push_back(std::move(z));
  }
  return Hypergraph(n, m, std::move(shifted));
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_)
    for (int v : e) ++deg[v];
  return deg;
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
  return std::find(edges_.begin(), edges_.end(), sorted_edge) != edges_.end();
}

Hypergraph build_generalized_power(const GeneralizedPowerSpec& spec) {
  const Hypergraph& base = spec.base;
  const int t = base.m();
  if (spec.m <= t) throw ParameterError("generalized power needs m > t");
  if (spec.s < 1 || t * spec.s > spec.m)
    throw ParameterError("generalized power needs 1 <= s and t*s <= m");
  const int s = spec.s;
  const int filler = spec.m - t * s;
  const int n = s * base.n() + filler * static_cast<int>(base.edge_count());

  std::vector<Edge> edges;
  int next_filler = s * base.n();
  for (const auto& e : base.edges()) {
    Edge big;
    for (int v : e)
      for (int k = 0; k < s; ++k) big.push_back(v * s + k);
    for (int k = 0; k < filler; ++k) big.push_back(next_filler++);
    edges.push_back(std::move(big));
  }
  return Hypergraph(n, spec.m, std::move(edges));
}

bool is_connected(const Hypergraph& g) {
  UnionFind uf(g.n());
  for (const auto& e : g.edges())
    for (std::size_t k = 1; k < e.size(); ++k) uf.unite(e[0], e[k]);
  const int root = uf.find(0);
  for (int v = 1; v < g.n(); ++v)
    if (uf.find(v) != root) return false;
  return true;
}

std::optional<PhmBipartition> find_p_hm_bipartition(const Hypergraph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> incident(n);
  for (std::size_t k = 0; k < g.edges().size(); ++k)
    for (int v : g.edges()[k]) incident[v].push_back(static_cast<int>(k));

  for (int p = 1; p <= g.m() - 1; ++p) {
    std::vector<int> inside(g.edge_count(), 0);
    std::vector<int> undecided(g.edge_count(), g.m());
    std::vector<char> chosen(n, 0);
    int chosen_count = 0;

    std::function<bool(int)> search = [&](int v) -> bool {
      if (v == n) return chosen_count > 0 && chosen_count < n;
      for (int take : {1, 0}) {
        bool ok = true;
        for (int k : incident[v]) {
          --undecided[k];
          inside[k] += take;
        }
        for (int k : incident[v])
          if (inside[k] > p || inside[k] + undecided[k] < p) ok = false;
        chosen[v] = static_cast<char>(take);
        chosen_count += take;
        if (ok && search(v + 1)) return true;
        chosen_count -= take;
        for (int k : incident[v]) {
          ++undecided[k];
          inside[k] -= take;
        }
      }
      return false;
    };

    if (search(0)) {
      PhmBipartition result{{}, p};
      for (int v = 0; v < n; ++v)
        if (chosen[v]) result.part.push_back(v);
      return result;
    }
  }
  return std::nullopt;
}

bool contains_simplex(const Hypergraph& g) {
  const int n = g.n();
  const int k = g.m() + 1;
  if (k > n) return false;
  std::set<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    bool all = true;
    for (int skip = 0; skip < k && all; ++skip) {
      Edge face;
      for (int i = 0; i < k; ++i)
        if (i != skip) face.push_back(subset[i]);
      all = edges.count(face) > 0;
    }
    if (all) return true;
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m)) throw ParseError("expected header 'n m'", lineno);
      std::string rest;
      if (ls >> rest) throw ParseError("trailing text after header", lineno);
      if (n < 1 || m < 2) throw ParseError("header needs n >= 1 and m >= 2", lineno);
      continue;
    }
    Edge e;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        e.push_back(v - 1);
      } catch (const std::exception&) {
        throw ParseError("bad vertex label '" + tok + "'", lineno);
      }
    }
    if (static_cast<int>(e.size()) != m)
      throw ParseError("expected " + std::to_string(m) + " labels, got " +
                           std::to_string(e.size()),
                       lineno);
    for (int v : e)
      if (v < 0 || v >= n) throw ParseError("vertex label out of range", lineno);
    edges.push_back(std::move(e));
    edge_lines.push_back(lineno);
  }
  if (n < 0) throw ParseError("empty input: missing 'n m' header", lineno + 1);
  std::set<Edge> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    Edge sorted = edges[k];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("edge repeats a vertex", edge_lines[k]);
    if (!seen.insert(sorted).second) throw ParseError("duplicate edge", edge_lines[k]);
  }
  return Hypergraph(n, m, std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k] + 1;
    out << '\n';
  }
}

Hypergraph complete_graph(int n) { return complete_hypergraph(n, 2); }

Hypergraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Hypergraph(n, 2, std::move(edges));
}

Hypergraph complete_hypergraph(int n, int m) {
  std::vector<Edge> edges;
  std::vector<int> subset(m);
  std::iota(subset.begin(), subset.end(), 0);
  if (m > n) return Hypergraph(n, m, {});
  while (true) {
    edges.push_back(subset);
    int i = m - 1;
    while (i >= 0 && subset[i] == n - m + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
  }
  return Hypergraph(n, m, std::move(edges));
}

}  // namespace tsym
