#pragma once

// Shared fixtures and brute-force oracles. Nothing here calls the engine
// code it is used to check.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tsym/hypergraph.hpp"
#include "tsym/rational.hpp"
#include "tsym/tensor.hpp"

namespace tsym::test {

inline SparseTensor cyclic_triple_tensor() {
  SparseTensor a(3, 6);
  for (int i = 0; i < 6; ++i) a.set({i, (i + 1) % 6, (i + 2) % 6}, 1);
  return a;
}

inline Hypergraph cyclic_triple_hypergraph() {
  return Hypergraph::from_labels(6, 3, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 1}, {6, 1, 2}});
}

inline Hypergraph single_edge(int m) {
  Edge e(m);
  std::iota(e.begin(), e.end(), 0);
  return Hypergraph(m, m, {e});
}

inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(c);
      return;
    }
    for (int v = start; v < n; ++v) {
      c[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Smallest sorted edge list over all vertex relabelings.
inline std::vector<Edge> canonical_form(int n, const std::vector<Edge>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  do {
    std::vector<Edge> mapped;
    for (const auto& e : edges) {
      Edge f;
      for (int v : e) f.push_back(perm[v]);
      std::sort(f.begin(), f.end());
      mapped.push_back(f);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool connected_edges(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges)
    for (int v : e) parent[find(v)] = find(e[0]);
  for (int v = 0; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

// Connected m-uniform hypergraphs on exactly n vertices (no isolated
// vertices), one per isomorphism class.
inline std::vector<Hypergraph> connected_uniform_corpus(int n, int m) {
  auto all = combinations(n, m);
  std::set<std::vector<Edge>> seen;
  std::vector<Hypergraph> out;
  const std::size_t total = all.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << total); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < total; ++k)
      if (mask >> k & 1) edges.push_back(all[k]);
    if (!connected_edges(n, edges)) continue;
    auto canon = canonical_form(n, edges);
    if (seen.insert(canon).second) out.emplace_back(n, m, canon);
  }
  return out;
}

inline std::vector<Hypergraph> connected_uniform_corpus_upto(int n_max, int m) {
  std::vector<Hypergraph> out;
  for (int n = m; n <= n_max; ++n) {
    auto part = connected_uniform_corpus(n, m);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

using Arcs = std::map<std::pair<int, int>, int>;

// Closed walks using each arc exactly its multiplicity, parallel arcs
// indistinguishable, counted as vertex sequences; from_every_start counts a
// walk once per starting position, otherwise walks start at the smallest
// vertex.
inline Integer brute_walks(const Arcs& arcs, bool from_every_start) {
  if (arcs.empty()) return 0;
  int total = 0;
  std::set<int> vertices;
  for (const auto& [arc, mult] : arcs) {
    total += mult;
    vertices.insert(arc.first);
    vertices.insert(arc.second);
  }
  Arcs left = arcs;
  Integer count = 0;
  std::function<void(int, int, int)> dfs = [&](int start, int at, int used) {
    if (used == total) {
      if (at == start) ++count;
      return;
    }
    for (auto& [arc, mult] : left) {
      if (arc.first != at || mult == 0) continue;
      --mult;
      dfs(start, arc.second, used + 1);
      ++mult;
    }
  };
  if (from_every_start) {
    for (int v : vertices) dfs(v, v, 0);
  } else {
    dfs(*vertices.begin(), *vertices.begin(), 0);
  }
  return count;
}

// Tr_d straight from the defining sum over ordered F in F_d, no class
// grouping and no closed-form walk counting. Exponential; tiny inputs only.
inline Rational brute_trace(const SparseTensor& a, int d) {
  const int n = a.dim(), m = a.order();
  std::vector<std::pair<int, Index>> pairs;  // (i, alpha) with a nonzero entry
  std::vector<Rational> values;
  for (const auto& [idx, value] : a.entries()) {
    pairs.emplace_back(idx[0], Index(idx.begin() + 1, idx.end()));
    values.push_back(value);
  }
  Rational sum = 0;
  std::vector<int> pick(d, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == d) {
      Rational prod = 1;
      Arcs arcs;
      std::map<int, int> out;
      for (int k = 0; k < d; ++k) {
        prod *= values[pick[k]];
        const auto& [i, alpha] = pairs[pick[k]];
        for (int j : alpha) {
          ++arcs[{i, j}];
          ++out[i];
        }
      }
      Integer b = 1, c = 1;
      for (const auto& [arc, mult] : arcs) b *= factorial(mult);
      for (const auto& [v, deg] : out) c *= factorial(deg);
      Integer w = brute_walks(arcs, true);
      if (w != 0) sum += Rational(b * w, c) * prod;
      return;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (pos > 0 && pairs[k].first < pairs[pick[pos - 1]].first) continue;
      pick[pos] = static_cast<int>(k);
      rec(pos + 1);
    }
  };
  rec(0);
  Integer scale = 1;
  for (int k = 0; k < n - 1; ++k) scale *= m - 1;
  sum *= scale;
  sum.canonicalize();
  return sum;
}

// Determinant over Q by elimination.
inline Rational rational_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

// Coefficients of det(lambda I - A), highest degree first, by exact
// interpolation through lambda = 0..n.
inline std::vector<Rational> matrix_charpoly(const std::vector<std::vector<Rational>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= n; ++t) {
    auto b = a;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) b[i][j] = -b[i][j];
      b[i][i] += t;
    }
    xs.emplace_back(t);
    ys.push_back(rational_det(b));
  }
  // Lagrange basis expanded into monomials, ascending degree.
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    for (int k = 0; k <= n; ++k) coeffs[k] += ys[i] * basis[k] / denom;
  }
  std::reverse(coeffs.begin(), coeffs.end());
  return coeffs;
}

// All compositions of d, literal double sum for P_d.
inline Rational literal_schur(int d, const std::vector<Rational>& t) {
  Rational total = 0;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      Rational term = 1;
      for (int p : parts) term *= t[p - 1];
      term /= Rational(factorial(parts.size()));
      total += term;
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p);
      parts.pop_back();
    }
  };
  rec(d);
  return total;
}

inline SparseTensor random_tensor(std::mt19937& rng, int m, int n, int max_value, double density) {
  SparseTensor a(m, n);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> value(1, max_value);
  Index idx(m, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == m) {
      if (coin(rng) < density) a.set(idx, value(rng));
      return;
    }
    for (int v = 0; v < n; ++v) {
      idx[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return a;
}

inline Hypergraph random_hypergraph(std::mt19937& rng, int n, int m, double density) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::vector<Edge> edges;
  for (auto& e : combinations(n, m))
    if (coin(rng) < density) edges.push_back(e);
  return Hypergraph(n, m, edges);
}

}  // namespace tsym::test
