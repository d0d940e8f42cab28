#include "tsym/trace.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tsym {

namespace {

struct PairType {
  int primary;
  std::vector<int> secondary;
  Rational weight;     // sum of a_{i alpha} over orderings alpha of secondary
  Integer orderings;   // (m-1)! / prod(multiplicities!)
};

struct Support {
  std::vector<std::pair<int, int>> valence;  // (vertex, count) in the index multiset
  std::vector<int> pair_types;
};

Integer orderings_of(const std::vector<int>& sorted) {
  Integer count = factorial(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    count /= factorial(j - i);
    i = j;
  }
  return count;
}

std::vector<std::pair<int, int>> run_lengths(const std::vector<int>& sorted) {
  std::vector<std::pair<int, int>> runs;
  for (int v : sorted) {
    if (!runs.empty() && runs.back().first == v)
      ++runs.back().second;
    else
      runs.emplace_back(v, 1);
  }
  return runs;
}

class ClassEnumerator {
 public:
  ClassEnumerator(const SparseTensor& a, int d, const std::function<void(const FClass&)>& visit,
                  const TraceOptions& options)
      : m_(a.order()), n_(a.dim()), d_(d), visit_(visit), options_(options) {
    std::map<std::pair<int, std::vector<int>>, Rational> grouped;
    for (const auto& [idx, value] : a.entries()) {
      std::vector<int> sec(idx.begin() + 1, idx.end());
      std::sort(sec.begin(), sec.end());
      grouped[{idx[0], sec}] += value;
    }
    std::map<std::vector<int>, int> support_ids;
    for (auto& [key, weight] : grouped) {
      if (weight == 0) continue;
      std::vector<int> support = key.second;
      support.push_back(key.first);
      std::sort(support.begin(), support.end());
      auto [it, fresh] = support_ids.emplace(support, static_cast<int>(supports_.size()));
      if (fresh) supports_.push_back({run_lengths(support), {}});
      supports_[it->second].pair_types.push_back(static_cast<int>(pair_types_.size()));
      pair_types_.push_back({key.first, key.second, weight, orderings_of(key.second)});
    }
    last_touch_.assign(n_, -1);
    for (int s = 0; s < static_cast<int>(supports_.size()); ++s)
      for (auto [v, c] : supports_[s].valence) last_touch_[v] = s;
    valence_.assign(n_, 0);
    support_mult_.assign(supports_.size(), 0);
    type_mult_.assign(pair_types_.size(), 0);
    primary_count_.assign(n_, 0);
    fact_.assign(std::max(d_, 0) + 1, Integer(1));
    for (int k = 1; k <= d_; ++k) fact_[k] = fact_[k - 1] * k;
    for (const auto& pt : pair_types_) {
      weight_pow_.push_back({Rational(1), pt.weight});
      orderings_pow_.push_back({Integer(1), pt.orderings});
    }
    prim_total_.assign(n_, 0);
    prim_denom_.assign(n_, Integer(1));
  }

  std::uint64_t run() {
    if (d_ >= 1) choose_supports(0, d_);
    return generated_;
  }

 private:
  void choose_supports(int s, int remaining) {
    if (remaining == 0) {
      for (int v = 0; v < n_; ++v)
        if (valence_[v] % m_ != 0) return;
      distribute_start();
      return;
    }
    if (s == static_cast<int>(supports_.size())) return;
    for (int k = 0; k <= remaining; ++k) {
      support_mult_[s] = k;
      for (auto [v, c] : supports_[s].valence) valence_[v] += k * c;
      bool ok = true;
      for (auto [v, c] : supports_[s].valence)
        if (last_touch_[v] == s && valence_[v] % m_ != 0) ok = false;
      if (ok) choose_supports(s + 1, remaining - k);
      for (auto [v, c] : supports_[s].valence) valence_[v] -= k * c;
    }
    support_mult_[s] = 0;
  }

  bool chosen_supports_connected() {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int anchor = -1;
    for (std::size_t s = 0; s < supports_.size(); ++s) {
      if (!support_mult_[s]) continue;
      const auto& val = supports_[s].valence;
      for (std::size_t k = 1; k < val.size(); ++k) parent[find(val[k].first)] = find(val[0].first);
      anchor = val[0].first;
    }
    for (int v = 0; v < n_; ++v)
      if (valence_[v] && find(v) != find(anchor)) return false;
    return true;
  }

  void distribute_start() {
    if (!chosen_supports_connected()) return;
    active_.clear();
    for (std::size_t s = 0; s < supports_.size(); ++s)
      if (support_mult_[s]) active_.push_back(static_cast<int>(s));
    distribute(0, 0, support_mult_[active_[0]]);
  }

  // Splits the multiplicity of active_[pos] over its pair types (one per
  // possible primary index); prim(v) must end at valence(v)/m.
  void distribute(std::size_t pos, std::size_t type_pos, int left) {
    if (pos == active_.size()) {
      for (int v = 0; v < n_; ++v)
        if (primary_count_[v] * m_ != valence_[v]) return;
      emit();
      return;
    }
    const auto& types = supports_[active_[pos]].pair_types;
    if (type_pos + 1 == types.size()) {
      take(types[type_pos], left, pos);
      return;
    }
    for (int k = 0; k <= left; ++k) take_partial(types[type_pos], k, pos, type_pos, left);
  }

  void take_partial(int type, int k, std::size_t pos, std::size_t type_pos, int left) {
    const int primary = pair_types_[type].primary;
    primary_count_[primary] += k;
    if (primary_count_[primary] * m_ <= valence_[primary]) {
      type_mult_[type] = k;
      distribute(pos, type_pos + 1, left - k);
    }
    primary_count_[primary] -= k;
    type_mult_[type] = 0;
  }

  void take(int type, int k, std::size_t pos) {
    const int primary = pair_types_[type].primary;
    primary_count_[primary] += k;
    if (primary_count_[primary] * m_ <= valence_[primary]) {
      type_mult_[type] = k;
      std::size_t next = pos + 1;
      distribute(next, 0, next < active_.size() ? support_mult_[active_[next]] : 0);
    }
    primary_count_[primary] -= k;
    type_mult_[type] = 0;
  }

  template <typename T>
  static const T& power_of(std::vector<T>& powers, int k) {
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * powers[1]);
    return powers[k];
  }

  void emit() {
    if (++generated_ > options_.class_cap)
      throw CapExceeded("trace enumeration exceeded the class cap", options_.class_cap, d_);
    FClass f;
    f.weight = 1;
    f.representatives = 1;
    touched_.clear();
    for (int s : active_)
      for (int t : supports_[s].pair_types) {
        const int k = type_mult_[t];
        if (!k) continue;
        const PairType& pt = pair_types_[t];
        f.items.push_back({pt.primary, pt.secondary, k});
        if (!prim_total_[pt.primary]) touched_.push_back(pt.primary);
        prim_total_[pt.primary] += k;
        prim_denom_[pt.primary] *= fact_[k];
        if (pt.weight != 1) f.weight *= power_of(weight_pow_[t], k);
        if (pt.orderings != 1) f.representatives *= power_of(orderings_pow_[t], k);
      }
    for (int v : touched_) {
      Integer arrangements = fact_[prim_total_[v]] / prim_denom_[v];
      if (arrangements != 1) {
        f.weight *= arrangements;
        f.representatives *= arrangements;
      }
      prim_total_[v] = 0;
      prim_denom_[v] = 1;
    }
    std::sort(f.items.begin(), f.items.end(), [](const FItem& x, const FItem& y) {
      return std::tie(x.primary, x.secondary) < std::tie(y.primary, y.secondary);
    });
    if (f.weight != 0) visit_(f);
  }

  int m_, n_, d_;
  std::vector<Integer> fact_;
  std::vector<std::vector<Rational>> weight_pow_;
  std::vector<std::vector<Integer>> orderings_pow_;
  std::vector<int> prim_total_;
  std::vector<Integer> prim_denom_;
  std::vector<int> touched_;
  const std::function<void(const FClass&)>& visit_;
  TraceOptions options_;
  std::vector<PairType> pair_types_;
  std::vector<Support> supports_;
  std::vector<int> last_touch_;
  std::vector<int> valence_;
  std::vector<int> support_mult_;
  std::vector<int> type_mult_;
  std::vector<int> primary_count_;
  std::vector<int> active_;
  std::uint64_t generated_ = 0;
};

// Bareiss fraction-free determinant.
Integer integer_determinant(std::vector<std::vector<Integer>> mat) {
  const std::size_t n = mat.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (mat[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && mat[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(mat[r], mat[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
      }
    prev = mat[k][k];
  }
  return sign * mat[n - 1][n - 1];
}

}  // namespace

ArcMultiset arcs_of(const FClass& f) {
  ArcMultiset e;
  for (const auto& item : f.items)
    for (int v : item.secondary) e[{item.primary, v}] += item.multiplicity;
  return e;
}

Integer b_of(const ArcMultiset& e) {
  Integer b = 1;
  for (const auto& [arc, mult] : e) b *= factorial(mult);
  return b;
}

Integer c_of(const ArcMultiset& e) {
  std::map<int, int> out;
  for (const auto& [arc, mult] : e) out[arc.first] += mult;
  Integer c = 1;
  for (const auto& [v, deg] : out) c *= factorial(deg);
  return c;
}

namespace {

struct EulerData {
  std::vector<int> vertices;  // sorted
  std::vector<int> outdeg;    // aligned with vertices
  bool eulerian;
};

EulerData euler_data(const ArcMultiset& e) {
  std::set<int> vs;
  for (const auto& [arc, mult] : e) {
    vs.insert(arc.first);
    vs.insert(arc.second);
  }
  EulerData data{{vs.begin(), vs.end()}, {}, true};
  const std::size_t k = data.vertices.size();
  auto pos = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(data.vertices.begin(), data.vertices.end(), v) -
                                    data.vertices.begin());
  };
  std::vector<int> indeg(k, 0);
  data.outdeg.assign(k, 0);
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [arc, mult] : e) {
    std::size_t u = pos(arc.first), v = pos(arc.second);
    data.outdeg[u] += mult;
    indeg[v] += mult;
    parent[find(u)] = find(v);
  }
  for (std::size_t i = 0; i < k; ++i)
    if (indeg[i] != data.outdeg[i] || find(i) != find(0)) data.eulerian = false;
  return data;
}

}  // namespace

Integer walk_count(const ArcMultiset& e) {
  if (e.empty()) return 0;
  EulerData data = euler_data(e);
  if (!data.eulerian) return 0;
  const std::size_t k = data.vertices.size();
  auto pos = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(data.vertices.begin(), data.vertices.end(), v) -
                                    data.vertices.begin());
  };
  // Laplacian D_out - A with the start vertex's row and column removed.
  std::vector<std::vector<Integer>> lap(k, std::vector<Integer>(k, 0));
  for (const auto& [arc, mult] : e) {
    std::size_t u = pos(arc.first), v = pos(arc.second);
    lap[u][u] += mult;
    lap[u][v] -= mult;
  }
  std::vector<std::vector<Integer>> minor;
  for (std::size_t i = 1; i < k; ++i) minor.emplace_back(lap[i].begin() + 1, lap[i].end());
  Integer arborescences = integer_determinant(std::move(minor));
  // BEST: labeled Eulerian circuits = t * prod (outdeg - 1)!; starting at the
  // start vertex multiplies by its out-degree; unlabeled divides by b.
  Integer count = arborescences * data.outdeg[0];
  for (int deg : data.outdeg) count *= factorial(deg - 1);
  Integer b = b_of(e);
  if (count % b != 0) throw VerificationError("walk count is not divisible by b(F)");
  return count / b;
}

Integer closed_walk_count(const ArcMultiset& e) {
  if (e.empty()) return 0;
  Integer from_start = walk_count(e);
  if (from_start == 0) return 0;
  long length = 0;
  int start = e.begin()->first.first;
  for (const auto& [arc, mult] : e) start = std::min({start, arc.first, arc.second});
  long start_out = 0;
  for (const auto& [arc, mult] : e) {
    length += mult;
    if (arc.first == start) start_out += mult;
  }
  Integer total = from_start * length;
  if (total % start_out != 0) throw VerificationError("rotation count is not integral");
  return total / start_out;
}

std::uint64_t enumerate_f_classes(const SparseTensor& a, int d,
                                  const std::function<void(const FClass&)>& visit,
                                  const TraceOptions& options) {
  if (d < 1) throw ParameterError("trace order d must be at least 1");
  return ClassEnumerator(a, d, visit, options).run();
}

std::vector<FClass> f_classes(const SparseTensor& a, int d, const TraceOptions& options) {
  std::vector<FClass> out;
  enumerate_f_classes(a, d, [&](const FClass& f) { out.push_back(f); }, options);
  return out;
}

const Integer& WalkCountCache::closed_walks(const ArcMultiset& e) {
  auto it = cache_.find(e);
  if (it == cache_.end()) it = cache_.emplace(e, closed_walk_count(e)).first;
  return it->second;
}

const Rational& WalkCountCache::rotation_factor(const ArcMultiset& e) {
  auto it = factors_.find(e);
  if (it == factors_.end()) {
    Rational q(b_of(e) * closed_walks(e), c_of(e));
    q.canonicalize();
    it = factors_.emplace(e, q).first;
  }
  return it->second;
}

Rational generalized_trace(const SparseTensor& a, int d, const TraceOptions& options,
                           WalkCountCache& cache) {
  Rational sum = 0;
  enumerate_f_classes(
      a, d,
      [&](const FClass& f) {
        const Rational& factor = cache.rotation_factor(arcs_of(f));
        if (factor != 0) sum += f.weight * factor;
      },
      options);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), a.order() - 1, a.dim() - 1);
  sum *= scale;
  sum.canonicalize();
  return sum;
}

Rational generalized_trace(const SparseTensor& a, int d, const TraceOptions& options) {
  WalkCountCache cache;
  return generalized_trace(a, d, options, cache);
}

bool TraceTable::is_complete() const {
  return std::all_of(complete.begin(), complete.end(), [](bool c) { return c; });
}

int TraceTable::complete_depth() const {
  int depth = 0;
  while (depth < d_max && complete[depth]) ++depth;
  return depth;
}

TraceTable trace_table(const SparseTensor& a, int d_max, const TraceOptions& options,
                       bool allow_partial) {
  WalkCountCache cache;
  return trace_table(a, d_max, options, allow_partial, cache);
}

TraceTable trace_table(const SparseTensor& a, int d_max, const TraceOptions& options,
                       bool allow_partial, WalkCountCache& cache) {
  if (d_max < 1) throw ParameterError("d_max must be at least 1");
  TraceTable table;
  table.d_max = d_max;
  for (int d = 1; d <= d_max; ++d) {
    try {
      table.values.push_back(generalized_trace(a, d, options, cache));
      table.complete.push_back(true);
    } catch (const CapExceeded&) {
      if (!allow_partial) throw;
      table.values.emplace_back(0);
      table.complete.push_back(false);
    }
  }
  return table;
}

Rational matrix_trace_oracle(const SparseTensor& a, int d) {
  if (a.order() != 2) throw ParameterError("matrix trace oracle needs an order-2 tensor");
  if (d < 1) throw ParameterError("trace order d must be at least 1");
  const int n = a.dim();
  std::vector<std::vector<Rational>> base(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& [idx, value] : a.entries()) base[idx[0]][idx[1]] = value;
  auto power = base;
  for (int step = 1; step < d; ++step) {
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (power[i][k] == 0) continue;
        for (int j = 0; j < n; ++j) next[i][j] += power[i][k] * base[k][j];
      }
    power = std::move(next);
  }
  Rational tr = 0;
  for (int i = 0; i < n; ++i) tr += power[i][i];
  return tr;
}

}  // namespace tsym
