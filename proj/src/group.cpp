#include "tsym/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tsym/error.hpp"

namespace tsym {

ConstraintSystem build_constraint_system(const SparseTensor& a) {
  const int n = a.dim(), m = a.order();
  std::set<std::vector<long>> rows;
  for (const auto& [idx, value] : a.entries()) {
    std::vector<long> row(n, 0);
    row[idx[0]] -= m - 1;
    for (std::size_t k = 1; k < idx.size(); ++k) row[idx[k]] += 1;
    rows.insert(std::move(row));
  }
  ConstraintSystem cs{n, m, {}};
  for (const auto& row : rows) cs.matrix.emplace_back(row.begin(), row.end());
  return cs;
}

namespace {

// theta_0 = 0, so column 0 drops out.
IntMatrix reduced_matrix(const ConstraintSystem& cs) {
  IntMatrix out;
  for (const auto& row : cs.matrix) out.emplace_back(row.begin() + 1, row.end());
  return out;
}

struct Solver {
  std::size_t rows, cols;
  SNFResult snf;
  std::vector<Integer> u;  // U * ones

  explicit Solver(const ConstraintSystem& cs)
      : rows(cs.matrix.size()), cols(static_cast<std::size_t>(cs.n - 1)) {
    snf = smith_normal_form(reduced_matrix(cs), cols);
    u.assign(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < rows; ++j) u[i] += snf.U[i][j];
  }

  bool finite() const { return static_cast<std::size_t>(snf.rank) == cols; }

  UnimodularDiagonal from_phi(const std::vector<Rational>& phi) const {
    std::vector<Rational> theta(cols + 1, Rational(0));
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j) theta[i + 1] += snf.V[i][j] * phi[j];
    return UnimodularDiagonal(std::move(theta));
  }
};

void check_rows(const ConstraintSystem& cs, const UnimodularDiagonal& d, const Rational& t) {
  for (const auto& row : cs.matrix) {
    Rational sum = -t;
    for (int k = 0; k < cs.n; ++k) sum += row[k] * d.angles()[k];
    if (frac_part(sum) != 0) throw VerificationError("diagonal fails a constraint row");
  }
}

void verify_element(const SparseTensor& a, const UnimodularDiagonal& d, const Rational& t) {
  if (!diagonal_similarity(a, d, t).equals(a))
    throw VerificationError("group element fails diagonal similarity");
}

}  // namespace

HomogeneousSolution solve_homogeneous(const ConstraintSystem& cs) {
  if (cs.n < 1) throw ParameterError("empty constraint system");
  Solver solver(cs);
  HomogeneousSolution out;
  if (!solver.finite()) {
    out.finite = false;
    out.free_rank = static_cast<int>(solver.cols) - solver.snf.rank;
    return out;
  }
  out.finite = true;
  out.s = 1;
  for (std::size_t i = 0; i < solver.cols; ++i) {
    const Integer& s = solver.snf.diag[i];
    out.s *= s;
    if (s == 1) continue;
    std::vector<Rational> phi(solver.cols, Rational(0));
    phi[i] = Rational(1, 1) / Rational(s);
    out.generators.push_back(solver.from_phi(phi));
    out.invariant_factors.push_back(s);
    check_rows(cs, out.generators.back(), 0);
  }
  return out;
}

std::optional<UnimodularDiagonal> solve_phase(const ConstraintSystem& cs, const Rational& t) {
  Solver solver(cs);
  const std::size_t rank = solver.snf.rank;
  for (std::size_t i = rank; i < solver.rows; ++i)
    if (frac_part(t * solver.u[i]) != 0) return std::nullopt;
  std::vector<Rational> phi(solver.cols, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) phi[i] = t * solver.u[i] / solver.snf.diag[i];
  UnimodularDiagonal d = solver.from_phi(phi);
  check_rows(cs, d, t);
  return d;
}

Integer exact_cyclic_index(const ConstraintSystem& cs) {
  Solver solver(cs);
  if (!solver.finite()) throw Error("homogeneous solution group is infinite");
  Integer c = 0;
  for (std::size_t i = solver.snf.rank; i < solver.rows; ++i) c = gcd(c, solver.u[i]);
  if (c == 0) throw Error("every phase is solvable; the cyclic index is unbounded");
  return abs(c);
}

Integer exact_cyclic_index(const SparseTensor& a) {
  return exact_cyclic_index(build_constraint_system(a));
}

std::vector<Integer> invariant_factors_of(const std::vector<UnimodularDiagonal>& generators) {
  if (generators.empty()) return {};
  std::vector<Rational> all;
  for (const auto& g : generators) all.insert(all.end(), g.angles().begin(), g.angles().end());
  const Integer n = common_denominator(all);
  const std::size_t cols = generators.front().angles().size();
  IntMatrix p;
  for (const auto& g : generators) {
    std::vector<Integer> row;
    for (const auto& angle : g.angles()) {
      Rational scaled = angle * n;
      row.push_back(scaled.get_num());
    }
    p.push_back(std::move(row));
  }
  SNFResult snf = smith_normal_form(p, cols);
  std::vector<Integer> factors;
  for (const auto& s : snf.diag) {
    Integer order = n / gcd(n, s);
    if (order != 1) factors.push_back(order);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

GroupReport enumerate_group(const SparseTensor& a, std::uint64_t cap) {
  ConstraintSystem cs = build_constraint_system(a);
  HomogeneousSolution hs = solve_homogeneous(cs);
  if (!hs.finite) throw Error("homogeneous solution group is infinite");
  GroupReport report;
  report.s = hs.s;
  report.c = exact_cyclic_index(cs);
  report.total_order = report.s * report.c;
  report.invariant_factors_D0 = hs.invariant_factors;
  report.generators_D0 = hs.generators;
  const Rational step = Rational(1) / Rational(report.c);
  auto g = solve_phase(cs, step);
  if (!g) throw VerificationError("phase 1/c is not solvable");
  report.phase_generator = *g;
  for (const auto& h : hs.generators) verify_element(a, h, 0);
  verify_element(a, *g, step);

  std::vector<UnimodularDiagonal> all_gens = hs.generators;
  all_gens.push_back(*g);
  report.invariant_factors_D = invariant_factors_of(all_gens);
  Integer product = 1;
  for (const auto& f : report.invariant_factors_D) product *= f;
  if (product != report.total_order) throw VerificationError("|D| differs from s * c");

  const long c = report.c.get_si();
  if (report.total_order > Integer(static_cast<unsigned long>(cap))) {
    UnimodularDiagonal power = UnimodularDiagonal::identity(a.dim());
    for (long j = 0; j < c; ++j) {
      report.coset_reps.push_back(power);
      power = power * *g;
    }
    return report;
  }

  std::vector<UnimodularDiagonal> d0{UnimodularDiagonal::identity(a.dim())};
  for (std::size_t i = 0; i < hs.generators.size(); ++i) {
    const long order = hs.invariant_factors[i].get_si();
    std::vector<UnimodularDiagonal> next;
    for (const auto& e : d0) {
      UnimodularDiagonal x = e;
      for (long k = 0; k < order; ++k) {
        next.push_back(x);
        x = x * hs.generators[i];
      }
    }
    d0 = std::move(next);
  }
  std::set<UnimodularDiagonal> seen;
  UnimodularDiagonal shift = UnimodularDiagonal::identity(a.dim());
  for (long j = 0; j < c; ++j) {
    std::vector<UnimodularDiagonal> coset;
    for (const auto& h : d0) {
      UnimodularDiagonal e = shift * h;
      verify_element(a, e, Rational(j) * step);
      if (!seen.insert(e).second) throw VerificationError("duplicate group element");
      coset.push_back(std::move(e));
    }
    std::sort(coset.begin(), coset.end());
    report.coset_reps.push_back(coset.front());
    report.cosets.push_back(std::move(coset));
    shift = shift * *g;
  }
  report.enumerated = true;
  return report;
}

Integer prime_part(const Integer& r, const Integer& p) {
  if (p < 2) throw ParameterError("prime_part needs p >= 2");
  Integer out = 1, rest = abs(r);
  while (rest != 0 && rest % p == 0) {
    rest /= p;
    out *= p;
  }
  return out;
}

UnimodularDiagonal order_p_element(const GroupReport& report, const Integer& p) {
  if (p < 2 || report.c % p != 0) throw ParameterError("p must be a prime dividing c");
  if (!report.enumerated) throw Error("group was not enumerated");
  const Integer bound = prime_part(report.s, p) * p;
  for (std::size_t j = 1; j < report.cosets.size(); ++j)
    for (const auto& e : report.cosets[j])
      if (bound % e.order() == 0) return e;
  throw VerificationError("no element of order dividing r_[p] p outside the identity coset");
}

std::vector<int> StructurePartition::part_of() const {
  int n = 0;
  for (const auto& part : parts) n += static_cast<int>(part.size());
  std::vector<int> out(n, -1);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (int v : parts[k]) out[v] = static_cast<int>(k);
  return out;
}

StructurePartition structure_partition(const UnimodularDiagonal& d, const Integer& j,
                                       const Integer& ell) {
  if (d.is_identity()) throw ParameterError("structure partition needs a non-identity diagonal");
  if (ell < 1) throw ParameterError("ell must be positive");
  StructurePartition sp;
  sp.sigma = d.order();
  sp.j = j;
  sp.ell = ell;
  std::map<Rational, std::size_t> part_index;
  for (int v = 0; v < d.dim(); ++v) {
    const Rational& angle = d.angles()[v];
    auto [it, fresh] = part_index.emplace(angle, sp.parts.size());
    if (fresh) {
      sp.parts.emplace_back();
      Rational label = angle * sp.sigma;
      sp.labels.push_back(label == 0 ? sp.sigma : Integer(label.get_num()));
    }
    sp.parts[it->second].push_back(v);
  }
  return sp;
}

bool pattern_allowed(const StructurePartition& sp, const std::vector<int>& parts, bool symmetric) {
  const long m = static_cast<long>(parts.size());
  Integer sum = 0;
  for (int p : parts) sum += sp.labels.at(p);
  Rational value = Rational(sp.j) / Rational(sp.ell) - Rational(sum) / Rational(sp.sigma);
  if (!symmetric) value += Rational(m * sp.labels.at(parts.front())) / Rational(sp.sigma);
  return frac_part(value) == 0;
}

void verify_partition(const SparseTensor& a, const StructurePartition& sp, bool symmetric) {
  if (symmetric && a.order() % sp.sigma != 0)
    throw ParameterError("symmetric congruence needs sigma dividing m");
  const auto part_of = sp.part_of();
  if (static_cast<int>(part_of.size()) != a.dim()) throw DimensionError("partition size mismatch");
  for (const auto& [idx, value] : a.entries()) {
    std::vector<int> parts;
    for (int v : idx) parts.push_back(part_of[v]);
    if (!pattern_allowed(sp, parts, symmetric))
      throw VerificationError("nonzero entry in a forbidden block");
  }
}

namespace {

// Calls f on every length-m tuple over 0..k-1, non-decreasing when sorted_only.
template <typename F>
void for_each_tuple(int k, int m, bool sorted_only, F&& f) {
  std::vector<int> t(m, 0);
  for (;;) {
    f(t);
    int pos = m - 1;
    while (pos >= 0 && t[pos] == k - 1) --pos;
    if (pos < 0) return;
    ++t[pos];
    for (int q = pos + 1; q < m; ++q) t[q] = sorted_only ? t[pos] : 0;
  }
}

}  // namespace

ForbiddenPatternReport forbidden_pattern_report(const SparseTensor& a, const StructurePartition& sp,
                                                bool symmetric, bool list_non_edges,
                                                std::uint64_t cap) {
  verify_partition(a, sp, symmetric);
  const int k = static_cast<int>(sp.parts.size()), m = a.order(), n = a.dim();
  Integer count;
  if (symmetric)
    mpz_bin_uiui(count.get_mpz_t(), k + m - 1, m);
  else
    mpz_ui_pow_ui(count.get_mpz_t(), k, m);
  if (count > Integer(static_cast<unsigned long>(cap)))
    throw CapExceeded("too many block patterns", cap, m);
  ForbiddenPatternReport report;
  for_each_tuple(k, m, symmetric, [&](const std::vector<int>& t) {
    if (!pattern_allowed(sp, t, symmetric)) report.patterns.push_back(t);
  });
  if (!list_non_edges) return report;

  Integer subsets;
  mpz_bin_uiui(subsets.get_mpz_t(), n, m);
  if (subsets > Integer(static_cast<unsigned long>(cap)))
    throw CapExceeded("too many vertex subsets", cap, m);
  const auto part_of = sp.part_of();
  std::vector<int> subset(m);
  for (int i = 0; i < m; ++i) subset[i] = i;
  if (m > n) {
    report.non_edges_listed = true;
    return report;
  }
  for (;;) {
    std::vector<int> parts;
    for (int v : subset) parts.push_back(part_of[v]);
    if (symmetric) std::sort(parts.begin(), parts.end());
    if (!pattern_allowed(sp, parts, symmetric)) {
      if (a.get(subset) != 0) throw VerificationError("forbidden subset carries an entry");
      report.non_edges.push_back(subset);
    }
    int pos = m - 1;
    while (pos >= 0 && subset[pos] == n - m + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int q = pos + 1; q < m; ++q) subset[q] = subset[q - 1] + 1;
  }
  report.non_edges_listed = true;
  return report;
}

}  // namespace tsym
