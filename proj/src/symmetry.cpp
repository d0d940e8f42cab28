#include "tsym/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tsym/error.hpp"
#include "tsym/smith.hpp"

namespace tsym {

std::string to_string(SymmetryStatus status) {
  switch (status) {
    case SymmetryStatus::CertifiedNotSymmetric:
      return "certified-not-symmetric";
    case SymmetryStatus::ConsistentToDepth:
      return "consistent-to-depth";
    case SymmetryStatus::CertifiedSymmetric:
      return "certified-symmetric";
  }
  return "unknown";
}

SymmetryVerdict is_ell_symmetric_traces(const TraceTable& tt, int ell) {
  if (ell < 1) throw ParameterError("ell must be at least 1");
  SymmetryVerdict v;
  v.ell = ell;
  v.depth = tt.complete_depth();
  v.partial = !tt.is_complete();
  for (int d = 1; d <= tt.d_max; ++d) {
    if (!tt.complete[d - 1]) continue;
    if (d % ell != 0 && tt.at(d) != 0) {
      v.status = SymmetryStatus::CertifiedNotSymmetric;
      v.witness_d = d;
      return v;
    }
  }
  return v;
}

SymmetryVerdict is_ell_symmetric_traces(const SparseTensor& a, int ell, int d_max,
                                        const TraceOptions& options) {
  return is_ell_symmetric_traces(trace_table(a, d_max, options, true), ell);
}

SymmetryVerdict symmetry_verdict(const SparseTensor& a, const TraceTable& tt, int ell) {
  SymmetryVerdict v = is_ell_symmetric_traces(tt, ell);
  if (v.status == SymmetryStatus::CertifiedNotSymmetric) return v;
  const Rational phase = Rational(1) / Rational(ell);
  if (a.symmetric_flag() || a.is_symmetric()) {
    const Integer m = a.order();
    if (m % ell == 0) {
      if (auto cert = coloring_exists(a, m, m / ell)) {
        std::vector<Rational> angles;
        for (const auto& label : cert->phi) angles.push_back(Rational(label) / Rational(m));
        const Rational shift = angles.front();
        for (auto& x : angles) x -= shift;
        UnimodularDiagonal d(angles);
        if (!diagonal_similarity(a, d, phase).equals(a))
          throw VerificationError("coloring does not yield a diagonal similarity");
        v.status = SymmetryStatus::CertifiedSymmetric;
        v.coloring = std::move(cert);
        v.diagonal = std::move(d);
      }
    }
    return v;
  }
  if (auto d = solve_phase(build_constraint_system(a), phase)) {
    if (!diagonal_similarity(a, *d, phase).equals(a))
      throw VerificationError("phase solution fails diagonal similarity");
    v.status = SymmetryStatus::CertifiedSymmetric;
    v.diagonal = std::move(d);
  }
  return v;
}

CyclicWindow cyclic_index_window(const TraceTable& tt) {
  CyclicWindow w{0, tt.complete_depth()};
  for (int d = 1; d <= tt.d_max; ++d)
    if (tt.complete[d - 1] && tt.at(d) != 0) w.c_hat = gcd(w.c_hat, Integer(d));
  return w;
}

CyclicWindow cyclic_index_window(const SparseTensor& a, int d_max, const TraceOptions& options) {
  if (d_max < 1) throw ParameterError("d_max must be at least 1");
  return cyclic_index_window(trace_table(a, d_max, options, true));
}

namespace {

// One row per distinct index multiset: how often each vertex occurs.
IntMatrix multiplicity_rows(const SparseTensor& a) {
  std::set<std::vector<long>> rows;
  for (const auto& [idx, value] : a.entries()) {
    std::vector<long> row(a.dim(), 0);
    for (int v : idx) ++row[v];
    rows.insert(std::move(row));
  }
  IntMatrix out;
  for (const auto& row : rows) out.emplace_back(row.begin(), row.end());
  return out;
}

std::optional<std::vector<Integer>> solve_residues(const SparseTensor& a, const Integer& sigma,
                                                   const Integer& target,
                                                   const std::vector<std::vector<Integer>>& prefs) {
  IntMatrix rows = multiplicity_rows(a);
  std::vector<Integer> rhs(rows.size(), target);
  ModularSystem system(std::move(rows), a.dim(), sigma);
  return system.preferred_solution(rhs, prefs);
}

}  // namespace

std::optional<ColoringCertificate> coloring_exists(const SparseTensor& a, const Integer& sigma,
                                                   const Integer& target) {
  if (sigma < 1) throw ParameterError("sigma must be positive");
  const long s = sigma.get_si();
  std::vector<std::vector<Integer>> prefs(a.dim());
  for (int v = 0; v < a.dim(); ++v) {
    if (v == 0) prefs[v].push_back(0);
    for (long r = 1; r < s; ++r) prefs[v].push_back(r);
    if (v != 0) prefs[v].push_back(0);
  }
  auto residues = solve_residues(a, sigma, mod_floor(target, sigma), prefs);
  if (!residues) return std::nullopt;
  ColoringCertificate cert{sigma, {}, mod_floor(target, sigma)};
  for (const auto& r : *residues) cert.phi.push_back(r == 0 ? sigma : r);
  if (!verify_coloring(a, cert)) throw VerificationError("coloring solver returned a bad map");
  return cert;
}

bool verify_coloring(const SparseTensor& a, const ColoringCertificate& cert) {
  if (static_cast<int>(cert.phi.size()) != a.dim()) return false;
  for (const auto& label : cert.phi)
    if (label < 1 || label > cert.sigma) return false;
  for (const auto& [idx, value] : a.entries()) {
    Integer sum = 0;
    for (int v : idx) sum += cert.phi[v];
    if (mod_floor(sum - cert.target, cert.sigma) != 0) return false;
  }
  return true;
}

int cyclic_index_hypergraph(const Hypergraph& g) {
  if (!is_connected(g)) throw ParameterError("hypergraph is not connected");
  const int m = g.m();
  SparseTensor a = adjacency_tensor(g);
  for (int ell = m; ell >= 2; --ell) {
    if (m % ell != 0) continue;
    if (coloring_exists(a, m, m / ell)) return ell;
  }
  return 1;
}

OddTransversalResult odd_transversal(const SparseTensor& a) {
  std::vector<std::vector<Integer>> prefs(a.dim(), {0, 1});
  if (a.dim() > 0) prefs[0] = {1, 0};
  auto residues = solve_residues(a, 2, 1, prefs);
  OddTransversalResult out;
  if (!residues) return out;
  std::vector<int> x;
  for (int v = 0; v < a.dim(); ++v)
    if ((*residues)[v] == 1) x.push_back(v);
  if (!verify_odd_transversal(a, x)) throw VerificationError("odd transversal check failed");
  out.X = std::move(x);
  return out;
}

bool verify_odd_transversal(const SparseTensor& a, const std::vector<int>& x) {
  std::vector<char> in(a.dim(), 0);
  for (int v : x) {
    if (v < 0 || v >= a.dim()) return false;
    in[v] = 1;
  }
  for (const auto& [idx, value] : a.entries()) {
    int count = 0;
    for (int v : idx) count += in[v];
    if (count % 2 != 1) return false;
  }
  return true;
}

std::vector<Integer> prime_divisors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_proper_coloring(const Hypergraph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.n()) return false;
  for (const auto& e : g.edges()) {
    bool mixed = false;
    for (int v : e)
      if (colors[v] != colors[e.front()]) mixed = true;
    if (!mixed) return false;
  }
  return true;
}

namespace {

std::vector<int> renumber(const std::vector<int>& raw) {
  std::map<int, int> seen;
  std::vector<int> out;
  for (int c : raw) {
    auto it = seen.emplace(c, static_cast<int>(seen.size()) + 1).first;
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

ChromaticBound chromatic_upper_bound(const Hypergraph& g) {
  if (!is_connected(g)) throw ParameterError("hypergraph is not connected");
  SparseTensor a = adjacency_tensor(g);
  GroupReport report = enumerate_group(a);
  if (report.c < 2) throw ParameterError("chromatic bound needs cyclic index at least 2");
  ChromaticBound out;
  out.s = report.s;
  out.c = report.c;
  const Integer m = g.m();
  Integer best_prime = 0, best = 0;
  for (const auto& p : prime_divisors(report.c)) {
    Integer value = prime_part(report.s, p) * p;
    out.prime_bounds.emplace_back(p, value);
    if (best == 0 || value < best) {
      best = value;
      best_prime = p;
    }
  }
  std::vector<int> raw;
  if (best <= m) {
    out.bound = best;
    UnimodularDiagonal d = order_p_element(report, best_prime);
    StructurePartition sp = structure_partition(d, 0, 1);
    raw = sp.part_of();
    out.source = "group-element";
  } else {
    out.bound = m;
    auto cert = coloring_exists(a, m, m / report.c);
    if (!cert) throw VerificationError("no coloring for the exact cyclic index");
    for (const auto& label : cert->phi) raw.push_back(static_cast<int>(label.get_si()));
    out.source = "coloring";
  }
  out.coloring = renumber(raw);
  const int used = *std::max_element(out.coloring.begin(), out.coloring.end());
  if (!is_proper_coloring(g, out.coloring) || Integer(used) > out.bound)
    throw VerificationError("chromatic certificate is not a proper coloring within the bound");
  return out;
}

PhmCheck p_hm_check(const Hypergraph& g) {
  auto bip = find_p_hm_bipartition(g);
  if (!bip) throw ParameterError("no p-hm bipartition exists");
  PhmCheck out{*bip, g.m() / std::gcd(bip->p, g.m()), cyclic_index_hypergraph(g), false};
  out.holds = out.c % out.ell == 0;
  return out;
}

bool p_hm_symmetry_check(const Hypergraph& g) { return p_hm_check(g).holds; }

}  // namespace tsym
