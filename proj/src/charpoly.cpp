#include "tsym/charpoly.hpp"

#include "tsym/error.hpp"

namespace tsym {

namespace {

std::vector<Rational> schur_prefix(int d, const std::vector<Rational>& t) {
  // d P_d = sum_k k t_k P_{d-k}
  std::vector<Rational> p(d + 1, Rational(0));
  p[0] = 1;
  for (int i = 1; i <= d; ++i) {
    Rational acc = 0;
    for (int k = 1; k <= i; ++k) acc += k * t[k - 1] * p[i - k];
    p[i] = acc / i;
  }
  return p;
}

}  // namespace

Rational schur_polynomial(int d, const std::vector<Rational>& t) {
  if (d < 1) throw ParameterError("schur_polynomial needs d >= 1");
  if (static_cast<int>(t.size()) < d) throw ParameterError("schur_polynomial needs t_1..t_d");
  return schur_prefix(d, t)[d];
}

Integer charpoly_degree(int n, int m) {
  Integer pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), m - 1, n - 1);
  return n * pw;
}

CharPolyPrefix charpoly_coefficients(const TraceTable& tt, int k, const Integer& total_degree) {
  if (k < 0) throw ParameterError("k must be nonnegative");
  if (k > tt.d_max) throw ParameterError("k exceeds the trace table depth");
  if (k > tt.complete_depth()) throw Error("trace values missing below requested k");
  std::vector<Rational> t;
  for (int i = 1; i <= k; ++i) t.push_back(-tt.at(i) / i);
  CharPolyPrefix out;
  out.total_degree = total_degree;
  if (total_degree < k) throw ParameterError("k exceeds the characteristic polynomial degree");
  out.coefficients = schur_prefix(k, t);
  return out;
}

Integer codegree_m_value(const Hypergraph& g) {
  const int m = g.m(), n = g.n();
  if (g.edge_count() == 0) return 0;
  Integer a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), m, m - 2);
  mpz_ui_pow_ui(b.get_mpz_t(), m - 1, n - m);
  return -a * b * static_cast<long>(g.edge_count());
}

bool codegree_m_check(const Hypergraph& g, const TraceTable& tt) {
  const int m = g.m();
  if (tt.d_max < m || tt.complete_depth() < m)
    throw ParameterError("trace table must cover d <= m");
  auto prefix = charpoly_coefficients(tt, m, charpoly_degree(g.n(), m));
  return prefix.coefficients[m] == codegree_m_value(g);
}

bool newton_consistency(const TraceTable& tt, const CharPolyPrefix& prefix) {
  const int k = prefix.depth();
  if (k > tt.complete_depth()) return false;
  const auto& a = prefix.coefficients;
  if (a.empty() || a[0] != 1) return false;
  for (int d = 1; d <= k; ++d) {
    Rational sum = tt.at(d) + d * a[d];
    for (int i = 1; i < d; ++i) sum += a[i] * tt.at(d - i);
    if (sum != 0) return false;
  }
  return true;
}

}  // namespace tsym
