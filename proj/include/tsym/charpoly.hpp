#pragma once

#include <vector>

#include "tsym/hypergraph.hpp"
#include "tsym/rational.hpp"
#include "tsym/trace.hpp"

namespace tsym {

/// P_d(t_1, ..., t_d), the degree-d part of exp(sum_k t_k x^k). t[k-1] = t_k.
Rational schur_polynomial(int d, const std::vector<Rational>& t);

struct CharPolyPrefix {
  /// n (m-1)^{n-1}
  Integer total_degree;
  /// a_0..a_k; a_i multiplies lambda^{D-i}.
  std::vector<Rational> coefficients;

  int depth() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// a_i = P_i(-Tr_1/1, ..., -Tr_i/i) for i <= k.
CharPolyPrefix charpoly_coefficients(const TraceTable& tt, int k, const Integer& total_degree);

Integer charpoly_degree(int n, int m);

/// -m^{m-2} (m-1)^{n-m} |E|
Integer codegree_m_value(const Hypergraph& g);

/// Whether a_m computed from tt equals codegree_m_value(g).
bool codegree_m_check(const Hypergraph& g, const TraceTable& tt);

/// Tr_d + sum_{i<d} a_i Tr_{d-i} + d a_d == 0 for every d <= prefix depth.
bool newton_consistency(const TraceTable& tt, const CharPolyPrefix& prefix);

}  // namespace tsym
