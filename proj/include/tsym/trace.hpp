#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "tsym/rational.hpp"
#include "tsym/tensor.hpp"

namespace tsym {

/// One (primary, secondary multiset) pair with its multiplicity in a class.
struct FItem {
  int primary;
  std::vector<int> secondary;  // sorted, m-1 indices
  int multiplicity;
};

/// An equivalence class of F_d: all ordered tuples ((i_1,a_1),...,(i_d,a_d))
/// with i_1 <= ... <= i_d sharing the same multiset of (primary, secondary
/// multiset) pairs. They share the arc multiset of D(F), hence b, c and W.
struct FClass {
  std::vector<FItem> items;
  /// Sum of Pi_F(A) over every ordered F in the class.
  Rational weight;
  /// Number of ordered F tuples the class stands for.
  Integer representatives;
};

/// Arc multiset of D(F): (tail, head) -> multiplicity.
using ArcMultiset = std::map<std::pair<int, int>, int>;

ArcMultiset arcs_of(const FClass& f);

/// Product of the factorials of the arc multiplicities.
Integer b_of(const ArcMultiset& e);
/// Product of the factorials of the out-degrees.
Integer c_of(const ArcMultiset& e);

/// Number of distinct closed walks using exactly the arcs of e, started at
/// the smallest vertex incident to e, with parallel copies of an arc
/// indistinguishable. Zero when e is not Eulerian (an unbalanced vertex or
/// more than one weak component). Computed with the BEST theorem.
Integer walk_count(const ArcMultiset& e);

/// |W(F)| as it enters the trace formula: closed walks counted from every
/// starting position, i.e. walk_count(e) * |e| / outdeg(start).
///
/// This convention was fixed by calibration: with it the trace formula
/// reproduces tr(A^d) for matrices (every 0/1 matrix with n <= 4, d <= 8)
/// and the codegree-m coefficient of hypergraph characteristic polynomials.
Integer closed_walk_count(const ArcMultiset& e);

struct TraceOptions {
  /// Maximum number of classes generated for a single d.
  std::uint64_t class_cap = 10'000'000;
};

/// Streams every class of F_d whose weight is nonzero and whose arc multiset
/// is balanced and weakly connected. Index multiplicities that are not
/// multiples of m, unbalanced vertices and disconnected D(F) are pruned
/// before any walk counting. Throws CapExceeded past options.class_cap.
/// Returns the number of classes visited.
std::uint64_t enumerate_f_classes(const SparseTensor& a, int d,
                                  const std::function<void(const FClass&)>& visit,
                                  const TraceOptions& options = {});

std::vector<FClass> f_classes(const SparseTensor& a, int d, const TraceOptions& options = {});

/// Memoizes closed walk counts keyed by arc multiset.
class WalkCountCache {
 public:
  const Integer& closed_walks(const ArcMultiset& e);
  /// b(E) |W(E)| / c(E)
  const Rational& rotation_factor(const ArcMultiset& e);
  std::size_t size() const { return cache_.size(); }

 private:
  std::map<ArcMultiset, Integer> cache_;
  std::map<ArcMultiset, Rational> factors_;
};

/// Tr_d(A) = (m-1)^{n-1} sum_F b(F)/c(F) Pi_F(A) |W(F)|, exact.
Rational generalized_trace(const SparseTensor& a, int d, const TraceOptions& options = {});
Rational generalized_trace(const SparseTensor& a, int d, const TraceOptions& options,
                           WalkCountCache& cache);

struct TraceTable {
  int d_max = 0;
  /// values[d-1] = Tr_d; only meaningful where complete[d-1].
  std::vector<Rational> values;
  std::vector<bool> complete;

  const Rational& at(int d) const { return values.at(d - 1); }
  bool is_complete() const;
  /// Largest D such that Tr_1..Tr_D are all complete.
  int complete_depth() const;
};

/// Tr_1..Tr_{d_max} sharing one walk-count cache. A cap hit at some d marks
/// that d incomplete when allow_partial is set; otherwise it propagates.
TraceTable trace_table(const SparseTensor& a, int d_max, const TraceOptions& options = {},
                       bool allow_partial = false);
/// Same, with a caller-owned cache; walk counts depend only on the arcs, so
/// one cache can serve many tensors.
TraceTable trace_table(const SparseTensor& a, int d_max, const TraceOptions& options,
                       bool allow_partial, WalkCountCache& cache);

/// tr(A^d) for an order-2 tensor, by exact matrix powers.
Rational matrix_trace_oracle(const SparseTensor& a, int d);

}  // namespace tsym
