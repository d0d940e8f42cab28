#pragma once

#include <optional>
#include <vector>

#include "tsym/rational.hpp"
#include "tsym/smith.hpp"
#include "tsym/tensor.hpp"

namespace tsym {

/// Rows encode -(m-1) theta_{i1} + theta_{i2} + ... + theta_{im} = t (mod 1),
/// one per distinct (primary, secondary multiset) pattern. Column k is
/// theta_k; theta_0 is pinned to 0 by the solvers.
struct ConstraintSystem {
  int n = 0;
  int m = 0;
  IntMatrix matrix;
};

ConstraintSystem build_constraint_system(const SparseTensor& a);

struct HomogeneousSolution {
  bool finite = false;
  /// Free rank of the solution group when not finite.
  int free_rank = 0;
  /// Order of the group when finite.
  Integer s;
  std::vector<UnimodularDiagonal> generators;
  /// Divisibility chain d_1 | d_2 | ..., trivial factors dropped.
  std::vector<Integer> invariant_factors;
};

HomogeneousSolution solve_homogeneous(const ConstraintSystem& cs);

/// A diagonal with M theta = t (mod 1), or nothing when unsolvable.
std::optional<UnimodularDiagonal> solve_phase(const ConstraintSystem& cs, const Rational& t);

/// Largest k for which phase 1/k is solvable. Throws when the homogeneous
/// group is infinite or when every k is solvable.
Integer exact_cyclic_index(const ConstraintSystem& cs);
Integer exact_cyclic_index(const SparseTensor& a);

/// Invariant factors of the subgroup of (Q/Z)^n generated by diagonals.
std::vector<Integer> invariant_factors_of(const std::vector<UnimodularDiagonal>& generators);

struct GroupReport {
  Integer s;
  Integer c;
  Integer total_order;
  std::vector<Integer> invariant_factors_D0;
  std::vector<Integer> invariant_factors_D;
  std::vector<UnimodularDiagonal> generators_D0;
  /// Element of the phase-1/c coset.
  UnimodularDiagonal phase_generator{std::vector<Rational>{Rational(0)}};
  /// One per coset j = 0..c-1: the lexicographically smallest element when
  /// enumerated, phase_generator^j otherwise.
  std::vector<UnimodularDiagonal> coset_reps;
  bool enumerated = false;
  /// cosets[j] sorted, present only when enumerated.
  std::vector<std::vector<UnimodularDiagonal>> cosets;
};

inline constexpr std::uint64_t kDefaultGroupCap = 100'000;

/// Requires a finite homogeneous group. Every listed element (or, past the
/// cap, every generator) is re-verified by diagonal similarity.
GroupReport enumerate_group(const SparseTensor& a, std::uint64_t cap = kDefaultGroupCap);

/// Highest power of p dividing r.
Integer prime_part(const Integer& r, const Integer& p);

/// First element outside the identity coset (scanning cosets 1..c-1 in
/// order, elements in lexicographic order) whose order divides r_[p] p.
UnimodularDiagonal order_p_element(const GroupReport& report, const Integer& p);

struct StructurePartition {
  /// Parts ordered by their smallest vertex; vertices ascending.
  std::vector<std::vector<int>> parts;
  /// Label in 1..sigma per part; the part holding vertex 0 gets sigma.
  std::vector<Integer> labels;
  Integer sigma;
  /// The phase is j / ell.
  Integer j;
  Integer ell;

  /// Part index of every vertex.
  std::vector<int> part_of() const;
};

StructurePartition structure_partition(const UnimodularDiagonal& d, const Integer& j,
                                       const Integer& ell);

/// Whether an index tuple (by parts) satisfies the partition congruence.
/// General form: j/ell + m l_{p1}/sigma = sum_k l_{pk}/sigma (mod 1).
/// Symmetric form: j/ell = sum_k l_{pk}/sigma (mod 1).
bool pattern_allowed(const StructurePartition& sp, const std::vector<int>& parts, bool symmetric);

/// Throws VerificationError if some nonzero entry violates the congruence.
void verify_partition(const SparseTensor& a, const StructurePartition& sp, bool symmetric);

struct ForbiddenPatternReport {
  /// Part tuples whose subtensor must vanish; multisets (sorted) in the
  /// symmetric case, ordered tuples otherwise.
  std::vector<std::vector<int>> patterns;
  /// m-subsets that cannot be edges (hypergraph adjacency input only).
  std::vector<std::vector<int>> non_edges;
  bool non_edges_listed = false;
};

inline constexpr std::uint64_t kDefaultPatternCap = 1'000'000;

ForbiddenPatternReport forbidden_pattern_report(const SparseTensor& a, const StructurePartition& sp,
                                                bool symmetric, bool list_non_edges = false,
                                                std::uint64_t cap = kDefaultPatternCap);

}  // namespace tsym
