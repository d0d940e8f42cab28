#pragma once

#include <optional>
#include <vector>

#include "tsym/rational.hpp"

namespace tsym {

using IntMatrix = std::vector<std::vector<Integer>>;

struct SNFResult {
  IntMatrix U;  // rows x rows
  IntMatrix V;  // cols x cols
  /// min(rows, cols) diagonal entries, s_1 | s_2 | ..., zeros trailing.
  std::vector<Integer> diag;
  int rank = 0;
};

/// U * M * V = diag, with U and V unimodular.
SNFResult smith_normal_form(const IntMatrix& m, std::size_t cols);
inline SNFResult smith_normal_form(const IntMatrix& m) {
  return smith_normal_form(m, m.empty() ? 0 : m.front().size());
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t b_cols);
IntMatrix identity_matrix(std::size_t n);
Integer determinant(IntMatrix m);

/// Solutions of M x = b (mod sigma), x in Z_sigma^cols.
class ModularSystem {
 public:
  ModularSystem(IntMatrix m, std::size_t cols, Integer sigma);

  bool solvable(const std::vector<Integer>& rhs) const;
  std::optional<std::vector<Integer>> solve(const std::vector<Integer>& rhs) const;
  /// The solution minimizing x lexicographically under per-coordinate
  /// preference orders: prefs[i] lists residues for x_i, most preferred first,
  /// and must be a permutation of 0..sigma-1.
  std::optional<std::vector<Integer>> preferred_solution(
      const std::vector<Integer>& rhs, const std::vector<std::vector<Integer>>& prefs) const;

 private:
  std::optional<std::vector<Integer>> solve_with(const IntMatrix& m, std::size_t cols,
                                                 const std::vector<Integer>& rhs) const;

  IntMatrix m_;
  std::size_t cols_;
  Integer sigma_;
};

}  // namespace tsym
