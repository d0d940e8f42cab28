#include "tsym/smith.hpp"

#include <utility>

#include "tsym/error.hpp"

namespace tsym {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t b_cols) {
  IntMatrix out(a.size(), std::vector<Integer>(b_cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b_cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

struct Reducer {
  IntMatrix s, u, v;
  std::size_t rows, cols;

  void swap_rows(std::size_t a, std::size_t b) {
    std::swap(s[a], s[b]);
    std::swap(u[a], u[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (auto& row : s) std::swap(row[a], row[b]);
    for (auto& row : v) std::swap(row[a], row[b]);
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < cols; ++j) s[dst][j] += q * s[src][j];
    for (std::size_t j = 0; j < rows; ++j) u[dst][j] += q * u[src][j];
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) s[i][dst] += q * s[i][src];
    for (std::size_t i = 0; i < cols; ++i) v[i][dst] += q * v[i][src];
  }
  void negate_row(std::size_t r) {
    for (auto& x : s[r]) x = -x;
    for (auto& x : u[r]) x = -x;
  }

  bool pivot_smallest(std::size_t t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s[i][j] != 0 && (bi == rows || abs(s[i][j]) < abs(s[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void reduce(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s[i][t].get_mpz_t(), s[t][t].get_mpz_t());
        add_row(i, t, -q);
        if (s[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s[t][j].get_mpz_t(), s[t][t].get_mpz_t());
        add_col(j, t, -q);
        if (s[t][j] != 0) dirty = true;
      }
      if (dirty) {
        pivot_smallest_in_cross(t);
        continue;
      }
      // The pivot must divide everything left in the trailing block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s[i][j] % s[t][t] != 0) {
            add_row(t, i, 1);
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (s[t][t] < 0) negate_row(t);
  }

  void pivot_smallest_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows; ++i)
      if (s[i][t] != 0 && abs(s[i][t]) < abs(s[bi][bj])) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t; j < cols; ++j)
      if (s[t][j] != 0 && abs(s[t][j]) < abs(s[bi][bj])) {
        bi = t;
        bj = j;
      }
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  for (const auto& row : m)
    if (row.size() != cols) throw DimensionError("ragged integer matrix");
  Reducer r{m, identity_matrix(rows), identity_matrix(cols), rows, cols};
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    if (!r.pivot_smallest(t)) break;
    r.reduce(t);
  }
  SNFResult out;
  out.rank = static_cast<int>(t);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) out.diag.push_back(r.s[i][i]);
  out.U = std::move(r.u);
  out.V = std::move(r.v);
  return out;
}

ModularSystem::ModularSystem(IntMatrix m, std::size_t cols, Integer sigma)
    : m_(std::move(m)), cols_(cols), sigma_(std::move(sigma)) {
  if (sigma_ < 1) throw ParameterError("modulus must be positive");
}

std::optional<std::vector<Integer>> ModularSystem::solve_with(const IntMatrix& m, std::size_t cols,
                                                               const std::vector<Integer>& rhs) const {
  if (rhs.size() != m.size()) throw DimensionError("right-hand side length mismatch");
  if (cols == 0) {
    for (const auto& b : rhs)
      if (mod_floor(b, sigma_) != 0) return std::nullopt;
    return std::vector<Integer>{};
  }
  SNFResult snf = smith_normal_form(m, cols);
  std::vector<Integer> ub(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) ub[i] += snf.U[i][j] * rhs[j];
  std::vector<Integer> y(cols, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    Integer b = mod_floor(ub[i], sigma_);
    const Integer s = i < snf.diag.size() ? snf.diag[i] : Integer(0);
    Integer g = gcd(s, sigma_);
    if (b % g != 0) return std::nullopt;
    if (i < cols && s != 0) {
      Integer mod = sigma_ / g;
      y[i] = mod == 1 ? Integer(0) : mod_floor((b / g) * mod_inverse(s / g, mod), mod);
    }
  }
  std::vector<Integer> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) x[i] += snf.V[i][j] * y[j];
    x[i] = mod_floor(x[i], sigma_);
  }
  return x;
}

bool ModularSystem::solvable(const std::vector<Integer>& rhs) const { return solve(rhs).has_value(); }

std::optional<std::vector<Integer>> ModularSystem::solve(const std::vector<Integer>& rhs) const {
  auto x = solve_with(m_, cols_, rhs);
  if (x) {
    for (std::size_t i = 0; i < m_.size(); ++i) {
      Integer lhs = 0;
      for (std::size_t j = 0; j < cols_; ++j) lhs += m_[i][j] * (*x)[j];
      if (mod_floor(lhs - rhs[i], sigma_) != 0) throw VerificationError("modular solve check failed");
    }
  }
  return x;
}

std::optional<std::vector<Integer>> ModularSystem::preferred_solution(
    const std::vector<Integer>& rhs, const std::vector<std::vector<Integer>>& prefs) const {
  if (prefs.size() != cols_) throw DimensionError("one preference list per unknown");
  if (!solve(rhs)) return std::nullopt;
  std::vector<Integer> chosen;
  std::vector<Integer> b = rhs;
  for (std::size_t k = 0; k < cols_; ++k) {
    // Remaining unknowns k+1..cols-1.
    IntMatrix rest(m_.size());
    for (std::size_t i = 0; i < m_.size(); ++i) rest[i].assign(m_[i].begin() + k + 1, m_[i].end());
    bool found = false;
    for (const Integer& value : prefs[k]) {
      std::vector<Integer> trial(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) trial[i] = b[i] - m_[i][k] * value;
      if (solve_with(rest, cols_ - k - 1, trial)) {
        chosen.push_back(value);
        b = std::move(trial);
        found = true;
        break;
      }
    }
    if (!found) throw VerificationError("preference search lost feasibility");
  }
  return chosen;
}

}  // namespace tsym
