#include "tsym/spectral.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/Polynomials>

namespace tsym {

EigenPair EigenPair::make(const SparseTensor& a, std::complex<double> lambda,
                          std::vector<std::complex<double>> x) {
  double r = verify_eigenpair(a, lambda, x);
  return {lambda, std::move(x), r};
}

double verify_eigenpair(const SparseTensor& a, std::complex<double> lambda,
                        const std::vector<std::complex<double>>& x) {
  if (std::all_of(x.begin(), x.end(), [](auto v) { return v == std::complex<double>(0); }))
    throw ParameterError("eigenvector must be nonzero");
  auto lhs = apply(a, x);
  auto pw = entrywise_power(x, a.order() - 1);
  double r = 0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(lhs[i] - lambda * pw[i]));
  return r;
}

SpectralRadius spectral_radius(const SparseTensor& a, double tol, int max_iter) {
  if (!a.is_nonnegative()) throw ParameterError("spectral radius iteration needs a nonnegative tensor");
  if (!is_weakly_irreducible(a).weakly_irreducible)
    throw ParameterError("spectral radius iteration needs a weakly irreducible tensor");
  using Real = long double;
  const int n = a.dim();
  const int p = a.order() - 1;
  const Real shift = a.has_zero_diagonal() ? 1 : 0;

  std::vector<Real> x(n, 1);
  Real lower = 0, upper = 0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    auto ax = apply<Real>(a, x);
    lower = std::numeric_limits<Real>::infinity();
    upper = 0;
    for (int i = 0; i < n; ++i) {
      Real ratio = ax[i] / std::pow(x[i], p);
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
    }
    if (upper - lower < tol) {
      std::vector<double> xd(x.begin(), x.end());
      return {static_cast<double>((lower + upper) / 2), std::move(xd), static_cast<double>(lower),
              static_cast<double>(upper), iter};
    }
    Real top = 0;
    for (int i = 0; i < n; ++i) {
      x[i] = std::pow(ax[i] + shift * std::pow(x[i], p), Real(1) / p);
      top = std::max(top, x[i]);
    }
    for (auto& v : x) v /= top;
  }
  throw ConvergenceError("power iteration did not reach tolerance within " +
                         std::to_string(max_iter) + " iterations (gap " +
                         std::to_string(static_cast<double>(upper - lower)) + ")");
}

namespace {

// Exact determinant over Q by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> mat) {
  const std::size_t n = mat.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && mat[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(mat[pivot], mat[c]);
      det = -det;
    }
    det *= mat[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (mat[r][c] == 0) continue;
      Rational f = mat[r][c] / mat[c][c];
      for (std::size_t k = c; k < n; ++k) mat[r][k] -= f * mat[c][k];
    }
  }
  return det;
}

// Coefficients (x1^{p-k} x2^k, k = 0..p) of (lambda I - A) x^{m-1} in row i.
std::vector<Rational> binary_form(const SparseTensor& a, int row, const Rational& lambda) {
  const int p = a.order() - 1;
  std::vector<Rational> f(p + 1, Rational(0));
  f[row == 0 ? 0 : p] += lambda;
  for (const auto& [idx, value] : a.entries()) {
    if (idx[0] != row) continue;
    int twos = 0;
    for (std::size_t k = 1; k < idx.size(); ++k) twos += idx[k];
    f[twos] -= value;
  }
  return f;
}

Rational sylvester_at(const SparseTensor& a, const Rational& lambda) {
  const int p = a.order() - 1;
  auto f = binary_form(a, 0, lambda);
  auto g = binary_form(a, 1, lambda);
  std::vector<std::vector<Rational>> mat(2 * p, std::vector<Rational>(2 * p, Rational(0)));
  for (int r = 0; r < p; ++r)
    for (int k = 0; k <= p; ++k) {
      mat[r][r + k] = f[k];
      mat[p + r][r + k] = g[k];
    }
  return determinant(std::move(mat));
}

}  // namespace

CharPoly2D charpoly_resultant_2d(const SparseTensor& a) {
  if (a.dim() != 2) throw DimensionError("resultant characteristic polynomial needs n = 2");
  const int degree = 2 * (a.order() - 1);
  // Interpolate the resultant from its values at lambda = 0..degree.
  std::vector<Rational> xs, dd;
  for (int k = 0; k <= degree; ++k) {
    xs.emplace_back(k);
    dd.push_back(sylvester_at(a, xs.back()));
  }
  for (int level = 1; level <= degree; ++level)
    for (int k = degree; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
  // Newton form -> ascending monomial coefficients.
  std::vector<Rational> asc(1, dd[degree]);
  for (int k = degree - 1; k >= 0; --k) {
    std::vector<Rational> next(asc.size() + 1, Rational(0));
    for (std::size_t j = 0; j < asc.size(); ++j) {
      next[j + 1] += asc[j];
      next[j] -= asc[j] * xs[k];
    }
    next[0] += dd[k];
    asc = std::move(next);
  }
  CharPoly2D out;
  out.coefficients.assign(asc.rbegin(), asc.rend());
  if (out.coefficients.front() != 1)
    throw VerificationError("resultant is not monic in lambda");
  return out;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<Rational>& coefficients) {
  const int degree = static_cast<int>(coefficients.size()) - 1;
  if (degree < 1) return {};
  Eigen::VectorXd asc(degree + 1);
  for (int k = 0; k <= degree; ++k) asc[k] = coefficients[degree - k].get_d();
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
  solver.compute(asc);
  std::vector<std::complex<double>> roots;
  for (Eigen::Index k = 0; k < solver.roots().size(); ++k) roots.push_back(solver.roots()[k]);
  std::sort(roots.begin(), roots.end(), [](auto u, auto v) {
    return u.real() != v.real() ? u.real() > v.real() : u.imag() > v.imag();
  });
  return roots;
}

std::vector<std::complex<double>> spectrum_2d(const SparseTensor& a) {
  return polynomial_roots(charpoly_resultant_2d(a).coefficients);
}

}  // namespace tsym
