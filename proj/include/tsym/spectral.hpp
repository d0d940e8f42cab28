#pragma once

#include <complex>
#include <vector>

#include "tsym/tensor.hpp"

namespace tsym {

/// An eigenpair candidate with its residual recomputed on construction.
struct EigenPair {
  std::complex<double> lambda;
  std::vector<std::complex<double>> x;
  double residual;

  static EigenPair make(const SparseTensor& a, std::complex<double> lambda,
                        std::vector<std::complex<double>> x);
};

struct SpectralRadius {
  double rho;
  std::vector<double> x;  // positive, max-norm 1
  double lower;           // Collatz-Wielandt bounds at the final iterate
  double upper;
  int iterations;
};

/// Shifted power iteration x <- (A x^{m-1} + eps x^{[m-1]})^{[1/(m-1)]} for a
/// nonnegative weakly irreducible tensor. eps is 1 when the diagonal is zero
/// and 0 otherwise. Stops when the min/max Collatz-Wielandt ratios differ by
/// less than tol; rho is their midpoint.
SpectralRadius spectral_radius(const SparseTensor& a, double tol = 1e-12, int max_iter = 200000);

/// max_i |(A x^{m-1})_i - lambda x_i^{m-1}|. Throws on the zero vector.
double verify_eigenpair(const SparseTensor& a, std::complex<double> lambda,
                        const std::vector<std::complex<double>>& x);

/// Characteristic polynomial of a dimension-2 tensor.
/// coefficients[k] multiplies lambda^{D-k}, D = 2(m-1); coefficients[0] == 1.
struct CharPoly2D {
  std::vector<Rational> coefficients;
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Sylvester resultant of the two binary forms (lambda I - A) x^{m-1}.
CharPoly2D charpoly_resultant_2d(const SparseTensor& a);

/// All 2(m-1) roots of the n = 2 characteristic polynomial, with
/// multiplicity, from the companion matrix.
std::vector<std::complex<double>> spectrum_2d(const SparseTensor& a);

/// Roots of sum_k coefficients[k] lambda^{D-k}.
std::vector<std::complex<double>> polynomial_roots(const std::vector<Rational>& coefficients);

}  // namespace tsym
