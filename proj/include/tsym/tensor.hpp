#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "tsym/error.hpp"
#include "tsym/hypergraph.hpp"
#include "tsym/rational.hpp"

namespace tsym {

/// Ordered index tuple (i1, ..., im), 0-based.
using Index = std::vector<int>;

/// Order-m, dimension-n tensor with exact rational entries.
///
/// Only nonzero entries are stored, keyed by the full ordered index tuple (no
/// symmetry compression: the trace engine needs ordered-tuple semantics).
class SparseTensor {
 public:
  SparseTensor(int order, int dim);

  int order() const { return m_; }
  int dim() const { return n_; }
  const std::map<Index, Rational>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }

  /// Stores value at idx; a zero value erases the entry.
  void set(const Index& idx, const Rational& value);
  Rational get(const Index& idx) const;

  bool is_nonnegative() const;
  bool has_zero_diagonal() const;
  bool is_symmetric() const;

  /// Sets the symmetry flag after verifying permutation invariance; throws
  /// ParameterError otherwise.
  void mark_symmetric();
  bool symmetric_flag() const { return symmetric_; }

  friend bool operator==(const SparseTensor& a, const SparseTensor& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int m_;
  int n_;
  bool symmetric_ = false;
  std::map<Index, Rational> entries_;
};

/// Default cap on stored entries when expanding hypergraph tensors.
inline constexpr std::uint64_t kDefaultEntryCap = 10'000'000;

SparseTensor adjacency_tensor(const Hypergraph& g, std::uint64_t entry_cap = kDefaultEntryCap);
SparseTensor laplacian_tensor(const Hypergraph& g, std::uint64_t entry_cap = kDefaultEntryCap);
SparseTensor signless_laplacian_tensor(const Hypergraph& g,
                                       std::uint64_t entry_cap = kDefaultEntryCap);

/// diag(e^{2 pi i angle_k}) with angles reduced into [0, 1) and angle_0 == 0.
class UnimodularDiagonal {
 public:
  explicit UnimodularDiagonal(std::vector<Rational> angles);
  static UnimodularDiagonal identity(int n);

  const std::vector<Rational>& angles() const { return angles_; }
  int dim() const { return static_cast<int>(angles_.size()); }

  /// Multiplicative order: lcm of the angle denominators.
  Integer order() const;
  bool is_identity() const;

  UnimodularDiagonal operator*(const UnimodularDiagonal& other) const;
  UnimodularDiagonal inverse() const;
  UnimodularDiagonal pow(long k) const;
  std::vector<std::complex<double>> to_complex() const;

  friend bool operator==(const UnimodularDiagonal&, const UnimodularDiagonal&) = default;
  friend auto operator<=>(const UnimodularDiagonal& a, const UnimodularDiagonal& b) {
    return a.angles_ <=> b.angles_;
  }

 private:
  std::vector<Rational> angles_;
};

/// A cyclotomic value magnitude * e^{2 pi i angle}, magnitude > 0 and
/// angle in [0, 1).
struct PhasedValue {
  Rational magnitude;
  Rational angle;

  static PhasedValue from_rational(const Rational& q);
  std::complex<double> to_complex() const;
  friend bool operator==(const PhasedValue&, const PhasedValue&) = default;
};

/// Tensor with cyclotomic entries, as produced by diagonal similarity.
struct PhasedTensor {
  int order;
  int dim;
  std::map<Index, PhasedValue> entries;

  /// Entrywise equality with a rational tensor.
  bool equals(const SparseTensor& a) const;
};

/// e^{-2 pi i t} D^{-(m-1)} A D, computed exactly.
PhasedTensor diagonal_similarity(const SparseTensor& a, const UnimodularDiagonal& d,
                                 const Rational& phase);

/// Restriction of a to S_1 x ... x S_m; same order and dimension.
SparseTensor subtensor(const SparseTensor& a, const std::vector<std::vector<int>>& sets);

struct WeakIrreducibility {
  bool weakly_irreducible;
  /// Strongly connected components of D(A), each sorted, in discovery order.
  std::vector<std::vector<int>> components;
};

/// Builds D(A) (arc i -> j iff some nonzero a_{i i2..im} has j among
/// i2..im) and decomposes it into strongly connected components.
WeakIrreducibility is_weakly_irreducible(const SparseTensor& a);

/// Exhaustive subset test; gated at n <= 20 (throws DimensionError beyond).
bool is_irreducible(const SparseTensor& a);

namespace detail {
template <typename T>
struct is_complex : std::false_type {};
template <typename R>
struct is_complex<std::complex<R>> : std::true_type {};
}  // namespace detail

/// Converts an exact entry into the scalar type of a computation.
template <typename T>
T scalar_from(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else if constexpr (detail::is_complex<T>::value) {
    return T(static_cast<typename T::value_type>(q.get_d()), 0);
  } else {
    return static_cast<T>(q.get_d());
  }
}

/// A x^{m-1}. Exact when T is Rational.
template <typename T>
std::vector<T> apply(const SparseTensor& a, std::span<const T> x) {
  if (static_cast<int>(x.size()) != a.dim())
    throw DimensionError("vector length " + std::to_string(x.size()) +
                         " does not match dimension " + std::to_string(a.dim()));
  std::vector<T> y(x.size(), T(0));
  for (const auto& [idx, value] : a.entries()) {
    T term = scalar_from<T>(value);
    for (std::size_t k = 1; k < idx.size(); ++k) term *= x[idx[k]];
    y[idx[0]] += term;
  }
  return y;
}

template <typename T>
std::vector<T> apply(const SparseTensor& a, const std::vector<T>& x) {
  return apply<T>(a, std::span<const T>(x));
}

/// Componentwise k-th power x^{[k]}.
template <typename T>
std::vector<T> entrywise_power(std::span<const T> x, int k) {
  std::vector<T> y;
  y.reserve(x.size());
  for (const T& v : x) {
    T p(1);
    for (int i = 0; i < k; ++i) p *= v;
    y.push_back(p);
  }
  return y;
}

template <typename T>
std::vector<T> entrywise_power(const std::vector<T>& x, int k) {
  return entrywise_power<T>(std::span<const T>(x), k);
}

/// Reads the `m n` header then lines `i1 ... im p/q` (1-based indices).
SparseTensor parse_tensor(std::istream& in);
SparseTensor parse_tensor(const std::string& text);
SparseTensor load_tensor(const std::string& path);
void write_tensor(std::ostream& out, const SparseTensor& a);

}  // namespace tsym
