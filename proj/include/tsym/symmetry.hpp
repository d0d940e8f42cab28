#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsym/group.hpp"
#include "tsym/hypergraph.hpp"
#include "tsym/rational.hpp"
#include "tsym/tensor.hpp"
#include "tsym/trace.hpp"

namespace tsym {

/// phi maps vertex k to a label in 1..sigma; label sigma stands for residue 0.
struct ColoringCertificate {
  Integer sigma;
  std::vector<Integer> phi;
  Integer target;
};

enum class SymmetryStatus { CertifiedNotSymmetric, ConsistentToDepth, CertifiedSymmetric };

std::string to_string(SymmetryStatus status);

struct SymmetryVerdict {
  int ell = 1;
  SymmetryStatus status = SymmetryStatus::ConsistentToDepth;
  /// Deepest d with Tr_1..Tr_d all computed.
  int depth = 0;
  /// Set when the trace scan stopped early on a cap.
  bool partial = false;
  /// d with Tr_d != 0 and ell not dividing d.
  std::optional<int> witness_d;
  std::optional<ColoringCertificate> coloring;
  /// Diagonal D with e^{-2 pi i / ell} D^{-(m-1)} A D = A.
  std::optional<UnimodularDiagonal> diagonal;
};

SymmetryVerdict is_ell_symmetric_traces(const TraceTable& tt, int ell);
SymmetryVerdict is_ell_symmetric_traces(const SparseTensor& a, int ell, int d_max,
                                        const TraceOptions& options = {});

/// Trace scan first; if it finds no witness, tries to certify with a
/// coloring (symmetric tensors) or a phase-1/ell diagonal.
SymmetryVerdict symmetry_verdict(const SparseTensor& a, const TraceTable& tt, int ell);

struct CyclicWindow {
  /// gcd of the d <= depth with Tr_d != 0; 0 when none. A multiple of c.
  Integer c_hat;
  int depth = 0;
};

CyclicWindow cyclic_index_window(const TraceTable& tt);
CyclicWindow cyclic_index_window(const SparseTensor& a, int d_max, const TraceOptions& options = {});

/// Solves sum over positions of phi(i) = target (mod sigma) for every
/// nonzero entry. Deterministic: vertex 1 prefers label sigma, the rest
/// prefer the smallest label.
std::optional<ColoringCertificate> coloring_exists(const SparseTensor& a, const Integer& sigma,
                                                   const Integer& target);
bool verify_coloring(const SparseTensor& a, const ColoringCertificate& cert);

/// Largest divisor l of m with an (m, l)-coloring; needs g connected.
int cyclic_index_hypergraph(const Hypergraph& g);

struct OddTransversalResult {
  std::optional<std::vector<int>> X;
};

OddTransversalResult odd_transversal(const SparseTensor& a);
bool verify_odd_transversal(const SparseTensor& a, const std::vector<int>& x);

struct ChromaticBound {
  Integer bound;
  Integer s;
  Integer c;
  /// (p, r_[p] p) for each prime p dividing c.
  std::vector<std::pair<Integer, Integer>> prime_bounds;
  /// Color per vertex, 1-based, proper (no monochromatic edge).
  std::vector<int> coloring;
  /// "group-element" or "coloring"
  std::string source;
};

ChromaticBound chromatic_upper_bound(const Hypergraph& g);
bool is_proper_coloring(const Hypergraph& g, const std::vector<int>& colors);

struct PhmCheck {
  PhmBipartition bipartition;
  int ell;  // m / gcd(p, m)
  int c;
  bool holds;
};

PhmCheck p_hm_check(const Hypergraph& g);
bool p_hm_symmetry_check(const Hypergraph& g);

std::vector<Integer> prime_divisors(Integer n);

}  // namespace tsym
