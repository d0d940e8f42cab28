#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "tsym/charpoly.hpp"
#include "tsym/group.hpp"
#include "tsym/hypergraph.hpp"
#include "tsym/spectral.hpp"
#include "tsym/symmetry.hpp"
#include "tsym/trace.hpp"

namespace tsym {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

json to_json(const Integer& z);
json to_json(const Rational& q);
Integer integer_from_json(const json& j);
Rational rational_from_json(const json& j);

json to_json(const UnimodularDiagonal& d);
UnimodularDiagonal diagonal_from_json(const json& j);
json to_json(const ColoringCertificate& cert);
ColoringCertificate coloring_from_json(const json& j);
json to_json(const SymmetryVerdict& v);
json to_json(const TraceTable& tt);
json to_json(const CharPolyPrefix& p);
json to_json(const SpectralRadius& r);
json to_json(const GroupReport& g, bool list_elements);
json to_json(const StructurePartition& sp);
json to_json(const ForbiddenPatternReport& f);
json to_json(const OddTransversalResult& r);
json to_json(const ChromaticBound& b);
json to_json(const PhmCheck& c);
json to_json(const CyclicWindow& w);
json to_json(const CharPoly2D& p);

struct AnalysisOptions {
  int d_max = 0;  // 0 means 3m
  int k = -1;     // charpoly prefix depth; -1 means d_max
  double tol = 1e-12;
  std::uint64_t group_cap = kDefaultGroupCap;
  std::uint64_t class_cap = 10'000'000;
  bool timing = true;
};

struct AnalysisReport {
  json document;
  bool partial = false;
};

/// The whole pipeline. Sections whose preconditions fail carry "skipped";
/// cap hits mark the report partial.
AnalysisReport analyze_hypergraph(const Hypergraph& g, const std::string& file,
                                  const AnalysisOptions& options);
AnalysisReport analyze_tensor(const SparseTensor& a, const std::string& file,
                              const AnalysisOptions& options);

/// Re-verifies every certificate embedded in a report against a; returns the
/// number of certificates checked. Throws VerificationError on any failure.
int verify_report(const json& report, const SparseTensor& a);

}  // namespace tsym
