#include "tsym/report.hpp"

#include <chrono>
#include <functional>

#include "tsym/error.hpp"

namespace tsym {

json to_json(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return z.get_str();
}

json to_json(const Rational& q) {
  return json{{"num", to_json(Integer(q.get_num()))}, {"den", to_json(Integer(q.get_den()))}};
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("expected an integer", 0);
}

Rational rational_from_json(const json& j) {
  Rational q(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
  q.canonicalize();
  return q;
}

json to_json(const UnimodularDiagonal& d) {
  json out = json::array();
  for (const auto& angle : d.angles()) out.push_back(to_json(angle));
  return out;
}

UnimodularDiagonal diagonal_from_json(const json& j) {
  std::vector<Rational> angles;
  for (const auto& x : j) angles.push_back(rational_from_json(x));
  return UnimodularDiagonal(std::move(angles));
}

json to_json(const ColoringCertificate& cert) {
  json phi = json::array();
  for (const auto& label : cert.phi) phi.push_back(to_json(label));
  return json{{"sigma", to_json(cert.sigma)}, {"target", to_json(cert.target)}, {"phi", phi}};
}

ColoringCertificate coloring_from_json(const json& j) {
  ColoringCertificate cert{integer_from_json(j.at("sigma")), {}, integer_from_json(j.at("target"))};
  for (const auto& x : j.at("phi")) cert.phi.push_back(integer_from_json(x));
  return cert;
}

json to_json(const SymmetryVerdict& v) {
  json out{{"ell", v.ell}, {"status", to_string(v.status)}, {"depth", v.depth}, {"partial", v.partial}};
  if (v.witness_d) out["witness_d"] = *v.witness_d;
  if (v.coloring) out["coloring"] = to_json(*v.coloring);
  if (v.diagonal) out["diagonal"] = to_json(*v.diagonal);
  return out;
}

json to_json(const TraceTable& tt) {
  json values = json::array();
  for (int d = 1; d <= tt.d_max; ++d) {
    json row{{"d", d}};
    if (tt.complete[d - 1]) {
      row["num"] = to_json(Integer(tt.at(d).get_num()));
      row["den"] = to_json(Integer(tt.at(d).get_den()));
    }
    row["complete"] = static_cast<bool>(tt.complete[d - 1]);
    values.push_back(row);
  }
  return json{{"d_max", tt.d_max}, {"complete_depth", tt.complete_depth()}, {"values", values}};
}

json to_json(const CharPolyPrefix& p) {
  json coeffs = json::array();
  for (const auto& a : p.coefficients) coeffs.push_back(to_json(a));
  return json{{"total_degree", to_json(p.total_degree)}, {"k", p.depth()}, {"coefficients", coeffs}};
}

json to_json(const SpectralRadius& r) {
  return json{{"rho", r.rho}, {"lower", r.lower}, {"upper", r.upper}, {"iterations", r.iterations},
              {"x", r.x}};
}

namespace {

json integers(const std::vector<Integer>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

json one_based(const std::vector<int>& xs) {
  json out = json::array();
  for (int x : xs) out.push_back(x + 1);
  return out;
}

}  // namespace

json to_json(const GroupReport& g, bool list_elements) {
  json gens = json::array();
  for (const auto& h : g.generators_D0) gens.push_back(to_json(h));
  json reps = json::array();
  for (const auto& r : g.coset_reps) reps.push_back(to_json(r));
  json out{{"s", to_json(g.s)},
           {"c", to_json(g.c)},
           {"total_order", to_json(g.total_order)},
           {"invariant_factors_D0", integers(g.invariant_factors_D0)},
           {"invariant_factors_D", integers(g.invariant_factors_D)},
           {"generators_D0", gens},
           {"phase_generator", to_json(g.phase_generator)},
           {"coset_reps", reps},
           {"enumerated", g.enumerated}};
  if (g.enumerated && list_elements) {
    json cosets = json::array();
    for (const auto& coset : g.cosets) {
      json elems = json::array();
      for (const auto& e : coset) elems.push_back(to_json(e));
      cosets.push_back(elems);
    }
    out["cosets"] = cosets;
  }
  return out;
}

json to_json(const StructurePartition& sp) {
  json parts = json::array();
  for (const auto& p : sp.parts) parts.push_back(one_based(p));
  return json{{"parts", parts},
              {"labels", integers(sp.labels)},
              {"sigma", to_json(sp.sigma)},
              {"j", to_json(sp.j)},
              {"ell", to_json(sp.ell)}};
}

json to_json(const ForbiddenPatternReport& f) {
  json patterns = json::array();
  for (const auto& p : f.patterns) patterns.push_back(one_based(p));
  json out{{"patterns", patterns}};
  if (f.non_edges_listed) {
    json non_edges = json::array();
    for (const auto& e : f.non_edges) non_edges.push_back(one_based(e));
    out["non_edges"] = non_edges;
  }
  return out;
}

json to_json(const OddTransversalResult& r) {
  if (!r.X) return json{{"exists", false}};
  return json{{"exists", true}, {"X", one_based(*r.X)}};
}

json to_json(const ChromaticBound& b) {
  json primes = json::array();
  for (const auto& [p, value] : b.prime_bounds)
    primes.push_back(json{{"p", to_json(p)}, {"bound", to_json(value)}});
  return json{{"bound", to_json(b.bound)}, {"s", to_json(b.s)},       {"c", to_json(b.c)},
              {"prime_bounds", primes},   {"source", b.source},        {"coloring", b.coloring}};
}

json to_json(const PhmCheck& c) {
  return json{{"p", c.bipartition.p},
              {"V1", one_based(c.bipartition.part)},
              {"ell", c.ell},
              {"c", c.c},
              {"holds", c.holds}};
}

json to_json(const CyclicWindow& w) {
  return json{{"c_hat", to_json(w.c_hat)}, {"depth", w.depth}, {"kind", "upper-multiple"}};
}

json to_json(const CharPoly2D& p) {
  json coeffs = json::array();
  for (const auto& a : p.coefficients) coeffs.push_back(to_json(a));
  return json{{"degree", p.degree()}, {"coefficients", coeffs}};
}

namespace {

json skipped(const std::string& reason) { return json{{"skipped", reason}}; }

class Pipeline {
 public:
  Pipeline(const SparseTensor& a, const Hypergraph* g, const AnalysisOptions& options)
      : a_(a), g_(g), options_(options) {}

  AnalysisReport run(const std::string& file) {
    const int m = a_.order();
    const int d_max = options_.d_max > 0 ? options_.d_max : 3 * m;
    json input{{"file", file},
               {"kind", g_ ? "hypergraph" : "tensor"},
               {"n", a_.dim()},
               {"m", m}};
    if (g_)
      input["edges"] = g_->edge_count();
    else
      input["entries"] = a_.nnz();

    json results;
    timed("structure", [&] { results["structure"] = structure(); });
    timed("radius", [&] { results["radius"] = radius(); });
    timed("traces", [&] {
      TraceOptions to;
      to.class_cap = options_.class_cap;
      tt_ = trace_table(a_, d_max, to, true);
      if (!tt_.is_complete()) partial_ = true;
      results["traces"] = to_json(tt_);
    });
    timed("charpoly", [&] { results["charpoly"] = charpoly(d_max); });
    timed("group", [&] { results["group"] = group(); });
    timed("cyclic_index", [&] { results["cyclic_index"] = cyclic_index(); });
    timed("symmetry", [&] { results["symmetry"] = symmetry(); });
    timed("colorings", [&] { results["colorings"] = colorings(); });
    timed("odd_transversal", [&] { results["odd_transversal"] = to_json(odd_transversal(a_)); });
    timed("partitions", [&] { results["partitions"] = partitions(); });
    if (g_) {
      timed("chromatic", [&] { results["chromatic"] = chromatic(); });
      timed("phm", [&] { results["phm"] = phm(); });
    }

    json config{{"d_max", d_max},
                {"k", options_.k < 0 ? d_max : options_.k},
                {"tol", options_.tol},
                {"group_cap", options_.group_cap},
                {"class_cap", options_.class_cap}};
    json provenance{{"tool", "tsym"}, {"version", kToolVersion}, {"config", config}};
    if (options_.timing) provenance["timing_ms"] = timing_;

    AnalysisReport report;
    report.partial = partial_;
    report.document = json{{"input", input},
                           {"status", partial_ ? "partial" : "complete"},
                           {"results", results},
                           {"provenance", provenance}};
    return report;
  }

 private:
  void timed(const char* name, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    auto end = std::chrono::steady_clock::now();
    timing_[name] = std::chrono::duration<double, std::milli>(end - start).count();
  }

  json structure() {
    WeakIrreducibility wi = is_weakly_irreducible(a_);
    json out{{"nonnegative", a_.is_nonnegative()},
             {"symmetric", symmetric()},
             {"weakly_irreducible", wi.weakly_irreducible},
             {"strong_components", wi.components.size()}};
    if (g_) {
      out["connected"] = is_connected(*g_);
      out["contains_simplex"] = contains_simplex(*g_);
    }
    return out;
  }

  bool symmetric() {
    if (!symmetric_) symmetric_ = a_.symmetric_flag() || a_.is_symmetric();
    return *symmetric_;
  }

  json radius() {
    try {
      return to_json(spectral_radius(a_, options_.tol));
    } catch (const ParameterError& ex) {
      return skipped(ex.what());
    } catch (const ConvergenceError& ex) {
      partial_ = true;
      return json{{"error", ex.what()}};
    }
  }

  json charpoly(int d_max) {
    int k = options_.k < 0 ? d_max : options_.k;
    if (k > d_max) throw ParameterError("--k exceeds --dmax");
    const int depth = tt_.complete_depth();
    if (k > depth) {
      partial_ = true;
      k = depth;
    }
    Integer degree = charpoly_degree(a_.dim(), a_.order());
    if (degree < k) k = static_cast<int>(degree.get_si());
    CharPolyPrefix prefix = charpoly_coefficients(tt_, k, degree);
    json out = to_json(prefix);
    out["newton_consistent"] = newton_consistency(tt_, prefix);
    if (g_) {
      if (depth >= g_->m())
        out["codegree_m_check"] = codegree_m_check(*g_, tt_);
      else
        out["codegree_m_check"] = nullptr;
    }
    return out;
  }

  json group() {
    auto hs = solve_homogeneous(build_constraint_system(a_));
    if (!hs.finite) return json{{"s", "INFINITE"}, {"free_rank", hs.free_rank}};
    try {
      report_ = enumerate_group(a_, options_.group_cap);
    } catch (const VerificationError&) {
      throw;
    } catch (const Error& ex) {
      return skipped(ex.what());
    }
    if (!report_->enumerated) partial_ = true;
    return to_json(*report_, report_->total_order <= 1000);
  }

  json cyclic_index() {
    json out{{"window", to_json(cyclic_index_window(tt_))}};
    out["exact"] = report_ ? to_json(report_->c) : json(nullptr);
    if (g_) {
      if (is_connected(*g_))
        out["coloring"] = cyclic_index_hypergraph(*g_);
      else
        out["coloring"] = nullptr;
    }
    return out;
  }

  json symmetry() {
    int top = a_.order();
    if (report_) top = std::max<long>(top, report_->c.get_si());
    json out = json::array();
    for (int ell = 2; ell <= top; ++ell) out.push_back(to_json(symmetry_verdict(a_, tt_, ell)));
    return out;
  }

  json colorings() {
    if (!symmetric()) return skipped("tensor is not symmetric");
    const int m = a_.order();
    json out = json::array();
    for (int ell = m; ell >= 2; --ell) {
      if (m % ell != 0) continue;
      auto cert = coloring_exists(a_, m, m / ell);
      out.push_back(json{{"ell", ell}, {"certificate", cert ? to_json(*cert) : json(nullptr)}});
    }
    return out;
  }

  json partition_entry(const std::string& source, const UnimodularDiagonal& d, long j) {
    StructurePartition sp = structure_partition(d, j, report_->c);
    const bool sym = symmetric() && a_.order() % sp.sigma == 0;
    json out{{"source", source}, {"symmetric_form", sym}, {"partition", to_json(sp)}};
    try {
      out["forbidden"] = to_json(forbidden_pattern_report(a_, sp, sym, g_ != nullptr));
    } catch (const CapExceeded& ex) {
      partial_ = true;
      out["forbidden"] = json{{"error", ex.what()}};
    }
    return out;
  }

  json partitions() {
    if (!report_) return skipped("group report unavailable");
    if (!report_->enumerated) return skipped("group was not enumerated");
    json out = json::array();
    if (report_->cosets[0].size() > 1) out.push_back(partition_entry("D0", report_->cosets[0][1], 0));
    if (report_->c > 1) out.push_back(partition_entry("coset-1", report_->coset_reps[1], 1));
    for (const auto& p : prime_divisors(report_->c)) {
      UnimodularDiagonal d = order_p_element(*report_, p);
      long j = 0;
      for (std::size_t k = 0; k < report_->cosets.size(); ++k)
        if (std::binary_search(report_->cosets[k].begin(), report_->cosets[k].end(), d))
          j = static_cast<long>(k);
      json entry = partition_entry("order-p", d, j);
      entry["p"] = to_json(p);
      out.push_back(entry);
    }
    return out;
  }

  json chromatic() {
    if (!is_connected(*g_)) return skipped("hypergraph is not connected");
    if (!report_) return skipped("group report unavailable");
    if (report_->c < 2) return skipped("cyclic index is 1");
    if (!report_->enumerated) return skipped("group was not enumerated");
    return to_json(chromatic_upper_bound(*g_));
  }

  json phm() {
    if (!is_connected(*g_)) return skipped("hypergraph is not connected");
    if (!find_p_hm_bipartition(*g_)) return skipped("no p-hm bipartition");
    return to_json(p_hm_check(*g_));
  }

  const SparseTensor& a_;
  const Hypergraph* g_;
  AnalysisOptions options_;
  TraceTable tt_;
  std::optional<GroupReport> report_;
  std::optional<bool> symmetric_;
  bool partial_ = false;
  json timing_ = json::object();
};

}  // namespace

AnalysisReport analyze_hypergraph(const Hypergraph& g, const std::string& file,
                                  const AnalysisOptions& options) {
  SparseTensor a = adjacency_tensor(g);
  return Pipeline(a, &g, options).run(file);
}

AnalysisReport analyze_tensor(const SparseTensor& a, const std::string& file,
                              const AnalysisOptions& options) {
  return Pipeline(a, nullptr, options).run(file);
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationError("report certificate failed: " + what);
}

void check_diagonal(const SparseTensor& a, const json& d, const Rational& phase, const std::string& what) {
  require(diagonal_similarity(a, diagonal_from_json(d), phase).equals(a), what);
}

}  // namespace

int verify_report(const json& report, const SparseTensor& a) {
  int checked = 0;
  const json& results = report.at("results");

  if (results.contains("symmetry")) {
    for (const auto& v : results["symmetry"]) {
      const Rational phase = Rational(1) / Rational(v.at("ell").get<int>());
      if (v.contains("coloring")) {
        require(verify_coloring(a, coloring_from_json(v["coloring"])), "symmetry coloring");
        ++checked;
      }
      if (v.contains("diagonal")) {
        check_diagonal(a, v["diagonal"], phase, "symmetry diagonal");
        ++checked;
      }
    }
  }
  if (results.contains("colorings") && results["colorings"].is_array()) {
    for (const auto& c : results["colorings"]) {
      if (c.at("certificate").is_null()) continue;
      require(verify_coloring(a, coloring_from_json(c["certificate"])), "coloring");
      ++checked;
    }
  }
  if (results.contains("odd_transversal") && results["odd_transversal"].value("exists", false)) {
    std::vector<int> x;
    for (const auto& v : results["odd_transversal"]["X"]) x.push_back(v.get<int>() - 1);
    require(verify_odd_transversal(a, x), "odd transversal");
    ++checked;
  }
  Integer c = 0;
  if (results.contains("group") && results["group"].contains("c")) {
    const json& g = results["group"];
    c = integer_from_json(g.at("c"));
    const Rational step = Rational(1) / Rational(c);
    for (const auto& h : g.at("generators_D0")) {
      check_diagonal(a, h, 0, "D0 generator");
      ++checked;
    }
    check_diagonal(a, g.at("phase_generator"), step, "phase generator");
    ++checked;
    long j = 0;
    for (const auto& r : g.at("coset_reps")) {
      check_diagonal(a, r, Rational(j++) * step, "coset representative");
      ++checked;
    }
    if (g.contains("cosets")) {
      j = 0;
      for (const auto& coset : g["cosets"]) {
        for (const auto& e : coset) {
          check_diagonal(a, e, Rational(j) * step, "group element");
          ++checked;
        }
        ++j;
      }
    }
  }
  if (results.contains("partitions") && results["partitions"].is_array()) {
    for (const auto& entry : results["partitions"]) {
      const json& p = entry.at("partition");
      StructurePartition sp;
      for (const auto& part : p.at("parts")) {
        std::vector<int> vs;
        for (const auto& v : part) vs.push_back(v.get<int>() - 1);
        sp.parts.push_back(vs);
      }
      for (const auto& l : p.at("labels")) sp.labels.push_back(integer_from_json(l));
      sp.sigma = integer_from_json(p.at("sigma"));
      sp.j = integer_from_json(p.at("j"));
      sp.ell = integer_from_json(p.at("ell"));
      try {
        verify_partition(a, sp, entry.at("symmetric_form").get<bool>());
      } catch (const Error& ex) {
        require(false, std::string("partition: ") + ex.what());
      }
      ++checked;
    }
  }
  if (results.contains("chromatic") && results["chromatic"].contains("coloring")) {
    std::vector<int> colors = results["chromatic"]["coloring"].get<std::vector<int>>();
    require(static_cast<int>(colors.size()) == a.dim(), "chromatic coloring length");
    for (const auto& [idx, value] : a.entries()) {
      bool mixed = false;
      for (int v : idx)
        if (colors[v] != colors[idx.front()]) mixed = true;
      require(mixed, "chromatic coloring has a monochromatic entry");
    }
    ++checked;
  }
  return checked;
}

}  // namespace tsym
