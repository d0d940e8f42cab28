#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "tsym/error.hpp"
#include "tsym/report.hpp"

using namespace tsym;

namespace {

struct Input {
  std::string path;
  std::optional<Hypergraph> g;
  SparseTensor a{2, 1};
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Input load(const std::string& path) {
  Input in;
  in.path = path;
  if (ends_with(path, ".uhg")) {
    in.g = load_hypergraph(path);
    in.a = adjacency_tensor(*in.g);
  } else if (ends_with(path, ".tns")) {
    in.a = load_tensor(path);
  } else {
    throw ParameterError("unknown input kind (expected .uhg or .tns): " + path);
  }
  return in;
}

json descriptor(const Input& in) {
  json d{{"file", in.path}, {"kind", in.g ? "hypergraph" : "tensor"}, {"n", in.a.dim()}, {"m", in.a.order()}};
  if (in.g)
    d["edges"] = in.g->edge_count();
  else
    d["entries"] = in.a.nnz();
  return d;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string rational_text(const json& j) { return rational_from_json(j).get_str(); }

struct Output {
  std::string out_path;
  std::string format = "json";
  bool no_timing = false;

  void emit(const json& doc, const std::function<void(std::ostream&)>& table) const {
    std::ostringstream text;
    if (format == "table")
      table(text);
    else
      text << doc.dump(2) << "\n";
    if (out_path.empty()) {
      std::cout << text.str();
    } else {
      std::ofstream f(out_path);
      if (!f) throw Error("cannot write " + out_path);
      f << text.str();
    }
  }
};

json section_doc(const Input& in, const char* name, json body, bool partial) {
  return json{{"input", descriptor(in)}, {"status", partial ? "partial" : "complete"}, {name, std::move(body)}};
}

void print_traces(std::ostream& os, const json& traces) {
  for (const auto& row : traces.at("values")) {
    os << "Tr_" << row.at("d").get<int>() << " = ";
    if (row.at("complete").get<bool>())
      os << rational_text(row) << "\n";
    else
      os << "(cap exceeded)\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Spectral symmetry analysis of tensors and uniform hypergraphs"};
  app.require_subcommand(1);
  Output output;
  std::string path;
  int d_max = 0, k = -1, ell = 0, m = 0, s = 0;
  double tol = 1e-12;
  std::uint64_t cap = kDefaultGroupCap, class_cap = 10'000'000;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("input", path, "input file (.uhg hypergraph or .tns tensor)")->required();
    cmd->add_option("--out", output.out_path, "write output to a file");
    cmd->add_option("--format", output.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_flag("--no-timing", output.no_timing, "omit timing fields");
  };

  auto* analyze = app.add_subcommand("analyze", "run the full pipeline");
  common(analyze);
  analyze->add_option("--dmax", d_max, "trace window (default 3m)")->check(CLI::PositiveNumber);
  analyze->add_option("--k", k, "characteristic polynomial prefix depth")->check(CLI::NonNegativeNumber);
  analyze->add_option("--tol", tol, "power iteration tolerance")->check(CLI::PositiveNumber);
  analyze->add_option("--cap", cap, "group enumeration cap");
  analyze->add_option("--class-cap", class_cap, "trace class cap per d");

  auto* traces = app.add_subcommand("traces", "generalized traces Tr_1..Tr_dmax");
  common(traces);
  traces->add_option("--dmax", d_max, "largest d (default 3m)")->check(CLI::PositiveNumber);
  traces->add_option("--class-cap", class_cap, "trace class cap per d");

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial prefix a_0..a_k");
  common(charpoly);
  charpoly->add_option("--k", k, "prefix depth (default 3m)")->check(CLI::NonNegativeNumber);
  charpoly->add_option("--class-cap", class_cap, "trace class cap per d");

  auto* radius = app.add_subcommand("radius", "spectral radius by power iteration");
  common(radius);
  radius->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);

  auto* color = app.add_subcommand("color", "(m, ell)-coloring");
  common(color);
  color->add_option("--ell", ell, "symmetry order")->required()->check(CLI::PositiveNumber);

  auto* symmetry = app.add_subcommand("symmetry", "spectral ell-symmetry verdict");
  common(symmetry);
  symmetry->add_option("--ell", ell, "symmetry order")->required()->check(CLI::PositiveNumber);
  symmetry->add_option("--dmax", d_max, "trace window (default 3m)")->check(CLI::PositiveNumber);
  symmetry->add_option("--class-cap", class_cap, "trace class cap per d");

  auto* oddt = app.add_subcommand("oddt", "odd transversal");
  common(oddt);

  auto* group = app.add_subcommand("group", "diagonal similarity group");
  common(group);
  group->add_option("--cap", cap, "element enumeration cap");

  auto* power = app.add_subcommand("power", "generalized power hypergraph");
  common(power);
  power->add_option("--m", m, "target uniformity")->required()->check(CLI::PositiveNumber);
  power->add_option("--s", s, "blow-up size")->required()->check(CLI::PositiveNumber);

  auto* charpoly2 = app.add_subcommand("charpoly2", "characteristic polynomial for n = 2");
  common(charpoly2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Input in = load(path);
  const int default_dmax = 3 * in.a.order();
  TraceOptions to;
  to.class_cap = class_cap;

  if (analyze->parsed()) {
    AnalysisOptions options;
    options.d_max = d_max;
    options.k = k;
    options.tol = tol;
    options.group_cap = cap;
    options.class_cap = class_cap;
    options.timing = !output.no_timing;
    AnalysisReport report =
        in.g ? analyze_hypergraph(*in.g, path, options) : analyze_tensor(in.a, path, options);
    // Round trip: re-read the serialized report and re-check its certificates.
    json reread = json::parse(report.document.dump());
    report.document["verification"] = json{{"certificates_checked", verify_report(reread, in.a)}};
    output.emit(report.document, [&](std::ostream& os) {
      const json& doc = report.document;
      const json& r = doc.at("results");
      os << "input: " << path << " (" << doc["input"]["kind"].get<std::string>() << ", n = "
         << in.a.dim() << ", m = " << in.a.order() << ")\n";
      os << "status: " << doc["status"].get<std::string>() << "\n";
      if (r["radius"].contains("rho"))
        os << "rho: " << std::fixed << std::setprecision(10) << r["radius"]["rho"].get<double>() << "\n";
      const json& ci = r["cyclic_index"];
      os << "cyclic index window (upper multiple): " << ci["window"]["c_hat"].dump() << " at depth "
         << ci["window"]["depth"].get<int>() << "\n";
      os << "cyclic index (group solver): " << ci["exact"].dump() << "\n";
      if (ci.contains("coloring")) os << "cyclic index (coloring): " << ci["coloring"].dump() << "\n";
      if (r["group"].contains("total_order")) {
        os << "s = " << r["group"]["s"].dump() << ", |D| = " << r["group"]["total_order"].dump()
           << ", D invariant factors " << r["group"]["invariant_factors_D"].dump() << ", D0 invariant factors "
           << r["group"]["invariant_factors_D0"].dump() << "\n";
      }
      for (const auto& v : r["symmetry"])
        os << "ell = " << v["ell"].get<int>() << ": " << v["status"].get<std::string>() << "\n";
      os << "certificates re-verified: " << doc["verification"]["certificates_checked"].get<int>() << "\n";
    });
    return report.partial ? 2 : 0;
  }

  if (traces->parsed()) {
    TraceTable tt = trace_table(in.a, d_max > 0 ? d_max : default_dmax, to, true);
    json doc = section_doc(in, "traces", to_json(tt), !tt.is_complete());
    output.emit(doc, [&](std::ostream& os) { print_traces(os, doc["traces"]); });
    return tt.is_complete() ? 0 : 2;
  }

  if (charpoly->parsed()) {
    const int depth = k >= 0 ? k : default_dmax;
    Integer degree = charpoly_degree(in.a.dim(), in.a.order());
    const int want = degree < depth ? static_cast<int>(degree.get_si()) : depth;
    TraceTable tt = trace_table(in.a, std::max(want, 1), to, true);
    const int have = std::min(want, tt.complete_depth());
    CharPolyPrefix prefix = charpoly_coefficients(tt, have, degree);
    json body = to_json(prefix);
    body["newton_consistent"] = newton_consistency(tt, prefix);
    if (in.g && tt.complete_depth() >= in.g->m()) body["codegree_m_check"] = codegree_m_check(*in.g, tt);
    const bool partial = have < want;
    json doc = section_doc(in, "charpoly", body, partial);
    output.emit(doc, [&](std::ostream& os) {
      os << "D = " << degree.get_str() << "\n";
      for (int i = 0; i <= prefix.depth(); ++i)
        os << "a_" << i << " = " << rational_text(prefix.coefficients[i]) << "\n";
    });
    return partial ? 2 : 0;
  }

  if (radius->parsed()) {
    SpectralRadius r = spectral_radius(in.a, tol);
    json doc = section_doc(in, "radius", to_json(r), false);
    output.emit(doc, [&](std::ostream& os) { os << std::fixed << std::setprecision(10) << r.rho << "\n"; });
    return 0;
  }

  if (color->parsed()) {
    const int order = in.a.order();
    if (order % ell != 0) throw ParameterError("--ell must divide m");
    auto cert = coloring_exists(in.a, order, order / ell);
    json body{{"ell", ell}, {"certificate", cert ? to_json(*cert) : json(nullptr)}};
    json doc = section_doc(in, "coloring", body, false);
    output.emit(doc, [&](std::ostream& os) {
      if (!cert) {
        os << "no (" << order << "," << ell << ")-coloring\n";
        return;
      }
      for (std::size_t v = 0; v < cert->phi.size(); ++v)
        os << "phi(" << v + 1 << ") = " << cert->phi[v].get_str() << "\n";
    });
    return 0;
  }

  if (symmetry->parsed()) {
    TraceTable tt = trace_table(in.a, d_max > 0 ? d_max : default_dmax, to, true);
    SymmetryVerdict v = symmetry_verdict(in.a, tt, ell);
    json doc = section_doc(in, "symmetry", to_json(v), v.partial);
    output.emit(doc, [&](std::ostream& os) {
      os << "ell = " << ell << ": " << to_string(v.status);
      if (v.witness_d) os << " (Tr_" << *v.witness_d << " != 0)";
      if (v.status == SymmetryStatus::ConsistentToDepth) os << " (depth " << v.depth << ")";
      os << "\n";
    });
    return v.partial ? 2 : 0;
  }

  if (oddt->parsed()) {
    OddTransversalResult r = odd_transversal(in.a);
    json doc = section_doc(in, "odd_transversal", to_json(r), false);
    output.emit(doc, [&](std::ostream& os) {
      if (!r.X) {
        os << "no odd transversal\n";
        return;
      }
      os << "X =";
      for (int v : *r.X) os << " " << v + 1;
      os << "\n";
    });
    return 0;
  }

  if (group->parsed()) {
    auto hs = solve_homogeneous(build_constraint_system(in.a));
    if (!hs.finite) {
      json doc = section_doc(in, "group", json{{"s", "INFINITE"}, {"free_rank", hs.free_rank}}, false);
      output.emit(doc, [&](std::ostream& os) { os << "s = INFINITE (free rank " << hs.free_rank << ")\n"; });
      return 0;
    }
    GroupReport r = enumerate_group(in.a, cap);
    json doc = section_doc(in, "group", to_json(r, true), !r.enumerated);
    output.emit(doc, [&](std::ostream& os) {
      os << "s = " << r.s.get_str() << ", c = " << r.c.get_str() << ", |D| = " << r.total_order.get_str() << "\n";
      os << "D invariant factors:";
      for (const auto& f : r.invariant_factors_D) os << " " << f.get_str();
      os << "\nD0 invariant factors:";
      for (const auto& f : r.invariant_factors_D0) os << " " << f.get_str();
      os << "\n";
      for (std::size_t j = 0; j < r.coset_reps.size(); ++j) {
        os << "coset " << j << ":";
        for (const auto& angle : r.coset_reps[j].angles()) os << " " << rational_text(angle);
        os << "\n";
      }
    });
    return r.enumerated ? 0 : 2;
  }

  if (power->parsed()) {
    if (!in.g) throw ParameterError("power needs a hypergraph input");
    Hypergraph h = build_generalized_power({*in.g, m, s});
    std::ostringstream text;
    write_hypergraph(text, h);
    if (output.out_path.empty()) {
      std::cout << text.str();
    } else {
      std::ofstream f(output.out_path);
      if (!f) throw Error("cannot write " + output.out_path);
      f << text.str();
    }
    return 0;
  }

  if (charpoly2->parsed()) {
    CharPoly2D p = charpoly_resultant_2d(in.a);
    auto roots = spectrum_2d(in.a);
    json body = to_json(p);
    json rs = json::array();
    for (const auto& z : roots) rs.push_back(json{{"re", z.real()}, {"im", z.imag()}});
    body["roots"] = rs;
    json doc = section_doc(in, "charpoly2", body, false);
    output.emit(doc, [&](std::ostream& os) {
      for (int i = 0; i <= p.degree(); ++i)
        os << "lambda^" << p.degree() - i << ": " << rational_text(p.coefficients[i]) << "\n";
      for (const auto& z : roots) os << "root " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i\n";
    });
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
