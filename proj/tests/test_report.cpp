#include <doctest.h>

#include "support.hpp"
#include "tsym/error.hpp"
#include "tsym/report.hpp"

using namespace tsym;

TEST_SUITE("report") {

TEST_CASE("numbers round trip") {
  CHECK(to_json(Integer(42)) == json(42));
  Integer big("123456789012345678901234567890");
  CHECK(to_json(big).is_string());
  CHECK(integer_from_json(to_json(big)) == big);
  Rational q(-7, 12);
  CHECK(rational_from_json(to_json(q)) == q);
  Rational huge(big, Integer(11));
  huge.canonicalize();
  CHECK(rational_from_json(json::parse(to_json(huge).dump())) == huge);
  CHECK_THROWS_AS(integer_from_json(json(1.5)), ParseError);
}

TEST_CASE("certificates round trip") {
  UnimodularDiagonal d({Rational(0), Rational(1, 3), Rational(2, 3)});
  CHECK(diagonal_from_json(to_json(d)) == d);
  ColoringCertificate c{3, {3, 1, 3, 3, 1, 3}, 1};
  auto back = coloring_from_json(json::parse(to_json(c).dump()));
  CHECK(back.sigma == 3);
  CHECK(back.target == 1);
  CHECK(back.phi == c.phi);
}

TEST_CASE("trace rows") {
  auto tt = trace_table(adjacency_tensor(test::cyclic_triple_hypergraph()), 3);
  auto j = to_json(tt)["values"];
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["d"] == 1);
  CHECK(j[0]["complete"] == true);
  CHECK(rational_from_json(j[2]) == tt.at(3));
}

TEST_CASE("analysis report verifies") {
  AnalysisOptions opts;
  opts.timing = false;
  auto g = test::cyclic_triple_hypergraph();
  auto r = analyze_hypergraph(g, "mem", opts);
  CHECK_FALSE(r.partial);
  CHECK(r.document["status"] == "complete");
  CHECK(integer_from_json(r.document["results"]["group"]["c"]) == 3);
  auto reparsed = json::parse(r.document.dump());
  CHECK(verify_report(reparsed, adjacency_tensor(g)) > 10);
  CHECK_FALSE(r.document["provenance"].contains("timing_ms"));
  CHECK(analyze_hypergraph(g, "mem", opts).document.dump() == r.document.dump());
}

TEST_CASE("tampered certificate is rejected") {
  AnalysisOptions opts;
  opts.timing = false;
  auto g = test::cyclic_triple_hypergraph();
  auto doc = analyze_hypergraph(g, "mem", opts).document;
  auto& gens = doc["results"]["group"]["phase_generator"];
  REQUIRE(gens.is_array());
  gens[1] = to_json(Rational(1, 7));
  CHECK_THROWS_AS(verify_report(doc, adjacency_tensor(g)), VerificationError);
}

TEST_CASE("tensor report") {
  AnalysisOptions opts;
  opts.timing = false;
  auto t = test::cyclic_triple_tensor();
  auto r = analyze_tensor(t, "mem", opts);
  CHECK(r.document["input"]["kind"] == "tensor");
  CHECK(integer_from_json(r.document["results"]["group"]["c"]) == 6);
  CHECK(verify_report(r.document, t) > 0);
}

TEST_CASE("disconnected input has an infinite stabilizer") {
  AnalysisOptions opts;
  opts.timing = false;
  Hypergraph g(4, 2, {{0, 1}, {2, 3}});
  auto r = analyze_hypergraph(g, "mem", opts);
  CHECK(r.document["results"]["group"]["s"] == "INFINITE");
  CHECK(r.document["results"]["group"]["free_rank"] == 1);
  CHECK(verify_report(r.document, adjacency_tensor(g)) >= 0);
}

TEST_CASE("cap hit makes report partial") {
  AnalysisOptions opts;
  opts.timing = false;
  opts.class_cap = 3;
  auto r = analyze_hypergraph(complete_hypergraph(5, 3), "mem", opts);
  CHECK(r.partial);
  CHECK(r.document["status"] == "partial");
}

}
