#include <doctest.h>

#include "support.hpp"
#include "tsym/error.hpp"
#include "tsym/symmetry.hpp"

using namespace tsym;

namespace {

// Exhaustive search over all sigma^n maps.
bool brute_coloring_exists(const SparseTensor& a, int sigma, int target) {
  const int n = a.dim();
  std::vector<Integer> phi(n, 1);
  for (;;) {
    if (verify_coloring(a, {sigma, phi, target})) return true;
    int pos = n - 1;
    while (pos >= 0 && phi[pos] == sigma) phi[pos--] = 1;
    if (pos < 0) return false;
    ++phi[pos];
  }
}

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("trace verdicts") {
  auto a = adjacency_tensor(test::cyclic_triple_hypergraph());
  auto v3 = is_ell_symmetric_traces(a, 3, 9);
  CHECK(v3.status == SymmetryStatus::ConsistentToDepth);
  CHECK(v3.depth == 9);
  auto v2 = is_ell_symmetric_traces(a, 2, 3);
  CHECK(v2.status == SymmetryStatus::CertifiedNotSymmetric);
  REQUIRE(v2.witness_d);
  CHECK(*v2.witness_d == 3);
  for (int ell = 1; ell <= 5; ++ell)
    CHECK(is_ell_symmetric_traces(SparseTensor(3, 3), ell, 6).status == SymmetryStatus::ConsistentToDepth);
  CHECK_THROWS_AS(is_ell_symmetric_traces(a, 0, 3), ParameterError);
}

TEST_CASE("certified verdicts") {
  auto a = adjacency_tensor(test::cyclic_triple_hypergraph());
  auto tt = trace_table(a, 9);
  auto v3 = symmetry_verdict(a, tt, 3);
  CHECK(v3.status == SymmetryStatus::CertifiedSymmetric);
  REQUIRE(v3.coloring);
  CHECK(verify_coloring(a, *v3.coloring));
  auto t = test::cyclic_triple_tensor();
  auto tt8 = trace_table(t, 6);
  for (int ell : {2, 3, 6}) {
    auto v = symmetry_verdict(t, tt8, ell);
    CHECK(v.status == SymmetryStatus::CertifiedSymmetric);
    REQUIRE(v.diagonal);
    CHECK(diagonal_similarity(t, *v.diagonal, Rational(1, ell)).equals(t));
  }
  CHECK(symmetry_verdict(t, tt8, 4).status == SymmetryStatus::CertifiedNotSymmetric);
}

TEST_CASE("cyclic index window") {
  CHECK(cyclic_index_window(adjacency_tensor(test::cyclic_triple_hypergraph()), 9).c_hat == 3);
  CHECK(cyclic_index_window(adjacency_tensor(test::single_edge(3)), 6).c_hat == 3);
  SparseTensor two(2, 2);
  two.set({0, 1}, 1);
  two.set({1, 0}, 1);
  CHECK(cyclic_index_window(two, 6).c_hat == 2);
  CHECK(cyclic_index_window(SparseTensor(3, 3), 6).c_hat == 0);
}

TEST_CASE("colorings") {
  auto edge = adjacency_tensor(test::single_edge(3));
  auto c = coloring_exists(edge, 3, 1);
  REQUIRE(c);
  CHECK(verify_coloring(edge, *c));
  CHECK(verify_coloring(edge, {3, {1, 1, 2}, 1}));
  CHECK_FALSE(verify_coloring(edge, {3, {1, 1, 1}, 1}));

  auto ex = adjacency_tensor(test::cyclic_triple_hypergraph());
  auto psi = coloring_exists(ex, 3, 1);
  REQUIRE(psi);
  CHECK(psi->phi == std::vector<Integer>{3, 1, 3, 3, 1, 3});
  CHECK(verify_coloring(ex, {3, {3, 1, 3, 3, 1, 3}, 1}));

  auto k43 = adjacency_tensor(complete_hypergraph(4, 3));
  CHECK_FALSE(coloring_exists(k43, 3, 1));
  CHECK_FALSE(brute_coloring_exists(k43, 3, 1));
}

TEST_CASE("coloring solver agrees with exhaustive search") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = test::random_hypergraph(rng, 5, 3, 0.3);
    auto a = adjacency_tensor(g);
    for (int target = 0; target < 3; ++target)
      CHECK(coloring_exists(a, 3, target).has_value() == brute_coloring_exists(a, 3, target));
  }
  for (int trial = 0; trial < 20; ++trial) {
    auto g = test::random_hypergraph(rng, 5, 4, 0.4);
    auto a = adjacency_tensor(g);
    for (int target : {1, 2}) CHECK(coloring_exists(a, 4, target).has_value() == brute_coloring_exists(a, 4, target));
  }
}

TEST_CASE("hypergraph cyclic index") {
  CHECK(cyclic_index_hypergraph(test::cyclic_triple_hypergraph()) == 3);
  CHECK(cyclic_index_hypergraph(complete_hypergraph(4, 3)) == 1);
  CHECK(cyclic_index_hypergraph(build_generalized_power({cycle_graph(4), 4, 2})) == 4);
  CHECK(cyclic_index_hypergraph(complete_graph(2)) == 2);
  CHECK(cyclic_index_hypergraph(cycle_graph(5)) == 1);
  CHECK_THROWS_AS(cyclic_index_hypergraph(Hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}})), ParameterError);
}

TEST_CASE("odd transversals") {
  auto k2 = adjacency_tensor(complete_graph(2));
  auto x = odd_transversal(k2);
  REQUIRE(x.X);
  CHECK(*x.X == std::vector<int>{0});
  auto e3 = odd_transversal(adjacency_tensor(test::single_edge(3)));
  REQUIRE(e3.X);
  CHECK((e3.X->size() == 1 || e3.X->size() == 3));
  auto e4 = odd_transversal(adjacency_tensor(test::single_edge(4)));
  REQUIRE(e4.X);
  CHECK(e4.X->size() % 2 == 1);
  CHECK_FALSE(odd_transversal(adjacency_tensor(cycle_graph(3))).X);
  CHECK(verify_odd_transversal(adjacency_tensor(test::single_edge(3)), {0, 1, 2}));
  CHECK_FALSE(verify_odd_transversal(adjacency_tensor(test::single_edge(3)), {0, 1}));
}

TEST_CASE("odd transversal implies (m, 2)-colorability for even m") {
  std::mt19937 rng(61);
  int with = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = test::random_hypergraph(rng, 6, 4, 0.2);
    auto a = adjacency_tensor(g);
    auto r = odd_transversal(a);
    if (!r.X) continue;
    ++with;
    CHECK(coloring_exists(a, 4, 2).has_value());
  }
  CHECK(with > 5);
}

TEST_CASE("chromatic bounds") {
  auto ex = chromatic_upper_bound(test::cyclic_triple_hypergraph());
  CHECK(ex.bound == 3);
  CHECK(ex.c == 3);
  CHECK(ex.s == 3);
  REQUIRE(ex.prime_bounds.size() == 1);
  CHECK(ex.prime_bounds[0].second == 9);
  CHECK(is_proper_coloring(test::cyclic_triple_hypergraph(), ex.coloring));

  auto c4 = build_generalized_power({cycle_graph(4), 4, 2});
  auto b4 = chromatic_upper_bound(c4);
  CHECK(b4.c == 4);
  CHECK(b4.bound <= 4);
  CHECK(is_proper_coloring(c4, b4.coloring));

  auto edge = chromatic_upper_bound(test::single_edge(3));
  CHECK(edge.bound == 3);
  CHECK(is_proper_coloring(test::single_edge(3), edge.coloring));

  CHECK_THROWS_AS(chromatic_upper_bound(complete_hypergraph(4, 3)), ParameterError);
}

TEST_CASE("p-hm symmetry") {
  auto ex = p_hm_check(test::cyclic_triple_hypergraph());
  CHECK(ex.bipartition.p == 1);
  CHECK(ex.ell == 3);
  CHECK(ex.holds);
  auto k3 = p_hm_check(build_generalized_power({complete_graph(3), 4, 2}));
  CHECK(k3.bipartition.p == 2);
  CHECK(k3.ell == 2);
  CHECK(k3.c == 2);
  CHECK(k3.holds);
  CHECK(p_hm_symmetry_check(test::single_edge(3)));
  CHECK_THROWS_AS(p_hm_check(complete_hypergraph(4, 3)), ParameterError);
}

TEST_CASE("corpus laws") {
  for (const auto& g : test::connected_uniform_corpus_upto(5, 3)) {
    auto a = adjacency_tensor(g);
    const int c = cyclic_index_hypergraph(g);
    CHECK(exact_cyclic_index(a) == c);
    if (contains_simplex(g)) CHECK(c == 1);
    auto tt = trace_table(a, 6);
    auto w = cyclic_index_window(tt);
    if (w.c_hat > 0) CHECK(w.c_hat % c == 0);
    // A coloring for ell means no trace witness against ell.
    for (int ell : {3}) {
      if (coloring_exists(a, 3, 3 / ell)) CHECK(is_ell_symmetric_traces(tt, ell).status != SymmetryStatus::CertifiedNotSymmetric);
    }
  }
}

}
