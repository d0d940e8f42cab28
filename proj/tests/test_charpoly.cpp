#include <doctest.h>

#include "support.hpp"
#include "tsym/charpoly.hpp"
#include "tsym/error.hpp"
#include "tsym/spectral.hpp"

using namespace tsym;

TEST_SUITE("charpoly") {

TEST_CASE("schur polynomial small cases") {
  std::vector<Rational> t{Rational(3, 2), Rational(-2, 5), Rational(7)};
  CHECK(schur_polynomial(1, t) == t[0]);
  CHECK(schur_polynomial(2, t) == t[1] + t[0] * t[0] / 2);
  CHECK(schur_polynomial(3, {0, 0, 7}) == 7);
  CHECK_THROWS_AS(schur_polynomial(0, t), ParameterError);
}

TEST_CASE("schur polynomial matches the composition sum") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> t;
    for (int k = 0; k < 6; ++k) t.emplace_back(num(rng), den(rng));
    for (auto& x : t) x.canonicalize();
    for (int d = 1; d <= 6; ++d) CHECK(schur_polynomial(d, t) == test::literal_schur(d, t));
  }
}

TEST_CASE("coefficients from traces") {
  auto edge = test::single_edge(3);
  auto tt = trace_table(adjacency_tensor(edge), 3);
  auto p = charpoly_coefficients(tt, 3, charpoly_degree(3, 3));
  CHECK(p.total_degree == 12);
  CHECK(p.coefficients == std::vector<Rational>{1, 0, 0, -3});
  CHECK(newton_consistency(tt, p));

  auto k2 = trace_table(adjacency_tensor(complete_graph(2)), 2);
  auto q = charpoly_coefficients(k2, 2, charpoly_degree(2, 2));
  CHECK(q.coefficients == std::vector<Rational>{1, 0, -1});

  auto zero = trace_table(SparseTensor(3, 3), 4);
  auto z = charpoly_coefficients(zero, 4, charpoly_degree(3, 3));
  for (int i = 1; i <= 4; ++i) CHECK(z.coefficients[i] == 0);

  CHECK_THROWS_AS(charpoly_coefficients(tt, 4, 12), ParameterError);
}

TEST_CASE("codegree m check") {
  auto edge = test::single_edge(3);
  CHECK(codegree_m_value(edge) == -3);
  CHECK(codegree_m_check(edge, trace_table(adjacency_tensor(edge), 3)));

  auto ex = test::cyclic_triple_hypergraph();
  CHECK(codegree_m_value(ex) == -144);
  auto tt = trace_table(adjacency_tensor(ex), 3);
  CHECK(codegree_m_check(ex, tt));
  CHECK(charpoly_coefficients(tt, 3, charpoly_degree(6, 3)).coefficients[3] == -144);

  Hypergraph empty(4, 3, {});
  CHECK(codegree_m_value(empty) == 0);
  CHECK(codegree_m_check(empty, trace_table(adjacency_tensor(empty), 3)));
  CHECK_THROWS_AS(codegree_m_check(ex, trace_table(adjacency_tensor(ex), 2)), ParameterError);
}

TEST_CASE("newton consistency") {
  SparseTensor m(2, 3);
  m.set({0, 1}, 2);
  m.set({1, 2}, 1);
  m.set({2, 0}, 1);
  m.set({1, 1}, 3);
  auto tt = trace_table(m, 4);
  auto p = charpoly_coefficients(tt, 3, 3);
  CHECK(newton_consistency(tt, p));

  auto edge = trace_table(adjacency_tensor(test::single_edge(3)), 3);
  auto pe = charpoly_coefficients(edge, 3, 12);
  CHECK(newton_consistency(edge, pe));
  TraceTable broken = edge;
  broken.values[2] += 1;
  CHECK_FALSE(newton_consistency(broken, pe));
}

TEST_CASE("matrices reproduce the ordinary characteristic polynomial") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    SparseTensor a(2, n);
    std::vector<std::vector<Rational>> dense(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng() % 3) {
          Rational v(num(rng), den(rng));
          v.canonicalize();
          a.set({i, j}, v);
          dense[i][j] = v;
        }
    auto tt = trace_table(a, n);
    auto p = charpoly_coefficients(tt, n, charpoly_degree(n, 2));
    CHECK(p.coefficients == test::matrix_charpoly(dense));
  }
}

TEST_CASE("n = 2 prefixes match the resultant") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 16; ++trial) {
    const int m = 3 + trial % 2;
    auto a = test::random_tensor(rng, m, 2, 3, 0.5);
    const int degree = 2 * (m - 1);
    auto tt = trace_table(a, degree);
    auto p = charpoly_coefficients(tt, degree, charpoly_degree(2, m));
    CHECK(p.coefficients == charpoly_resultant_2d(a).coefficients);
  }
}

TEST_CASE("low coefficients vanish on uniform hypergraphs") {
  for (const auto& g : test::connected_uniform_corpus_upto(5, 3)) {
    auto tt = trace_table(adjacency_tensor(g), 3);
    auto p = charpoly_coefficients(tt, 3, charpoly_degree(g.n(), 3));
    CHECK(p.coefficients[1] == 0);
    CHECK(p.coefficients[2] == 0);
  }
}

}
