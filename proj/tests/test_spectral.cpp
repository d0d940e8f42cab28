#include <doctest.h>

#include <complex>

#include "support.hpp"
#include "tsym/error.hpp"
#include "tsym/spectral.hpp"
#include "tsym/trace.hpp"

using namespace tsym;
using C = std::complex<double>;

TEST_SUITE("spectral") {

TEST_CASE("spectral radius of small fixtures") {
  auto r = spectral_radius(adjacency_tensor(test::cyclic_triple_hypergraph()), 1e-12);
  CHECK(std::abs(r.rho - 3) < 1e-10);
  for (double x : r.x) CHECK(std::abs(x - 1) < 1e-8);
  CHECK(r.lower <= r.upper);

  auto e = spectral_radius(adjacency_tensor(test::single_edge(3)));
  CHECK(std::abs(e.rho - 1) < 1e-10);

  auto t = spectral_radius(test::cyclic_triple_tensor());
  CHECK(std::abs(t.rho - 1) < 1e-10);
}

TEST_CASE("spectral radius preconditions") {
  CHECK_THROWS_AS(spectral_radius(adjacency_tensor(Hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}}))),
                  ParameterError);
  SparseTensor neg(2, 2);
  neg.set({0, 1}, -1);
  neg.set({1, 0}, 1);
  CHECK_THROWS_AS(spectral_radius(neg), ParameterError);
}

TEST_CASE("eigenpair verification") {
  auto a = adjacency_tensor(test::cyclic_triple_hypergraph());
  CHECK(verify_eigenpair(a, 3, std::vector<C>(6, 1)) < 1e-14);
  CHECK(verify_eigenpair(test::cyclic_triple_tensor(), 1, std::vector<C>(6, 1)) < 1e-14);
  const double pi = std::acos(-1.0);
  C w = std::polar(1.0, 2 * pi / 3);
  // x^(11) = (1, w, w^0, 1, w, w^0) for lambda = 3w.
  std::vector<C> x{1, w, 1, 1, w, 1};
  CHECK(verify_eigenpair(a, 3.0 * w, x) < 1e-12);
  CHECK_THROWS_AS(verify_eigenpair(a, 3, std::vector<C>(6, 0)), ParameterError);
  auto pair = EigenPair::make(a, 3, std::vector<C>(6, 1));
  CHECK(pair.residual < 1e-14);
}

TEST_CASE("monotonicity under entry removal") {
  std::mt19937 rng(5);
  int compared = 0;
  for (int trial = 0; trial < 40 && compared < 15; ++trial) {
    auto g = test::random_hypergraph(rng, 6, 3, 0.4);
    if (!is_connected(g) || g.edge_count() < 2) continue;
    for (std::size_t drop = 0; drop < g.edge_count(); ++drop) {
      std::vector<Edge> kept = g.edges();
      kept.erase(kept.begin() + drop);
      Hypergraph h(g.n(), g.m(), kept);
      if (!is_connected(h)) continue;
      double big = spectral_radius(adjacency_tensor(g)).rho;
      double small = spectral_radius(adjacency_tensor(h)).rho;
      CHECK(small <= big + 1e-9);
      ++compared;
      break;
    }
  }
  CHECK(compared > 5);
}

TEST_CASE("resultant characteristic polynomial") {
  SparseTensor m(2, 2);
  m.set({0, 0}, 2);
  m.set({0, 1}, 3);
  m.set({1, 0}, 5);
  m.set({1, 1}, 7);
  // lambda^2 - 9 lambda + (14 - 15)
  CHECK(charpoly_resultant_2d(m).coefficients == std::vector<Rational>{1, -9, -1});

  SparseTensor diag(3, 2);
  diag.set({0, 0, 0}, 1);
  // (lambda - 1)^2 lambda^2
  CHECK(charpoly_resultant_2d(diag).coefficients == std::vector<Rational>{1, -2, 1, 0, 0});
  CHECK(charpoly_resultant_2d(SparseTensor(3, 2)).coefficients == std::vector<Rational>{1, 0, 0, 0, 0});
  CHECK_THROWS_AS(charpoly_resultant_2d(SparseTensor(3, 3)), DimensionError);
}

TEST_CASE("spectrum for n = 2") {
  SparseTensor diag(3, 2);
  diag.set({0, 0, 0}, 1);
  auto roots = spectrum_2d(diag);
  REQUIRE(roots.size() == 4);
  int ones = 0, zeros = 0;
  for (auto z : roots) {
    if (std::abs(z - C(1)) < 1e-6) ++ones;
    if (std::abs(z) < 1e-6) ++zeros;
  }
  CHECK(ones == 2);
  CHECK(zeros == 2);

  SparseTensor swap(2, 2);
  swap.set({0, 1}, 1);
  swap.set({1, 0}, 1);
  auto r2 = spectrum_2d(swap);
  REQUIRE(r2.size() == 2);
  CHECK(std::abs(r2[0] - 1.0) + std::abs(r2[1] + 1.0) < 1e-9);
  for (auto z : spectrum_2d(SparseTensor(3, 2))) CHECK(std::abs(z) < 1e-9);
}

TEST_CASE("n = 2 spectral radius agrees with the resultant spectrum") {
  std::mt19937 rng(17);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 25; ++trial) {
    int m = 3 + trial % 2;
    auto a = test::random_tensor(rng, m, 2, 2, 0.5);
    if (!is_weakly_irreducible(a).weakly_irreducible) continue;
    double rho = spectral_radius(a).rho;
    double top = 0;
    for (auto z : spectrum_2d(a)) top = std::max(top, std::abs(z));
    CHECK(std::abs(rho - top) < 1e-6);
    ++tested;
  }
  CHECK(tested == 25);
}

TEST_CASE("power sums of the n = 2 spectrum match traces for m = 3, 4") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    int m = 3 + trial % 2;
    auto a = test::random_tensor(rng, m, 2, 2, 0.5);
    auto roots = spectrum_2d(a);
    auto tt = trace_table(a, 6);
    for (int d = 1; d <= 6; ++d) {
      C sum = 0;
      for (auto z : roots) sum += std::pow(z, d);
      CHECK(std::abs(sum - tt.at(d).get_d()) < 1e-6);
    }
  }
}

}
