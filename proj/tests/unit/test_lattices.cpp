#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "adelic/core/errors.hpp"
#include "adelic/exactlog/compare.hpp"
#include "adelic/lattices/enumeration.hpp"
#include "adelic/lattices/integer_linalg.hpp"
#include "adelic/lattices/lll.hpp"
#include "adelic/lattices/minima.hpp"
#include "adelic/lattices/slopes.hpp"

using namespace adelic;
using namespace adelic::lattices;
using exactlog::Ordering;

namespace {
LogValue ln(long x) { return LogValue::of_rational(Rational(x)); }
Rational q(long a, long b = 1) { return make_rational(a, b); }
EuclideanLattice diag49() { return EuclideanLattice::diagonal({q(4), q(9)}); }
EuclideanLattice hex() { return EuclideanLattice(RationalMatrix{{q(2), q(1)}, {q(1), q(2)}}); }
IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(Integer(x));
  return v;
}
}  // namespace

TEST_SUITE("lattices") {
  TEST_CASE("construction validates the gram matrix") {
    CHECK_THROWS_AS(EuclideanLattice(RationalMatrix{{q(1), q(2)}, {q(2), q(1)}}), ValidationError);
    CHECK_THROWS_AS(EuclideanLattice(RationalMatrix{{q(1), q(0)}, {q(1), q(1)}}), ValidationError);
    CHECK(diag49().is_diagonal());
    CHECK_FALSE(hex().is_diagonal());
  }

  TEST_CASE("degree") {
    CHECK(degree(EuclideanLattice::identity(3)).is_zero());
    CHECK(degree(diag49()) == -(ln(2) + ln(3)));
    CHECK(degree(hex()) == q(-1, 2) * ln(3));
    CHECK(slope(diag49()) == q(-1, 2) * (ln(2) + ln(3)));
  }

  TEST_CASE("dual and direct sum") {
    CHECK(dual(EuclideanLattice::diagonal({q(4), q(1)})) == EuclideanLattice::diagonal({q(1, 4), q(1)}));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
      const EuclideanLattice e = fixtures::random_lattice(rng, 1 + t % 3);
      CHECK(dual(dual(e)) == e);
      const EuclideanLattice f = fixtures::random_lattice(rng, 1 + t % 2);
      CHECK(degree(direct_sum(e, f)) == degree(e) + degree(f));
    }
  }

  TEST_CASE("height of a vector") {
    const EuclideanLattice id = EuclideanLattice::identity(2);
    CHECK(height_of_vector(id, {q(1), q(0)}).is_zero());
    CHECK(height_of_vector(id, {q(3), q(0)}).is_zero());
    CHECK(height_of_vector(diag49(), {q(0), q(1)}) == ln(3));
    CHECK(height_of_vector(id, {q(1, 2), q(1, 2)}) == q(1, 2) * ln(2));
    CHECK_THROWS_AS(height_of_vector(id, {q(0), q(0)}), DomainError);
  }

  TEST_CASE("hermite form and saturation") {
    const IntMatrix m{{Integer(2), Integer(4)}, {Integer(0), Integer(6)}};
    const IntMatrix h = hermite_normal_form(m);
    CHECK(h(0, 0) == 2);
    CHECK(h(1, 1) == 6);
    const Saturation s = saturate(IntMatrix{{Integer(2), Integer(2), Integer(0)}});
    CHECK(s.index == 2);
    CHECK(s.basis.row(0) == iv({1, 1, 0}));
    CHECK(primitive_vector({q(2, 3), q(4, 3)}) == iv({1, 2}));
    CHECK(integer_rank(IntMatrix{{Integer(1), Integer(2)}, {Integer(2), Integer(4)}}) == 1);
  }

  TEST_CASE("LLL keeps the lattice and satisfies the Lovasz condition") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
      const EuclideanLattice e = fixtures::random_lattice(rng, 2 + t % 3);
      const LllResult r = lll_reduce(e.gram());
      CHECK(abs(determinant(r.transform)) == 1);
      const GramSchmidt gs = gram_schmidt(r.gram);
      for (std::size_t k = 1; k < r.gram.rows(); ++k) {
        const Rational mu = gs.mu(k, k - 1);
        CHECK(gs.b[k] >= (q(3, 4) - mu * mu) * gs.b[k - 1]);
      }
    }
  }

  TEST_CASE("short vector enumeration") {
    const auto vs = short_vectors(hex().gram(), q(2), 1000000);
    CHECK(vs.size() == 3);
    for (const auto& v : vs) CHECK(v.norm == 2);
    CHECK_THROWS_AS(enumerate_short_vectors(EuclideanLattice::identity(6).gram(), q(50), 100), ResourceError);
  }

  TEST_CASE("successive minima") {
    const MinimaProfile m = successive_minima(diag49());
    CHECK(m.values == std::vector<LogValue>{ln(2), ln(3)});
    CHECK(m.witnesses[0] == iv({1, 0}));
    CHECK(m.witnesses[1] == iv({0, 1}));
    const MinimaProfile id = successive_minima(EuclideanLattice::identity(4));
    for (const auto& v : id.values) CHECK(v.is_zero());
    const MinimaProfile h = successive_minima(hex());
    CHECK(h.values[0] == q(1, 2) * ln(2));
    CHECK(h.values[1] == q(1, 2) * ln(2));
    CHECK(h.witnesses[0] == iv({1, 0}));
    CHECK(h.witnesses[1] == iv({0, 1}));
    SearchLimits tight;
    tight.dimension_cap = 2;
    CHECK_THROWS_AS(successive_minima(EuclideanLattice::identity(3), tight), ResourceError);
  }

  TEST_CASE("max and min slopes") {
    const SlopeResult a = max_slope(diag49());
    CHECK(a.value == -ln(2));
    CHECK(a.certified);
    REQUIRE(a.witness.rows() == 1);
    CHECK(a.witness.row(0) == iv({1, 0}));
    const SlopeResult id = max_slope(EuclideanLattice::identity(2));
    CHECK(id.value.is_zero());
    CHECK(id.witness.rows() == 2);
    const SlopeResult b = max_slope(dual(diag49()));
    CHECK(b.value == ln(3));
    CHECK(b.witness.row(0) == iv({0, 1}));
    CHECK(min_slope(diag49()).value == -ln(3));
  }

  TEST_CASE("HN polygon") {
    const HNPolygon p = hn_polygon(diag49());
    REQUIRE(p.vertices.size() == 3);
    CHECK(p.vertices[0].degree.is_zero());
    CHECK(p.vertices[1].degree == -ln(2));
    CHECK(p.vertices[2].degree == -ln(6));
    CHECK(p.mu_hat == std::vector<LogValue>{-ln(2), -ln(3)});
    const HNPolygon id = hn_polygon(EuclideanLattice::identity(3));
    CHECK(id.vertices.size() == 2);
    for (const auto& m : id.mu_hat) CHECK(m.is_zero());
    const HNPolygon h = hn_polygon(hex());
    CHECK(h.mu_hat[0] == q(-1, 4) * ln(3));
  }

  TEST_CASE("slope properties on random lattices") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
      const EuclideanLattice e = fixtures::random_lattice(rng, 1 + t % 3);
      const std::size_t d = e.dim();
      const HNPolygon p = hn_polygon(e);
      const HNPolygon pd = hn_polygon(dual(e));
      REQUIRE(p.certified);
      for (std::size_t i = 0; i < d; ++i) CHECK((p.mu_hat[i] + pd.mu_hat[d - 1 - i]).is_zero());
      for (std::size_t i = 1; i < d; ++i) CHECK(exactlog::compare_values(p.mu_hat[i - 1], p.mu_hat[i]) != Ordering::Less);
      CHECK(min_slope(e).value == -max_slope(dual(e)).value);
      const MinimaProfile m = successive_minima(e);
      CHECK(exactlog::compare_values(m.values[0], -max_slope(e).value) != Ordering::Less);
      Rational prod(1);
      for (const auto& n : m.squared_norms) prod *= n;
      CHECK(prod >= e.determinant());
      for (std::size_t i = 0; i < d; ++i) CHECK(m.values[i] == q(1, 2) * LogValue::of_rational(m.squared_norms[i]));
    }
  }

  TEST_CASE("Hermite constant table") {
    CHECK(hermite_power(1) == 1);
    CHECK(hermite_power(2) == q(4, 3));
    CHECK(hermite_power(3) == 2);
    CHECK(hermite_power(8) == 256);
  }
}
