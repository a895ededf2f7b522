#include "doctest.h"

#include <cmath>

#include "polyrig/gallery.hpp"
#include "polyrig/polytope.hpp"
#include "polyrig/rng.hpp"
#include "oracles.hpp"

using namespace polyrig;
using R = Rat;

namespace {

Vec<R> rv(std::vector<long long> xs) {
  Vec<R> v;
  for (auto x : xs) v.push_back(R(x));
  return v;
}

Vec<R> random_point(SplitMix64& rng, int d, long long span = 12) {
  Vec<R> v(d);
  for (int k = 0; k < d; ++k) v[k] = R(rng.range(-span, span)) / R(1 + rng.below(4));
  return v;
}

}  // namespace

TEST_CASE("validation accepts the l1 ball and rejects bad vertex sets") {
  auto square = Polytope<R>::validate({rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})}, 2);
  CHECK(square.class_count() == 2);

  CHECK_THROWS_WITH_AS(Polytope<R>::validate({rv({1, 0}), rv({0, 1})}, 2),
                       doctest::Contains("antipode"), Error);
  try {
    Polytope<R>::validate({rv({1, 0}), rv({0, 1})}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSymmetric);
  }

  try {
    Polytope<R>::validate(
        {rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1}), {R(1, 2), R(2, 5)}}, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonExtremePoint);
    CHECK(std::string(e.what()).find("1/2") != std::string::npos);
  }

  try {
    Polytope<R>::validate({rv({1, 0}), rv({-1, 0})}, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotFullDimensional);
  }
}

TEST_CASE("facet classes of the l1 and l-infinity balls") {
  auto cross = crosspolytope<R>(2);
  REQUIRE(cross.class_count() == 2);
  CHECK(cross.classes()[0].fhat == rv({1, 1}));
  CHECK(cross.classes()[1].fhat == rv({1, -1}));

  auto cube2 = hypercube<R>(2);
  REQUIRE(cube2.class_count() == 2);
  CHECK(cube2.classes()[0].fhat == rv({1, 0}));
  CHECK(cube2.classes()[1].fhat == rv({0, 1}));

  auto cube3 = hypercube<R>(3);
  REQUIRE(cube3.class_count() == 3);
  CHECK(cube3.classes()[0].fhat == rv({1, 0, 0}));
  CHECK(cube3.classes()[1].fhat == rv({0, 1, 0}));
  CHECK(cube3.classes()[2].fhat == rv({0, 0, 1}));
  for (const auto& fc : cube3.classes()) CHECK(fc.members.size() == 4);
}

TEST_CASE("octagon facet functionals match the secant formula") {
  auto oct = ngon(8);
  REQUIRE(oct.class_count() == 4);
  const double t = std::sqrt(2.0) - 1.0;  // tan(pi/8)
  // canonical representatives, lexicographically decreasing
  const std::vector<Vec<double>> expect = {{1.0, t}, {1.0, -t}, {t, 1.0}, {t, -1.0}};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(oct.classes()[i].fhat[0] - expect[i][0]) < 1e-9);
    CHECK(std::abs(oct.classes()[i].fhat[1] - expect[i][1]) < 1e-9);
  }
  // every polytope vertex has gauge 1
  for (const auto& v : oct.vertices()) CHECK(std::abs(oct.gauge(v) - 1.0) < 1e-9);
}

TEST_CASE("gauge norm values") {
  auto cross = crosspolytope<R>(2);
  // brute force over the four sign vectors, independent of facet machinery
  std::vector<Vec<R>> signs = {rv({1, 1}), rv({1, -1}), rv({-1, 1}), rv({-1, -1})};
  CHECK(oracles::gauge_brute(signs, rv({3, -1})) == R(4));
  CHECK(cross.gauge(rv({3, -1})) == R(4));

  auto cube = hypercube<R>(2);
  CHECK(cube.gauge(rv({1, -2})) == R(2));

  CHECK(cross.gauge(rv({0, 0})) == R(0));
  CHECK(cube.gauge(rv({0, 0})) == R(0));
}

TEST_CASE("cone membership verdicts on the l1 ball") {
  auto cross = crosspolytope<R>(2);
  const int f1 = 0;  // fhat = (1,1)
  CHECK(cross.membership(f1, rv({1, 2})) == ConeMembership::InteriorPositive);
  CHECK(cross.membership(f1, rv({1, 0})) == ConeMembership::Boundary);
  CHECK(cross.membership(f1, rv({-1, -2})) == ConeMembership::InteriorNegative);
  CHECK(cross.membership(f1, rv({1, -2})) == ConeMembership::Outside);
  CHECK_THROWS_AS(cross.membership(f1, rv({0, 0})), Error);
}

TEST_CASE("support classes") {
  auto cross = crosspolytope<R>(2);
  CHECK(cross.support_classes({R(1, 2), R(1, 2)}) == std::vector<int>{0});
  CHECK(cross.support_classes(rv({1, 0})) == std::vector<int>{0, 1});

  auto oct = ngon(8);
  // a polytope vertex meets at least d cones; for (1,0) these are the two
  // facets adjacent to it
  CHECK(oct.support_classes({1.0, 0.0}) == std::vector<int>{0, 1});
}

TEST_CASE("polar duality: members satisfy x.fhat = 1") {
  auto cube3 = hypercube<R>(3);
  for (const auto& fc : cube3.classes())
    for (int m : fc.members) CHECK(dot(fc.fhat, cube3.vertices()[m]) == R(1));

  auto oct = ngon(8);
  for (const auto& fc : oct.classes())
    for (int m : fc.members) CHECK(std::abs(dot(fc.fhat, oct.vertices()[m]) - 1.0) < 1e-9);
}

TEST_CASE("norm axioms on random rational samples") {
  SplitMix64 rng(2024);
  std::vector<Polytope<R>> balls;
  balls.push_back(crosspolytope<R>(2));
  balls.push_back(hypercube<R>(2));
  balls.push_back(crosspolytope<R>(3));
  balls.push_back(hypercube<R>(3));
  for (const auto& P : balls) {
    for (int it = 0; it < 60; ++it) {
      Vec<R> x = random_point(rng, P.dim());
      Vec<R> y = random_point(rng, P.dim());
      CHECK(P.gauge(x) == P.gauge(negated(x)));
      R lambda = R(1 + rng.below(7), 1 + rng.below(5));
      CHECK(P.gauge(scaled(x, lambda)) == lambda * P.gauge(x));
      CHECK(P.gauge(add(x, y)) <= P.gauge(x) + P.gauge(y));
      if (!is_zero_vec(x)) CHECK(!P.support_classes(x).empty());
    }
  }
}

TEST_CASE("cone membership agrees with the nonnegative-combination oracle") {
  SplitMix64 rng(77);
  std::vector<Polytope<R>> balls;
  balls.push_back(crosspolytope<R>(2));
  balls.push_back(hypercube<R>(2));
  balls.push_back(crosspolytope<R>(3));
  balls.push_back(hypercube<R>(3));
  for (const auto& P : balls) {
    for (int it = 0; it < 40; ++it) {
      Vec<R> x = random_point(rng, P.dim());
      if (is_zero_vec(x)) continue;
      for (int c = 0; c < P.class_count(); ++c) {
        bool lib = P.membership(c, x) != ConeMembership::Outside;
        bool oracle =
            oracles::cone_contains(P, c, false, x) || oracles::cone_contains(P, c, true, x);
        CHECK(lib == oracle);
      }
    }
  }
}

TEST_CASE("d >= 4 requires a polar override") {
  std::vector<Vec<R>> verts;
  for (int k = 0; k < 4; ++k)
    for (int s : {1, -1}) {
      Vec<R> v(4, R(0));
      v[k] = R(s);
      verts.push_back(v);
    }
  CHECK_THROWS_AS(Polytope<R>::validate(verts, 4), Error);
  // crosspolytope(4) supplies the sign-vector polar itself
  auto c4 = crosspolytope<R>(4);
  CHECK(c4.class_count() == 8);
  CHECK(c4.gauge(rv({1, -2, 3, -4})) == R(10));
}

TEST_CASE("interior directions are strictly inside their cones") {
  for (const auto& P : {crosspolytope<R>(2), hypercube<R>(2), crosspolytope<R>(3)}) {
    for (int c = 0; c < P.class_count(); ++c) {
      CHECK(P.membership(c, P.interior_direction(c)) == ConeMembership::InteriorPositive);
    }
  }
}
