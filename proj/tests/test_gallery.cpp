#include "doctest.h"

#include <cmath>

#include "polyrig/gallery.hpp"
#include "polyrig/rng.hpp"

using namespace polyrig;
using R = Rat;

namespace {

Vec<R> rv(std::vector<long long> xs) {
  Vec<R> v;
  for (auto x : xs) v.push_back(R(x));
  return v;
}

SubmodularFn<R> example_submodular() {
  // f(empty)=0, f({2})=1, f({1})=f({1,2})=2
  return SubmodularFn<R>::validate(2, {R(0), R(2), R(1), R(2)});
}

SubmodularFn<R> example_submodular_mirrored() {
  // coordinates swapped: f({1})=1, f({2})=2; the unit ball is the wide
  // hexagon with vertices (+-1,0), (+-1/2,+-1/2)
  return SubmodularFn<R>::validate(2, {R(0), R(1), R(2), R(2)});
}

}  // namespace

TEST_CASE("l1 and linf gauges") {
  CHECK(crosspolytope<R>(2).gauge(rv({3, 4})) == R(7));
  CHECK(hypercube<R>(2).gauge(rv({3, 4})) == R(4));
}

TEST_CASE("ngon(4) is the rotated square") {
  auto g4 = ngon(4);
  REQUIRE(g4.class_count() == 2);
  CHECK(std::abs(g4.classes()[0].fhat[0] - 1.0) < 1e-9);
  CHECK(std::abs(g4.classes()[0].fhat[1] - 1.0) < 1e-9);
  CHECK(std::abs(g4.classes()[1].fhat[0] - 1.0) < 1e-9);
  CHECK(std::abs(g4.classes()[1].fhat[1] + 1.0) < 1e-9);
  CHECK_THROWS_AS(ngon(7), Error);
  CHECK_THROWS_AS(ngon(2), Error);
}

TEST_CASE("additive norm over {e1, e2, e1+e2}") {
  std::vector<Vec<R>> base = {rv({1, 0}), rv({0, 1}), rv({1, 1})};
  auto P = additive_norm(base);

  CHECK(P.gauge(rv({2, 2})) == R(8));  // 2 + 2 + 4

  REQUIRE(P.class_count() == 3);
  CHECK(P.classes()[0].fhat == rv({2, 2}));
  CHECK(P.classes()[1].fhat == rv({2, 0}));
  CHECK(P.classes()[2].fhat == rv({0, 2}));

  // the ball itself is the hexagon with vertices (+-1/2,0), (0,+-1/2),
  // +-(1/2,-1/2)
  CHECK(P.vertices().size() == 6);
  CHECK(P.gauge({R(1, 2), R(0)}) == R(1));
  CHECK(P.gauge({R(1, 2), R(-1, 2)}) == R(1));

  SplitMix64 rng(11);
  for (int it = 0; it < 1000; ++it) {
    Vec<R> x = {R(rng.range(-30, 30), 1 + rng.below(6)), R(rng.range(-30, 30), 1 + rng.below(6))};
    CHECK(P.gauge(x) == additive_gauge(base, x));
  }
}

TEST_CASE("additive norm with the standard basis is the l1 norm") {
  auto P = additive_norm<R>({rv({1, 0}), rv({0, 1})});
  auto L1 = crosspolytope<R>(2);
  REQUIRE(P.class_count() == 2);
  CHECK(P.classes()[0].fhat == L1.classes()[0].fhat);
  CHECK(P.classes()[1].fhat == L1.classes()[1].fhat);
  SplitMix64 rng(12);
  for (int it = 0; it < 50; ++it) {
    Vec<R> x = rv({rng.range(-9, 9), rng.range(-9, 9)});
    CHECK(P.gauge(x) == L1.gauge(x));
  }
}

TEST_CASE("degenerate additive bases are rejected") {
  CHECK_THROWS_AS(additive_norm<R>({rv({1, 0}), rv({2, 0})}), Error);
  CHECK_THROWS_AS(additive_norm<R>({}), Error);
}

TEST_CASE("submodular validation") {
  CHECK_NOTHROW(example_submodular());
  CHECK_NOTHROW(example_submodular_mirrored());

  // f({1,2}) < f({1}): not monotone
  CHECK_THROWS_AS(SubmodularFn<R>::validate(2, {R(0), R(2), R(2), R(1)}), Error);
  try {
    SubmodularFn<R>::validate(2, {R(0), R(2), R(2), R(1)});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMonotone);
  }

  // f({1}) + f({2}) < f({1,2}): not submodular
  try {
    SubmodularFn<R>::validate(2, {R(0), R(1), R(1), R(3)});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSubmodular);
  }

  CHECK_THROWS_AS(SubmodularFn<R>::validate(9, std::vector<R>(512, R(1))), Error);
}

TEST_CASE("Lovasz norm of the running submodular example") {
  auto f = example_submodular();
  auto P = lovasz_norm(f);

  // true Lovasz extension: 2|x1| when |x1| >= |x2|, |x1|+|x2| otherwise
  CHECK(P.gauge(rv({1, 2})) == R(3));
  CHECK(P.gauge(rv({3, 1})) == R(6));
  CHECK(lovasz_gauge(f, rv({1, 2})) == R(3));
  CHECK(lovasz_gauge(f, rv({3, 1})) == R(6));

  REQUIRE(P.class_count() == 3);
  CHECK(P.classes()[0].fhat == rv({2, 0}));
  CHECK(P.classes()[1].fhat == rv({1, 1}));
  CHECK(P.classes()[2].fhat == rv({1, -1}));
}

TEST_CASE("Lovasz norm of the mirrored example matches its drawn hexagon") {
  auto f = example_submodular_mirrored();
  auto P = lovasz_norm(f);

  REQUIRE(P.class_count() == 3);
  CHECK(P.classes()[0].fhat == rv({1, 1}));
  CHECK(P.classes()[1].fhat == rv({1, -1}));
  CHECK(P.classes()[2].fhat == rv({0, 2}));

  // ball vertices (+-1,0), (+-1/2,+-1/2)
  CHECK(P.vertices().size() == 6);
  CHECK(P.gauge(rv({1, 0})) == R(1));
  CHECK(P.gauge({R(1, 2), R(1, 2)}) == R(1));
  CHECK(P.gauge({R(0), R(1, 2)}) == R(1));

  CHECK(P.gauge(rv({1, 2})) == R(4));
  CHECK(P.gauge(rv({3, 1})) == R(4));
}

TEST_CASE("Lovasz gauge equals the direct extension at random points, exactly") {
  auto fs = {example_submodular(), example_submodular_mirrored()};
  SplitMix64 rng(13);
  for (const auto& f : fs) {
    auto P = lovasz_norm(f);
    for (int it = 0; it < 1000; ++it) {
      Vec<R> x = {R(rng.range(-40, 40), 1 + rng.below(8)),
                  R(rng.range(-40, 40), 1 + rng.below(8))};
      CHECK(P.gauge(x) == lovasz_gauge(f, x));
    }
  }
  // a three-dimensional instance: f(A) = min(|A|, 2)
  std::vector<R> vals(8);
  for (unsigned m = 0; m < 8; ++m) vals[m] = R(std::min(__builtin_popcount(m), 2));
  auto f3 = SubmodularFn<R>::validate(3, std::move(vals));
  auto P3 = lovasz_norm(f3);
  for (int it = 0; it < 300; ++it) {
    Vec<R> x = {R(rng.range(-9, 9)), R(rng.range(-9, 9)), R(rng.range(-9, 9))};
    CHECK(P3.gauge(x) == lovasz_gauge(f3, x));
  }
}
