#include <doctest.h>

#include "gsft/inertness.hpp"
#include "gsft/periodic.hpp"
#include "gsft/sampling.hpp"
#include "test_support.hpp"

using namespace gsft;
namespace gt = gsft::testing;

TEST_CASE("census of the full 2-shift") {
  auto c = census(gt::int_matrix(1, {2}), 4);
  CHECK(c.per_counts == std::vector<Int>{2, 4, 8, 16});
  CHECK(c.least_period_points == std::vector<Int>{2, 2, 6, 12});
  CHECK(c.least_period_orbits == std::vector<Int>{2, 1, 2, 3});
}

TEST_CASE("census of the golden mean shift") {
  auto c = census(gt::int_matrix(2, {1, 1, 1, 0}), 4);
  CHECK(c.per_counts == std::vector<Int>{1, 3, 4, 7});
  CHECK(c.least_period_points == std::vector<Int>{1, 2, 3, 4});
}

TEST_CASE("census of a single fixed loop") {
  auto c = census(gt::int_matrix(1, {1}), 5);
  for (int n = 1; n <= 5; ++n) {
    CHECK(c.per_count(n) == 1);
    CHECK(c.least_points(n) == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("census rejects ill-posed input") {
  CHECK_THROWS_WITH_AS(census(gt::int_matrix(2, {1, 1, 0, 0}), 3),
                       doctest::Contains("essential"), InputError);
  CHECK_THROWS_AS(census(gt::int_matrix(1, {2}), 0), InputError);
  IntMatrix neg = gt::int_matrix(1, {1});
  neg.at(0, 0) = -1;
  CHECK_THROWS_AS(census(neg, 3), InputError);
}

TEST_CASE("brute force census matches on documented cases") {
  CHECK(brute_force_census(gt::int_matrix(1, {2}), 4) == census(gt::int_matrix(1, {2}), 4));

  auto swap2 = gt::int_matrix(2, {0, 1, 1, 0});
  auto c = brute_force_census(swap2, 4);
  CHECK(c.per_counts == std::vector<Int>{0, 2, 0, 2});
  CHECK(c.least_period_points == std::vector<Int>{0, 2, 0, 0});

  CHECK(brute_force_census(gt::int_matrix(1, {1}), 4).per_counts == std::vector<Int>{1, 1, 1, 1});
}

TEST_CASE("brute force census budget") {
  CHECK_THROWS_WITH_AS(brute_force_census(gt::int_matrix(1, {2}), 10, 100),
                       doctest::Contains("budget"), InputError);
}

TEST_CASE("census equals the brute force oracle on random essential matrices") {
  Rng rng(151);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = rand_int(rng, 1, 3);
    IntMatrix a = random_essential_matrix(rng, n, 2);
    int horizon = rand_int(rng, 1, 6);
    REQUIRE(census(a, horizon) == brute_force_census(a, horizon));
  }
}

TEST_CASE("per-period counts multiply under Kronecker products") {
  Rng rng(157);
  for (int trial = 0; trial < 15; ++trial) {
    IntMatrix a = random_essential_matrix(rng, rand_int(rng, 1, 2), 2);
    IntMatrix b = random_essential_matrix(rng, rand_int(rng, 1, 2), 2);
    auto ca = census(a, 5);
    auto cb = census(b, 5);
    auto cab = census(kronecker(a, b), 5);
    for (int n = 1; n <= 5; ++n)
      CHECK(cab.per_count(n) == ca.per_count(n) * cb.per_count(n));
  }
}

TEST_CASE("inert extensions have matching per-period counts upstairs and downstairs") {
  Rng rng(163);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = FiniteGroup::cyclic(rand_int(rng, 2, 3));
    auto b = random_uniform_inert_matrix(rng, g, rand_int(rng, 1, 2), 2);
    REQUIRE(is_inert(b).inert);
    int horizon = static_cast<int>(b.nrows()) + 3;
    auto down = census(augmentation(b), horizon);
    auto up = census(extension_matrix(b), horizon);
    CHECK(down.per_counts == up.per_counts);
  }
}

TEST_CASE("existence condition passes the full 2-shift at p = 2") {
  auto v = kim_roush_condition(gt::int_matrix(1, {2}), 2, 16);
  CHECK(v.pass);
  CHECK_FALSE(v.first_failure.has_value());
  // The n = 16 term: sum 16 inside {0..4080}.
  const KimRoushTerm* t16 = nullptr;
  for (const auto& t : v.terms)
    if (t.n == 16) t16 = &t;
  REQUIRE(t16 != nullptr);
  CHECK(t16->sum == Rational(16));
  CHECK(t16->bound == 4080);
}

TEST_CASE("existence condition passes the full 3-shift at p = 3") {
  CHECK(kim_roush_condition(gt::int_matrix(1, {3}), 3, 9).pass);
}

TEST_CASE("existence condition fails the golden mean at p = 2, n = 2") {
  auto v = kim_roush_condition(gt::int_matrix(2, {1, 1, 1, 0}), 2, 8);
  CHECK_FALSE(v.pass);
  REQUIRE(v.first_failure.has_value());
  CHECK(v.first_failure->n == 2);
  CHECK(v.first_failure->sum == Rational(1, 2));
  CHECK_FALSE(v.first_failure->integral);
}

TEST_CASE("the as-written points mode differs from the default") {
  // On the full 2-shift the n = 4 point-count sum is 3/2: fractional, hence
  // outside {0..o_4} read literally, yet inside the interval [0, o_4]. The
  // interval mode accepts what a literal integer reading would reject.
  auto points = kim_roush_condition(gt::int_matrix(1, {2}), 2, 8, KimRoushMode::PointsInterval);
  CHECK(points.pass);
  const KimRoushTerm* t4 = nullptr;
  for (const auto& t : points.terms)
    if (t.n == 4) t4 = &t;
  REQUIRE(t4 != nullptr);
  CHECK(t4->sum == Rational(3, 2));
  CHECK_FALSE(t4->integral);
  CHECK(t4->within);

  // The golden mean still fails in points mode (sum 1/2 exceeds o_2 bound?
  // no: it fails the orbit mode; in interval mode 1/2 lies in [0, 2], so the
  // points reading accepts it).
  auto gm = kim_roush_condition(gt::int_matrix(2, {1, 1, 1, 0}), 2, 8, KimRoushMode::PointsInterval);
  CHECK(gm.pass);
}

TEST_CASE("existence condition input validation") {
  CHECK_THROWS_WITH_AS(kim_roush_condition(gt::int_matrix(2, {0, 1, 1, 0}), 2, 4),
                       doctest::Contains("primitive"), InputError);
  CHECK_THROWS_WITH_AS(kim_roush_condition(gt::int_matrix(1, {2}), 4, 4),
                       doctest::Contains("prime"), InputError);
  CHECK_THROWS_AS(kim_roush_condition(gt::int_matrix(1, {2}), 2, 0), InputError);
}

TEST_CASE("every generated inert extension passes the default-mode check") {
  // The interpretation test: if any inert matrix over Z/pZ with primitive
  // augmentation fails the orbit-mode condition, the chosen reading of the
  // condition is wrong and the suite must stop here.
  Rng rng(167);
  for (int trial = 0; trial < 40; ++trial) {
    int p = (trial % 2 == 0) ? 2 : 3;
    auto g = FiniteGroup::cyclic(p);
    auto b = random_uniform_inert_matrix(rng, g, rand_int(rng, 1, 3), 2);
    REQUIRE(is_inert(b).inert);
    IntMatrix a = augmentation(b);
    REQUIRE(structure_flags(a).primitive);
    auto v = kim_roush_condition(a, p, 12);
    REQUIRE_MESSAGE(v.pass, "interpretation falsified: an inert extension failed the default mode");
  }
}
