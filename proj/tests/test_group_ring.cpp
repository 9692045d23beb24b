#include <doctest.h>

#include <random>

#include "gsft/group_ring.hpp"
#include "gsft/sampling.hpp"
#include "test_support.hpp"

using namespace gsft;
using gsft::testing::symmetric_group_3;

namespace {

/// Independent convolution oracle: coefficient of h in x*y computed straight
/// from the defining sum over factorizations.
Int convolution_coefficient(const GroupRingElement& x, const GroupRingElement& y, int h) {
  const auto& g = *x.group();
  Int total = 0;
  for (int a = 0; a < g.order(); ++a)
    total += x.coeff(a) * y.coeff(g.multiply(g.inverse(a), h));
  return total;
}

}  // namespace

TEST_CASE("products over Z/2Z") {
  auto c2 = FiniteGroup::cyclic(2);
  GroupRingElement e_plus_g = GroupRingElement::uniform(c2);
  GroupRingElement sq = e_plus_g * e_plus_g;
  // (e+g)^2 = 2e + 2g.
  CHECK(sq.coeff(0) == 2);
  CHECK(sq.coeff(1) == 2);
  CHECK(sq == Int(2) * GroupRingElement::uniform(c2));

  GroupRingElement g = GroupRingElement::basis(c2, 1);
  CHECK(g * g == GroupRingElement::one(c2));
}

TEST_CASE("unit law and group mismatch") {
  auto c3 = FiniteGroup::cyclic(3);
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_group_ring_element(rng, c3, 5, -5);
    CHECK(x * GroupRingElement::one(c3) == x);
    CHECK(GroupRingElement::one(c3) * x == x);
  }
  auto c2 = FiniteGroup::cyclic(2);
  CHECK_THROWS_AS(GroupRingElement::one(c2) * GroupRingElement::one(c3), InputError);
}

TEST_CASE("coefficient projection") {
  auto c2 = FiniteGroup::cyclic(2);
  GroupRingElement x(c2);
  x.set_coeff(0, 3);
  x.set_coeff(1, 5);
  CHECK(project_coefficient(x, GroupElement(c2, 1)) == 5);
  CHECK(project_coefficient(x, identity_element(c2)) == 3);

  for (int n : {1, 2, 5}) {
    auto g = FiniteGroup::cyclic(n);
    CHECK(project_coefficient(GroupRingElement::uniform(g), identity_element(g)) == 1);
  }

  // Coefficients of a product against the convolution oracle.
  auto c3 = FiniteGroup::cyclic(3);
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_group_ring_element(rng, c3, 4, -4);
    auto y = random_group_ring_element(rng, c3, 4, -4);
    auto xy = x * y;
    for (int h = 0; h < 3; ++h) CHECK(xy.coeff(h) == convolution_coefficient(x, y, h));
  }
}

TEST_CASE("augmentation") {
  auto c2 = FiniteGroup::cyclic(2);
  CHECK(augmentation(GroupRingElement::uniform(c2)) == 2);
  for (int n : {1, 3, 6}) {
    auto g = FiniteGroup::cyclic(n);
    CHECK(augmentation(GroupRingElement::uniform(g)) == n);
  }
  CHECK(augmentation(GroupRingElement::zero(c2)) == 0);

  // Ring homomorphism onto Z.
  auto s3 = symmetric_group_3();
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_group_ring_element(rng, s3, 3, -3);
    auto y = random_group_ring_element(rng, s3, 3, -3);
    CHECK(augmentation(x * y) == augmentation(x) * augmentation(y));
    CHECK(augmentation(x + y) == augmentation(x) + augmentation(y));
  }
}

TEST_CASE("conjugation") {
  auto c2 = FiniteGroup::cyclic(2);
  auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  Rng rng(17);
  for (const auto& g : {c2, v4}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto x = random_group_ring_element(rng, g, 5, -5);
      for (int c = 0; c < g->order(); ++c) CHECK(conjugated(GroupElement(g, c), x) == x);
    }
  }

  // Non-abelian: conjugating a transposition indicator by a 3-cycle permutes
  // the coefficient onto the conjugated transposition.
  auto s3 = symmetric_group_3();
  int three_cycle = -1, transposition = -1;
  for (int x = 1; x < 6; ++x) {
    int sq = s3->multiply(x, x);
    if (sq != 0 && three_cycle < 0) three_cycle = x;
    if (sq == 0 && transposition < 0) transposition = x;
  }
  REQUIRE(three_cycle > 0);
  REQUIRE(transposition > 0);
  GroupElement c(s3, three_cycle);
  auto x = GroupRingElement::basis(s3, transposition);
  auto y = conjugated(c, x);
  int expected = s3->conjugate(three_cycle, transposition);
  CHECK(expected != transposition);
  CHECK(y.coeff(expected) == 1);
  CHECK(y.augmentation() == 1);
  CHECK(y.is_nonnegative());

  // Direct evaluation of the definition on a random element.
  auto z = random_group_ring_element(rng, s3, 4, -4);
  auto w = conjugated(c, z);
  for (int k = 0; k < 6; ++k)
    CHECK(w.coeff(k) == z.coeff(s3->conjugate(s3->inverse(three_cycle), k)));
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(19);
  for (const auto& g : {FiniteGroup::cyclic(4), FiniteGroup::cyclic(6),
                        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)),
                        symmetric_group_3()}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto x = random_group_ring_element(rng, g, 3, -3);
      auto y = random_group_ring_element(rng, g, 3, -3);
      auto z = random_group_ring_element(rng, g, 3, -3);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((y + z) * x == y * x + z * x);
    }
  }
}

TEST_CASE("uniform element absorbs products") {
  Rng rng(23);
  for (const auto& g : {FiniteGroup::cyclic(3), symmetric_group_3()}) {
    auto u = GroupRingElement::uniform(g);
    for (int trial = 0; trial < 25; ++trial) {
      auto x = random_group_ring_element(rng, g, 4, -4);
      CHECK(u * x == augmentation(x) * u);
      CHECK(x * u == augmentation(x) * u);
    }
  }
}

TEST_CASE("non-negativity is preserved by sum and product") {
  Rng rng(29);
  auto c4 = FiniteGroup::cyclic(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = random_group_ring_element(rng, c4, 3);
    auto y = random_group_ring_element(rng, c4, 3);
    REQUIRE(x.is_nonnegative());
    REQUIRE(y.is_nonnegative());
    CHECK((x + y).is_nonnegative());
    CHECK((x * y).is_nonnegative());
  }
}
