#include <doctest.h>

#include "gsft/equivalence.hpp"
#include "gsft/flow.hpp"
#include "gsft/sampling.hpp"
#include "test_support.hpp"

using namespace gsft;
namespace gt = gsft::testing;

TEST_CASE("weight group of the documented matrix is the whole group") {
  auto b = gt::golden_mean_extension_matrix();  // loop labeled g at vertex 1
  auto w = weight_group(b);
  CHECK(w.subgroup == std::vector<int>{0, 1});
}

TEST_CASE("weight group of an identity-labeled matrix is trivial") {
  auto c2 = FiniteGroup::cyclic(2);
  // [[e, e], [e, 0]]: every cycle weight is a product of identities.
  auto b = gt::grm(c2, 2, {{1, 0}, {1, 0}, {1, 0}, {0, 0}});
  CHECK(weight_group(b).subgroup == std::vector<int>{0});

  auto c1 = FiniteGroup::cyclic(1);
  auto t = embedded(gt::int_matrix(1, {1}), c1);
  CHECK(weight_group(t).subgroup == std::vector<int>{0});
}

TEST_CASE("weight group requires irreducibility") {
  auto c2 = FiniteGroup::cyclic(2);
  GroupRingMatrix red(default_labels(2), default_labels(2), GroupRingElement::zero(c2));
  red.at(0, 0) = GroupRingElement::one(c2);
  red.at(1, 1) = GroupRingElement::basis(c2, 1);
  CHECK_THROWS_WITH_AS(weight_group(red), doctest::Contains("reducible"), InputError);
}

TEST_CASE("weight group at intermediate subgroups") {
  auto c4 = FiniteGroup::cyclic(4);
  // A loop labeled g^2 and a 2-cycle labeled e: weights generate {0, 2}.
  auto b = gt::grm(c4, 2,
                   {{0, 0, 1, 0}, {1, 0, 0, 0},
                    {1, 0, 0, 0}, {0, 0, 0, 0}});
  CHECK(weight_group(b).subgroup == std::vector<int>{0, 2});
}

TEST_CASE("weight groups at different bases are conjugate but need not be equal") {
  auto s3 = gt::symmetric_group_3();
  int transposition = -1, three_cycle = -1;
  for (int x = 1; x < 6; ++x) {
    if (s3->multiply(x, x) == 0 && transposition < 0) transposition = x;
    if (s3->multiply(x, x) != 0 && three_cycle < 0) three_cycle = x;
  }
  REQUIRE(s3->conjugate(s3->inverse(three_cycle), transposition) != transposition);

  // Loop at vertex 1 labeled by the transposition; a 2-cycle of edges
  // labeled by the 3-cycle and its inverse.
  GroupRingMatrix a(default_labels(2), default_labels(2), GroupRingElement::zero(s3));
  a.at(0, 0) = GroupRingElement::basis(s3, transposition);
  a.at(0, 1) = GroupRingElement::basis(s3, three_cycle);
  a.at(1, 0) = GroupRingElement::basis(s3, s3->inverse(three_cycle));

  auto w0 = weight_group(a, 0);
  auto w1 = weight_group(a, 1);
  CHECK(w0.subgroup == std::vector<int>{0, transposition});
  CHECK(w1.subgroup ==
        std::vector<int>({0, s3->conjugate(s3->inverse(three_cycle), transposition)}));
  CHECK(w0.subgroup != w1.subgroup);
  CHECK(conjugating_element(*s3, w0.subgroup, w1.subgroup).has_value());
}

TEST_CASE("weight class comparison") {
  auto b = gt::golden_mean_extension_matrix();
  auto same = weight_class_equal(b, b);
  CHECK(same.equal);
  CHECK(same.conjugator->is_identity());

  auto c2 = group_of(b);
  auto trivial_weights = gt::grm(c2, 2, {{1, 0}, {1, 0}, {1, 0}, {0, 0}});
  CHECK_FALSE(weight_class_equal(b, trivial_weights).equal);
}

TEST_CASE("conjugation preserves the weight class") {
  Rng rng(173);
  auto c4 = FiniteGroup::cyclic(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = rand_int(rng, 1, 3);
    GroupRingMatrix b(default_labels(n), default_labels(n), GroupRingElement::zero(c4));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        b.at(i, j) = random_group_ring_element(rng, c4, 1);
    if (!structure_flags(b).irreducible) continue;
    GroupElement g(c4, rand_int(rng, 0, 3));
    auto cmp = weight_class_equal(b, conjugated(g, b));
    CHECK(cmp.equal);
  }
}

TEST_CASE("witnessed shift equivalences have equal weight classes") {
  Rng rng(179);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = FiniteGroup::cyclic(rand_int(rng, 2, 3));
    auto pair = random_elementary_pair(rng, rand_int(rng, 1, 3), rand_int(rng, 1, 3), 2);
    GroupRingMatrix b = uniform_matrix(pair.a, g);
    GroupRingMatrix c = uniform_matrix(pair.b, g);
    IntMatrix s = pair.v;
    for (std::size_t i = 0; i < s.nrows(); ++i)
      for (std::size_t j = 0; j < s.ncols(); ++j) s.at(i, j) *= g->order();
    auto lifted = lift_se(b, c, IntSEWitness{pair.u, std::move(s), 1});
    REQUIRE(verify_se(b, c, lifted).valid);
    CHECK(weight_class_equal(b, c).equal);
  }
}

TEST_CASE("positive move on the documented 2x2 swap matrix") {
  auto c2 = FiniteGroup::cyclic(2);
  // A = [[0, e], [e, 0]], left move at (1,2) with weight e (0-based (0,1)).
  auto a = gt::grm(c2, 2, {{0, 0}, {1, 0}, {1, 0}, {0, 0}});
  auto b = apply_positive_move(a, MoveSide::Left, 0, 1, identity_element(c2));
  // B = [[e, 0], [e, 0]].
  CHECK(b.at(0, 0) == GroupRingElement::one(c2));
  CHECK(b.at(0, 1).is_zero());
  CHECK(b.at(1, 0) == GroupRingElement::one(c2));
  CHECK(b.at(1, 1).is_zero());

  // The defining stabilized identity, re-checked here from scratch.
  auto e_op = stabilized_i_minus(a).elementary_left(0, 1, GroupRingElement::one(c2));
  CHECK(stabilized_i_minus(b) == e_op);
}

TEST_CASE("right positive move mirrors the left one") {
  auto c2 = FiniteGroup::cyclic(2);
  auto a = gt::grm(c2, 2, {{0, 0}, {1, 0}, {1, 0}, {0, 0}});
  auto b = apply_positive_move(a, MoveSide::Right, 0, 1, identity_element(c2));
  CHECK(stabilized_i_minus(b) ==
        stabilized_i_minus(a).elementary_right(0, 1, GroupRingElement::one(c2)));
  CHECK(is_nonnegative(b));
}

TEST_CASE("positive move requires a positive coefficient") {
  auto c2 = FiniteGroup::cyclic(2);
  auto a = gt::grm(c2, 2, {{0, 0}, {1, 0}, {1, 0}, {0, 0}});
  CHECK_THROWS_WITH_AS(apply_positive_move(a, MoveSide::Left, 0, 1, GroupElement(c2, 1)),
                       doctest::Contains("positive"), InputError);
  CHECK_THROWS_AS(apply_positive_move(a, MoveSide::Left, 0, 0, identity_element(c2)), InputError);
  CHECK_THROWS_AS(apply_positive_move(a, MoveSide::Left, 0, 5, identity_element(c2)), InputError);
}

TEST_CASE("positive moves preserve the weight class on irreducible outputs") {
  Rng rng(181);
  auto c3 = FiniteGroup::cyclic(3);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 12; ++trial) {
    std::size_t n = rand_int(rng, 2, 3);
    GroupRingMatrix a(default_labels(n), default_labels(n), GroupRingElement::zero(c3));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a.at(i, j) = random_group_ring_element(rng, c3, 1);
    if (!structure_flags(a).irreducible) continue;
    int i = rand_int(rng, 0, static_cast<int>(n) - 1);
    int j = rand_int(rng, 0, static_cast<int>(n) - 1);
    if (i == j) continue;
    int g = -1;
    for (int k = 0; k < 3; ++k)
      if (a.at(i, j).coeff(k) > 0) g = k;
    if (g < 0) continue;
    auto side = (trial % 2 == 0) ? MoveSide::Left : MoveSide::Right;
    auto b = apply_positive_move(a, side, i, j, GroupElement(c3, g));
    if (!structure_flags(b).irreducible) continue;
    // Expected-pass property; a failure here is reported for investigation.
    CHECK_MESSAGE(weight_class_equal(a, b).equal,
                  "weight class changed under a positive move; investigate");
    ++checked;
  }
  CHECK(checked >= 12);
}

TEST_CASE("stabilized elementary operations reject out-of-core indices") {
  auto c2 = FiniteGroup::cyclic(2);
  auto s = stabilized_i_minus(gt::grm(c2, 2, {{0, 0}, {1, 0}, {1, 0}, {0, 0}}));
  CHECK_THROWS_AS(s.elementary_left(0, 2, GroupRingElement::one(c2)), InputError);
  CHECK_THROWS_AS(s.elementary_right(3, 1, GroupRingElement::one(c2)), InputError);
}
