#include "selftest.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "gsft/gsft.hpp"
#include "gsft/sampling.hpp"

namespace gsft_cli {

using namespace gsft;

namespace {

struct Runner {
  int failures = 0;

  void check(const std::string& name, const std::function<void()>& body) {
    try {
      body();
      std::cout << "ok   " << name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << name << ": " << e.what() << "\n";
    }
  }
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

Json load_json(const std::string& dir, const std::string& file) {
  std::ifstream in(dir + "/" + file);
  if (!in) throw std::runtime_error("cannot open " + dir + "/" + file);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error(file + " is not valid JSON: " + e.what());
  }
  return j;
}

// Built-in fixtures, used unless a data directory overrides them.

GroupRingMatrix builtin_example_b() {
  auto c2 = FiniteGroup::cyclic(2);
  GroupRingMatrix b(default_labels(2), default_labels(2), GroupRingElement::zero(c2));
  b.at(0, 0) = GroupRingElement::basis(c2, 1);
  b.at(0, 1) = GroupRingElement::one(c2);
  b.at(1, 0) = GroupRingElement::basis(c2, 1);
  return b;
}

GraphAction builtin_swap_action() {
  auto c2 = FiniteGroup::cyclic(2);
  return make_graph_action(ones_matrix(default_labels(2)), c2, {{0, 1}, {1, 0}});
}

GraphAction builtin_reflection_action() {
  std::vector<Label> v{Label("00"), Label("01"), Label("10"), Label("11")};
  IntMatrix a(v, v, Int(0));
  const int rows[4][4] = {{0, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a.at(i, j) = rows[i][j];
  auto c2 = FiniteGroup::cyclic(2);
  return make_graph_action(std::move(a), c2, {{0, 1, 2, 3}, {3, 2, 1, 0}});
}

IntMatrix builtin_int(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t n = rows.size();
  IntMatrix m(default_labels(n), default_labels(rows.begin()->size()), Int(0));
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

int run_selftest(const SelfTestOptions& options) {
  Runner r;

  // Fixtures, possibly from the data directory.
  GroupRingMatrix example_b = builtin_example_b();
  GraphAction swap_action = builtin_swap_action();
  GraphAction reflection_action = builtin_reflection_action();
  IntMatrix full2 = builtin_int({{2}});
  IntMatrix full3 = builtin_int({{3}});
  IntMatrix golden = builtin_int({{1, 1}, {1, 0}});

  if (options.data_dir) {
    r.check("load fixtures from " + *options.data_dir, [&] {
      example_b = group_ring_matrix_file_from_json(load_json(*options.data_dir, "example4_1.json"));
      swap_action = graph_action_from_json(load_json(*options.data_dir, "example1_2_x.json"));
      reflection_action = graph_action_from_json(load_json(*options.data_dir, "example1_2_y.json"));
      full2 = int_matrix_from_json(load_json(*options.data_dir, "full2.json"));
      full3 = int_matrix_from_json(load_json(*options.data_dir, "full3.json"));
      golden = int_matrix_from_json(load_json(*options.data_dir, "golden_mean.json"));
    });
    if (r.failures) {
      std::cout << "selftest: " << r.failures << " failure(s)\n";
      return r.failures;
    }
  }

  r.check("augmentation of the labeled 2x2 example", [&] {
    IntMatrix aug = augmentation(example_b);
    expect(aug.at(0, 0) == 1 && aug.at(0, 1) == 1 && aug.at(1, 0) == 1 && aug.at(1, 1) == 0,
           "augmentation is not [[1,1],[1,0]]");
  });

  r.check("extension of the labeled 2x2 example", [&] {
    IntMatrix ext = extension_matrix(example_b);
    const int expected[4][4] = {{0, 1, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        expect(ext.at(i, j) == expected[i][j], "extension entry mismatch at (" +
                                                   std::to_string(i) + "," + std::to_string(j) + ")");
  });

  r.check("quotient of the full 2-shift by the swap involution", [&] {
    auto q = quotient_presentation(swap_action);
    expect(q.matrix.nrows() == 1, "expected a single orbit");
    expect(augmentation(q.matrix).at(0, 0) == 2, "augmentation must be [2]");
    expect(graph_action_is_inert(swap_action).inert, "the swap involution must be inert");
  });

  r.check("quotient of the reflected 4-vertex graph", [&] {
    auto q = quotient_presentation(reflection_action);
    expect(q.matrix.nrows() == 2, "expected two orbits");
    expect(reciprocal_charpoly(augmentation(q.matrix)) == reciprocal_charpoly(golden),
           "quotient is not a golden mean presentation");
    expect(!graph_action_is_inert(reflection_action).inert, "the reflection must not be inert");
    expect(abs(determinant(reflection_action.adjacency())) == 1, "|det| must be 1");
  });

  r.check("fixed-point obstruction of the two product actions", [&] {
    expect(trace(kronecker(full2, golden)) == 2, "product with the golden mean must have 2 fixed points");
    expect(trace(kronecker(full2, reflection_action.adjacency())) == 0,
           "product with the reflected graph must have no fixed points");
  });

  const int battery = options.quick ? 25 : 120;
  r.check("inertness/zeta battery (" + std::to_string(battery) + " samples)", [&] {
    Rng rng(2024);
    for (int trial = 0; trial < battery; ++trial) {
      auto g = FiniteGroup::cyclic(2 + trial % 2);
      auto b = random_group_ring_matrix(rng, g, 1 + trial % 3, 2);
      expect(is_inert(b).inert == zeta_equal(b), "inertness and zeta criterion disagree");
      expect(divides(reciprocal_charpoly(augmentation(b)).poly,
                     reciprocal_charpoly(extension_matrix(b)).poly),
             "augmentation charpoly must divide the extension charpoly");
    }
  });

  r.check("constructive witnesses", [&] {
    auto c2 = FiniteGroup::cyclic(2);
    GroupRingMatrix u(default_labels(1), default_labels(1), GroupRingElement::zero(c2));
    u.at(0, 0) = GroupRingElement::uniform(c2);
    auto aug_ext = se_between_augmentation_and_extension(u);
    expect(verify_se(aug_ext.aug, aug_ext.ext, aug_ext.witness).valid,
           "augmentation/extension witness invalid");

    GroupRingMatrix c(default_labels(2), default_labels(2), GroupRingElement::zero(c2));
    c.at(0, 0) = c.at(1, 0) = GroupRingElement::one(c2);
    c.at(0, 1) = c.at(1, 1) = GroupRingElement::basis(c2, 1);
    IntMatrix r_aug(u.row_labels(), c.row_labels(), Int(0));
    r_aug.at(0, 0) = r_aug.at(0, 1) = 1;
    IntMatrix s_aug(c.row_labels(), u.row_labels(), Int(0));
    s_aug.at(0, 0) = s_aug.at(1, 0) = 1;
    auto lifted = lift_se(u, c, IntSEWitness{r_aug, s_aug, 1});
    expect(verify_se(u, c, lifted).valid, "lifted witness invalid");
  });

  r.check("periodic census against the path-enumeration oracle", [&] {
    Rng rng(2025);
    const int samples = options.quick ? 10 : 30;
    for (int trial = 0; trial < samples; ++trial) {
      IntMatrix a = random_essential_matrix(rng, 1 + trial % 3, 2);
      expect(census(a, 5) == brute_force_census(a, 5), "census disagrees with brute force");
    }
  });

  r.check("inert-extension existence condition", [&] {
    expect(kim_roush_condition(full2, 2, 16).pass, "full 2-shift must pass at p=2");
    expect(kim_roush_condition(full3, 3, 9).pass, "full 3-shift must pass at p=3");
    auto v = kim_roush_condition(golden, 2, 8);
    expect(!v.pass && v.first_failure && v.first_failure->n == 2,
           "golden mean must fail at n=2");
  });

  r.check("weight class of the labeled 2x2 example", [&] {
    auto w = weight_group(example_b);
    expect(static_cast<int>(w.subgroup.size()) == group_of(example_b)->order(),
           "weight group must be the full group");
  });

  std::cout << (r.failures ? "selftest: " + std::to_string(r.failures) + " failure(s)"
                           : "selftest: all checks passed")
            << "\n";
  return r.failures;
}

}  // namespace gsft_cli
