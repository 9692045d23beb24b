// Command-line front end: every subcommand reads JSON, computes exactly, and
// prints JSON with deterministic key order. Exit codes: 0 computed (and true
// for predicates), 1 predicate false, 2 input error, 3 internal invariant
// violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gsft/gsft.hpp"
#include "selftest.hpp"

namespace {

using namespace gsft;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

Json read_json_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw InputError("input is not valid JSON: " + std::string(e.what()));
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

/// Group-ring matrix input: {"group":..., "matrix":...}.
GroupRingMatrix read_group_ring_matrix(const std::string& path) {
  return group_ring_matrix_file_from_json(read_json_input(path));
}

IntMatrix read_int_matrix(const std::string& path) { return int_matrix_from_json(read_json_input(path)); }

int cmd_augment(const std::string& input) {
  emit(int_matrix_to_json(augmentation(read_group_ring_matrix(input))));
  return kExitTrue;
}

int cmd_extend(const std::string& input) {
  GraphAction ext = extension_action(read_group_ring_matrix(input));
  emit(graph_action_to_json(ext));
  return kExitTrue;
}

int cmd_inert(const std::string& input) {
  Json j = read_json_input(input);
  InertnessCertificate cert;
  if (j.contains("adjacency")) {
    cert = graph_action_is_inert(graph_action_from_json(j));
  } else {
    cert = is_inert(group_ring_matrix_file_from_json(j));
  }
  emit(certificate_to_json(cert));
  return cert.inert ? kExitTrue : kExitFalse;
}

int cmd_zeta_equal(const std::string& input) {
  GroupRingMatrix b = read_group_ring_matrix(input);
  bool equal = zeta_equal(b);
  Json j;
  j["equal"] = equal;
  auto poly_json = [](const ReciprocalCharPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.poly.c) arr.push_back(int_to_json(c));
    return arr;
  };
  j["augmentation_reciprocal_charpoly"] = poly_json(reciprocal_charpoly(augmentation(b)));
  j["extension_reciprocal_charpoly"] = poly_json(reciprocal_charpoly(extension_matrix(b)));
  emit(j);
  return equal ? kExitTrue : kExitFalse;
}

int cmd_quotient(const std::string& input) {
  GraphAction action = graph_action_from_json(read_json_input(input));
  emit(quotient_to_json(quotient_presentation(action), action));
  return kExitTrue;
}

int cmd_census(const std::string& input, int horizon, const std::string& format, bool brute,
               std::uint64_t budget) {
  IntMatrix a = read_int_matrix(input);
  PeriodicCensus c = census(a, horizon);
  if (brute) {
    PeriodicCensus oracle = brute_force_census(a, horizon, budget);
    ensure(c == oracle, "census disagrees with the brute-force oracle");
  }
  if (format == "csv")
    std::cout << census_to_csv(c);
  else
    emit(census_to_json(c));
  return kExitTrue;
}

int cmd_kimroush(const std::string& input, int p, int horizon, const std::string& mode) {
  KimRoushMode m = (mode == "points") ? KimRoushMode::PointsInterval : KimRoushMode::OrbitsInteger;
  auto verdict = kim_roush_condition(read_int_matrix(input), p, horizon, m);
  emit(kim_roush_to_json(verdict));
  return verdict.pass ? kExitTrue : kExitFalse;
}

int cmd_verify_se(const std::string& a_path, const std::string& b_path,
                  const std::string& witness_path) {
  Json wj = read_json_input(witness_path);
  VerifyReport report;
  if (witness_domain(wj) == "Z+") {
    report = verify_se(read_int_matrix(a_path), read_int_matrix(b_path), int_witness_from_json(wj));
  } else {
    GroupRingMatrix a = read_group_ring_matrix(a_path);
    report = verify_se(a, read_group_ring_matrix(b_path),
                       group_ring_witness_from_json(wj, group_of(a)));
  }
  emit(verify_report_to_json(report));
  return report.valid ? kExitTrue : kExitFalse;
}

int cmd_se_aug_ext(const std::string& input) {
  auto result = se_between_augmentation_and_extension(read_group_ring_matrix(input));
  Json j;
  j["augmentation"] = int_matrix_to_json(result.aug);
  j["extension"] = int_matrix_to_json(result.ext);
  j["witness"] = witness_to_json(result.witness);
  emit(j);
  return kExitTrue;
}

int cmd_lift_se(const std::string& b_path, const std::string& c_path,
                const std::string& witness_path) {
  GroupRingMatrix b = read_group_ring_matrix(b_path);
  GroupRingMatrix c = read_group_ring_matrix(c_path);
  auto lifted = lift_se(b, c, int_witness_from_json(read_json_input(witness_path)));
  emit(witness_to_json(lifted));
  return kExitTrue;
}

int cmd_descend_se(const std::string& a_path, const std::string& b_path,
                   const std::string& witness_path, const std::string& subgroup_csv) {
  GroupRingMatrix a = read_group_ring_matrix(a_path);
  GroupRingMatrix b = read_group_ring_matrix(b_path);
  std::vector<int> h;
  std::stringstream ss(subgroup_csv);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      h.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("--subgroup expects comma-separated element indices, got '" + item + "'");
    }
  }
  auto w = group_ring_witness_from_json(read_json_input(witness_path), group_of(a));
  emit(descent_to_json(descend_se_to_subgroup(a, b, h, w)));
  return kExitTrue;
}

int cmd_weight(const std::string& input, const std::string& base) {
  GroupRingMatrix a = read_group_ring_matrix(input);
  int base_index = 0;
  if (!base.empty()) {
    Json label_json;
    try {
      label_json = Json::parse(base);
    } catch (const std::exception&) {
      label_json = base;  // bare strings are labels too
    }
    base_index = static_cast<int>(a.row_index(label_from_json(label_json)));
  }
  emit(weight_class_to_json(weight_group(a, base_index), a));
  return kExitTrue;
}

int cmd_posmove(const std::string& input, const std::string& side, const std::string& i_label,
                const std::string& j_label, int g) {
  GroupRingMatrix a = read_group_ring_matrix(input);
  auto parse_label = [&](const std::string& text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const std::exception&) {
      j = text;
    }
    return static_cast<int>(a.row_index(label_from_json(j)));
  };
  require(g >= 0 && g < group_of(a)->order(), "--g is out of range for the group");
  MoveSide move_side = (side == "right") ? MoveSide::Right : MoveSide::Left;
  GroupRingMatrix b = apply_positive_move(a, move_side, parse_label(i_label), parse_label(j_label),
                                          GroupElement(group_of(a), g));
  emit(group_ring_matrix_file_to_json(b));
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with group symmetries of shifts of finite type,\n"
               "presented as square matrices over the integral group ring."};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  std::string input = "-", a_path, b_path, c_path, witness_path, subgroup_csv;
  std::string format = "json", mode = "orbits", side = "left", base_label, i_label, j_label;
  int horizon = 24, prime = 2, g_index = 0;
  std::uint64_t budget = 10'000'000;
  bool brute = false;
  gsft_cli::SelfTestOptions selftest_options;
  std::string selftest_data;

  auto* augment = app.add_subcommand("augment", "Coefficient-sum matrix of a Z+[G] matrix");
  augment->add_option("input", input, "matrix file or - for stdin");

  auto* extend = app.add_subcommand("extend", "Covering matrix on V x G with its free action");
  extend->add_option("input", input, "matrix file or - for stdin");

  auto* inert = app.add_subcommand(
      "inert", "Inertness certificate of a Z+[G] matrix or a free graph action (exit 1 if not)");
  inert->add_option("input", input, "matrix or graph-action file, - for stdin");

  auto* zeta = app.add_subcommand("zeta-equal",
                                  "Compare zeta functions of extension and augmentation (exit 1 if different)");
  zeta->add_option("input", input, "matrix file or - for stdin");

  auto* quotient = app.add_subcommand("quotient", "Group-ring presentation of a free graph action");
  quotient->add_option("input", input, "graph-action file or - for stdin");

  auto* census_cmd = app.add_subcommand("census", "Periodic-point counts of an edge shift");
  census_cmd->add_option("input", input, "integer matrix file or - for stdin");
  census_cmd->add_option("--max", horizon, "largest period to count")->capture_default_str();
  census_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  census_cmd->add_flag("--brute", brute, "cross-check against explicit path enumeration");
  census_cmd->add_option("--budget", budget, "enumeration step budget for --brute")
      ->capture_default_str();

  auto* kimroush = app.add_subcommand(
      "kimroush", "Necessary condition for an inert Z/pZ extension (exit 1 on failure)");
  kimroush->add_option("input", input, "integer matrix file or - for stdin");
  kimroush->add_option("--p", prime, "prime p")->capture_default_str();
  kimroush->add_option("--max", horizon, "check all n up to this horizon")->capture_default_str();
  kimroush->add_option("--mode", mode, "orbits (integer membership) or points (interval)")
      ->check(CLI::IsMember({"orbits", "points"}));

  auto* verify = app.add_subcommand("verify-se",
                                    "Check a shift-equivalence witness (exit 1 if invalid)");
  verify->add_option("--a", a_path, "first matrix file")->required();
  verify->add_option("--b", b_path, "second matrix file")->required();
  verify->add_option("--witness", witness_path, "witness file")->required();

  auto* se_aug_ext = app.add_subcommand(
      "se-aug-ext", "Shift equivalence between augmentation and extension of an inert matrix");
  se_aug_ext->add_option("input", input, "matrix file or - for stdin");

  auto* lift = app.add_subcommand(
      "lift-se", "Lift a Z+ witness between augmentations to one over Z+[G] (inert inputs)");
  lift->add_option("--b", b_path, "first matrix file")->required();
  lift->add_option("--c", c_path, "second matrix file")->required();
  lift->add_option("--witness", witness_path, "Z+ witness between the augmentations")->required();

  auto* descend = app.add_subcommand(
      "descend-se", "Descend a Z+[G] witness to a normal subgroup, conjugating as needed");
  descend->add_option("--a", a_path, "first matrix file")->required();
  descend->add_option("--b", b_path, "second matrix file")->required();
  descend->add_option("--witness", witness_path, "Z+[G] witness file")->required();
  descend->add_option("--subgroup", subgroup_csv, "comma-separated element indices of H")
      ->required();

  auto* weight = app.add_subcommand("weight", "Weight group of an irreducible Z+[G] matrix");
  weight->add_option("input", input, "matrix file or - for stdin");
  weight->add_option("--base", base_label, "base vertex label (default: first row)");

  auto* posmove = app.add_subcommand("posmove", "Elementary positive move on a Z+[G] matrix");
  posmove->add_option("input", input, "matrix file or - for stdin");
  posmove->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  posmove->add_option("--i", i_label, "row label i")->required();
  posmove->add_option("--j", j_label, "column label j")->required();
  posmove->add_option("--g", g_index, "group element index with positive coefficient at (i,j)")
      ->required();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in verification suite");
  selftest->add_flag("--quick", selftest_options.quick, "reduced battery sizes");
  selftest->add_option("--data", selftest_data, "directory of fixture JSON files to load");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return kExitInputError;
  }

  try {
    if (augment->parsed()) return cmd_augment(input);
    if (extend->parsed()) return cmd_extend(input);
    if (inert->parsed()) return cmd_inert(input);
    if (zeta->parsed()) return cmd_zeta_equal(input);
    if (quotient->parsed()) return cmd_quotient(input);
    if (census_cmd->parsed()) return cmd_census(input, horizon, format, brute, budget);
    if (kimroush->parsed()) return cmd_kimroush(input, prime, horizon, mode);
    if (verify->parsed()) return cmd_verify_se(a_path, b_path, witness_path);
    if (se_aug_ext->parsed()) return cmd_se_aug_ext(input);
    if (lift->parsed()) return cmd_lift_se(b_path, c_path, witness_path);
    if (descend->parsed()) return cmd_descend_se(a_path, b_path, witness_path, subgroup_csv);
    if (weight->parsed()) return cmd_weight(input, base_label);
    if (posmove->parsed()) return cmd_posmove(input, side, i_label, j_label, g_index);
    if (selftest->parsed()) {
      if (!selftest_data.empty()) selftest_options.data_dir = selftest_data;
      return gsft_cli::run_selftest(selftest_options) == 0 ? kExitTrue : kExitFalse;
    }
  } catch (const InputError& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return kExitInputError;
  } catch (const InternalError& e) {
    std::cout << Json{{"error", e.what()}, {"kind", "internal invariant violation"}}.dump() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}
