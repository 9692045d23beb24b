#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gsft/equivalence.hpp"
#include "gsft/extension.hpp"
#include "gsft/flow.hpp"
#include "gsft/group_ring_matrix.hpp"
#include "gsft/inertness.hpp"
#include "gsft/periodic.hpp"

namespace gsft {

// Insertion-ordered JSON keeps emitted key order deterministic.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Scalars and labels
// ---------------------------------------------------------------------------

/// Big integers are emitted as JSON numbers when they fit in 64 bits and as
/// decimal strings beyond that; both forms are accepted on input.
inline Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Int int_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": malformed integer string '" + j.get<std::string>() + "'");
    }
  }
  throw InputError(std::string(what) + ": expected an integer (number or decimal string)");
}

inline Json label_to_json(const Label& l) {
  auto atom = [](const LabelAtom& a) -> Json {
    if (std::holds_alternative<std::int64_t>(a)) return std::get<std::int64_t>(a);
    return std::get<std::string>(a);
  };
  if (l.atoms().size() == 1) return atom(l.atoms()[0]);
  Json arr = Json::array();
  for (const auto& a : l.atoms()) arr.push_back(atom(a));
  return arr;
}

inline Label label_from_json(const Json& j) {
  auto atom = [](const Json& v) -> LabelAtom {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) return v.get<std::string>();
    throw InputError("label atom must be an integer or a string");
  };
  if (j.is_array()) {
    std::vector<LabelAtom> atoms;
    for (const auto& v : j) atoms.push_back(atom(v));
    require(!atoms.empty(), "label may not be an empty array");
    return Label(std::move(atoms));
  }
  return Label(std::vector<LabelAtom>{atom(j)});
}

inline Json labels_to_json(const std::vector<Label>& ls) {
  Json arr = Json::array();
  for (const auto& l : ls) arr.push_back(label_to_json(l));
  return arr;
}

inline std::vector<Label> labels_from_json(const Json& j, const char* what) {
  require(j.is_array(), std::string(what) + ": expected an array of labels");
  std::vector<Label> out;
  for (const auto& v : j) out.push_back(label_from_json(v));
  return out;
}

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

inline Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["type"] = "table";
  j["table"] = g.table();
  return j;
}

inline GroupPtr group_from_json(const Json& j) {
  require(j.is_object() && j.contains("type"), "group spec: expected an object with a 'type' key");
  const std::string type = j.at("type").get<std::string>();
  if (type == "cyclic") {
    require(j.contains("order") && j.at("order").is_number_integer(),
            "group spec: cyclic group needs an integer 'order'");
    return FiniteGroup::cyclic(j.at("order").get<int>());
  }
  if (type == "table") {
    require(j.contains("table") && j.at("table").is_array(), "group spec: 'table' must be an array");
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) {
      require(row.is_array(), "group spec: table rows must be arrays");
      table.push_back(row.get<std::vector<int>>());
    }
    return FiniteGroup::from_table(std::move(table));
  }
  if (type == "product") {
    require(j.contains("factors") && j.at("factors").is_array() && j.at("factors").size() >= 1,
            "group spec: product needs a non-empty 'factors' array");
    GroupPtr acc;
    for (const auto& f : j.at("factors")) {
      GroupPtr g = group_from_json(f);
      acc = acc ? FiniteGroup::direct_product(acc, g) : g;
    }
    return acc;
  }
  throw InputError("group spec: unknown type '" + type + "'");
}

// ---------------------------------------------------------------------------
// Group ring elements and matrices
// ---------------------------------------------------------------------------

/// Sparse object form {"<element index>": coefficient, ...}; omitted keys
/// are zero.
inline Json group_ring_element_to_json(const GroupRingElement& x) {
  Json j = Json::object();
  for (int k = 0; k < x.order(); ++k)
    if (x.coeff(k) != 0) j[std::to_string(k)] = int_to_json(x.coeff(k));
  return j;
}

inline GroupRingElement group_ring_element_from_json(const Json& j, const GroupPtr& group) {
  require(j.is_object(), "group ring element: expected an object of index -> coefficient");
  GroupRingElement x(group);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int index;
    try {
      std::size_t used = 0;
      index = std::stoi(it.key(), &used);
      require(used == it.key().size(), "");
    } catch (const std::exception&) {
      throw InputError("group ring element: key '" + it.key() + "' is not an element index");
    }
    require(index >= 0 && index < group->order(),
            "group ring element: index " + it.key() + " out of range for group of order " +
                std::to_string(group->order()));
    x.set_coeff(index, int_from_json(it.value(), "group ring coefficient"));
  }
  return x;
}

inline Json int_matrix_to_json(const IntMatrix& m) {
  Json j;
  j["rows"] = labels_to_json(m.row_labels());
  j["cols"] = labels_to_json(m.col_labels());
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.ncols(); ++k) row.push_back(int_to_json(m.at(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline IntMatrix int_matrix_from_json(const Json& j) {
  require(j.is_object() && j.contains("entries"), "matrix: expected an object with 'entries'");
  require(j.at("entries").is_array(), "matrix: 'entries' must be an array of rows");
  std::size_t nrows = j.at("entries").size();
  std::size_t ncols = nrows ? j.at("entries").at(0).size() : 0;
  std::vector<Label> rows = j.contains("rows") ? labels_from_json(j.at("rows"), "matrix rows")
                                               : default_labels(nrows);
  std::vector<Label> cols = j.contains("cols") ? labels_from_json(j.at("cols"), "matrix cols")
                                               : default_labels(ncols);
  IntMatrix m(std::move(rows), std::move(cols), Int(0));
  require(j.at("entries").size() == m.nrows(), "matrix: entry row count does not match labels");
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    const auto& row = j.at("entries").at(i);
    require(row.is_array() && row.size() == m.ncols(),
            "matrix: entry column count does not match labels");
    for (std::size_t k = 0; k < m.ncols(); ++k)
      m.at(i, k) = int_from_json(row.at(k), "matrix entry");
  }
  return m;
}

inline Json group_ring_matrix_to_json(const GroupRingMatrix& m) {
  Json j;
  j["rows"] = labels_to_json(m.row_labels());
  j["cols"] = labels_to_json(m.col_labels());
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.ncols(); ++k)
      row.push_back(group_ring_element_to_json(m.at(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline GroupRingMatrix group_ring_matrix_from_json(const Json& j, const GroupPtr& group) {
  require(j.is_object() && j.contains("entries"), "matrix: expected an object with 'entries'");
  require(j.at("entries").is_array(), "matrix: 'entries' must be an array of rows");
  std::size_t nrows = j.at("entries").size();
  std::size_t ncols = nrows ? j.at("entries").at(0).size() : 0;
  std::vector<Label> rows = j.contains("rows") ? labels_from_json(j.at("rows"), "matrix rows")
                                               : default_labels(nrows);
  std::vector<Label> cols = j.contains("cols") ? labels_from_json(j.at("cols"), "matrix cols")
                                               : default_labels(ncols);
  GroupRingMatrix m(std::move(rows), std::move(cols), GroupRingElement::zero(group));
  require(j.at("entries").size() == m.nrows(), "matrix: entry row count does not match labels");
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    const auto& row = j.at("entries").at(i);
    require(row.is_array() && row.size() == m.ncols(),
            "matrix: entry column count does not match labels");
    for (std::size_t k = 0; k < m.ncols(); ++k)
      m.at(i, k) = group_ring_element_from_json(row.at(k), group);
  }
  return m;
}

/// Top-level file form of a matrix over Z+[G]: {"group": ..., "matrix": ...}.
inline Json group_ring_matrix_file_to_json(const GroupRingMatrix& m) {
  Json j;
  j["group"] = group_to_json(*group_of(m));
  j["matrix"] = group_ring_matrix_to_json(m);
  return j;
}

inline GroupRingMatrix group_ring_matrix_file_from_json(const Json& j) {
  require(j.is_object() && j.contains("group") && j.contains("matrix"),
          "expected an object with 'group' and 'matrix'");
  GroupPtr group = group_from_json(j.at("group"));
  return group_ring_matrix_from_json(j.at("matrix"), group);
}

// ---------------------------------------------------------------------------
// Graph actions
// ---------------------------------------------------------------------------

namespace detail {

/// Per-element permutations may be given for generators only; the rest are
/// derived by composing along the multiplication table.
inline std::vector<std::vector<int>> close_permutations(
    const FiniteGroup& g, const std::vector<std::pair<int, std::vector<int>>>& given,
    std::size_t domain, const char* what) {
  std::vector<std::vector<int>> perm(g.order());
  std::vector<int> id(domain);
  for (std::size_t v = 0; v < domain; ++v) id[v] = static_cast<int>(v);
  perm[FiniteGroup::kIdentity] = id;
  for (const auto& [idx, p] : given) {
    require(idx >= 0 && idx < g.order(),
            std::string(what) + ": element index " + std::to_string(idx) + " out of range");
    require(p.size() == domain, std::string(what) + ": permutation for element " +
                                    std::to_string(idx) + " has wrong length");
    if (!perm[idx].empty())
      require(perm[idx] == p, std::string(what) + ": inconsistent permutation for element " +
                                  std::to_string(idx));
    perm[idx] = p;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < g.order(); ++x) {
      if (perm[x].empty()) continue;
      for (int y = 0; y < g.order(); ++y) {
        if (perm[y].empty()) continue;
        int xy = g.multiply(x, y);
        std::vector<int> comp(domain);
        for (std::size_t v = 0; v < domain; ++v) comp[v] = perm[x][perm[y][v]];
        if (perm[xy].empty()) {
          perm[xy] = std::move(comp);
          grew = true;
        } else {
          require(perm[xy] == comp,
                  std::string(what) + ": permutations are inconsistent with the group table");
        }
      }
    }
  }
  for (int x = 0; x < g.order(); ++x)
    require(!perm[x].empty(), std::string(what) + ": given permutations do not determine element " +
                                  std::to_string(x) + "; supply a generating set");
  return perm;
}

inline std::vector<std::pair<int, std::vector<int>>> perm_map_from_json(const Json& j,
                                                                        const char* what) {
  require(j.is_object(), std::string(what) + ": expected an object of element index -> permutation");
  std::vector<std::pair<int, std::vector<int>>> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int idx;
    try {
      idx = std::stoi(it.key());
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": key '" + it.key() + "' is not an element index");
    }
    require(it.value().is_array(), std::string(what) + ": permutation must be an array");
    out.emplace_back(idx, it.value().get<std::vector<int>>());
  }
  return out;
}

}  // namespace detail

inline Json graph_action_to_json(const GraphAction& a) {
  Json j;
  j["group"] = group_to_json(*a.group());
  j["adjacency"] = int_matrix_to_json(a.adjacency());
  Json vact = Json::object();
  for (int g = 1; g < a.group()->order(); ++g) vact[std::to_string(g)] = a.vertex_perms()[g];
  j["vertex_action"] = std::move(vact);
  Json eact = Json::object();
  for (int g = 1; g < a.group()->order(); ++g) eact[std::to_string(g)] = a.edge_perms()[g];
  j["edge_action"] = std::move(eact);
  return j;
}

inline GraphAction graph_action_from_json(const Json& j) {
  require(j.is_object() && j.contains("group") && j.contains("adjacency") &&
              j.contains("vertex_action"),
          "graph action: expected 'group', 'adjacency' and 'vertex_action'");
  GroupPtr group = group_from_json(j.at("group"));
  IntMatrix adj = int_matrix_from_json(j.at("adjacency"));
  auto vperm = detail::close_permutations(
      *group, detail::perm_map_from_json(j.at("vertex_action"), "vertex_action"), adj.nrows(),
      "vertex_action");
  std::optional<std::vector<std::vector<int>>> eperm;
  if (j.contains("edge_action")) {
    Int edge_count = 0;
    for (std::size_t i = 0; i < adj.nrows(); ++i)
      for (std::size_t k = 0; k < adj.ncols(); ++k) edge_count += adj.at(i, k);
    eperm = detail::close_permutations(
        *group, detail::perm_map_from_json(j.at("edge_action"), "edge_action"),
        static_cast<std::size_t>(edge_count), "edge_action");
  }
  return make_graph_action(std::move(adj), std::move(group), std::move(vperm), std::move(eperm));
}

// ---------------------------------------------------------------------------
// Witnesses and reports
// ---------------------------------------------------------------------------

inline Json witness_to_json(const IntSEWitness& w) {
  Json j;
  j["domain"] = "Z+";
  j["lag"] = w.lag;
  j["R"] = int_matrix_to_json(w.r);
  j["S"] = int_matrix_to_json(w.s);
  return j;
}

inline Json witness_to_json(const GroupRingSEWitness& w) {
  Json j;
  j["domain"] = "Z+[G]";
  j["group"] = group_to_json(*group_of(w.r));
  j["lag"] = w.lag;
  j["R"] = group_ring_matrix_to_json(w.r);
  j["S"] = group_ring_matrix_to_json(w.s);
  return j;
}

inline std::string witness_domain(const Json& j) {
  require(j.is_object() && j.contains("domain"), "witness: expected an object with 'domain'");
  const std::string d = j.at("domain").get<std::string>();
  require(d == "Z+" || d == "Z+[G]", "witness: domain must be 'Z+' or 'Z+[G]'");
  return d;
}

inline IntSEWitness int_witness_from_json(const Json& j) {
  require(witness_domain(j) == "Z+", "witness: expected domain Z+");
  require(j.contains("R") && j.contains("S") && j.contains("lag"),
          "witness: expected 'R', 'S' and 'lag'");
  return IntSEWitness{int_matrix_from_json(j.at("R")), int_matrix_from_json(j.at("S")),
                      j.at("lag").get<int>()};
}

inline GroupRingSEWitness group_ring_witness_from_json(const Json& j, GroupPtr group = nullptr) {
  require(witness_domain(j) == "Z+[G]", "witness: expected domain Z+[G]");
  require(j.contains("R") && j.contains("S") && j.contains("lag"),
          "witness: expected 'R', 'S' and 'lag'");
  if (!group) {
    require(j.contains("group"), "witness over Z+[G]: missing 'group'");
    group = group_from_json(j.at("group"));
  }
  return GroupRingSEWitness{group_ring_matrix_from_json(j.at("R"), group),
                            group_ring_matrix_from_json(j.at("S"), group), j.at("lag").get<int>()};
}

inline Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  j["valid"] = r.valid;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["equation"] = c.name;
    cj["holds"] = c.holds;
    if (!c.holds) cj["first_mismatch"] = c.first_mismatch;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

inline Json certificate_to_json(const InertnessCertificate& c) {
  Json j;
  j["inert"] = c.inert;
  j["exponent"] = c.exponent;
  if (c.unit_multiple) j["unit_multiple"] = int_matrix_to_json(*c.unit_multiple);
  if (c.violation) {
    Json v;
    v["g"] = c.violation->g.index;
    v["row"] = label_to_json(c.violation->row);
    v["col"] = label_to_json(c.violation->col);
    v["entry"] = group_ring_element_to_json(c.violation->entry);
    j["violation"] = std::move(v);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Census and Kim-Roush reports
// ---------------------------------------------------------------------------

inline Json census_to_json(const PeriodicCensus& c) {
  Json j;
  j["horizon"] = c.horizon;
  Json rows = Json::array();
  for (int n = 1; n <= c.horizon; ++n) {
    Json row;
    row["n"] = n;
    row["per_count"] = int_to_json(c.per_count(n));
    row["least_period_points"] = int_to_json(c.least_points(n));
    row["least_period_orbits"] = int_to_json(c.least_orbits(n));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline std::string census_to_csv(const PeriodicCensus& c) {
  std::string out = "n,per_count,least_period_points,least_period_orbits\n";
  for (int n = 1; n <= c.horizon; ++n) {
    out += std::to_string(n) + "," + c.per_count(n).str() + "," + c.least_points(n).str() + "," +
           c.least_orbits(n).str() + "\n";
  }
  return out;
}

inline std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Json kim_roush_to_json(const KimRoushVerdict& v) {
  Json j;
  j["pass"] = v.pass;
  j["mode"] = (v.mode == KimRoushMode::OrbitsInteger) ? "orbits" : "points";
  j["p"] = v.prime;
  j["horizon"] = v.horizon;
  auto term_json = [](const KimRoushTerm& t) {
    Json tj;
    tj["n"] = t.n;
    tj["sum"] = rational_str(t.sum);
    tj["bound"] = int_to_json(t.bound);
    tj["integral"] = t.integral;
    tj["within"] = t.within;
    tj["pass"] = t.pass;
    return tj;
  };
  if (v.first_failure) j["first_failure"] = term_json(*v.first_failure);
  Json terms = Json::array();
  for (const auto& t : v.terms) terms.push_back(term_json(t));
  j["terms"] = std::move(terms);
  j["census"] = census_to_json(v.census);
  return j;
}

// ---------------------------------------------------------------------------
// Quotients, weights, descent
// ---------------------------------------------------------------------------

inline Json quotient_to_json(const QuotientPresentation& q, const GraphAction& input) {
  Json j;
  j["matrix"] = group_ring_matrix_file_to_json(q.matrix);
  Json reps = Json::array();
  for (int rep : q.orbit_reps) reps.push_back(label_to_json(input.adjacency().row_labels()[rep]));
  j["orbit_representatives"] = std::move(reps);
  Json relabel = Json::array();
  for (int v = 0; v < input.num_vertices(); ++v) {
    Json e;
    e["vertex"] = label_to_json(input.adjacency().row_labels()[v]);
    e["representative"] = label_to_json(
        input.adjacency().row_labels()[q.orbit_reps[q.vertex_to_pair[v].first]]);
    e["element"] = q.vertex_to_pair[v].second;
    relabel.push_back(std::move(e));
  }
  j["relabeling"] = std::move(relabel);
  return j;
}

inline Json weight_class_to_json(const WeightClass& w, const GroupRingMatrix& a) {
  Json j;
  j["base"] = label_to_json(a.row_labels()[w.base_index]);
  j["subgroup"] = w.subgroup;
  j["order"] = w.subgroup.size();
  j["full_group"] = (static_cast<int>(w.subgroup.size()) == group_of(a)->order());
  return j;
}

inline Json descent_to_json(const SubgroupDescent& d) {
  Json j;
  j["g"] = d.g.index;
  j["subgroup_elements"] = d.subgroup.to_ambient;
  j["subgroup"] = group_to_json(*d.subgroup.group);
  j["a_h"] = group_ring_matrix_to_json(d.a_h);
  j["b_conjugated_h"] = group_ring_matrix_to_json(d.b_conj_h);
  j["witness"] = witness_to_json(d.witness);
  return j;
}

}  // namespace gsft
