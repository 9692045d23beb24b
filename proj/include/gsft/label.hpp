#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gsft {

/// One component of a row/column label: an integer or a name.
using LabelAtom = std::variant<std::int64_t, std::string>;

/// Opaque index-set token for matrix rows and columns. A label is a tuple of
/// atoms; plain vertex labels have one atom, labels produced by Kronecker
/// products or extensions are tuples like (vertex, group element). Ordering
/// is lexicographic, so pairing two ordered index sets yields the
/// lexicographic order on pairs.
class Label {
 public:
  Label() = default;
  explicit Label(std::int64_t v) : atoms_{LabelAtom(v)} {}
  explicit Label(std::string v) : atoms_{LabelAtom(std::move(v))} {}
  explicit Label(std::vector<LabelAtom> atoms) : atoms_(std::move(atoms)) {}

  static Label pair(const Label& a, const Label& b) {
    std::vector<LabelAtom> atoms = a.atoms_;
    atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
    return Label(std::move(atoms));
  }

  const std::vector<LabelAtom>& atoms() const { return atoms_; }

  friend bool operator==(const Label& x, const Label& y) { return x.atoms_ == y.atoms_; }
  friend bool operator!=(const Label& x, const Label& y) { return !(x == y); }
  friend bool operator<(const Label& x, const Label& y) { return x.atoms_ < y.atoms_; }

  std::string str() const {
    std::string out;
    if (atoms_.size() != 1) out += "(";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i) out += ",";
      if (std::holds_alternative<std::int64_t>(atoms_[i]))
        out += std::to_string(std::get<std::int64_t>(atoms_[i]));
      else
        out += std::get<std::string>(atoms_[i]);
    }
    if (atoms_.size() != 1) out += ")";
    return out;
  }

 private:
  std::vector<LabelAtom> atoms_;
};

/// 1-based integer labels 1..n, the default index set for anonymous vertices.
inline std::vector<Label> default_labels(std::size_t n) {
  std::vector<Label> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(static_cast<std::int64_t>(i + 1));
  return out;
}

}  // namespace gsft
