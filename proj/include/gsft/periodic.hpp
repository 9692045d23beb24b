#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsft/matrix.hpp"
#include "gsft/structure.hpp"

namespace gsft {

/// Periodic-point counts of an edge shift up to a horizon:
///   per_count(n)   = points of period n                 = tr(A^n)
///   least_points(n) = points of least period n (Moebius inversion)
///   least_orbits(n) = orbits of least period n          = least_points(n)/n
struct PeriodicCensus {
  int horizon = 0;
  std::vector<Int> per_counts;           // index n-1
  std::vector<Int> least_period_points;  // index n-1
  std::vector<Int> least_period_orbits;  // index n-1

  const Int& per_count(int n) const { return per_counts.at(n - 1); }
  const Int& least_points(int n) const { return least_period_points.at(n - 1); }
  const Int& least_orbits(int n) const { return least_period_orbits.at(n - 1); }

  friend bool operator==(const PeriodicCensus& a, const PeriodicCensus& b) {
    return a.horizon == b.horizon && a.per_counts == b.per_counts &&
           a.least_period_points == b.least_period_points &&
           a.least_period_orbits == b.least_period_orbits;
  }
};

namespace detail {

inline int moebius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

/// Derives least-period counts from per-period counts and checks the three
/// arithmetic consistency facts any genuine census satisfies.
inline PeriodicCensus finish_census(int horizon, std::vector<Int> per) {
  PeriodicCensus out;
  out.horizon = horizon;
  out.per_counts = std::move(per);
  out.least_period_points.resize(horizon);
  out.least_period_orbits.resize(horizon);
  for (int n = 1; n <= horizon; ++n) {
    Int o = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) o += Int(moebius(n / d)) * out.per_counts[d - 1];
    ensure(o >= 0, "least-period count must be non-negative");
    ensure(o % n == 0, "least-period count must be divisible by the period");
    out.least_period_points[n - 1] = o;
    out.least_period_orbits[n - 1] = o / n;
  }
  for (int n = 1; n <= horizon; ++n) {
    Int total = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) total += out.least_period_points[d - 1];
    ensure(total == out.per_counts[n - 1], "least-period counts must resum to per-period counts");
  }
  return out;
}

inline void require_census_input(const IntMatrix& a, int horizon) {
  require(a.is_square(), "census: matrix must be square");
  require(horizon >= 1, "census: horizon must be at least 1");
  require(is_nonnegative(a), "census: matrix must be non-negative");
  require(structure_flags(a).essential,
          "census: matrix is not essential, its edge shift is ill-defined");
}

}  // namespace detail

/// Census from matrix powers: per-period counts are traces of A^n.
inline PeriodicCensus census(const IntMatrix& a, int horizon) {
  detail::require_census_input(a, horizon);
  std::vector<Int> per(horizon);
  IntMatrix power = IntMatrix::identity(a.row_labels(), Int(0));
  for (int n = 1; n <= horizon; ++n) {
    power = power * a;
    per[n - 1] = trace(power);
  }
  return detail::finish_census(horizon, std::move(per));
}

/// Independent oracle: enumerates closed edge paths explicitly, one edge
/// word at a time, and classifies each word by its least cyclic period.
/// Never touches matrix powers. Cost is the total number of enumeration
/// steps and is capped by `budget`.
inline PeriodicCensus brute_force_census(const IntMatrix& a, int horizon,
                                         std::uint64_t budget = 10'000'000) {
  detail::require_census_input(a, horizon);
  const int n = static_cast<int>(a.nrows());
  struct Edge {
    int from, to;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out_edges(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      require(a.at(i, j) <= 1'000'000, "brute_force_census: entry too large to enumerate");
      for (Int k = 0; k < a.at(i, j); ++k) {
        out_edges[i].push_back(static_cast<int>(edges.size()));
        edges.push_back({i, j});
      }
    }

  std::vector<Int> per(horizon, Int(0));
  std::vector<Int> least(horizon, Int(0));
  std::vector<int> word;
  std::uint64_t steps = 0;

  auto least_cyclic_period = [&](const std::vector<int>& w) {
    const int len = static_cast<int>(w.size());
    for (int d = 1; d <= len; ++d) {
      if (len % d) continue;
      bool ok = true;
      for (int i = 0; i < len && ok; ++i) ok = (w[i] == w[(i + d) % len]);
      if (ok) return d;
    }
    return len;
  };

  for (int target = 1; target <= horizon; ++target) {
    word.assign(target, -1);
    // Depth-first over edge words e_0..e_{target-1} with matching endpoints,
    // closing up at the end.
    auto rec = [&](auto&& self, int pos) -> void {
      if (++steps > budget) throw InputError("brute_force_census: enumeration budget exceeded");
      if (pos == target) {
        if (edges[word[target - 1]].to == edges[word[0]].from) {
          per[target - 1] += 1;
          if (least_cyclic_period(word) == target) least[target - 1] += 1;
        }
        return;
      }
      if (pos == 0) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
          word[0] = static_cast<int>(e);
          self(self, 1);
        }
      } else {
        for (int e : out_edges[edges[word[pos - 1]].to]) {
          word[pos] = e;
          self(self, pos + 1);
        }
      }
    };
    rec(rec, 0);
  }

  PeriodicCensus out = detail::finish_census(horizon, std::move(per));
  ensure(out.least_period_points == least,
         "direct least-period classification disagrees with Moebius inversion");
  return out;
}

// ---------------------------------------------------------------------------
// Existence condition for inert Z/pZ extensions
// ---------------------------------------------------------------------------

enum class KimRoushMode {
  OrbitsInteger,   // use least-period orbit counts; sum must be an integer in {0..orbits(n)}
  PointsInterval,  // use least-period point counts; sum must lie in the real interval [0, points(n)]
};

struct KimRoushTerm {
  int n = 0;
  Rational sum;   // sum over k of (p-1)/p^k * count(n/p^k)
  Int bound;      // count(n) in the chosen mode
  bool integral = false;
  bool within = false;
  bool pass = false;
};

struct KimRoushVerdict {
  bool pass = false;
  KimRoushMode mode = KimRoushMode::OrbitsInteger;
  int prime = 0;
  int horizon = 0;
  std::vector<KimRoushTerm> terms;  // one per n <= horizon with p | n
  std::optional<KimRoushTerm> first_failure;
  PeriodicCensus census;  // reports always carry both point and orbit counts
};

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Necessary condition, up to the horizon, for a primitive matrix to admit
/// an inert Z/pZ extension: for every n divisible by p the weighted sum of
/// least-period counts at n/p^k must land in {0..count(n)}. The default mode
/// evaluates it on orbit counts with integrality required; the as-written
/// mode evaluates it on point counts against the real interval.
inline KimRoushVerdict kim_roush_condition(const IntMatrix& a, int p, int horizon,
                                           KimRoushMode mode = KimRoushMode::OrbitsInteger) {
  require(is_prime(p), "kim_roush_condition: p must be prime");
  require(horizon >= 1, "kim_roush_condition: horizon must be at least 1");
  require(structure_flags(a).primitive, "kim_roush_condition: matrix must be primitive");

  KimRoushVerdict verdict;
  verdict.mode = mode;
  verdict.prime = p;
  verdict.horizon = horizon;
  verdict.census = census(a, horizon);
  verdict.pass = true;

  const auto& counts = (mode == KimRoushMode::OrbitsInteger)
                           ? verdict.census.least_period_orbits
                           : verdict.census.least_period_points;
  for (int n = p; n <= horizon; n += p) {
    KimRoushTerm term;
    term.n = n;
    Int pk = 1;
    for (int m = n; m % p == 0; m /= p) {
      pk *= p;
      term.sum += Rational(Int(p - 1) * counts[n / static_cast<int>(pk) - 1], pk);
    }
    term.bound = counts[n - 1];
    term.integral = (denominator(term.sum) == 1);
    term.within = (term.sum >= 0 && term.sum <= Rational(term.bound));
    term.pass = (mode == KimRoushMode::OrbitsInteger) ? (term.integral && term.within) : term.within;
    if (!term.pass && verdict.pass) {
      verdict.pass = false;
      verdict.first_failure = term;
    }
    verdict.terms.push_back(std::move(term));
  }
  return verdict;
}

}  // namespace gsft
