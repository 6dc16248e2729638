#pragma once

// Independent oracles for the enumeration-heavy operations.  Each one takes
// the dumbest correct route (subset filtering, candidate filtering, raw
// power sums) precisely so it shares no code path with the implementation it
// checks.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "finspec/ideal.hpp"
#include "finspec/ring.hpp"
#include "finspec/topology.hpp"

namespace oracles {

using finspec::Elem;
using finspec::ElemSet;
using finspec::FiniteRing;
using finspec::PointSet;

/// All ideals by filtering every one of the 2^|A| subsets; |A| <= 20 or so.
inline std::vector<ElemSet> brute_force_ideals(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  std::vector<ElemSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ElemSet s(n);
    for (std::size_t b = 0; b < n; ++b)
      if ((mask >> b) & 1) s.set(b);
    if (!s.test(ring.zero())) continue;
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      if (!s.test(a)) continue;
      for (Elem b = 0; b < n && ok; ++b) {
        if (s.test(b) && !s.test(ring.sub(a, b))) ok = false;
        if (!s.test(ring.mul(b, a))) ok = false;
      }
    }
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

/// Closed sets of the topology generated by a closed subbase, from scratch:
/// a candidate C is closed iff it equals the intersection of every finite
/// union of subbasic sets containing it (the empty union makes the empty set
/// closed, the empty intersection makes the whole space closed).
inline std::vector<PointSet> brute_force_closed_sets(
    std::size_t n_points, const std::vector<PointSet>& subbase) {
  std::vector<PointSet> unions;
  {
    std::set<PointSet> dedup;
    const std::size_t k = subbase.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      PointSet u(n_points);
      for (std::size_t b = 0; b < k; ++b)
        if ((mask >> b) & 1) u |= subbase[b];
      dedup.insert(std::move(u));
    }
    unions.assign(dedup.begin(), dedup.end());
  }
  std::vector<PointSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n_points); ++mask) {
    PointSet c(n_points);
    for (std::size_t b = 0; b < n_points; ++b)
      if ((mask >> b) & 1) c.set(b);
    PointSet inter(n_points);
    inter.set();  // empty intersection = whole space
    for (const PointSet& u : unions)
      if (c.is_subset_of(u)) inter &= u;
    if (inter == c) out.push_back(c);
  }
  return out;
}

/// Exhaustive search for a ring isomorphism by backtracking directly on the
/// element map (independent of finspec::all_homs).
inline bool isomorphic(const FiniteRing& a, const FiniteRing& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<std::optional<Elem>> f(n);
  std::vector<bool> used(n, false);
  f[a.zero()] = b.zero();
  used[b.zero()] = true;
  if (a.one() != a.zero()) {
    if (b.one() == b.zero()) return false;
    f[a.one()] = b.one();
    used[b.one()] = true;
  }

  auto consistent = [&](Elem x) {
    for (Elem y = 0; y < n; ++y) {
      if (!f[y]) continue;
      const Elem s = a.add(x, y), p = a.mul(x, y);
      if (f[s] && *f[s] != b.add(*f[x], *f[y])) return false;
      if (f[p] && *f[p] != b.mul(*f[x], *f[y])) return false;
      if (!f[s] && used[b.add(*f[x], *f[y])]) {
        // the needed image is taken by another element; a+b must map there
        const Elem img = b.add(*f[x], *f[y]);
        for (Elem z = 0; z < n; ++z)
          if (f[z] && *f[z] == img && z != s) return false;
      }
    }
    return true;
  };

  std::function<bool()> rec = [&]() -> bool {
    Elem next = n;
    for (Elem x = 0; x < n; ++x)
      if (!f[x]) {
        next = x;
        break;
      }
    if (next == n) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (*f[a.add(x, y)] != b.add(*f[x], *f[y])) return false;
          if (*f[a.mul(x, y)] != b.mul(*f[x], *f[y])) return false;
        }
      return true;
    }
    for (Elem img = 0; img < n; ++img) {
      if (used[img]) continue;
      f[next] = img;
      used[img] = true;
      if (consistent(next) && rec()) return true;
      f[next] = std::nullopt;
      used[img] = false;
    }
    return false;
  };
  return rec();
}

/// Power-sum evaluation sum c_i a^i, deliberately not Horner.
inline Elem power_sum_eval(const FiniteRing& ring, const std::vector<Elem>& coeffs,
                           Elem a) {
  Elem acc = ring.zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Elem term = coeffs[i];
    for (std::size_t k = 0; k < i; ++k) term = ring.mul(term, a);
    acc = ring.add(acc, term);
  }
  return acc;
}

}  // namespace oracles
