#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finspec/caps.hpp"

namespace finspec {

using PointSet = boost::dynamic_bitset<>;

/// Canonical order on point sets: cardinality, then lexicographic member list.
bool pointset_less(const PointSet& a, const PointSet& b);

std::vector<std::size_t> pointset_members(const PointSet& s);

/// A finite space presented by a closed subbase.  closed_sets is the family
/// the subbase generates: the fixpoint of {subbase, whole space, empty set}
/// under pairwise union and pairwise intersection, which on a finite carrier
/// is exactly the closed-set family of the generated topology.  The empty set
/// is adjoined unconditionally and the whole space arises as the empty
/// intersection.  Immutable once built.
struct FiniteSpace {
  std::size_t point_count = 0;
  std::vector<PointSet> subbase;      // deduplicated, canonical order
  std::vector<PointSet> closed_sets;  // generated family, canonical order

  PointSet whole() const {
    PointSet s(point_count);
    s.set();
    return s;
  }
  PointSet empty() const { return PointSet(point_count); }
  bool is_closed(const PointSet& s) const;
};

FiniteSpace make_space(std::size_t point_count, std::vector<PointSet> subbase,
                       const Caps& caps = {});

/// Intersection of all closed sets containing S.
PointSet closure(const FiniteSpace& space, const PointSet& s);

struct IrreducibilityResult {
  bool irreducible = false;
  /// Reducing decomposition K = K1 u K2 with K1, K2 proper closed subsets.
  std::optional<std::pair<PointSet, PointSet>> witness;
};

/// K must be closed.  Witness search runs over pairs of maximal proper
/// closed subsets of K; a reducing pair exists iff a maximal one does.
IrreducibilityResult is_irreducible(const FiniteSpace& space, const PointSet& k);

/// The Alexander-subbase argument made concrete: every subfamily of subbasic
/// closed sets with empty intersection contains an empty-intersection
/// subfamily of size <= minimal_witness_size.  Computed as the largest
/// inclusion-minimal empty-intersection subfamily; 0 when no subfamily has
/// empty intersection (vacuous).  Empty subbase members are skipped.
struct FipResult {
  bool vacuous = true;
  std::size_t minimal_witness_size = 0;
  std::vector<std::size_t> witness;  // subbase indices of one largest minimal family
};

FipResult subbase_fip_check(const FiniteSpace& space, const Caps& caps = {});

struct TopologyReport {
  bool t0 = false;
  bool connected = false;
  bool sober = false;
  bool spectral = false;
  /// Route (a): quasi-compactness via the subbase scan plus the
  /// quasi-compact-open-basis facts checked on the generated family.
  bool spectral_direct = false;
  /// Route (b): the finite characterization, T0 and sober.
  bool spectral_finite = false;
  bool routes_agree = false;

  std::vector<PointSet> irreducible_closed_sets;          // canonical order
  std::vector<std::optional<std::size_t>> generic_point;  // per closed_sets[i]

  std::optional<std::pair<std::size_t, std::size_t>> t0_witness;  // equal-closure pair
  std::optional<PointSet> clopen_witness;       // proper nonempty clopen set
  std::optional<PointSet> sober_witness;        // irreducible closed set without
                                                // a unique generic point
  FipResult fip;
};

TopologyReport report(const FiniteSpace& space, const Caps& caps = {});

/// Specialization preorder x ~> y iff y in Cl{x}, as DOT (reflexive edges
/// omitted).
std::string specialization_dot(const FiniteSpace& space,
                               const std::vector<std::string>& point_labels);

/// {"points":[...],"subbase":[[...]],"closed_sets":[[...]],"report":{...}}.
std::string space_to_json(const FiniteSpace& space,
                          const std::vector<std::string>& point_labels,
                          const TopologyReport* rep = nullptr);

}  // namespace finspec
