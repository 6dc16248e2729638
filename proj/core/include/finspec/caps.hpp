#pragma once

#include <cstddef>

namespace finspec {

/// Resource caps and quantifier bounds for enumeration-heavy operations.
/// Every field can be overridden from the CLI (--caps) or the environment
/// (FINSPEC_* variables); library callers pass a value explicitly.
struct Caps {
  /// Largest ring the constructors will build.
  std::size_t max_ring_size = 256;

  /// Largest closed-set family the topology generator will materialize.
  std::size_t max_closed_sets = std::size_t{1} << 18;

  /// Element-subset size bound for quantified identities (V(S) = V(<S>), ...).
  std::size_t subset_bound = 3;

  /// Power-set quantifications over the point set run exhaustively up to this
  /// many points; above it a deterministic structured sample is used.
  std::size_t exhaustive_point_limit = 6;

  /// Subbase size limit for the exhaustive finite-intersection-property scan.
  std::size_t fip_subbase_limit = 16;
};

}  // namespace finspec
