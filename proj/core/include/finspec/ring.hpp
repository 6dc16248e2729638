#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "finspec/caps.hpp"

namespace finspec {

/// Canonical element id inside its parent ring: 0 <= index < |A|.
/// Two elements are equal iff their indices are equal.
using Elem = std::uint32_t;

/// A finite commutative ring with identity, given by explicit operation
/// tables over a dense element carrier 0..size-1.  Immutable after
/// construction and cheap to copy (shared representation); all construction
/// paths verify the ring axioms exhaustively.
class FiniteRing {
public:
  /// Z_n, n >= 2.
  static FiniteRing zmod(std::uint64_t n, const Caps& caps = {});

  /// Componentwise product A x B; element (a,b) has index a*|B| + b.
  static FiniteRing product(const FiniteRing& a, const FiniteRing& b,
                            const Caps& caps = {});

  /// base[x]/(m) for a monic modulus m of degree d >= 1, coefficients given
  /// lowest degree first (length d+1, leading coefficient = 1).  Carrier is
  /// all coefficient vectors of length d; |result| = |base|^d.
  static FiniteRing poly_quotient(const FiniteRing& base,
                                  std::span<const Elem> modulus_coeffs,
                                  const Caps& caps = {});

  /// Build from explicit tables; verifies every ring axiom before accepting.
  static FiniteRing from_tables(std::string label, std::size_t size, Elem zero,
                                Elem one,
                                std::vector<std::vector<Elem>> add_table,
                                std::vector<std::vector<Elem>> mul_table,
                                std::vector<std::string> element_names = {},
                                const Caps& caps = {});

  std::size_t size() const;
  Elem zero() const;
  Elem one() const;
  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t n) const;  // a^n, n >= 1

  const std::string& label() const;
  /// Display string of one element ("3", "(1,0)", "x+1", ...).
  const std::string& name(Elem a) const;

  std::vector<Elem> units() const;
  /// Nonzero elements x with xy = 0 for some nonzero y.
  std::vector<Elem> zero_divisors() const;
  std::vector<Elem> idempotents() const;  // includes 0 and 1
  std::vector<Elem> nilpotents() const;   // includes 0
  bool is_field() const;

  /// Canonical dump: {"label","size","zero","one","add":[[..]],"mul":[[..]]}.
  std::string to_json() const;
  static FiniteRing from_json(const std::string& text, const Caps& caps = {});

  /// Structural equality: same size/zero/one and identical tables
  /// (labels and element names are ignored).
  bool same_tables(const FiniteRing& other) const;

  /// Identity of the underlying representation; ideals, homs and spaces
  /// check this when mixing objects from different rings.
  bool same_ring(const FiniteRing& other) const { return impl_ == other.impl_; }

  struct Impl;

private:
  explicit FiniteRing(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

}  // namespace finspec
