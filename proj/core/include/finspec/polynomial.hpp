#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finspec/caps.hpp"
#include "finspec/ring.hpp"

namespace finspec {

/// Univariate polynomial over a finite ring; coefficients lowest degree
/// first, normalized (no trailing zeros).  The zero polynomial has an empty
/// coefficient list and degree -1.
class Polynomial {
public:
  Polynomial(FiniteRing ring, std::vector<Elem> coeffs);

  const FiniteRing& ring() const { return ring_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Elem evaluate(Elem a) const;  // Horner
  Polynomial mul(const Polynomial& other) const;

  std::string to_string() const;  // descending degree, "x^2+3x+1"

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_ && a.ring_.same_ring(b.ring_);
  }

private:
  FiniteRing ring_;
  std::vector<Elem> coeffs_;
};

Polynomial zero_polynomial(const FiniteRing& ring);
Polynomial constant_polynomial(const FiniteRing& ring, Elem c);
/// x - a.
Polynomial linear_root(const FiniteRing& ring, Elem a);

/// {a in A | p(a) = 0 for every p}; the empty system solves to all of A.
std::vector<Elem> solution_set(const FiniteRing& ring,
                               std::span<const Polynomial> system);

/// All minimal-degree annihilators of a subset: the least d such that some
/// nonzero polynomial of degree <= d vanishes on the whole subset, together
/// with the full coefficient-tuple family at that degree (a module, found by
/// exhaustive enumeration), a linear-constraint presentation of it, and a
/// member with exact vanishing set equal to the subset when one exists.
struct VarietyEntry {
  std::vector<Elem> subset;
  int min_degree = 0;
  /// Every tuple (c_0..c_d), lowest degree first, vanishing on the subset;
  /// includes the zero tuple.  This extensional set is authoritative.
  std::vector<std::vector<Elem>> family;
  /// Linear equations cutting out `family`, as coefficient tuples in the
  /// same (ascending-degree) order; may be empty when family is everything.
  std::vector<std::vector<Elem>> constraints;
  /// True when `constraints` exactly cuts out `family` (it always does for
  /// the grammar-constructible rings; arbitrary table rings may lack a
  /// linear presentation, in which case the extensional family stands alone).
  bool constraints_exact = true;
  std::optional<Polynomial> exact_witness;  // minimal-degree, exact vanishing set
};

VarietyEntry annihilators_of(const FiniteRing& ring, std::span<const Elem> subset,
                             std::size_t max_degree);

/// "{ax^2+bx+c | 2b=0, c=0}" rendering of a VarietyEntry; letters run from
/// 'a' at the top degree, single-letter zero constraints are folded into the
/// generic polynomial when they are the only constraints.
std::string constraints_pretty(const FiniteRing& ring, const VarietyEntry& entry);

/// The product prod_{a in subset}(x - a) (the constant 1 for the empty
/// subset), verified against the subset; when verification fails over zero
/// divisors, an exhaustive exact-witness search up to degree |A| runs and
/// `exact` reports the outcome.
struct ExactWitness {
  Polynomial poly;
  std::vector<Elem> roots;  // ascending subset elements used as factors
  bool product_form = true; // false when the fallback search produced `poly`
  bool exact = false;       // solution_set(poly) == subset
};

ExactWitness exact_variety_witness(const FiniteRing& ring,
                                   std::span<const Elem> subset);

/// Factored rendering "x(x+3)(x+2)(x+1)"; expanded rendering when the
/// witness did not come from the product construction.
std::string witness_string(const ExactWitness& w);

/// The full four-column table over all 2^|A| subsets.
struct Table1 {
  std::string ring_label;
  struct Row {
    std::vector<Elem> subset;
    VarietyEntry entry;
    ExactWitness witness;
  };
  std::vector<Row> rows;
};

Table1 table1(const FiniteRing& ring, const Caps& caps = {});
std::string table1_text(const Table1& t);
std::string table1_json(const Table1& t);

}  // namespace finspec
