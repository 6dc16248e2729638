#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finspec/caps.hpp"
#include "finspec/ring.hpp"

namespace finspec {

using ElemSet = boost::dynamic_bitset<>;

/// An ideal of a finite ring in canonical form: the full membership set,
/// so equality is set equality.  Immutable.
class Ideal {
public:
  Ideal(FiniteRing ring, ElemSet members);

  const FiniteRing& ring() const { return ring_; }
  const ElemSet& bits() const { return members_; }
  bool contains(Elem x) const { return members_.test(x); }
  std::size_t size() const { return members_.count(); }
  std::vector<Elem> members() const;  // ascending

  bool is_zero() const { return size() == 1; }
  bool is_proper() const { return size() < ring_.size(); }
  bool subset_of(const Ideal& other) const;

  /// "(g1,g2,...)" from a smallest generating set found by bounded search,
  /// falling back to the member list.
  std::string name() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.members_ == b.members_ && a.ring_.same_ring(b.ring_);
  }

private:
  FiniteRing ring_;
  ElemSet members_;
};

/// Canonical order: size first, then lexicographic member list.
bool ideal_less(const Ideal& a, const Ideal& b);

/// Is `s` closed under subtraction and ring multiplication (and contains 0)?
/// Used both by validation and by the brute-force enumeration oracle.
bool is_ideal_set(const FiniteRing& ring, const ElemSet& s);

/// Smallest ideal containing S: closure iteration under addition and
/// multiplication by every ring element.
Ideal generate(const FiniteRing& ring, std::span<const Elem> s);

Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);

/// {x | x^m in a for some m <= |A|}.
Ideal radical(const Ideal& a);

bool is_prime(const Ideal& a);

enum class Flavor { Idl, Spi, Spec, Spm };
std::string flavor_name(Flavor f);

/// A duplicate-free list of ideals in canonical order, tagged with what it is.
struct IdealFamily {
  FiniteRing ring;
  Flavor flavor;
  std::vector<Ideal> ideals;

  std::optional<std::size_t> index_of(const Ideal& a) const;
  std::string to_json() const;  // {"ring":label,"flavor":...,"ideals":[[..],..]}
};

/// All ideals, by join-closure of the principal ideals (polynomial in
/// |Idl A|*|A|, unlike the 2^|A| subset filter the tests use as oracle).
IdealFamily enumerate_ideals(const FiniteRing& ring, const Caps& caps = {});

IdealFamily spi(const FiniteRing& ring, const Caps& caps = {});
IdealFamily spec(const FiniteRing& ring, const Caps& caps = {});
IdealFamily spm(const FiniteRing& ring, const Caps& caps = {});

/// Filters sharing one enumeration pass.
IdealFamily restrict_family(const IdealFamily& idl, Flavor flavor);

/// Hasse diagram of the inclusion order, as DOT.
std::string hasse_dot(const IdealFamily& family);

}  // namespace finspec
