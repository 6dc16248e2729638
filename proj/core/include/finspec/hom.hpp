#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finspec/caps.hpp"
#include "finspec/checks.hpp"
#include "finspec/ideal.hpp"
#include "finspec/ring.hpp"
#include "finspec/spectrum.hpp"

namespace finspec {

/// A unital ring homomorphism between finite rings, given by the full element
/// map.  Construction verifies preservation of 0, 1, + and * exhaustively and
/// caches kernel and image.
class RingHom {
public:
  RingHom(FiniteRing source, FiniteRing target, std::vector<Elem> map);

  static RingHom identity(const FiniteRing& ring);

  /// Builds the map from images of generators by closing under + and * from
  /// {0 -> 0, 1 -> 1} plus the given pairs; throws domain_error on conflict
  /// or when the generators do not determine every element.
  static RingHom from_generators(const FiniteRing& source, const FiniteRing& target,
                                 std::span<const std::pair<Elem, Elem>> images);

  /// Canonical surjection Z_n -> Z_m for m | n (k maps to k mod m).
  static RingHom zmod_surjection(const FiniteRing& source, const FiniteRing& target);

  Elem operator()(Elem a) const { return map_[a]; }
  const std::vector<Elem>& map() const { return map_; }
  const FiniteRing& source() const { return source_; }
  const FiniteRing& target() const { return target_; }
  const Ideal& kernel() const { return *kernel_; }
  const std::vector<Elem>& image() const { return image_; }
  bool surjective() const { return image_.size() == target_.size(); }
  bool injective() const { return kernel_->is_zero(); }

  /// The preimage of an ideal of the target, an ideal of the source.
  Ideal preimage(const Ideal& b) const;

  std::string describe() const;  // "Z4 -> Z2"

private:
  FiniteRing source_, target_;
  std::vector<Elem> map_;
  std::optional<Ideal> kernel_;
  std::vector<Elem> image_;
};

/// Every ring homomorphism source -> target, by backtracking with closure
/// propagation.  Exhaustive; meant for the small universal-property targets.
std::vector<RingHom> all_homs(const FiniteRing& source, const FiniteRing& target);

/// A/a on least coset representatives, with the canonical surjection.
std::pair<FiniteRing, RingHom> quotient_ring(const FiniteRing& ring, const Ideal& a);

/// phi*: Spi(target) -> Spi(source), b -> preimage(b), with the continuity
/// identity (phi*)^-1(V(a)) = V(<phi(a)>) checked for every source ideal.
struct PullbackResult {
  std::vector<std::size_t> point_map;  // target point index -> source point index
  bool lands_in_spi = false;
  bool continuity_ok = false;
  std::vector<std::string> notes;
  bool ok() const { return lands_in_spi && continuity_ok; }
};

PullbackResult pullback(const RingHom& phi, const SpectrumTopology& source_spi,
                        const SpectrumTopology& target_spi);

/// For surjective phi: Spi(target) is homeomorphic to the closed subspace
/// V(ker phi) of Spi(source); both directions of the closed-set
/// correspondence are checked exhaustively over the generated families.
struct HomeoCertificate {
  bool bijection_onto_v_ker = false;
  bool forward_closed = false;   // phi* maps closed sets to subspace-closed sets
  bool backward_closed = false;  // the inverse does too
  std::vector<std::string> notes;
  bool ok() const { return bijection_onto_v_ker && forward_closed && backward_closed; }
};

HomeoCertificate surjection_homeo_check(const RingHom& phi, const Caps& caps = {});

/// Cl(phi*(Spi target)) = Spi source iff ker phi lies in the intersection of
/// all proper ideals; both sides computed independently.
struct DensityResult {
  bool dense = false;            // closure of the image is everything
  bool kernel_small = false;     // ker phi within the intersection of Spi A
  bool biconditional_ok = false;
  std::string closure_text;
  std::string kernel_text;
  std::string intersection_text;
};

DensityResult density_check(const RingHom& phi, const Caps& caps = {});

/// 1 in S, multiplicatively closed, 0 not in S.
class MultiplicativeSet {
public:
  MultiplicativeSet(FiniteRing ring, ElemSet members);
  /// Multiplicative closure of the generators (plus 1); rejects sets whose
  /// closure reaches 0.
  static MultiplicativeSet closure_of(const FiniteRing& ring,
                                      std::span<const Elem> generators);

  const FiniteRing& ring() const { return ring_; }
  const ElemSet& bits() const { return members_; }
  std::vector<Elem> members() const;

private:
  FiniteRing ring_;
  ElemSet members_;
};

/// Finite-ring localization realized as A / {a | sa = 0 for some s in S},
/// with the canonical map; every element of S is verified to become a unit.
struct LocalizationResult {
  FiniteRing local;
  RingHom canonical;
  Ideal annihilator_kernel;
  bool units_verified = false;
};

LocalizationResult localize(const FiniteRing& ring, const MultiplicativeSet& s);

/// Universal property against a list of target rings: every hom sending S to
/// units factors uniquely through the canonical map, and no hom that fails
/// the unit condition factors at all.
struct UniversalPropertyReport {
  std::size_t homs_checked = 0;
  std::size_t factoring = 0;
  bool ok = true;
  std::vector<std::string> notes;
};

UniversalPropertyReport localization_universal_check(
    const FiniteRing& ring, const MultiplicativeSet& s,
    std::span<const FiniteRing> targets);

/// The closed, continuous, injective map Spi(A_S) -> (Spi A)_S, where the
/// latter carries the subspace topology from the k-space on Spi A.
struct EmbeddingCertificate {
  bool image_avoids_s = false;
  bool injective = false;
  bool continuous = false;
  bool closed_map = false;
  std::vector<std::string> notes;
  bool ok() const { return image_avoids_s && injective && continuous && closed_map; }
};

EmbeddingCertificate localization_embedding_check(const FiniteRing& ring,
                                                  const MultiplicativeSet& s,
                                                  const Caps& caps = {});

/// Spi(A/a) is homeomorphic to the closed subspace V(a) of Spi A.
struct QuotientCorollaryCertificate {
  bool kernel_is_a = false;
  HomeoCertificate homeo;
  bool ok() const { return kernel_is_a && homeo.ok(); }
};

QuotientCorollaryCertificate quotient_corollary_check(const FiniteRing& ring,
                                                      const Ideal& a,
                                                      const Caps& caps = {});

/// Spec A and Spec(A / nilradical) are canonically homeomorphic.
struct SpecNilradicalCertificate {
  bool bijective = false;
  bool homeomorphism = false;
  std::string nilradical_text;
  bool ok() const { return bijective && homeomorphism; }
};

SpecNilradicalCertificate spec_nilradical_check(const FiniteRing& ring,
                                                const Caps& caps = {});

/// Surjective-phi identities from the continuity/closedness proofs:
/// phi*(V(b)) = V(preimage(b)) and Cl(phi*(V(b))) = V(preimage(b)).
struct SurjectiveImageIdentities {
  bool image_identity = false;
  bool closure_identity = false;
  bool ok() const { return image_identity && closure_identity; }
};

SurjectiveImageIdentities surjective_image_identities(const RingHom& phi,
                                                      const Caps& caps = {});

}  // namespace finspec
