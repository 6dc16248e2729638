#include "doctest.h"

#include "finspec/errors.hpp"
#include "finspec/hom.hpp"
#include "finspec/ring_spec.hpp"

using namespace finspec;

namespace {

Ideal gen(const FiniteRing& ring, std::vector<Elem> xs) { return generate(ring, xs); }

}  // namespace

TEST_CASE("hom construction and validation") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  const FiniteRing z2 = FiniteRing::zmod(2);

  const RingHom pi = RingHom::zmod_surjection(z4, z2);
  CHECK(pi.kernel() == gen(z4, {2}));
  CHECK(pi.surjective());
  CHECK(!pi.injective());

  // A map sending 1 to an idempotent that is not 1 is rejected as non-unital.
  const FiniteRing z6 = FiniteRing::zmod(6);
  std::vector<Elem> bad(2);
  bad[0] = 0;
  bad[1] = 3;  // 1 -> 3 in Z6
  CHECK_THROWS_WITH_AS(RingHom(z2, z6, bad), doctest::Contains("preserve 1"),
                       domain_error);

  // No homomorphism Z2 -> Z6 exists at all (2*1 = 2 != 0).
  CHECK_THROWS_AS(RingHom::from_generators(z2, z6, {}), domain_error);

  // Additivity violations are caught.
  std::vector<Elem> broken(4);
  broken[0] = 0;
  broken[1] = 1;
  broken[2] = 1;  // 2 -> 1, but 1+1 must go to 0
  broken[3] = 1;
  CHECK_THROWS_AS(RingHom(z4, z2, broken), domain_error);

  CHECK_THROWS_AS(RingHom::zmod_surjection(z6, z4), domain_error);

  const RingHom id = RingHom::identity(z6);
  CHECK(id.injective());
  CHECK(id.surjective());
  CHECK(id.kernel().is_zero());
}

TEST_CASE("from_generators closes and detects underdetermination") {
  const FiniteRing f4 = parse_ring_spec("Z2[x]/(x^2+x+1)");
  // Frobenius x -> x^2 = x+1; indices: 0,1,x=2,x+1=3.
  const std::vector<std::pair<Elem, Elem>> frob = {{2, 3}};
  const RingHom phi = RingHom::from_generators(f4, f4, frob);
  CHECK(phi(2) == 3);
  CHECK(phi(3) == 2);
  CHECK(phi.injective());

  // x -> x is the identity; x -> 0 conflicts (x^2+x+1 = 0 forces x != 0).
  const std::vector<std::pair<Elem, Elem>> zero_img = {{2, 0}};
  CHECK_THROWS_AS(RingHom::from_generators(f4, f4, zero_img), domain_error);

  // Z2 x Z2 is not generated by 1: images of (1,0) are required.
  const FiniteRing z2xz2 = parse_ring_spec("Z2xZ2");
  CHECK_THROWS_WITH_AS(RingHom::from_generators(z2xz2, z2xz2, {}),
                       doctest::Contains("do not determine"), domain_error);
  const std::vector<std::pair<Elem, Elem>> swap = {{2, 1}};  // (1,0) -> (0,1)
  const RingHom sw = RingHom::from_generators(z2xz2, z2xz2, swap);
  CHECK(sw(1) == 2);
  CHECK(sw.injective());
}

TEST_CASE("all_homs enumerates exactly the homomorphisms") {
  const FiniteRing z2 = FiniteRing::zmod(2);
  const FiniteRing z6 = FiniteRing::zmod(6);
  const FiniteRing z2xz2 = parse_ring_spec("Z2xZ2");

  CHECK(all_homs(z2, z2xz2).size() == 1);  // the diagonal
  CHECK(all_homs(z6, z6).size() == 1);     // determined by 1
  CHECK(all_homs(z2xz2, z2).size() == 2);  // the two projections
  CHECK(all_homs(z2, z6).empty());
  CHECK(all_homs(z6, z2).size() == 1);
  // Z6 -> Z2xZ3 is forced on 1 and is the CRT isomorphism.
  const FiniteRing crt = parse_ring_spec("Z2xZ3");
  const auto homs = all_homs(z6, crt);
  REQUIRE(homs.size() == 1);
  CHECK(homs[0].injective());
  CHECK(homs[0].surjective());
}

TEST_CASE("pullback and continuity") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  const FiniteRing z2 = FiniteRing::zmod(2);
  const RingHom pi = RingHom::zmod_surjection(z4, z2);
  const SpectrumTopology src = build_kspace(z4, Flavor::Spi);
  const SpectrumTopology tgt = build_kspace(z2, Flavor::Spi);

  const PullbackResult res = pullback(pi, src, tgt);
  CHECK(res.ok());
  // phi*((0)) = ker = (2).
  REQUIRE(res.point_map.size() == 1);
  CHECK(src.points.ideals[res.point_map[0]] == gen(z4, {2}));

  const RingHom id = RingHom::identity(z4);
  const PullbackResult idres = pullback(id, src, src);
  CHECK(idres.ok());
  for (std::size_t t = 0; t < idres.point_map.size(); ++t)
    CHECK(idres.point_map[t] == t);
}

TEST_CASE("surjection homeomorphism certificates") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  const FiniteRing z6 = FiniteRing::zmod(6);

  CHECK(surjection_homeo_check(RingHom::zmod_surjection(z4, FiniteRing::zmod(2))).ok());
  CHECK(surjection_homeo_check(RingHom::zmod_surjection(z6, FiniteRing::zmod(3))).ok());
  CHECK(surjection_homeo_check(RingHom::zmod_surjection(z6, FiniteRing::zmod(2))).ok());
  CHECK(surjection_homeo_check(RingHom::identity(z6)).ok());

  const RingHom embed =
      RingHom::from_generators(FiniteRing::zmod(2), parse_ring_spec("Z2xZ2"), {});
  CHECK(!embed.surjective());
  CHECK_THROWS_AS(surjection_homeo_check(embed), domain_error);
}

TEST_CASE("density biconditional, both directions") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  const DensityResult not_dense =
      density_check(RingHom::zmod_surjection(z4, FiniteRing::zmod(2)));
  CHECK(not_dense.biconditional_ok);
  CHECK(!not_dense.dense);
  CHECK(!not_dense.kernel_small);
  CHECK(not_dense.kernel_text == "(2)");
  CHECK(not_dense.intersection_text == "(0)");

  const DensityResult dense = density_check(RingHom::identity(z4));
  CHECK(dense.biconditional_ok);
  CHECK(dense.dense);
  CHECK(dense.kernel_small);

  const DensityResult z6z2 =
      density_check(RingHom::zmod_surjection(FiniteRing::zmod(6), FiniteRing::zmod(2)));
  CHECK(z6z2.biconditional_ok);
  CHECK(!z6z2.dense);
}

TEST_CASE("surjective image identities") {
  for (auto [n, m] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 4}, {12, 6}}) {
    const RingHom pi =
        RingHom::zmod_surjection(FiniteRing::zmod(n), FiniteRing::zmod(m));
    const SurjectiveImageIdentities ids = surjective_image_identities(pi);
    CHECK(ids.image_identity);
    CHECK(ids.closure_identity);
  }
}

TEST_CASE("multiplicative sets") {
  const FiniteRing z6 = FiniteRing::zmod(6);
  const std::vector<Elem> three = {3};
  const MultiplicativeSet s = MultiplicativeSet::closure_of(z6, three);
  CHECK(s.members() == std::vector<Elem>{1, 3});

  const FiniteRing z4 = FiniteRing::zmod(4);
  const std::vector<Elem> two = {2};
  // 2*2 = 0: the closure reaches zero and is rejected.
  CHECK_THROWS_AS(MultiplicativeSet::closure_of(z4, two), domain_error);

  ElemSet no_one(z6.size());
  no_one.set(3);
  CHECK_THROWS_AS(MultiplicativeSet(z6, no_one), domain_error);
}

TEST_CASE("localization as annihilator quotient") {
  const FiniteRing z6 = FiniteRing::zmod(6);
  const std::vector<Elem> three = {3};
  const MultiplicativeSet s = MultiplicativeSet::closure_of(z6, three);
  const LocalizationResult loc = localize(z6, s);
  CHECK(loc.annihilator_kernel.members() == std::vector<Elem>{0, 2, 4});
  CHECK(loc.local.size() == 2);
  CHECK(loc.local.same_tables(FiniteRing::zmod(2)));
  CHECK(loc.units_verified);
  CHECK(loc.canonical(3) == loc.local.one());  // 3 becomes 1, a unit

  // S = {1}: trivial localization.
  const std::vector<Elem> one = {1};
  const LocalizationResult triv = localize(z6, MultiplicativeSet::closure_of(z6, one));
  CHECK(triv.local.same_tables(z6));
  CHECK(triv.annihilator_kernel.is_zero());

  // Z4 at {1,3}: 3 is already a unit, nothing collapses.
  const FiniteRing z4 = FiniteRing::zmod(4);
  const LocalizationResult z4loc =
      localize(z4, MultiplicativeSet::closure_of(z4, three));
  CHECK(z4loc.annihilator_kernel.is_zero());
  CHECK(z4loc.local.same_tables(z4));
}

TEST_CASE("localization universal property") {
  const Caps caps;
  std::vector<FiniteRing> targets;
  for (const char* spec : {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z2xZ2",
                           "Z2[x]/(x^2)", "Z2[x]/(x^2+x+1)"})
    targets.push_back(parse_ring_spec(spec, caps));

  const FiniteRing z6 = FiniteRing::zmod(6);
  const std::vector<Elem> three = {3};
  const UniversalPropertyReport rep = localization_universal_check(
      z6, MultiplicativeSet::closure_of(z6, three), targets);
  CHECK(rep.ok);
  CHECK(rep.homs_checked > 0);
  CHECK(rep.factoring > 0);

  const FiniteRing z4 = FiniteRing::zmod(4);
  const UniversalPropertyReport rep4 = localization_universal_check(
      z4, MultiplicativeSet::closure_of(z4, three), targets);
  CHECK(rep4.ok);
}

TEST_CASE("localization embedding certificates") {
  const FiniteRing z6 = FiniteRing::zmod(6);
  const std::vector<Elem> three = {3};
  const EmbeddingCertificate c6 =
      localization_embedding_check(z6, MultiplicativeSet::closure_of(z6, three));
  CHECK(c6.ok());

  const FiniteRing z4 = FiniteRing::zmod(4);
  const EmbeddingCertificate c4 =
      localization_embedding_check(z4, MultiplicativeSet::closure_of(z4, three));
  CHECK(c4.ok());

  const std::vector<Elem> one = {1};
  CHECK(localization_embedding_check(z6, MultiplicativeSet::closure_of(z6, one)).ok());
}

TEST_CASE("quotient corollary") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  CHECK(quotient_corollary_check(z4, gen(z4, {2})).ok());
  CHECK(quotient_corollary_check(z4, zero_ideal(z4)).ok());
  const FiniteRing z6 = FiniteRing::zmod(6);
  CHECK(quotient_corollary_check(z6, gen(z6, {2})).ok());
  CHECK(quotient_corollary_check(z6, gen(z6, {3})).ok());
  const FiniteRing z12 = FiniteRing::zmod(12);
  for (const Ideal& a : spi(z12).ideals)
    CHECK(quotient_corollary_check(z12, a).ok());
}

TEST_CASE("Spec A is homeomorphic to Spec of the reduction") {
  for (const char* spec : {"Z4", "Z6", "Z8", "Z9", "Z12", "Z2xZ2", "Z2[x]/(x^2)"}) {
    INFO("ring ", spec);
    CHECK(spec_nilradical_check(parse_ring_spec(spec)).ok());
  }
}
