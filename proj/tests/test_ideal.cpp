#include "doctest.h"

#include <set>

#include "finspec/errors.hpp"
#include "finspec/hom.hpp"
#include "finspec/ideal.hpp"
#include "finspec/ring_spec.hpp"
#include "oracles.hpp"

using namespace finspec;

namespace {

Ideal gen(const FiniteRing& ring, std::vector<Elem> xs) {
  return generate(ring, xs);
}

const std::vector<const char*> kSmallCorpus = {
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z2xZ2", "Z2[x]/(x^2)",
    "Z2[x]/(x^2+x+1)"};

}  // namespace

TEST_CASE("generated ideals") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  CHECK(gen(z4, {2}).members() == std::vector<Elem>{0, 2});
  CHECK(gen(z4, {}).members() == std::vector<Elem>{0});
  const FiniteRing z6 = FiniteRing::zmod(6);
  CHECK(gen(z6, {2, 3}).size() == 6);  // 3 - 2 = 1
  CHECK(!gen(z6, {2, 3}).is_proper());
}

TEST_CASE("sum, product, intersection") {
  const FiniteRing z6 = FiniteRing::zmod(6);
  const Ideal two = gen(z6, {2}), three = gen(z6, {3});
  CHECK(sum(two, three).size() == 6);
  CHECK(product(two, three) == zero_ideal(z6));
  CHECK(intersect(two, two) == two);

  const FiniteRing z4 = FiniteRing::zmod(4);
  CHECK_THROWS_AS(sum(gen(z4, {2}), three), domain_error);
}

TEST_CASE("lattice laws over all ideal pairs") {
  for (const char* spec : kSmallCorpus) {
    const FiniteRing ring = parse_ring_spec(spec);
    const auto idl = enumerate_ideals(ring).ideals;
    for (const Ideal& a : idl)
      for (const Ideal& b : idl) {
        CHECK(sum(a, b) == sum(b, a));
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(sum(a, a) == a);
        CHECK(intersect(a, a) == a);
        const Ideal p = product(a, b);
        CHECK(p.subset_of(intersect(a, b)));
        CHECK(intersect(a, b).subset_of(a));
        CHECK(a.subset_of(sum(a, b)));
        for (const Ideal& c : idl) {
          CHECK(sum(sum(a, b), c) == sum(a, sum(b, c)));
          CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        }
      }
  }
}

TEST_CASE("radical") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  CHECK(radical(zero_ideal(z4)) == gen(z4, {2}));
  CHECK(radical(gen(z4, {2})) == gen(z4, {2}));
  CHECK(radical(unit_ideal(z4)) == unit_ideal(z4));

  for (const char* spec : kSmallCorpus) {
    const FiniteRing ring = parse_ring_spec(spec);
    const auto family = enumerate_ideals(ring);
    const auto primes = restrict_family(family, Flavor::Spec);
    for (const Ideal& a : family.ideals) {
      const Ideal r = radical(a);
      CHECK(a.subset_of(r));
      CHECK(radical(r) == r);
      // sqrt(a) is the intersection of the primes containing a; the unit
      // ideal has no primes above it and the empty intersection is A.
      Ideal expect = unit_ideal(ring);
      for (const Ideal& p : primes.ideals)
        if (a.subset_of(p)) expect = intersect(expect, p);
      CHECK(r == expect);
    }
  }
}

TEST_CASE("enumeration matches the subset-filter oracle") {
  for (const char* spec : kSmallCorpus) {
    const FiniteRing ring = parse_ring_spec(spec);
    const auto idl = enumerate_ideals(ring);
    std::set<ElemSet> got;
    for (const Ideal& a : idl.ideals) {
      CHECK(is_ideal_set(ring, a.bits()));
      got.insert(a.bits());
    }
    const auto expect_list = oracles::brute_force_ideals(ring);
    const std::set<ElemSet> expect(expect_list.begin(), expect_list.end());
    CHECK(got == expect);
    CHECK(got.size() == idl.ideals.size());  // no duplicates
  }
}

TEST_CASE("family counts and flavors") {
  CHECK(enumerate_ideals(FiniteRing::zmod(4)).ideals.size() == 3);
  CHECK(enumerate_ideals(FiniteRing::zmod(6)).ideals.size() == 4);
  CHECK(enumerate_ideals(parse_ring_spec("Z2[x]/(x^2+x+1)")).ideals.size() == 2);

  const FiniteRing z4 = FiniteRing::zmod(4);
  CHECK(spi(z4).ideals.size() == 2);
  CHECK(spec(z4).ideals.size() == 1);
  CHECK(spec(z4).ideals[0] == gen(z4, {2}));

  const FiniteRing z6 = FiniteRing::zmod(6);
  CHECK(spi(z6).ideals.size() == 3);
  CHECK(spec(z6).ideals.size() == 2);
  CHECK(spm(z6).ideals.size() == 2);

  const FiniteRing f4 = parse_ring_spec("Z2[x]/(x^2+x+1)");
  CHECK(spec(f4).ideals.size() == 1);
  CHECK(spec(f4).ideals[0].is_zero());

  // Z12: divisors 1,2,3,4,6,12; Spm = {(2),(3)}.
  const FiniteRing z12 = FiniteRing::zmod(12);
  CHECK(enumerate_ideals(z12).ideals.size() == 6);
  CHECK(spm(z12).ideals.size() == 2);

  // Canonical order: size first, then lexicographic member list.
  const auto fam = enumerate_ideals(z12);
  for (std::size_t i = 1; i < fam.ideals.size(); ++i)
    CHECK(ideal_less(fam.ideals[i - 1], fam.ideals[i]));
}

TEST_CASE("enumeration respects the ring-size cap") {
  Caps loose;
  const FiniteRing z4 = FiniteRing::zmod(4, loose);
  Caps tight = loose;
  tight.max_ring_size = 2;
  CHECK_THROWS_WITH_AS(enumerate_ideals(z4, tight),
                       doctest::Contains("max_ring_size"), resource_error);
}

TEST_CASE("quotient rings") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  auto [q1, pi1] = quotient_ring(z4, gen(z4, {2}));
  CHECK(q1.size() == 2);
  CHECK(q1.same_tables(FiniteRing::zmod(2)));
  CHECK(pi1.kernel() == gen(z4, {2}));
  CHECK(pi1.surjective());

  const FiniteRing z6 = FiniteRing::zmod(6);
  auto [q2, pi2] = quotient_ring(z6, gen(z6, {3}));
  CHECK(q2.same_tables(FiniteRing::zmod(3)));

  auto [q3, pi3] = quotient_ring(z6, zero_ideal(z6));
  CHECK(q3.same_tables(z6));
  CHECK(pi3.injective());

  CHECK_THROWS_AS(quotient_ring(z6, unit_ideal(z6)), domain_error);
}

TEST_CASE("nilpotents are the intersection of all primes") {
  for (const char* spec : kSmallCorpus) {
    const FiniteRing ring = parse_ring_spec(spec);
    const auto primes = finspec::spec(ring).ideals;
    for (Elem x = 0; x < ring.size(); ++x) {
      bool in_all = true;
      for (const Ideal& p : primes)
        if (!p.contains(x)) in_all = false;
      const auto nil = ring.nilpotents();
      const bool nilpotent = std::find(nil.begin(), nil.end(), x) != nil.end();
      CHECK(nilpotent == in_all);
    }
  }
}

TEST_CASE("ideal names and DOT export") {
  const FiniteRing z6 = FiniteRing::zmod(6);
  CHECK(zero_ideal(z6).name() == "(0)");
  CHECK(gen(z6, {2}).name() == "(2)");
  CHECK(gen(z6, {4}).name() == "(2)");  // (4) = (2), named by least generator
  CHECK(unit_ideal(z6).name() == "(1)");

  const std::string dot = hasse_dot(enumerate_ideals(z6));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("(0)") != std::string::npos);
  CHECK(dot.find("(3)") != std::string::npos);
  // Diamond: 4 covering edges, no transitive edge (0) -> (1).
  CHECK(std::count(dot.begin(), dot.end(), '>') == 4);
}

TEST_CASE("family JSON is canonical") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  const std::string json = spi(z4).to_json();
  CHECK(json.find("\"flavor\": \"Spi\"") != std::string::npos);
  // Smallest-first canonical order: (0) before (2).
  CHECK(json.find("[\n      0\n    ],") < json.find("0,\n      2"));
}
