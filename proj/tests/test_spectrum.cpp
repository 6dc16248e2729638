#include "doctest.h"

#include <set>

#include "finspec/errors.hpp"
#include "finspec/ring_spec.hpp"
#include "finspec/spectrum.hpp"
#include "finspec/verify.hpp"

using namespace finspec;

namespace {

PointSet pts_of(const SpectrumTopology& st, std::initializer_list<const char*> names) {
  PointSet s(st.points.ideals.size());
  for (const char* n : names) {
    bool found = false;
    for (std::size_t i = 0; i < st.points.ideals.size(); ++i)
      if (st.points.ideals[i].name() == n) {
        s.set(i);
        found = true;
      }
    REQUIRE(found);
  }
  return s;
}

}  // namespace

TEST_CASE("V and I on Z4 and Z6") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  const SpectrumTopology st = build_kspace(z4, Flavor::Spi);
  CHECK(st.points.ideals.size() == 2);

  CHECK(st.v_of_ideal(zero_ideal(z4)) == st.space.whole());
  CHECK(st.v_of_ideal(unit_ideal(z4)).none());
  const std::vector<Elem> two = {2};
  CHECK(st.v_of_elems(two) == pts_of(st, {"(2)"}));

  CHECK(st.i_of(st.space.whole()) == zero_ideal(z4));
  CHECK(st.i_of(st.space.empty()) == unit_ideal(z4));
  CHECK(st.i_of(pts_of(st, {"(2)"})) == generate(z4, two));

  const SpectrumTopology zar = build_zariski(FiniteRing::zmod(6));
  CHECK(zar.points.ideals.size() == 2);
  const std::vector<Elem> two6 = {2};
  CHECK(zar.v_of_elems(two6).count() == 1);
}

TEST_CASE("k-space builds") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  const SpectrumTopology st = build_kspace(z4, Flavor::Spi);
  // C_V = {V(0), V(2), V(Z4)} = {whole, {(2)}, empty}.
  CHECK(st.space.subbase.size() == 3);
  const std::set<PointSet> subbase(st.space.subbase.begin(), st.space.subbase.end());
  CHECK(subbase.count(st.space.whole()));
  CHECK(subbase.count(st.space.empty()));
  CHECK(subbase.count(pts_of(st, {"(2)"})));

  const SpectrumTopology field = build_kspace(parse_ring_spec("Z2[x]/(x^2+x+1)"), Flavor::Spi);
  CHECK(field.points.ideals.size() == 1);

  CHECK_THROWS_AS(build_kspace(z4, Flavor::Spec), domain_error);

  // Zariski on Z6 is the discrete two-point space.
  const SpectrumTopology zar = build_zariski(FiniteRing::zmod(6));
  CHECK(zar.space.closed_sets.size() == 4);
  const TopologyReport rep = report(zar.space);
  CHECK(!rep.connected);
  CHECK(rep.spectral);
}

TEST_CASE("prop22 suite passes on the default corpus") {
  for (const std::string& spec : default_corpus().ring_specs) {
    const FiniteRing ring = parse_ring_spec(spec);
    const Prop22Report rep = prop22_suite(ring);
    INFO("ring ", spec);
    CHECK(rep.all_pass());
    for (std::size_t i = 1; i <= 11; ++i)
      CHECK(rep.item(i).verdict != Verdict::Fail);
  }
}

TEST_CASE("prop22 item 3 tracks nilpotents, not zero divisors") {
  // Z4: strictness witness exists.
  const Prop22Report z4 = prop22_suite(FiniteRing::zmod(4));
  CHECK(z4.item(3).verdict == Verdict::Pass);
  bool witness = false;
  for (const std::string& n : z4.item(3).notes)
    if (n.find("strictness witness") != std::string::npos) witness = true;
  CHECK(witness);

  // Z6 is reduced with zero divisors: the literal reading is the recorded
  // discrepancy, and no strictness witness exists.
  const Prop22Report z6 = prop22_suite(FiniteRing::zmod(6));
  CHECK(z6.item(3).verdict == Verdict::KnownDiscrepancy);
  for (const std::string& n : z6.item(3).notes)
    CHECK(n.find("strictness witness") == std::string::npos);

  // Fields: no strictness, no discrepancy.
  const Prop22Report z5 = prop22_suite(FiniteRing::zmod(5));
  CHECK(z5.item(3).verdict == Verdict::Pass);
  for (const std::string& n : z5.item(3).notes)
    CHECK(n.find("strictness witness") == std::string::npos);
}

TEST_CASE("prop22 item 4 strictness on Z6") {
  const Prop22Report rep = prop22_suite(FiniteRing::zmod(6));
  bool left = false;
  for (const std::string& n : rep.item(4).notes)
    if (n.find("union vs intersection") != std::string::npos) left = true;
  CHECK(left);
}

TEST_CASE("prop22 item 10 records the Z4 counterexample") {
  const FiniteRing z4 = FiniteRing::zmod(4);
  const SpectrumTopology st = build_kspace(z4, Flavor::Spi);
  // VI({(0)}) = V((0)) = whole space != {(0)}.
  const PointSet t = pts_of(st, {"(0)"});
  CHECK(st.v_of_ideal(st.i_of(t)) == st.space.whole());
  CHECK(st.v_of_ideal(st.i_of(t)) != t);

  const Prop22Report rep = prop22_suite(z4);
  CHECK(rep.item(10).verdict == Verdict::Pass);
  bool recorded = false;
  for (const std::string& n : rep.item(10).notes)
    if (n.find("counterexamples to VI(T) = T: ") != std::string::npos &&
        n.find(": 0") == std::string::npos)
      recorded = true;
  CHECK(recorded);
}

TEST_CASE("k-space theorems hold on the default corpus") {
  for (const std::string& spec : default_corpus().ring_specs) {
    const FiniteRing ring = parse_ring_spec(spec);
    const KSpaceTheoremReport rep = check_spi_theorems(ring);
    INFO("ring ", spec);
    CHECK(rep.all_pass());
    CHECK(rep.topo.t0);
    CHECK(rep.topo.connected);
    CHECK(rep.topo.sober);
    CHECK(rep.topo.spectral);
    CHECK(rep.topo.routes_agree);
  }
}

TEST_CASE("generic point of V(a) is a") {
  const FiniteRing z12 = FiniteRing::zmod(12);
  const SpectrumTopology st = build_kspace(z12, Flavor::Spi);
  const TopologyReport rep = report(st.space);
  for (std::size_t p = 0; p < st.points.ideals.size(); ++p) {
    PointSet single(st.space.point_count);
    single.set(p);
    const PointSet va = st.v_of_ideal(st.points.ideals[p]);
    CHECK(closure(st.space, single) == va);
    const auto pos = std::find(st.space.closed_sets.begin(),
                               st.space.closed_sets.end(), va);
    REQUIRE(pos != st.space.closed_sets.end());
    CHECK(rep.generic_point[pos - st.space.closed_sets.begin()] == p);
  }
}

TEST_CASE("zariski identities on the default corpus") {
  for (const std::string& spec : default_corpus().ring_specs) {
    const FiniteRing ring = parse_ring_spec(spec);
    const ZariskiReport rep = check_zariski(ring);
    INFO("ring ", spec);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("table 2 contrast rows") {
  const Table2Report z6 = compare_spaces(FiniteRing::zmod(6));
  CHECK(z6.all_ok());
  bool saw_contrast = false;
  for (const auto& row : z6.rows)
    if (row.label == "connected") {
      CHECK(row.zariski.find("no") == 0);
      CHECK(row.kspace.find("yes") == 0);
      saw_contrast = true;
    }
  CHECK(saw_contrast);

  const std::string text = table2_text(z6);
  CHECK(text.find("MISMATCH") == std::string::npos);
  CHECK(text.find("Zariski space vs k-space: Z6") == 0);

  for (const std::string& spec : default_corpus().ring_specs) {
    INFO("ring ", spec);
    CHECK(compare_spaces(parse_ring_spec(spec)).all_ok());
  }
}

TEST_CASE("Spi is open in Idl") {
  for (const char* spec : {"Z4", "Z6", "Z12", "Z2xZ2"}) {
    const FiniteRing ring = parse_ring_spec(spec);
    const SpectrumTopology idl = build_kspace(ring, Flavor::Idl);
    const std::size_t unit = *idl.point_index(unit_ideal(ring));
    PointSet s(idl.space.point_count);
    s.set(unit);
    CHECK(idl.v_of_ideal(unit_ideal(ring)) == s);
    CHECK(closure(idl.space, s) == s);  // {A} closed, so Spi A is open
  }
}
