#include "finspec/verify.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "finspec/errors.hpp"
#include "finspec/ring_spec.hpp"
#include "json.hpp"

namespace finspec {

CorpusConfig default_corpus() {
  CorpusConfig config;
  config.ring_specs = {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8",
                       "Z9", "Z10", "Z11", "Z12", "Z2xZ2", "Z2[x]/(x^2)",
                       "Z2[x]/(x^2+x+1)"};
  return config;
}

std::vector<std::string> known_checks() {
  return {"axioms", "prop22", "topology",  "zariski",     "table2",
          "connectedness", "morphisms", "homs", "localization"};
}

bool RingVerifyResult::ok() const {
  if (error) return false;
  if (!all_ok(ring_checks) || !all_ok(morphism_checks)) return false;
  if (prop22 && !prop22->all_pass()) return false;
  if (kspace && !kspace->all_pass()) return false;
  if (zariski && !zariski->all_pass()) return false;
  if (table2 && !table2->all_ok()) return false;
  return true;
}

bool HomVerifyResult::ok() const { return !error && all_ok(items); }

namespace {

bool selected(const std::vector<std::string>& checks, const std::string& name) {
  return checks.empty() || std::find(checks.begin(), checks.end(), name) != checks.end();
}

std::string elem_list(const FiniteRing& ring, const std::vector<Elem>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += ring.name(xs[i]);
  }
  return out + "}";
}

RingVerifyResult verify_ring(const std::string& spec,
                             const std::vector<std::string>& checks,
                             const Caps& caps) {
  RingVerifyResult res;
  res.spec = spec;
  try {
    const FiniteRing ring = parse_ring_spec(spec, caps);
    res.label = ring.label();

    if (selected(checks, "axioms")) {
      CheckItem it;
      it.id = "axioms";
      it.verdict = Verdict::Pass;  // construction re-verified every law
      it.notes = {"units " + elem_list(ring, ring.units()),
                  "zero divisors " + elem_list(ring, ring.zero_divisors()),
                  "idempotents " + elem_list(ring, ring.idempotents()),
                  "nilpotents " + elem_list(ring, ring.nilpotents())};
      res.ring_checks.push_back(std::move(it));

      CheckItem fam;
      fam.id = "ideal-lattice";
      const IdealFamily idl = enumerate_ideals(ring, caps);
      std::string names;
      for (const Ideal& a : idl.ideals) names += (names.empty() ? "" : ",") + a.name();
      fam.notes = {std::to_string(idl.ideals.size()) + " ideals: " + names};
      for (const Ideal& a : idl.ideals)
        if (!is_ideal_set(ring, a.bits())) {
          fam.verdict = Verdict::Fail;
          fam.notes.push_back("enumerated set is not an ideal: " + a.name());
        }
      res.ring_checks.push_back(std::move(fam));
    }

    if (selected(checks, "prop22")) res.prop22 = prop22_suite(ring, caps);
    if (selected(checks, "topology")) res.kspace = check_spi_theorems(ring, caps);
    if (selected(checks, "zariski")) res.zariski = check_zariski(ring, caps);
    if (selected(checks, "table2")) res.table2 = compare_spaces(ring, caps);

    if (selected(checks, "connectedness")) {
      CheckItem it;
      it.id = "connectedness";
      const auto k = res.kspace ? res.kspace->topo : report(build_kspace(ring, Flavor::Spi, caps).space, caps);
      const auto z = res.zariski ? *res.zariski : check_zariski(ring, caps);
      const bool ok = k.connected && (z.connected == z.trivial_idempotents_only);
      it.verdict = ok ? Verdict::Pass : Verdict::Fail;
      it.notes = {std::string("Spi connected: ") + (k.connected ? "yes" : "no"),
                  std::string("Spec connected: ") + (z.connected ? "yes" : "no") +
                      " (nontrivial idempotents: " +
                      (z.trivial_idempotents_only ? "none" : "present") + ")"};
      res.ring_checks.push_back(std::move(it));
    }

    if (selected(checks, "morphisms")) {
      CheckItem nil;
      nil.id = "spec-nilradical-homeo";
      const auto cert = spec_nilradical_check(ring, caps);
      nil.verdict = cert.ok() ? Verdict::Pass : Verdict::Fail;
      nil.notes = {"nilradical " + cert.nilradical_text};
      res.morphism_checks.push_back(std::move(nil));

      // Corollary: Spi(A/a) homeomorphic to V(a), for every proper ideal.
      CheckItem cor;
      cor.id = "quotient-corollary";
      cor.verdict = Verdict::Pass;
      std::size_t checked = 0;
      for (const Ideal& a : enumerate_ideals(ring, caps).ideals) {
        if (!a.is_proper()) continue;
        if (!quotient_corollary_check(ring, a, caps).ok()) {
          cor.verdict = Verdict::Fail;
          cor.notes.push_back("fails at a = " + a.name());
        }
        ++checked;
      }
      cor.notes.push_back("checked " + std::to_string(checked) + " quotients");
      res.morphism_checks.push_back(std::move(cor));
    }
  } catch (const error& e) {
    res.error = e.what();
  }
  return res;
}

struct NamedHom {
  std::string name;
  RingHom hom;
};

std::vector<NamedHom> hom_corpus(const Caps& caps) {
  std::vector<NamedHom> out;
  const auto zmod = [&caps](std::uint64_t n) { return FiniteRing::zmod(n, caps); };
  auto surj = [&](std::uint64_t n, std::uint64_t m) {
    out.push_back({"Z" + std::to_string(n) + "->Z" + std::to_string(m),
                   RingHom::zmod_surjection(zmod(n), zmod(m))});
  };
  surj(4, 2);
  surj(6, 2);
  surj(6, 3);
  surj(8, 2);
  surj(12, 6);
  surj(12, 4);
  out.push_back({"id:Z4", RingHom::identity(zmod(4))});
  out.push_back({"id:Z6", RingHom::identity(zmod(6))});
  out.push_back({"Z2->Z2xZ2",
                 RingHom::from_generators(zmod(2), FiniteRing::product(zmod(2), zmod(2), caps), {})});
  out.push_back({"Z2->F4",
                 RingHom::from_generators(
                     zmod(2),
                     parse_ring_spec("Z2[x]/(x^2+x+1)", caps), {})});
  return out;
}

std::vector<HomVerifyResult> verify_homs(const Caps& caps) {
  std::vector<HomVerifyResult> out;
  for (const NamedHom& nh : hom_corpus(caps)) {
    HomVerifyResult res;
    res.name = nh.name;
    try {
      const RingHom& phi = nh.hom;
      const SpectrumTopology src = build_kspace(phi.source(), Flavor::Spi, caps);
      const SpectrumTopology tgt = build_kspace(phi.target(), Flavor::Spi, caps);

      const PullbackResult pb = pullback(phi, src, tgt);
      CheckItem cont{"pullback-continuity",
                     pb.ok() ? Verdict::Pass : Verdict::Fail, pb.notes};
      res.items.push_back(std::move(cont));

      const DensityResult d = density_check(phi, caps);
      CheckItem dens{"density-biconditional",
                     d.biconditional_ok ? Verdict::Pass : Verdict::Fail,
                     {std::string("dense: ") + (d.dense ? "yes" : "no") +
                          ", ker = " + d.kernel_text + ", intersection of Spi A = " +
                          d.intersection_text + ", Cl(image) = " + d.closure_text}};
      res.items.push_back(std::move(dens));

      if (phi.surjective()) {
        const HomeoCertificate cert = surjection_homeo_check(phi, caps);
        res.items.push_back(
            {"homeo-onto-v-ker", cert.ok() ? Verdict::Pass : Verdict::Fail, cert.notes});
        const SurjectiveImageIdentities ids = surjective_image_identities(phi, caps);
        res.items.push_back({"surjective-image-identities",
                             ids.ok() ? Verdict::Pass : Verdict::Fail,
                             {}});
      }
    } catch (const error& e) {
      res.error = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<HomVerifyResult> verify_localizations(const Caps& caps) {
  std::vector<HomVerifyResult> out;
  std::vector<FiniteRing> targets;
  for (const std::string& spec : default_corpus().ring_specs) {
    const FiniteRing r = parse_ring_spec(spec, caps);
    if (r.size() <= 8) targets.push_back(r);
  }
  struct Case {
    std::string ring_spec;
    std::vector<Elem> generators;
  };
  const std::vector<Case> cases = {{"Z6", {3}}, {"Z4", {3}}, {"Z6", {1}}};
  for (const Case& c : cases) {
    HomVerifyResult res;
    res.name = "localize:" + c.ring_spec + ":S=" + [&] {
      std::string s;
      for (Elem g : c.generators) s += (s.empty() ? "" : ",") + std::to_string(g);
      return s;
    }();
    try {
      const FiniteRing ring = parse_ring_spec(c.ring_spec, caps);
      const MultiplicativeSet s = MultiplicativeSet::closure_of(ring, c.generators);
      const LocalizationResult loc = localize(ring, s);
      res.items.push_back({"units-invertible",
                           loc.units_verified ? Verdict::Pass : Verdict::Fail,
                           {"A_S = " + loc.local.label() + ", kernel " +
                            loc.annihilator_kernel.name()}});
      const EmbeddingCertificate cert = localization_embedding_check(ring, s, caps);
      res.items.push_back(
          {"embedding", cert.ok() ? Verdict::Pass : Verdict::Fail, cert.notes});
      const UniversalPropertyReport up =
          localization_universal_check(ring, s, targets);
      res.items.push_back(
          {"universal-property", up.ok ? Verdict::Pass : Verdict::Fail,
           {"checked " + std::to_string(up.homs_checked) + " homs, " +
            std::to_string(up.factoring) + " factor through A_S"}});
    } catch (const error& e) {
      res.error = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

void tally(const std::vector<CheckItem>& items, VerifyReport& rep) {
  for (const CheckItem& it : items) {
    switch (it.verdict) {
      case Verdict::Pass: ++rep.pass_count; break;
      case Verdict::Fail: ++rep.fail_count; break;
      case Verdict::KnownDiscrepancy: ++rep.known_discrepancy_count; break;
    }
  }
}

nlohmann::ordered_json items_json(const std::vector<CheckItem>& items) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckItem& it : items)
    arr.push_back({{"id", it.id},
                   {"verdict", verdict_name(it.verdict)},
                   {"notes", it.notes}});
  return arr;
}

}  // namespace

VerifyReport run_verify(const CorpusConfig& config,
                        const std::vector<std::string>& checks) {
  VerifyReport rep;
  rep.config = config;
  rep.checks_run = checks.empty() ? known_checks() : checks;

  std::vector<std::future<RingVerifyResult>> futures;
  futures.reserve(config.ring_specs.size());
  for (const std::string& spec : config.ring_specs)
    futures.push_back(std::async(std::launch::async, verify_ring, spec, checks,
                                 config.caps));
  for (auto& f : futures) rep.rings.push_back(f.get());

  if (selected(checks, "homs"))
    for (auto& h : verify_homs(config.caps)) rep.homs.push_back(std::move(h));
  if (selected(checks, "localization"))
    for (auto& h : verify_localizations(config.caps)) rep.homs.push_back(std::move(h));

  for (const RingVerifyResult& r : rep.rings) {
    if (r.error) {
      ++rep.error_count;
      continue;
    }
    tally(r.ring_checks, rep);
    tally(r.morphism_checks, rep);
    if (r.prop22) tally(r.prop22->items, rep);
    if (r.kspace) tally(r.kspace->items, rep);
    if (r.zariski) tally(r.zariski->items, rep);
    if (r.table2)
      for (const auto& row : r.table2->rows)
        row.ok ? ++rep.pass_count : ++rep.fail_count;
  }
  for (const HomVerifyResult& h : rep.homs) {
    if (h.error) {
      ++rep.error_count;
      continue;
    }
    tally(h.items, rep);
  }
  return rep;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["corpus"] = config.ring_specs;
  j["caps"] = {{"max_ring_size", config.caps.max_ring_size},
               {"max_closed_sets", config.caps.max_closed_sets},
               {"subset_bound", config.caps.subset_bound},
               {"exhaustive_point_limit", config.caps.exhaustive_point_limit},
               {"fip_subbase_limit", config.caps.fip_subbase_limit}};
  j["checks"] = checks_run;

  nlohmann::ordered_json rings = nlohmann::ordered_json::array();
  for (const RingVerifyResult& r : this->rings) {
    nlohmann::ordered_json jr;
    jr["spec"] = r.spec;
    jr["label"] = r.label;
    if (r.error) {
      jr["error"] = *r.error;
      rings.push_back(std::move(jr));
      continue;
    }
    jr["checks"] = items_json(r.ring_checks);
    if (!r.morphism_checks.empty()) jr["morphisms"] = items_json(r.morphism_checks);
    if (r.prop22) {
      nlohmann::ordered_json p;
      p["interpretations"] = r.prop22->interpretations;
      p["items"] = items_json(r.prop22->items);
      jr["prop22"] = std::move(p);
    }
    if (r.kspace) jr["kspace"] = items_json(r.kspace->items);
    if (r.zariski) jr["zariski"] = items_json(r.zariski->items);
    if (r.table2) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : r.table2->rows)
        rows.push_back({{"label", row.label},
                        {"zariski", row.zariski},
                        {"kspace", row.kspace},
                        {"ok", row.ok}});
      jr["table2"] = std::move(rows);
    }
    jr["ok"] = r.ok();
    rings.push_back(std::move(jr));
  }
  j["rings"] = std::move(rings);

  nlohmann::ordered_json homs = nlohmann::ordered_json::array();
  for (const HomVerifyResult& h : this->homs) {
    nlohmann::ordered_json jh;
    jh["name"] = h.name;
    if (h.error)
      jh["error"] = *h.error;
    else
      jh["items"] = items_json(h.items);
    jh["ok"] = h.ok();
    homs.push_back(std::move(jh));
  }
  j["homs"] = std::move(homs);
  j["summary"] = {{"pass", pass_count},
                  {"fail", fail_count},
                  {"known_discrepancy", known_discrepancy_count},
                  {"errors", error_count},
                  {"ok", ok()}};
  return j.dump(2) + "\n";
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const RingVerifyResult& r : rings) {
    os << "== " << (r.label.empty() ? r.spec : r.label) << " ==\n";
    if (r.error) {
      os << "  error: " << *r.error << "\n";
      continue;
    }
    auto emit = [&os](const std::vector<CheckItem>& items, const std::string& prefix) {
      for (const CheckItem& it : items) {
        os << "  " << prefix << it.id << ": " << verdict_name(it.verdict) << "\n";
        for (const std::string& n : it.notes) os << "      " << n << "\n";
      }
    };
    emit(r.ring_checks, "");
    if (r.prop22) emit(r.prop22->items, "prop22/");
    if (r.kspace) emit(r.kspace->items, "kspace/");
    if (r.zariski) emit(r.zariski->items, "zariski/");
    emit(r.morphism_checks, "morphisms/");
    if (r.table2) os << table2_text(*r.table2);
  }
  for (const HomVerifyResult& h : homs) {
    os << "== hom " << h.name << " ==\n";
    if (h.error) {
      os << "  error: " << *h.error << "\n";
      continue;
    }
    for (const CheckItem& it : h.items) {
      os << "  " << it.id << ": " << verdict_name(it.verdict) << "\n";
      for (const std::string& n : it.notes) os << "      " << n << "\n";
    }
  }
  os << "summary: pass " << pass_count << ", fail " << fail_count
     << ", known-discrepancy " << known_discrepancy_count << ", errors "
     << error_count << " -> " << (ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

}  // namespace finspec
