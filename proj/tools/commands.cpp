#include "commands.hpp"

#include <cstdlib>
#include <sstream>

#include "finspec/errors.hpp"
#include "finspec/hom.hpp"
#include "finspec/ideal.hpp"
#include "finspec/polynomial.hpp"
#include "finspec/ring_spec.hpp"
#include "finspec/spectrum.hpp"
#include "json.hpp"

namespace finspec::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void apply_cap(Caps& caps, const std::string& key, const std::string& value) {
  const auto v = static_cast<std::size_t>(std::stoull(value));
  if (key == "max_ring_size")
    caps.max_ring_size = v;
  else if (key == "max_closed_sets")
    caps.max_closed_sets = v;
  else if (key == "subset_bound")
    caps.subset_bound = v;
  else if (key == "exhaustive_point_limit")
    caps.exhaustive_point_limit = v;
  else if (key == "fip_subbase_limit")
    caps.fip_subbase_limit = v;
  else
    throw domain_error("unknown cap: " + key);
}

Output failure(const std::string& message) { return {"error: " + message + "\n", 1}; }

}  // namespace

Caps resolve_caps(const std::string& caps_flag) {
  Caps caps;
  const std::pair<const char*, const char*> envs[] = {
      {"FINSPEC_MAX_RING_SIZE", "max_ring_size"},
      {"FINSPEC_MAX_CLOSED_SETS", "max_closed_sets"},
      {"FINSPEC_SUBSET_BOUND", "subset_bound"},
      {"FINSPEC_EXHAUSTIVE_POINT_LIMIT", "exhaustive_point_limit"},
      {"FINSPEC_FIP_SUBBASE_LIMIT", "fip_subbase_limit"}};
  for (const auto& [env, key] : envs)
    if (const char* v = std::getenv(env)) apply_cap(caps, key, v);
  for (const std::string& kv : split(caps_flag, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw domain_error("bad --caps entry: " + kv);
    apply_cap(caps, kv.substr(0, eq), kv.substr(eq + 1));
  }
  return caps;
}

Output cmd_table1(const std::string& ring_spec, const std::string& format,
                  const Caps& caps) {
  try {
    const FiniteRing ring = parse_ring_spec(ring_spec, caps);
    const Table1 t = table1(ring, caps);
    if (format == "json") return {table1_json(t), 0};
    return {table1_text(t), 0};
  } catch (const error& e) {
    return failure(e.what());
  }
}

Output cmd_verify(const CorpusConfig& config, const std::vector<std::string>& checks,
                  const std::string& format) {
  for (const std::string& c : checks) {
    const auto known = known_checks();
    if (std::find(known.begin(), known.end(), c) == known.end())
      return failure("unknown check: " + c);
  }
  const VerifyReport rep = run_verify(config, checks);
  std::string text = format == "json" ? rep.to_json() : rep.to_text();
  return {std::move(text), rep.ok() ? 0 : 1};
}

Output cmd_export(const std::string& ring_spec, const std::string& what,
                  const std::string& format, const Caps& caps) {
  try {
    const FiniteRing ring = parse_ring_spec(ring_spec, caps);
    if (what == "ring") return {ring.to_json(), 0};
    if (what == "idl-lattice") {
      const IdealFamily idl = enumerate_ideals(ring, caps);
      if (format == "dot") return {hasse_dot(idl), 0};
      return {idl.to_json(), 0};
    }
    if (what == "spi-topology" || what == "spec-topology" || what == "specialization") {
      const SpectrumTopology st = what == "spec-topology"
                                      ? build_zariski(ring, caps)
                                      : build_kspace(ring, Flavor::Spi, caps);
      if (what == "specialization" || format == "dot")
        return {specialization_dot(st.space, st.point_labels()), 0};
      const TopologyReport rep = report(st.space, caps);
      return {st.to_json(&rep), 0};
    }
    return failure("unknown export target: " + what);
  } catch (const error& e) {
    return failure(e.what());
  }
}

Output cmd_spectrum(const std::string& ring_spec, const std::string& format,
                    const Caps& caps) {
  try {
    const FiniteRing ring = parse_ring_spec(ring_spec, caps);
    const IdealFamily idl = enumerate_ideals(ring, caps);
    const SpectrumTopology st = build_kspace(ring, Flavor::Spi, caps);
    const TopologyReport topo = report(st.space, caps);
    const Table2Report t2 = compare_spaces(ring, caps);

    if (format == "json") {
      nlohmann::ordered_json j;
      j["ring"] = ring.label();
      for (Flavor f : {Flavor::Idl, Flavor::Spi, Flavor::Spec, Flavor::Spm}) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Ideal& a : restrict_family(idl, f).ideals) arr.push_back(a.members());
        j[flavor_name(f)] = std::move(arr);
      }
      j["kspace"] = nlohmann::ordered_json::parse(st.to_json(&topo));
      j["table2"] = nlohmann::ordered_json::parse(table2_json(t2));
      return {j.dump(2) + "\n", 0};
    }

    std::ostringstream os;
    os << ring.label() << ": |A| = " << ring.size() << "\n";
    for (Flavor f : {Flavor::Idl, Flavor::Spi, Flavor::Spec, Flavor::Spm}) {
      os << "  " << flavor_name(f) << " = {";
      const auto fam = restrict_family(idl, f);
      for (std::size_t i = 0; i < fam.ideals.size(); ++i)
        os << (i ? "," : "") << fam.ideals[i].name();
      os << "}\n";
    }
    os << "  k-space on Spi: T0 " << (topo.t0 ? "yes" : "no") << ", connected "
       << (topo.connected ? "yes" : "no") << ", sober " << (topo.sober ? "yes" : "no")
       << ", spectral " << (topo.spectral ? "yes" : "no") << "\n";
    os << table2_text(t2);
    return {os.str(), 0};
  } catch (const error& e) {
    return failure(e.what());
  }
}

Output cmd_hom(const std::string& source_spec, const std::string& target_spec,
               const std::vector<std::string>& sends, const std::string& format,
               const Caps& caps) {
  try {
    const FiniteRing source = parse_ring_spec(source_spec, caps);
    const FiniteRing target = parse_ring_spec(target_spec, caps);
    std::vector<std::pair<Elem, Elem>> images;
    for (const std::string& s : sends) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) return failure("bad --send entry: " + s);
      const std::string lhs = s.substr(0, eq);
      Elem from;
      if (lhs == "x") {
        // The class of the indeterminate, found by display name.
        bool found = false;
        from = 0;
        for (Elem a = 0; a < source.size(); ++a)
          if (source.name(a) == "x") {
            from = a;
            found = true;
            break;
          }
        if (!found) return failure("source ring has no element named x");
      } else {
        from = static_cast<Elem>(std::stoul(lhs));
      }
      images.emplace_back(from, static_cast<Elem>(std::stoul(s.substr(eq + 1))));
    }
    const RingHom phi = RingHom::from_generators(source, target, images);
    const SpectrumTopology src = build_kspace(source, Flavor::Spi, caps);
    const SpectrumTopology tgt = build_kspace(target, Flavor::Spi, caps);
    const PullbackResult pb = pullback(phi, src, tgt);
    const DensityResult dens = density_check(phi, caps);

    nlohmann::ordered_json j;
    j["hom"] = phi.describe();
    j["map"] = phi.map();
    j["kernel"] = phi.kernel().members();
    j["surjective"] = phi.surjective();
    j["injective"] = phi.injective();
    nlohmann::ordered_json pbj;
    pbj["continuity"] = pb.ok();
    nlohmann::ordered_json pm = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < pb.point_map.size(); ++t)
      pm.push_back({{"from", tgt.points.ideals[t].name()},
                    {"to", src.points.ideals[pb.point_map[t]].name()}});
    pbj["point_map"] = std::move(pm);
    j["pullback"] = std::move(pbj);
    j["density"] = {{"dense", dens.dense},
                    {"kernel", dens.kernel_text},
                    {"intersection_of_spi", dens.intersection_text},
                    {"biconditional_ok", dens.biconditional_ok}};
    if (phi.surjective()) {
      const HomeoCertificate cert = surjection_homeo_check(phi, caps);
      j["homeo_onto_v_ker"] = {{"ok", cert.ok()}, {"notes", cert.notes}};
    }
    if (format == "json") return {j.dump(2) + "\n", 0};

    std::ostringstream os;
    os << phi.describe() << "\n  map:";
    for (Elem a = 0; a < source.size(); ++a)
      os << " " << source.name(a) << "->" << target.name(phi(a));
    os << "\n  kernel " << phi.kernel().name() << ", "
       << (phi.surjective() ? "surjective" : "not surjective") << ", "
       << (phi.injective() ? "injective" : "not injective") << "\n";
    os << "  pullback continuity: " << (pb.ok() ? "ok" : "FAILED") << "\n";
    for (std::size_t t = 0; t < pb.point_map.size(); ++t)
      os << "    phi*(" << tgt.points.ideals[t].name() << ") = "
         << src.points.ideals[pb.point_map[t]].name() << "\n";
    os << "  dense image: " << (dens.dense ? "yes" : "no")
       << " (ker = " << dens.kernel_text << ", intersection of Spi A = "
       << dens.intersection_text << ")\n";
    return {os.str(), 0};
  } catch (const error& e) {
    return failure(e.what());
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

Output cmd_localize(const std::string& ring_spec, const std::string& set_csv,
                    const std::string& format, const Caps& caps) {
  try {
    const FiniteRing ring = parse_ring_spec(ring_spec, caps);
    std::vector<Elem> gens;
    for (const std::string& s : split(set_csv, ','))
      gens.push_back(static_cast<Elem>(std::stoul(s)));
    const MultiplicativeSet mset = MultiplicativeSet::closure_of(ring, gens);
    const LocalizationResult loc = localize(ring, mset);
    const EmbeddingCertificate cert = localization_embedding_check(ring, mset, caps);

    if (format == "json") {
      nlohmann::ordered_json j;
      j["ring"] = ring.label();
      j["set"] = mset.members();
      j["localization"] = loc.local.label();
      j["kernel"] = loc.annihilator_kernel.members();
      j["units_verified"] = loc.units_verified;
      j["embedding"] = {{"image_avoids_s", cert.image_avoids_s},
                        {"injective", cert.injective},
                        {"continuous", cert.continuous},
                        {"closed", cert.closed_map},
                        {"ok", cert.ok()}};
      return {j.dump(2) + "\n", cert.ok() && loc.units_verified ? 0 : 1};
    }
    std::ostringstream os;
    os << ring.label() << " localized at S = {";
    const auto mem = mset.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
      os << (i ? "," : "") << ring.name(mem[i]);
    os << "}: A_S = " << loc.local.label() << ", kernel "
       << loc.annihilator_kernel.name() << "\n";
    os << "  S maps to units: " << (loc.units_verified ? "yes" : "NO") << "\n";
    os << "  embedding Spi(A_S) -> (Spi A)_S: "
       << (cert.ok() ? "closed, continuous, injective" : "FAILED") << "\n";
    for (const std::string& n : cert.notes) os << "    " << n << "\n";
    return {os.str(), cert.ok() && loc.units_verified ? 0 : 1};
  } catch (const error& e) {
    return failure(e.what());
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

CorpusConfig corpus_from_json(const std::string& text, const Caps& base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw domain_error(std::string("bad corpus JSON: ") + e.what());
  }
  CorpusConfig config;
  config.caps = base;
  if (j.contains("rings"))
    config.ring_specs = j.at("rings").get<std::vector<std::string>>();
  else
    config.ring_specs = default_corpus().ring_specs;
  if (j.contains("caps"))
    for (const auto& [key, value] : j.at("caps").items())
      apply_cap(config.caps, key, std::to_string(value.get<std::size_t>()));
  return config;
}

}  // namespace finspec::cli
