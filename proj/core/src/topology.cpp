#include "finspec/topology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "finspec/errors.hpp"
#include "json.hpp"

namespace finspec {

bool pointset_less(const PointSet& a, const PointSet& b) {
  const std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto ia = a.find_first(), ib = b.find_first();
  while (ia != PointSet::npos) {
    if (ia != ib) return ia < ib;
    ia = a.find_next(ia);
    ib = b.find_next(ib);
  }
  return false;
}

std::vector<std::size_t> pointset_members(const PointSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i))
    out.push_back(i);
  return out;
}

bool FiniteSpace::is_closed(const PointSet& s) const {
  return std::find(closed_sets.begin(), closed_sets.end(), s) != closed_sets.end();
}

FiniteSpace make_space(std::size_t point_count, std::vector<PointSet> subbase,
                       const Caps& caps) {
  FiniteSpace space;
  space.point_count = point_count;
  for (const PointSet& s : subbase)
    if (s.size() != point_count)
      throw domain_error("subbase set has wrong carrier size");

  std::set<PointSet> seen(subbase.begin(), subbase.end());
  space.subbase.assign(seen.begin(), seen.end());
  std::sort(space.subbase.begin(), space.subbase.end(), pointset_less);

  // Worklist fixpoint under pairwise union and intersection.
  std::set<PointSet> family(seen);
  std::vector<PointSet> work(family.begin(), family.end());
  auto push = [&](PointSet s) {
    if (family.insert(s).second) {
      if (family.size() > caps.max_closed_sets)
        throw resource_error("closed-set family exceeds max_closed_sets cap of " +
                             std::to_string(caps.max_closed_sets));
      work.push_back(std::move(s));
    }
  };
  push(space.whole());
  push(space.empty());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      push(work[i] | work[j]);
      push(work[i] & work[j]);
    }

  space.closed_sets.assign(family.begin(), family.end());
  std::sort(space.closed_sets.begin(), space.closed_sets.end(), pointset_less);
  return space;
}

PointSet closure(const FiniteSpace& space, const PointSet& s) {
  PointSet acc = space.whole();
  for (const PointSet& k : space.closed_sets)
    if (s.is_subset_of(k)) acc &= k;
  return acc;
}

IrreducibilityResult is_irreducible(const FiniteSpace& space, const PointSet& k) {
  if (!space.is_closed(k)) throw domain_error("is_irreducible requires a closed set");
  IrreducibilityResult res;
  if (k.none()) return res;  // empty: not irreducible, no witness

  // Maximal closed sets strictly below k.
  std::vector<PointSet> below;
  for (const PointSet& c : space.closed_sets)
    if (c != k && c.is_subset_of(k)) below.push_back(c);
  std::vector<PointSet> maximal;
  for (const PointSet& c : below) {
    bool is_max = true;
    for (const PointSet& d : below)
      if (c != d && c.is_subset_of(d)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(c);
  }
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((maximal[i] | maximal[j]) == k) {
        res.witness = {maximal[j], maximal[i]};
        return res;
      }
  res.irreducible = true;
  return res;
}

FipResult subbase_fip_check(const FiniteSpace& space, const Caps& caps) {
  // Work over the nonempty subbase members; an empty member makes every
  // family containing it degenerate.
  std::vector<PointSet> sets;
  for (const PointSet& s : space.subbase)
    if (s.any()) sets.push_back(s);
  const std::size_t k = sets.size();
  if (k > caps.fip_subbase_limit)
    throw resource_error("subbase of size " + std::to_string(k) +
                         " exceeds fip_subbase_limit cap of " +
                         std::to_string(caps.fip_subbase_limit));

  FipResult res;
  std::vector<PointSet> inter(std::size_t{1} << k);
  inter[0] = space.whole();
  for (std::size_t mask = 1; mask < inter.size(); ++mask) {
    const std::size_t low = mask & (mask - 1);
    const std::size_t bit = mask ^ low;
    std::size_t idx = 0;
    while ((std::size_t{1} << idx) != bit) ++idx;
    inter[mask] = inter[low] & sets[idx];
    if (inter[mask].any()) continue;
    // Inclusion-minimal iff dropping any single member restores nonemptiness.
    bool minimal = true;
    for (std::size_t b = 0; b < k && minimal; ++b)
      if ((mask >> b) & 1)
        if (inter[mask & ~(std::size_t{1} << b)].none()) minimal = false;
    if (!minimal) continue;
    const std::size_t sz = static_cast<std::size_t>(__builtin_popcountll(mask));
    res.vacuous = false;
    if (sz > res.minimal_witness_size) {
      res.minimal_witness_size = sz;
      res.witness.clear();
      for (std::size_t b = 0; b < k; ++b)
        if ((mask >> b) & 1) {
          auto it = std::find(space.subbase.begin(), space.subbase.end(), sets[b]);
          res.witness.push_back(static_cast<std::size_t>(it - space.subbase.begin()));
        }
    }
  }
  return res;
}

TopologyReport report(const FiniteSpace& space, const Caps& caps) {
  TopologyReport rep;
  const std::size_t n = space.point_count;

  // T0 via pairwise closure comparison of points.
  std::vector<PointSet> point_closure(n);
  for (std::size_t x = 0; x < n; ++x) {
    PointSet s(n);
    s.set(x);
    point_closure[x] = closure(space, s);
  }
  rep.t0 = true;
  for (std::size_t x = 0; x < n && rep.t0; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (point_closure[x] == point_closure[y]) {
        rep.t0 = false;
        rep.t0_witness = {x, y};
        break;
      }

  const std::set<PointSet> family(space.closed_sets.begin(), space.closed_sets.end());
  auto closed = [&family](const PointSet& s) { return family.count(s) != 0; };

  // Connected: no nontrivial closed set with closed complement.
  rep.connected = true;
  for (const PointSet& k : space.closed_sets) {
    if (k.none() || k.all()) continue;
    if (closed(~k)) {
      rep.connected = false;
      rep.clopen_witness = k;
      break;
    }
  }

  // Irreducible closed sets and their generic points.
  rep.generic_point.assign(space.closed_sets.size(), std::nullopt);
  rep.sober = true;
  for (std::size_t i = 0; i < space.closed_sets.size(); ++i) {
    const PointSet& k = space.closed_sets[i];
    if (k.none()) continue;
    if (!is_irreducible(space, k).irreducible) continue;
    rep.irreducible_closed_sets.push_back(k);
    std::size_t count = 0;
    for (auto x = k.find_first(); x != PointSet::npos; x = k.find_next(x))
      if (point_closure[x] == k) {
        ++count;
        rep.generic_point[i] = x;
      }
    if (count != 1) {
      rep.sober = false;
      rep.generic_point[i] = std::nullopt;
      if (!rep.sober_witness) rep.sober_witness = k;
    }
  }

  // Spectral, two routes.  Route (b) is the finite-space characterization.
  rep.spectral_finite = rep.t0 && rep.sober;
  // Route (a): quasi-compactness via the exhaustive subbase scan, plus the
  // open-set family facts: opens are closed under pairwise intersection and
  // every open is trivially a union of quasi-compact opens (every subset of a
  // finite space is quasi-compact).
  rep.fip = subbase_fip_check(space, caps);
  bool opens_ok = true;
  for (const PointSet& k1 : space.closed_sets) {
    for (const PointSet& k2 : space.closed_sets)
      if (!closed(k1 | k2)) {
        opens_ok = false;  // complement of open intersection not open
        break;
      }
    if (!opens_ok) break;
  }
  rep.spectral_direct = opens_ok && rep.sober && rep.t0;
  rep.routes_agree = rep.spectral_direct == rep.spectral_finite;
  rep.spectral = rep.spectral_finite;
  return rep;
}

std::string specialization_dot(const FiniteSpace& space,
                               const std::vector<std::string>& point_labels) {
  std::ostringstream os;
  os << "digraph specialization {\n  node [shape=ellipse];\n";
  for (std::size_t x = 0; x < space.point_count; ++x) {
    std::string label = x < point_labels.size() ? point_labels[x] : std::to_string(x);
    os << "  p" << x << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t x = 0; x < space.point_count; ++x) {
    PointSet s(space.point_count);
    s.set(x);
    const PointSet cl = closure(space, s);
    for (auto y = cl.find_first(); y != PointSet::npos; y = cl.find_next(y))
      if (y != x) os << "  p" << x << " -> p" << y << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

nlohmann::ordered_json set_to_json(const PointSet& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i : pointset_members(s)) arr.push_back(i);
  return arr;
}

}  // namespace

std::string space_to_json(const FiniteSpace& space,
                          const std::vector<std::string>& point_labels,
                          const TopologyReport* rep) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < space.point_count; ++x)
    pts.push_back(x < point_labels.size() ? point_labels[x] : std::to_string(x));
  j["points"] = std::move(pts);
  nlohmann::ordered_json sb = nlohmann::ordered_json::array();
  for (const PointSet& s : space.subbase) sb.push_back(set_to_json(s));
  j["subbase"] = std::move(sb);
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const PointSet& s : space.closed_sets) cs.push_back(set_to_json(s));
  j["closed_sets"] = std::move(cs);
  if (rep) {
    nlohmann::ordered_json r;
    r["t0"] = rep->t0;
    r["connected"] = rep->connected;
    r["sober"] = rep->sober;
    r["spectral"] = rep->spectral;
    r["spectral_routes_agree"] = rep->routes_agree;
    nlohmann::ordered_json irr = nlohmann::ordered_json::array();
    for (const PointSet& s : rep->irreducible_closed_sets) irr.push_back(set_to_json(s));
    r["irreducible_closed_sets"] = std::move(irr);
    nlohmann::ordered_json gp = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < space.closed_sets.size(); ++i)
      if (rep->generic_point[i])
        gp[set_to_json(space.closed_sets[i]).dump()] = *rep->generic_point[i];
    r["generic_points"] = std::move(gp);
    if (rep->t0_witness)
      r["t0_witness"] = {rep->t0_witness->first, rep->t0_witness->second};
    if (rep->clopen_witness) r["clopen_witness"] = set_to_json(*rep->clopen_witness);
    if (rep->sober_witness) r["sober_witness"] = set_to_json(*rep->sober_witness);
    r["fip"] = {{"vacuous", rep->fip.vacuous},
                {"minimal_witness_size", rep->fip.minimal_witness_size}};
    j["report"] = std::move(r);
  }
  return j.dump(2) + "\n";
}

}  // namespace finspec
