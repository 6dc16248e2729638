#include "finspec/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "finspec/errors.hpp"
#include "json.hpp"

namespace finspec {

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!a.ring().same_ring(b.ring()))
    throw domain_error("ideals belong to different rings");
}

std::vector<Elem> set_members(const ElemSet& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElemSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Elem>(i));
  return out;
}

}  // namespace

Ideal::Ideal(FiniteRing ring, ElemSet members)
    : ring_(std::move(ring)), members_(std::move(members)) {
  if (members_.size() != ring_.size())
    throw domain_error("ideal member set has wrong carrier size");
  if (!is_ideal_set(ring_, members_))
    throw domain_error("set is not an ideal of its ring");
}

std::vector<Elem> Ideal::members() const { return set_members(members_); }

bool Ideal::subset_of(const Ideal& other) const {
  require_same_ring(*this, other);
  return members_.is_subset_of(other.members_);
}

bool ideal_less(const Ideal& a, const Ideal& b) {
  const std::size_t ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  auto ia = a.bits().find_first(), ib = b.bits().find_first();
  while (ia != ElemSet::npos) {
    if (ia != ib) return ia < ib;
    ia = a.bits().find_next(ia);
    ib = b.bits().find_next(ib);
  }
  return false;
}

bool is_ideal_set(const FiniteRing& ring, const ElemSet& s) {
  if (s.size() != ring.size() || !s.test(ring.zero())) return false;
  const auto mem = set_members(s);
  for (Elem a : mem) {
    for (Elem b : mem)
      if (!s.test(ring.sub(a, b))) return false;
    for (Elem r = 0; r < ring.size(); ++r)
      if (!s.test(ring.mul(r, a))) return false;
  }
  return true;
}

Ideal generate(const FiniteRing& ring, std::span<const Elem> s) {
  ElemSet bits(ring.size());
  bits.set(ring.zero());
  for (Elem x : s) {
    if (x >= ring.size()) throw domain_error("generator out of range");
    bits.set(x);
  }
  // Alternate closing under addition and under multiplication by the whole
  // ring until fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    auto mem = set_members(bits);
    for (Elem a : mem) {
      for (Elem b : mem) {
        const Elem c = ring.add(a, b);
        if (!bits.test(c)) {
          bits.set(c);
          changed = true;
        }
      }
      for (Elem r = 0; r < ring.size(); ++r) {
        const Elem c = ring.mul(r, a);
        if (!bits.test(c)) {
          bits.set(c);
          changed = true;
        }
      }
    }
  }
  return Ideal(ring, std::move(bits));
}

Ideal zero_ideal(const FiniteRing& ring) {
  ElemSet bits(ring.size());
  bits.set(ring.zero());
  return Ideal(ring, std::move(bits));
}

Ideal unit_ideal(const FiniteRing& ring) {
  ElemSet bits(ring.size());
  bits.set();
  return Ideal(ring, std::move(bits));
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  // a + b = {x + y}; already an ideal, no full closure needed.
  const FiniteRing& ring = a.ring();
  ElemSet bits(ring.size());
  for (Elem x : a.members())
    for (Elem y : b.members()) bits.set(ring.add(x, y));
  return Ideal(ring, std::move(bits));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const FiniteRing& ring = a.ring();
  std::vector<Elem> gens;
  for (Elem x : a.members())
    for (Elem y : b.members()) gens.push_back(ring.mul(x, y));
  return generate(ring, gens);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal(a.ring(), a.bits() & b.bits());
}

Ideal radical(const Ideal& a) {
  const FiniteRing& ring = a.ring();
  ElemSet bits(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) {
    Elem p = x;
    ElemSet seen(ring.size());
    while (!seen.test(p)) {
      seen.set(p);
      if (a.contains(p)) {
        bits.set(x);
        break;
      }
      p = ring.mul(p, x);
    }
  }
  return Ideal(ring, std::move(bits));
}

bool is_prime(const Ideal& a) {
  if (!a.is_proper()) return false;
  const FiniteRing& ring = a.ring();
  for (Elem x = 0; x < ring.size(); ++x) {
    if (a.contains(x)) continue;
    for (Elem y = 0; y < ring.size(); ++y) {
      if (a.contains(y)) continue;
      if (a.contains(ring.mul(x, y))) return false;
    }
  }
  return true;
}

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Idl: return "Idl";
    case Flavor::Spi: return "Spi";
    case Flavor::Spec: return "Spec";
    case Flavor::Spm: return "Spm";
  }
  return "?";
}

std::optional<std::size_t> IdealFamily::index_of(const Ideal& a) const {
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i] == a) return i;
  return std::nullopt;
}

std::string IdealFamily::to_json() const {
  nlohmann::ordered_json j;
  j["ring"] = ring.label();
  j["flavor"] = flavor_name(flavor);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Ideal& a : ideals) arr.push_back(a.members());
  j["ideals"] = std::move(arr);
  return j.dump(2) + "\n";
}

IdealFamily enumerate_ideals(const FiniteRing& ring, const Caps& caps) {
  if (ring.size() > caps.max_ring_size)
    throw resource_error("ideal enumeration for |A| = " + std::to_string(ring.size()) +
                         " exceeds max_ring_size cap of " +
                         std::to_string(caps.max_ring_size));

  // Every ideal is a finite join of principal ideals, so the join-closure of
  // the principals is exactly Idl A.
  std::set<ElemSet> known;
  std::vector<Ideal> work;
  for (Elem x = 0; x < ring.size(); ++x) {
    Ideal p = generate(ring, std::span<const Elem>(&x, 1));
    if (known.insert(p.bits()).second) work.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Ideal s = sum(work[i], work[j]);
      if (known.insert(s.bits()).second) work.push_back(std::move(s));
    }

  std::sort(work.begin(), work.end(), ideal_less);
  return IdealFamily{ring, Flavor::Idl, std::move(work)};
}

IdealFamily restrict_family(const IdealFamily& idl, Flavor flavor) {
  std::vector<Ideal> out;
  switch (flavor) {
    case Flavor::Idl:
      out = idl.ideals;
      break;
    case Flavor::Spi:
      for (const Ideal& a : idl.ideals)
        if (a.is_proper()) out.push_back(a);
      break;
    case Flavor::Spec:
      for (const Ideal& a : idl.ideals)
        if (is_prime(a)) out.push_back(a);
      break;
    case Flavor::Spm:
      for (const Ideal& a : idl.ideals) {
        if (!a.is_proper()) continue;
        bool maximal = true;
        for (const Ideal& b : idl.ideals) {
          if (!b.is_proper() || b == a) continue;
          if (a.subset_of(b)) {
            maximal = false;
            break;
          }
        }
        if (maximal) out.push_back(a);
      }
      break;
  }
  return IdealFamily{idl.ring, flavor, std::move(out)};
}

IdealFamily spi(const FiniteRing& ring, const Caps& caps) {
  return restrict_family(enumerate_ideals(ring, caps), Flavor::Spi);
}
IdealFamily spec(const FiniteRing& ring, const Caps& caps) {
  return restrict_family(enumerate_ideals(ring, caps), Flavor::Spec);
}
IdealFamily spm(const FiniteRing& ring, const Caps& caps) {
  return restrict_family(enumerate_ideals(ring, caps), Flavor::Spm);
}

std::string Ideal::name() const {
  if (is_zero()) return "(" + ring_.name(ring_.zero()) + ")";
  // Try single generators first, then pairs, smallest indices first.
  const auto mem = members();
  for (Elem g : mem)
    if (generate(ring_, std::span<const Elem>(&g, 1)) == *this)
      return "(" + ring_.name(g) + ")";
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j) {
      const Elem gs[2] = {mem[i], mem[j]};
      if (generate(ring_, gs) == *this)
        return "(" + ring_.name(gs[0]) + "," + ring_.name(gs[1]) + ")";
    }
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < mem.size(); ++i) {
    if (i) os << ",";
    os << ring_.name(mem[i]);
  }
  os << "}";
  return os.str();
}

std::string hasse_dot(const IdealFamily& family) {
  const auto& ideals = family.ideals;
  std::ostringstream os;
  os << "digraph \"" << flavor_name(family.flavor) << " " << family.ring.label()
     << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < ideals.size(); ++i)
    os << "  n" << i << " [label=\"" << ideals[i].name() << "\"];\n";
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (i == j || !ideals[i].subset_of(ideals[j])) continue;
      if (ideals[i].size() == ideals[j].size()) continue;
      bool covering = true;  // no k strictly between i and j
      for (std::size_t k = 0; k < ideals.size() && covering; ++k) {
        if (k == i || k == j) continue;
        if (ideals[i].subset_of(ideals[k]) && ideals[k].subset_of(ideals[j]) &&
            ideals[k].size() != ideals[i].size() &&
            ideals[k].size() != ideals[j].size())
          covering = false;
      }
      if (covering) os << "  n" << i << " -> n" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace finspec
