#include "finspec/hom.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "finspec/errors.hpp"

namespace finspec {

RingHom::RingHom(FiniteRing source, FiniteRing target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  const std::size_t n = source_.size();
  if (map_.size() != n) throw domain_error("hom map has wrong length");
  for (Elem v : map_)
    if (v >= target_.size()) throw domain_error("hom map value out of range");
  if (map_[source_.zero()] != target_.zero())
    throw domain_error("hom does not preserve 0");
  if (map_[source_.one()] != target_.one())
    throw domain_error("hom does not preserve 1 (non-unital map rejected)");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (map_[source_.add(a, b)] != target_.add(map_[a], map_[b]))
        throw domain_error("map does not preserve addition at (" +
                           source_.name(a) + "," + source_.name(b) + ")");
      if (map_[source_.mul(a, b)] != target_.mul(map_[a], map_[b]))
        throw domain_error("map does not preserve multiplication at (" +
                           source_.name(a) + "," + source_.name(b) + ")");
    }

  ElemSet ker(n);
  for (Elem a = 0; a < n; ++a)
    if (map_[a] == target_.zero()) ker.set(a);
  kernel_.emplace(source_, std::move(ker));

  std::set<Elem> img(map_.begin(), map_.end());
  image_.assign(img.begin(), img.end());
}

RingHom RingHom::identity(const FiniteRing& ring) {
  std::vector<Elem> map(ring.size());
  for (Elem a = 0; a < ring.size(); ++a) map[a] = a;
  return RingHom(ring, ring, std::move(map));
}

RingHom RingHom::from_generators(const FiniteRing& source, const FiniteRing& target,
                                 std::span<const std::pair<Elem, Elem>> images) {
  std::vector<std::optional<Elem>> f(source.size());
  auto assign = [&](Elem a, Elem v) {
    if (f[a] && *f[a] != v)
      throw domain_error("generator images conflict at " + source.name(a) + ": " +
                         target.name(*f[a]) + " vs " + target.name(v));
    f[a] = v;
  };
  assign(source.zero(), target.zero());
  assign(source.one(), target.one());
  for (const auto& [a, v] : images) {
    if (a >= source.size() || v >= target.size())
      throw domain_error("generator image out of range");
    assign(a, v);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a = 0; a < source.size(); ++a) {
      if (!f[a]) continue;
      for (Elem b = 0; b <= a; ++b) {
        if (!f[b]) continue;
        for (auto [c, v] : {std::pair{source.add(a, b), target.add(*f[a], *f[b])},
                            std::pair{source.mul(a, b), target.mul(*f[a], *f[b])}}) {
          if (!f[c]) {
            f[c] = v;
            changed = true;
          } else if (*f[c] != v) {
            throw domain_error("no homomorphism extends the generator images "
                               "(conflict at " + source.name(c) + ")");
          }
        }
      }
    }
  }
  std::vector<Elem> map(source.size());
  for (Elem a = 0; a < source.size(); ++a) {
    if (!f[a])
      throw domain_error("generator images do not determine the element " +
                         source.name(a));
    map[a] = *f[a];
  }
  return RingHom(source, target, std::move(map));
}

RingHom RingHom::zmod_surjection(const FiniteRing& source, const FiniteRing& target) {
  const std::size_t n = source.size(), m = target.size();
  if (n % m != 0)
    throw domain_error("no canonical surjection Z" + std::to_string(n) + " -> Z" +
                       std::to_string(m));
  std::vector<Elem> map(n);
  for (Elem a = 0; a < n; ++a) map[a] = static_cast<Elem>(a % m);
  return RingHom(source, target, std::move(map));
}

Ideal RingHom::preimage(const Ideal& b) const {
  if (!b.ring().same_ring(target_)) throw domain_error("ideal not in the target ring");
  ElemSet bits(source_.size());
  for (Elem a = 0; a < source_.size(); ++a)
    if (b.contains(map_[a])) bits.set(a);
  return Ideal(source_, std::move(bits));
}

std::string RingHom::describe() const {
  return source_.label() + " -> " + target_.label();
}

namespace {

bool propagate(const FiniteRing& src, const FiniteRing& tgt,
               std::vector<std::optional<Elem>>& f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a = 0; a < src.size(); ++a) {
      if (!f[a]) continue;
      for (Elem b = 0; b <= a; ++b) {
        if (!f[b]) continue;
        const Elem s = src.add(a, b), sv = tgt.add(*f[a], *f[b]);
        if (!f[s]) {
          f[s] = sv;
          changed = true;
        } else if (*f[s] != sv) {
          return false;
        }
        const Elem p = src.mul(a, b), pv = tgt.mul(*f[a], *f[b]);
        if (!f[p]) {
          f[p] = pv;
          changed = true;
        } else if (*f[p] != pv) {
          return false;
        }
      }
    }
  }
  return true;
}

void search_homs(const FiniteRing& src, const FiniteRing& tgt,
                 std::vector<std::optional<Elem>> f, std::vector<RingHom>& out) {
  if (!propagate(src, tgt, f)) return;
  Elem unassigned = 0;
  bool complete = true;
  for (Elem a = 0; a < src.size(); ++a)
    if (!f[a]) {
      unassigned = a;
      complete = false;
      break;
    }
  if (complete) {
    std::vector<Elem> map(src.size());
    for (Elem a = 0; a < src.size(); ++a) map[a] = *f[a];
    out.emplace_back(src, tgt, std::move(map));
    return;
  }
  for (Elem v = 0; v < tgt.size(); ++v) {
    auto branch = f;
    branch[unassigned] = v;
    search_homs(src, tgt, std::move(branch), out);
  }
}

}  // namespace

std::vector<RingHom> all_homs(const FiniteRing& source, const FiniteRing& target) {
  std::vector<std::optional<Elem>> f(source.size());
  f[source.zero()] = target.zero();
  f[source.one()] = target.one();
  std::vector<RingHom> out;
  search_homs(source, target, std::move(f), out);
  return out;
}

std::pair<FiniteRing, RingHom> quotient_ring(const FiniteRing& ring, const Ideal& a) {
  if (!a.ring().same_ring(ring)) throw domain_error("ideal from a different ring");
  if (!a.is_proper()) throw domain_error("cannot quotient by the unit ideal");

  const std::size_t n = ring.size();
  // Least element of each coset x + a is the canonical representative.
  std::vector<Elem> rep(n);
  for (Elem x = 0; x < n; ++x) {
    Elem least = x;
    for (Elem i : a.members()) least = std::min(least, ring.add(x, i));
    rep[x] = least;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<Elem> index_of(n);
  for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<Elem>(i);

  const std::size_t q = reps.size();
  std::vector<std::vector<Elem>> add(q, std::vector<Elem>(q)), mul(q, std::vector<Elem>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      add[i][j] = index_of[rep[ring.add(reps[i], reps[j])]];
      mul[i][j] = index_of[rep[ring.mul(reps[i], reps[j])]];
    }
  std::vector<std::string> names;
  names.reserve(q);
  for (Elem r : reps) names.push_back(ring.name(r));

  FiniteRing quotient = FiniteRing::from_tables(
      ring.label() + "/" + a.name(), q, index_of[rep[ring.zero()]],
      index_of[rep[ring.one()]], std::move(add), std::move(mul), std::move(names));
  std::vector<Elem> proj(n);
  for (Elem x = 0; x < n; ++x) proj[x] = index_of[rep[x]];
  RingHom pi(ring, quotient, std::move(proj));
  return {quotient, std::move(pi)};
}

PullbackResult pullback(const RingHom& phi, const SpectrumTopology& source_spi,
                        const SpectrumTopology& target_spi) {
  if (!phi.source().same_ring(source_spi.ring) ||
      !phi.target().same_ring(target_spi.ring))
    throw domain_error("pullback spaces do not match the homomorphism");

  PullbackResult res;
  res.lands_in_spi = true;
  const std::size_t m = target_spi.points.ideals.size();
  res.point_map.resize(m);
  for (std::size_t t = 0; t < m; ++t) {
    const Ideal pre = phi.preimage(target_spi.points.ideals[t]);
    if (!pre.is_proper()) {
      res.lands_in_spi = false;
      res.notes.push_back("preimage of " + target_spi.points.ideals[t].name() +
                          " is not proper");
      continue;
    }
    res.point_map[t] = *source_spi.point_index(pre);
  }

  // Continuity via the subbasic identity (phi*)^-1(V(a)) = V(<phi(a)>).
  res.continuity_ok = true;
  for (const Ideal& a : source_spi.idl.ideals) {
    const PointSet va = source_spi.v_of_ideal(a);
    PointSet lhs(m);
    for (std::size_t t = 0; t < m; ++t)
      if (va.test(res.point_map[t])) lhs.set(t);
    std::vector<Elem> image;
    for (Elem x : a.members()) image.push_back(phi(x));
    const PointSet rhs = target_spi.v_of_ideal(generate(phi.target(), image));
    if (lhs != rhs) {
      res.continuity_ok = false;
      res.notes.push_back("continuity identity fails at a = " + a.name());
    }
  }
  return res;
}

namespace {

/// The subspace carried by a subset of a space's points: original indices
/// plus the induced closed-set family over re-indexed points.
struct SubSpace {
  std::vector<std::size_t> points;  // parent indices, ascending
  std::vector<PointSet> closed;     // over re-indexed points, canonical order

  std::size_t index_of(std::size_t parent_point) const {
    return static_cast<std::size_t>(
        std::find(points.begin(), points.end(), parent_point) - points.begin());
  }
};

SubSpace make_subspace(const FiniteSpace& space, const PointSet& subset) {
  SubSpace sub;
  for (auto p = subset.find_first(); p != PointSet::npos; p = subset.find_next(p))
    sub.points.push_back(p);
  std::set<PointSet> family;
  for (const PointSet& k : space.closed_sets) {
    PointSet restricted(sub.points.size());
    for (std::size_t i = 0; i < sub.points.size(); ++i)
      if (k.test(sub.points[i])) restricted.set(i);
    family.insert(std::move(restricted));
  }
  sub.closed.assign(family.begin(), family.end());
  std::sort(sub.closed.begin(), sub.closed.end(), pointset_less);
  return sub;
}

bool in_family(const std::vector<PointSet>& family, const PointSet& s) {
  return std::find(family.begin(), family.end(), s) != family.end();
}

}  // namespace

HomeoCertificate surjection_homeo_check(const RingHom& phi, const Caps& caps) {
  if (!phi.surjective())
    throw domain_error("homeomorphism certificate requires a surjective map");

  const SpectrumTopology src = build_kspace(phi.source(), Flavor::Spi, caps);
  const SpectrumTopology tgt = build_kspace(phi.target(), Flavor::Spi, caps);
  const PointSet v_ker = src.v_of_ideal(phi.kernel());
  const SubSpace sub = make_subspace(src.space, v_ker);

  HomeoCertificate cert;
  const std::size_t m = tgt.points.ideals.size();

  // phi* lands exactly on V(ker), injectively.
  std::vector<std::size_t> to_sub(m);
  std::set<std::size_t> image;
  bool well_defined = true;
  for (std::size_t t = 0; t < m; ++t) {
    const Ideal pre = phi.preimage(tgt.points.ideals[t]);
    const auto idx = src.point_index(pre);
    if (!idx || !v_ker.test(*idx)) {
      well_defined = false;
      cert.notes.push_back("phi* misses V(ker) at " + tgt.points.ideals[t].name());
      continue;
    }
    to_sub[t] = sub.index_of(*idx);
    image.insert(to_sub[t]);
  }
  cert.bijection_onto_v_ker =
      well_defined && image.size() == m && m == v_ker.count();
  if (!cert.bijection_onto_v_ker && well_defined)
    cert.notes.push_back("phi* is not a bijection onto V(ker)");

  if (cert.bijection_onto_v_ker) {
    cert.forward_closed = true;
    for (const PointSet& k : tgt.space.closed_sets) {
      PointSet img(sub.points.size());
      for (auto t = k.find_first(); t != PointSet::npos; t = k.find_next(t))
        img.set(to_sub[t]);
      if (!in_family(sub.closed, img)) {
        cert.forward_closed = false;
        cert.notes.push_back("phi* image of a closed set is not closed in V(ker)");
        break;
      }
    }
    cert.backward_closed = true;
    for (const PointSet& c : sub.closed) {
      PointSet pre(m);
      for (std::size_t t = 0; t < m; ++t)
        if (c.test(to_sub[t])) pre.set(t);
      if (!in_family(tgt.space.closed_sets, pre)) {
        cert.backward_closed = false;
        cert.notes.push_back("inverse image of a V(ker)-closed set is not closed");
        break;
      }
    }
  }
  return cert;
}

DensityResult density_check(const RingHom& phi, const Caps& caps) {
  const SpectrumTopology src = build_kspace(phi.source(), Flavor::Spi, caps);
  const SpectrumTopology tgt = build_kspace(phi.target(), Flavor::Spi, caps);

  PointSet image(src.points.ideals.size());
  for (const Ideal& b : tgt.points.ideals)
    image.set(*src.point_index(phi.preimage(b)));
  const PointSet cl = closure(src.space, image);

  ElemSet inter(phi.source().size());
  inter.set();
  for (const Ideal& s : src.points.ideals) inter &= s.bits();
  const Ideal intersection(phi.source(), inter);

  DensityResult res;
  res.dense = cl == src.space.whole();
  res.kernel_small = phi.kernel().subset_of(intersection);
  res.biconditional_ok = res.dense == res.kernel_small;
  res.closure_text = src.describe(cl);
  res.kernel_text = phi.kernel().name();
  res.intersection_text = intersection.name();
  return res;
}

MultiplicativeSet::MultiplicativeSet(FiniteRing ring, ElemSet members)
    : ring_(std::move(ring)), members_(std::move(members)) {
  if (members_.size() != ring_.size())
    throw domain_error("multiplicative set has wrong carrier size");
  if (members_.test(ring_.zero()))
    throw domain_error("multiplicative set containing 0 is degenerate: the "
                       "localization would be the zero ring");
  if (!members_.test(ring_.one())) throw domain_error("multiplicative set must contain 1");
  for (Elem a = 0; a < ring_.size(); ++a) {
    if (!members_.test(a)) continue;
    for (Elem b = 0; b <= a; ++b) {
      if (!members_.test(b)) continue;
      if (!members_.test(ring_.mul(a, b)))
        throw domain_error("set is not multiplicatively closed at " + ring_.name(a) +
                           "*" + ring_.name(b));
    }
  }
}

MultiplicativeSet MultiplicativeSet::closure_of(const FiniteRing& ring,
                                                std::span<const Elem> generators) {
  ElemSet bits(ring.size());
  bits.set(ring.one());
  for (Elem g : generators) {
    if (g >= ring.size()) throw domain_error("generator out of range");
    bits.set(g);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    const auto mem = [&bits] {
      std::vector<Elem> v;
      for (auto i = bits.find_first(); i != ElemSet::npos; i = bits.find_next(i))
        v.push_back(static_cast<Elem>(i));
      return v;
    }();
    for (Elem a : mem)
      for (Elem b : mem) {
        const Elem c = ring.mul(a, b);
        if (!bits.test(c)) {
          bits.set(c);
          changed = true;
        }
      }
  }
  return MultiplicativeSet(ring, std::move(bits));
}

std::vector<Elem> MultiplicativeSet::members() const {
  std::vector<Elem> out;
  for (auto i = members_.find_first(); i != ElemSet::npos; i = members_.find_next(i))
    out.push_back(static_cast<Elem>(i));
  return out;
}

LocalizationResult localize(const FiniteRing& ring, const MultiplicativeSet& s) {
  if (!s.ring().same_ring(ring)) throw domain_error("multiplicative set from a different ring");
  ElemSet kernel_bits(ring.size());
  for (Elem a = 0; a < ring.size(); ++a)
    for (Elem t : s.members())
      if (ring.mul(t, a) == ring.zero()) {
        kernel_bits.set(a);
        break;
      }
  Ideal kernel(ring, std::move(kernel_bits));  // proper since 0 not in S
  auto [local, canonical] = quotient_ring(ring, kernel);

  bool units_ok = true;
  const auto units = local.units();
  for (Elem t : s.members())
    if (std::find(units.begin(), units.end(), canonical(t)) == units.end())
      units_ok = false;
  return LocalizationResult{std::move(local), std::move(canonical), std::move(kernel),
                            units_ok};
}

UniversalPropertyReport localization_universal_check(
    const FiniteRing& ring, const MultiplicativeSet& s,
    std::span<const FiniteRing> targets) {
  const LocalizationResult loc = localize(ring, s);
  UniversalPropertyReport rep;
  for (const FiniteRing& target : targets) {
    const auto homs = all_homs(ring, target);
    const auto local_homs = all_homs(loc.local, target);
    const auto target_units = target.units();
    for (const RingHom& f : homs) {
      ++rep.homs_checked;
      bool sends_to_units = true;
      for (Elem t : s.members())
        if (std::find(target_units.begin(), target_units.end(), f(t)) ==
            target_units.end()) {
          sends_to_units = false;
          break;
        }
      std::size_t factorizations = 0;
      for (const RingHom& g : local_homs) {
        bool factors = true;
        for (Elem a = 0; a < ring.size(); ++a)
          if (g(loc.canonical(a)) != f(a)) {
            factors = false;
            break;
          }
        if (factors) ++factorizations;
      }
      const std::size_t expected = sends_to_units ? 1 : 0;
      if (factorizations != expected) {
        rep.ok = false;
        rep.notes.push_back("hom " + f.describe() + " has " +
                            std::to_string(factorizations) + " factorizations, expected " +
                            std::to_string(expected));
      }
      if (sends_to_units) ++rep.factoring;
    }
  }
  return rep;
}

EmbeddingCertificate localization_embedding_check(const FiniteRing& ring,
                                                  const MultiplicativeSet& s,
                                                  const Caps& caps) {
  const LocalizationResult loc = localize(ring, s);
  const SpectrumTopology src = build_kspace(ring, Flavor::Spi, caps);
  const SpectrumTopology tgt = build_kspace(loc.local, Flavor::Spi, caps);

  // (Spi A)_S: proper ideals disjoint from S, as a subspace of Spi A.
  PointSet allowed(src.points.ideals.size());
  for (std::size_t p = 0; p < src.points.ideals.size(); ++p) {
    if ((src.points.ideals[p].bits() & s.bits()).none()) allowed.set(p);
  }
  const SubSpace sub = make_subspace(src.space, allowed);

  EmbeddingCertificate cert;
  const std::size_t m = tgt.points.ideals.size();
  std::vector<std::size_t> to_sub(m);
  std::set<std::size_t> image;
  cert.image_avoids_s = true;
  for (std::size_t t = 0; t < m; ++t) {
    const Ideal pre = loc.canonical.preimage(tgt.points.ideals[t]);
    const auto idx = src.point_index(pre);
    if (!idx || !allowed.test(*idx)) {
      cert.image_avoids_s = false;
      cert.notes.push_back("phi* image meets S at " + tgt.points.ideals[t].name());
      continue;
    }
    to_sub[t] = sub.index_of(*idx);
    image.insert(to_sub[t]);
  }
  cert.injective = image.size() == m;

  if (cert.image_avoids_s) {
    cert.continuous = true;
    for (const PointSet& c : sub.closed) {
      PointSet pre(m);
      for (std::size_t t = 0; t < m; ++t)
        if (c.test(to_sub[t])) pre.set(t);
      if (!in_family(tgt.space.closed_sets, pre)) {
        cert.continuous = false;
        cert.notes.push_back("preimage of a subspace-closed set is not closed");
        break;
      }
    }
    cert.closed_map = true;
    for (const PointSet& k : tgt.space.closed_sets) {
      PointSet img(sub.points.size());
      for (auto t = k.find_first(); t != PointSet::npos; t = k.find_next(t))
        img.set(to_sub[t]);
      if (!in_family(sub.closed, img)) {
        cert.closed_map = false;
        cert.notes.push_back("image of a closed set is not closed in (Spi A)_S");
        break;
      }
    }
  }
  return cert;
}

QuotientCorollaryCertificate quotient_corollary_check(const FiniteRing& ring,
                                                      const Ideal& a,
                                                      const Caps& caps) {
  auto [quotient, pi] = quotient_ring(ring, a);
  QuotientCorollaryCertificate cert;
  cert.kernel_is_a = pi.kernel() == a;
  cert.homeo = surjection_homeo_check(pi, caps);
  return cert;
}

SpecNilradicalCertificate spec_nilradical_check(const FiniteRing& ring,
                                                const Caps& caps) {
  const Ideal nil = radical(zero_ideal(ring));
  auto [reduced, pi] = quotient_ring(ring, nil);
  const SpectrumTopology src = build_zariski(ring, caps);
  const SpectrumTopology tgt = build_zariski(reduced, caps);

  SpecNilradicalCertificate cert;
  cert.nilradical_text = nil.name();
  const std::size_t m = tgt.points.ideals.size();
  std::vector<std::size_t> to_src(m);
  std::set<std::size_t> image;
  bool all_prime = true;
  for (std::size_t t = 0; t < m; ++t) {
    const Ideal pre = pi.preimage(tgt.points.ideals[t]);
    const auto idx = src.point_index(pre);  // lands in Spec: preimage of prime
    if (!idx) {
      all_prime = false;
      continue;
    }
    to_src[t] = *idx;
    image.insert(*idx);
  }
  cert.bijective = all_prime && image.size() == m && m == src.points.ideals.size();

  if (cert.bijective) {
    cert.homeomorphism = true;
    for (const PointSet& k : tgt.space.closed_sets) {
      PointSet img(src.points.ideals.size());
      for (auto t = k.find_first(); t != PointSet::npos; t = k.find_next(t))
        img.set(to_src[t]);
      if (!in_family(src.space.closed_sets, img)) {
        cert.homeomorphism = false;
        break;
      }
    }
    for (const PointSet& k : src.space.closed_sets) {
      PointSet pre(m);
      for (std::size_t t = 0; t < m; ++t)
        if (k.test(to_src[t])) pre.set(t);
      if (!in_family(tgt.space.closed_sets, pre)) {
        cert.homeomorphism = false;
        break;
      }
    }
  }
  return cert;
}

SurjectiveImageIdentities surjective_image_identities(const RingHom& phi,
                                                      const Caps& caps) {
  if (!phi.surjective())
    throw domain_error("image identities are asserted for surjective maps");
  const SpectrumTopology src = build_kspace(phi.source(), Flavor::Spi, caps);
  const SpectrumTopology tgt = build_kspace(phi.target(), Flavor::Spi, caps);

  SurjectiveImageIdentities res;
  res.image_identity = true;
  res.closure_identity = true;
  for (const Ideal& b : tgt.idl.ideals) {
    const PointSet vb = tgt.v_of_ideal(b);
    PointSet img(src.points.ideals.size());
    for (auto t = vb.find_first(); t != PointSet::npos; t = vb.find_next(t))
      img.set(*src.point_index(phi.preimage(tgt.points.ideals[t])));
    const PointSet expected = src.v_of_ideal(phi.preimage(b));
    if (img != expected) res.image_identity = false;
    if (closure(src.space, img) != expected) res.closure_identity = false;
  }
  return res;
}

}  // namespace finspec
