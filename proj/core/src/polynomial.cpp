#include "finspec/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "finspec/errors.hpp"
#include "json.hpp"

namespace finspec {

Polynomial::Polynomial(FiniteRing ring, std::vector<Elem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_)
    if (c >= ring_.size()) throw domain_error("coefficient out of range");
  while (!coeffs_.empty() && coeffs_.back() == ring_.zero()) coeffs_.pop_back();
}

Elem Polynomial::evaluate(Elem a) const {
  Elem acc = ring_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = ring_.add(ring_.mul(acc, a), coeffs_[i]);
  return acc;
}

Polynomial Polynomial::mul(const Polynomial& other) const {
  if (!ring_.same_ring(other.ring_)) throw domain_error("mixed coefficient rings");
  if (is_zero() || other.is_zero()) return zero_polynomial(ring_);
  std::vector<Elem> out(coeffs_.size() + other.coeffs_.size() - 1, ring_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] = ring_.add(out[i + j], ring_.mul(coeffs_[i], other.coeffs_[j]));
  return Polynomial(ring_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Elem c = coeffs_[k];
    if (c == ring_.zero()) continue;
    if (!out.empty()) out += "+";
    std::string cn = ring_.name(c);
    if (cn.find(',') != std::string::npos) cn = "(" + cn + ")";
    if (k == 0) {
      out += cn;
    } else {
      if (c != ring_.one()) out += cn;
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial zero_polynomial(const FiniteRing& ring) { return Polynomial(ring, {}); }

Polynomial constant_polynomial(const FiniteRing& ring, Elem c) {
  return Polynomial(ring, {c});
}

Polynomial linear_root(const FiniteRing& ring, Elem a) {
  return Polynomial(ring, {ring.neg(a), ring.one()});
}

std::vector<Elem> solution_set(const FiniteRing& ring,
                               std::span<const Polynomial> system) {
  std::vector<Elem> out;
  for (Elem a = 0; a < ring.size(); ++a) {
    bool all = true;
    for (const Polynomial& p : system) {
      if (!p.ring().same_ring(ring)) throw domain_error("mixed coefficient rings");
      if (p.evaluate(a) != ring.zero()) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(a);
  }
  return out;
}

namespace {

/// All coefficient tuples of length len vanishing on the subset.
std::vector<std::vector<Elem>> vanishing_tuples(const FiniteRing& ring,
                                                std::span<const Elem> subset,
                                                std::size_t len) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> tuple(len, 0);
  for (;;) {
    bool vanishes = true;
    for (Elem a : subset) {
      // Horner on the raw tuple (no normalization needed).
      Elem acc = ring.zero();
      for (std::size_t i = len; i-- > 0;) acc = ring.add(ring.mul(acc, a), tuple[i]);
      if (acc != ring.zero()) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) out.push_back(tuple);
    std::size_t pos = 0;
    while (pos < len && ++tuple[pos] == ring.size()) tuple[pos++] = 0;
    if (pos == len) break;
  }
  return out;
}

bool tuple_is_zero(const std::vector<Elem>& t, const FiniteRing& ring) {
  return std::all_of(t.begin(), t.end(),
                     [&](Elem c) { return c == ring.zero(); });
}

/// lambda . f with both tuples in ascending-degree order.
Elem dot(const FiniteRing& ring, const std::vector<Elem>& lambda,
         const std::vector<Elem>& f) {
  Elem acc = ring.zero();
  for (std::size_t i = 0; i < lambda.size(); ++i)
    acc = ring.add(acc, ring.mul(lambda[i], f[i]));
  return acc;
}

std::vector<Elem> descending(const std::vector<Elem>& t) {
  return {t.rbegin(), t.rend()};
}

/// Derives a small deterministic set of linear equations cutting out the
/// family: candidates are the annihilator tuples of the family, reduced to
/// canonical representatives under unit scaling and added greedily while they
/// shrink the solution set.
void derive_constraints(const FiniteRing& ring, VarietyEntry& entry) {
  const std::size_t len = static_cast<std::size_t>(entry.min_degree) + 1;
  const std::set<std::vector<Elem>> family(entry.family.begin(), entry.family.end());

  std::vector<std::vector<Elem>> candidates;
  {
    std::vector<Elem> lambda(len, 0);
    std::set<std::vector<Elem>> seen;
    const auto units = ring.units();
    for (;;) {
      std::size_t pos = 0;
      while (pos < len && ++lambda[pos] == ring.size()) lambda[pos++] = 0;
      if (pos == len) break;
      if (tuple_is_zero(lambda, ring)) continue;
      bool annihilates = true;
      for (const auto& f : entry.family)
        if (dot(ring, lambda, f) != ring.zero()) {
          annihilates = false;
          break;
        }
      if (!annihilates) continue;
      // Canonical representative: minimal descending-read tuple over unit
      // multiples, so x+3 and 3x+1 style duplicates collapse.
      std::vector<Elem> best = lambda;
      for (Elem u : units) {
        std::vector<Elem> scaled(len);
        for (std::size_t i = 0; i < len; ++i) scaled[i] = ring.mul(u, lambda[i]);
        if (descending(scaled) < descending(best)) best = scaled;
      }
      if (seen.insert(best).second) candidates.push_back(best);
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
              const auto nz = [&](const std::vector<Elem>& t) {
                return std::count_if(t.begin(), t.end(),
                                     [&](Elem c) { return c != ring.zero(); });
              };
              const auto na = nz(a), nb = nz(b);
              if (na != nb) return na < nb;
              return descending(a) < descending(b);
            });

  // Greedy: current solution set starts at everything, shrink to the family.
  std::set<std::vector<Elem>> current;
  {
    std::vector<Elem> tuple(len, 0);
    for (;;) {
      current.insert(tuple);
      std::size_t pos = 0;
      while (pos < len && ++tuple[pos] == ring.size()) tuple[pos++] = 0;
      if (pos == len) break;
    }
  }
  for (const auto& lambda : candidates) {
    if (current == family) break;
    std::set<std::vector<Elem>> next;
    for (const auto& t : current)
      if (dot(ring, lambda, t) == ring.zero()) next.insert(t);
    if (next.size() < current.size()) {
      entry.constraints.push_back(lambda);
      current = std::move(next);
    }
  }
  entry.constraints_exact = current == family;

  // Drop equations implied by the rest, so the presentation is minimal.
  if (entry.constraints_exact) {
    for (std::size_t i = 0; i < entry.constraints.size();) {
      auto reduced = entry.constraints;
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
      std::size_t solutions = 0;
      bool same = true;
      std::vector<Elem> tuple(len, 0);
      for (;;) {
        bool sat = true;
        for (const auto& lambda : reduced)
          if (dot(ring, lambda, tuple) != ring.zero()) {
            sat = false;
            break;
          }
        if (sat) {
          ++solutions;
          if (!family.count(tuple)) same = false;
        }
        std::size_t pos = 0;
        while (pos < len && ++tuple[pos] == ring.size()) tuple[pos++] = 0;
        if (pos == len) break;
      }
      if (same && solutions == family.size()) {
        entry.constraints = std::move(reduced);
      } else {
        ++i;
      }
    }
  }
  // Display order: highest-degree letters first.
  std::sort(entry.constraints.begin(), entry.constraints.end(),
            [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
              return descending(a) > descending(b);
            });
}

}  // namespace

VarietyEntry annihilators_of(const FiniteRing& ring, std::span<const Elem> subset,
                             std::size_t max_degree) {
  for (Elem a : subset)
    if (a >= ring.size()) throw domain_error("subset element out of range");
  VarietyEntry entry;
  entry.subset.assign(subset.begin(), subset.end());
  std::sort(entry.subset.begin(), entry.subset.end());

  for (std::size_t d = 0; d <= max_degree; ++d) {
    auto family = vanishing_tuples(ring, entry.subset, d + 1);
    const bool has_nonzero = std::any_of(
        family.begin(), family.end(),
        [&](const std::vector<Elem>& t) { return !tuple_is_zero(t, ring); });
    if (!has_nonzero) continue;
    entry.min_degree = static_cast<int>(d);
    entry.family = std::move(family);
    derive_constraints(ring, entry);
    for (const auto& t : entry.family) {
      if (tuple_is_zero(t, ring)) continue;
      Polynomial p(ring, t);
      if (solution_set(ring, std::span<const Polynomial>(&p, 1)) == entry.subset) {
        entry.exact_witness = std::move(p);
        break;
      }
    }
    return entry;
  }
  throw search_exhausted_error("no nonzero annihilator of degree <= " +
                               std::to_string(max_degree) + " for the subset");
}

std::string constraints_pretty(const FiniteRing& ring, const VarietyEntry& entry) {
  const std::size_t len = static_cast<std::size_t>(entry.min_degree) + 1;
  auto letter = [len](std::size_t ascending_index) {
    // 'a' at the top degree.
    return std::string(1, static_cast<char>('a' + (len - 1 - ascending_index)));
  };

  // Fold single-letter zero constraints into the generic polynomial only when
  // every constraint is of that shape ("{ax}" rather than "{ax+b | b=0}").
  std::vector<std::size_t> forced_zero;
  bool all_single = true;
  for (const auto& lambda : entry.constraints) {
    std::size_t nonzero = 0, idx = 0;
    for (std::size_t i = 0; i < len; ++i)
      if (lambda[i] != 0) {
        ++nonzero;
        idx = i;
      }
    if (nonzero == 1 && lambda[idx] == ring.one())
      forced_zero.push_back(idx);
    else
      all_single = false;
  }
  const bool fold = all_single && !entry.constraints.empty();

  std::string generic;
  for (std::size_t i = len; i-- > 0;) {
    if (fold && std::find(forced_zero.begin(), forced_zero.end(), i) != forced_zero.end())
      continue;
    if (!generic.empty()) generic += "+";
    if (i == 0)
      generic += letter(0);
    else {
      generic += letter(i) + "x";
      if (i > 1) generic += "^" + std::to_string(i);
    }
  }
  if (generic.empty()) generic = "0";
  if (fold || entry.constraints.empty()) return "{" + generic + "}";

  std::vector<std::string> eqs;
  for (const auto& lambda : entry.constraints) {
    std::string eq;
    for (std::size_t i = len; i-- > 0;) {
      if (lambda[i] == 0) continue;
      if (!eq.empty()) eq += "+";
      if (lambda[i] != ring.one()) eq += ring.name(lambda[i]);
      eq += letter(i);
    }
    eqs.push_back(eq + "=0");
  }
  std::string joined;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (i) joined += ", ";
    joined += eqs[i];
  }
  return "{" + generic + " | " + joined + "}";
}

ExactWitness exact_variety_witness(const FiniteRing& ring,
                                   std::span<const Elem> subset) {
  std::vector<Elem> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());

  Polynomial p = constant_polynomial(ring, ring.one());
  for (Elem a : sorted) p = p.mul(linear_root(ring, a));
  ExactWitness w{p, sorted, true, false};
  w.exact = solution_set(ring, std::span<const Polynomial>(&p, 1)) == sorted;
  if (w.exact) return w;

  // Product form failed (possible over zero divisors): exhaustive search for
  // an exact witness up to degree |A|.
  for (std::size_t d = 1; d <= ring.size(); ++d) {
    for (const auto& t : vanishing_tuples(ring, sorted, d + 1)) {
      if (std::all_of(t.begin(), t.end(), [&](Elem c) { return c == ring.zero(); }))
        continue;
      Polynomial cand(ring, t);
      if (solution_set(ring, std::span<const Polynomial>(&cand, 1)) == sorted) {
        w.poly = std::move(cand);
        w.product_form = false;
        w.exact = true;
        return w;
      }
    }
  }
  return w;  // no exact witness exists; reported, not thrown
}

std::string witness_string(const ExactWitness& w) {
  if (!w.product_form || !w.exact) return w.poly.to_string();
  if (w.roots.empty()) return "1";
  const FiniteRing& ring = w.poly.ring();
  std::vector<std::string> factors;
  for (Elem a : w.roots) {
    if (a == ring.zero()) {
      factors.push_back("x");
    } else {
      factors.push_back("x+" + ring.name(ring.neg(a)));
    }
  }
  if (factors.size() == 1) return factors[0];
  std::string out;
  for (const std::string& f : factors) out += f == "x" ? f : "(" + f + ")";
  return out;
}

Table1 table1(const FiniteRing& ring, const Caps& caps) {
  if (ring.size() > 8)
    throw resource_error("table over all subsets requires |A| <= 8, got " +
                         std::to_string(ring.size()));
  (void)caps;
  Table1 t;
  t.ring_label = ring.label();
  const std::size_t n = ring.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Elem> subset;
    for (std::size_t b = 0; b < n; ++b)
      if ((mask >> b) & 1) subset.push_back(static_cast<Elem>(b));
    Table1::Row row{subset, annihilators_of(ring, subset, ring.size()),
                    exact_variety_witness(ring, subset)};
    t.rows.push_back(std::move(row));
  }
  // Subsets ordered by size then lexicographically, matching the family order
  // used everywhere else.
  std::sort(t.rows.begin(), t.rows.end(), [](const Table1::Row& a, const Table1::Row& b) {
    if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
    return a.subset < b.subset;
  });
  return t;
}

namespace {

std::string subset_string(const FiniteRing& ring, const std::vector<Elem>& subset) {
  if (subset.size() == ring.size()) return ring.label();
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += ring.name(subset[i]);
  }
  return out + "}";
}

}  // namespace

std::string table1_text(const Table1& t) {
  struct Cells {
    std::string subset, family, algset, witness;
  };
  std::vector<Cells> cells;
  const FiniteRing* ring = nullptr;
  for (const auto& row : t.rows) {
    if (!ring) ring = &row.witness.poly.ring();
    cells.push_back({subset_string(*ring, row.subset),
                     constraints_pretty(*ring, row.entry) + "  (deg " +
                         std::to_string(row.entry.min_degree) + ")",
                     subset_string(*ring, row.subset),
                     row.witness.exact ? witness_string(row.witness)
                                       : "none (no exact witness)"});
  }
  Cells header{"Subsets of " + t.ring_label, "Polynomials (minimal degree)",
               "Algebraic sets of " + t.ring_label, "Polynomials"};
  std::size_t w0 = header.subset.size(), w1 = header.family.size(),
              w2 = header.algset.size();
  for (const auto& c : cells) {
    w0 = std::max(w0, c.subset.size());
    w1 = std::max(w1, c.family.size());
    w2 = std::max(w2, c.algset.size());
  }
  std::ostringstream os;
  auto emit = [&](const Cells& c) {
    os << c.subset << std::string(w0 - c.subset.size(), ' ') << " | " << c.family
       << std::string(w1 - c.family.size(), ' ') << " | " << c.algset
       << std::string(w2 - c.algset.size(), ' ') << " | " << c.witness << "\n";
  };
  emit(header);
  os << std::string(w0, '-') << "-+-" << std::string(w1, '-') << "-+-"
     << std::string(w2, '-') << "-+----------\n";
  for (const auto& c : cells) emit(c);
  return os.str();
}

std::string table1_json(const Table1& t) {
  nlohmann::ordered_json j;
  j["ring"] = t.ring_label;
  j["coeff_order"] = "ascending";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    const FiniteRing& ring = row.witness.poly.ring();
    nlohmann::ordered_json r;
    r["subset"] = row.subset;
    r["min_degree"] = row.entry.min_degree;
    r["family"] = row.entry.family;
    r["constraints"] = row.entry.constraints;
    r["constraints_pretty"] = constraints_pretty(ring, row.entry);
    r["witness"] = {{"text", row.witness.exact ? witness_string(row.witness) : ""},
                    {"coeffs", row.witness.poly.coeffs()},
                    {"exact", row.witness.exact},
                    {"product_form", row.witness.product_form}};
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace finspec
