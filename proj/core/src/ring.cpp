#include "finspec/ring.hpp"

#include <algorithm>
#include <utility>

#include "finspec/errors.hpp"
#include "json.hpp"

namespace finspec {

struct FiniteRing::Impl {
  std::string label;
  std::size_t size = 0;
  Elem zero = 0;
  Elem one = 0;
  std::vector<Elem> add;  // flattened size*size
  std::vector<Elem> mul;
  std::vector<Elem> neg;  // additive inverse per element
  std::vector<std::string> names;

  Elem at(const std::vector<Elem>& t, Elem a, Elem b) const {
    return t[static_cast<std::size_t>(a) * size + b];
  }
};

namespace {

void check_cap(std::size_t n, const Caps& caps) {
  if (n > caps.max_ring_size)
    throw resource_error("ring size " + std::to_string(n) +
                         " exceeds max_ring_size cap of " +
                         std::to_string(caps.max_ring_size));
}

/// Exhaustive axiom verification; throws invalid_ring_error on the first
/// violated law.  Also fills the negation table.
void validate(FiniteRing::Impl& r) {
  const std::size_t n = r.size;
  if (n < 2) throw invalid_ring_error("ring must have at least two elements");
  if (r.zero >= n || r.one >= n)
    throw invalid_ring_error("zero/one element out of range");
  if (r.zero == r.one) throw invalid_ring_error("ring is trivial: one = zero");
  if (r.add.size() != n * n || r.mul.size() != n * n)
    throw invalid_ring_error("operation table has wrong shape");
  for (Elem v : r.add)
    if (v >= n) throw invalid_ring_error("add table entry out of range");
  for (Elem v : r.mul)
    if (v >= n) throw invalid_ring_error("mul table entry out of range");

  auto add = [&](Elem a, Elem b) { return r.at(r.add, a, b); };
  auto mul = [&](Elem a, Elem b) { return r.at(r.mul, a, b); };

  for (Elem a = 0; a < n; ++a) {
    if (add(a, r.zero) != a) throw invalid_ring_error("zero is not an additive identity");
    if (mul(a, r.one) != a) throw invalid_ring_error("one is not a multiplicative identity");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) throw invalid_ring_error("addition is not commutative");
      if (mul(a, b) != mul(b, a)) throw invalid_ring_error("multiplication is not commutative");
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)))
          throw invalid_ring_error("addition is not associative");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw invalid_ring_error("multiplication is not associative");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw invalid_ring_error("multiplication does not distribute over addition");
      }

  r.neg.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n; ++b)
      if (add(a, b) == r.zero) {
        r.neg[a] = b;
        found = true;
        break;
      }
    if (!found) throw invalid_ring_error("element without additive inverse");
  }

  if (r.names.empty()) {
    r.names.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.names[i] = std::to_string(i);
  } else if (r.names.size() != n) {
    throw invalid_ring_error("element name list has wrong length");
  }
}

std::shared_ptr<const FiniteRing::Impl> finish(FiniteRing::Impl&& impl) {
  validate(impl);
  return std::make_shared<const FiniteRing::Impl>(std::move(impl));
}

}  // namespace

FiniteRing::FiniteRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FiniteRing FiniteRing::zmod(std::uint64_t n, const Caps& caps) {
  if (n < 2) throw invalid_ring_error("Z_n requires n >= 2");
  check_cap(n, caps);
  Impl r;
  r.label = "Z" + std::to_string(n);
  r.size = static_cast<std::size_t>(n);
  r.zero = 0;
  r.one = 1;
  r.add.resize(r.size * r.size);
  r.mul.resize(r.size * r.size);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      r.add[a * n + b] = static_cast<Elem>((a + b) % n);
      r.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  return FiniteRing(finish(std::move(r)));
}

FiniteRing FiniteRing::product(const FiniteRing& a, const FiniteRing& b,
                               const Caps& caps) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t n = na * nb;
  check_cap(n, caps);
  Impl r;
  r.label = a.label() + "x" + b.label();
  r.size = n;
  auto pack = [nb](Elem x, Elem y) { return static_cast<Elem>(x * nb + y); };
  r.zero = pack(a.zero(), b.zero());
  r.one = pack(a.one(), b.one());
  r.add.resize(n * n);
  r.mul.resize(n * n);
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem y1 = 0; y1 < nb; ++y1)
      for (Elem x2 = 0; x2 < na; ++x2)
        for (Elem y2 = 0; y2 < nb; ++y2) {
          const std::size_t i = static_cast<std::size_t>(pack(x1, y1)) * n + pack(x2, y2);
          r.add[i] = pack(a.add(x1, x2), b.add(y1, y2));
          r.mul[i] = pack(a.mul(x1, x2), b.mul(y1, y2));
        }
  r.names.resize(n);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y)
      r.names[pack(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";
  return FiniteRing(finish(std::move(r)));
}

namespace {

/// Renders sum c_i x^i (coeffs lowest degree first) in descending degree,
/// using the base ring's element names; "0" for the zero polynomial.
std::string poly_string(const FiniteRing& base, std::span<const Elem> coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Elem c = coeffs[k];
    if (c == base.zero()) continue;
    if (!out.empty()) out += "+";
    std::string cn = base.name(c);
    if (cn.find(',') != std::string::npos) cn = "(" + cn + ")";
    if (k == 0) {
      out += cn;
    } else {
      if (c != base.one()) out += cn;
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

FiniteRing FiniteRing::poly_quotient(const FiniteRing& base,
                                     std::span<const Elem> modulus_coeffs,
                                     const Caps& caps) {
  if (modulus_coeffs.size() < 2)
    throw unsupported_modulus_error("modulus must have degree >= 1");
  if (modulus_coeffs.back() != base.one())
    throw unsupported_modulus_error(
        "modulus must be monic: long division is not defined otherwise");
  const std::size_t d = modulus_coeffs.size() - 1;
  const std::size_t nb = base.size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n > caps.max_ring_size / nb + 1) check_cap(caps.max_ring_size + 1, caps);
    n *= nb;
  }
  check_cap(n, caps);

  // Element index <-> little-endian digit vector of length d over the base.
  auto digits = [&](Elem e) {
    std::vector<Elem> v(d);
    std::size_t x = e;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = static_cast<Elem>(x % nb);
      x /= nb;
    }
    return v;
  };
  auto index_of = [&](std::span<const Elem> v) {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * nb + v[i];
    return static_cast<Elem>(x);
  };

  Impl r;
  r.label = base.label() + "[x]/(" + poly_string(base, modulus_coeffs) + ")";
  r.size = n;
  r.add.resize(n * n);
  r.mul.resize(n * n);
  r.names.resize(n);

  std::vector<std::vector<Elem>> digs(n);
  for (Elem e = 0; e < n; ++e) {
    digs[e] = digits(e);
    r.names[e] = poly_string(base, digs[e]);
  }
  {
    std::vector<Elem> zv(d, base.zero()), ov(d, base.zero());
    ov[0] = base.one();
    r.zero = index_of(zv);
    r.one = index_of(ov);
  }

  for (Elem e1 = 0; e1 < n; ++e1)
    for (Elem e2 = 0; e2 <= e1; ++e2) {
      std::vector<Elem> s(d);
      for (std::size_t i = 0; i < d; ++i) s[i] = base.add(digs[e1][i], digs[e2][i]);
      const Elem sum = index_of(s);
      r.add[static_cast<std::size_t>(e1) * n + e2] = sum;
      r.add[static_cast<std::size_t>(e2) * n + e1] = sum;

      // Convolution, then reduction by the monic modulus.
      std::vector<Elem> p(2 * d > 1 ? 2 * d - 1 : 1, base.zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          p[i + j] = base.add(p[i + j], base.mul(digs[e1][i], digs[e2][j]));
      for (std::size_t k = p.size(); k-- > d;) {
        const Elem c = p[k];
        if (c == base.zero()) continue;
        for (std::size_t j = 0; j <= d; ++j)
          p[k - d + j] = base.sub(p[k - d + j], base.mul(c, modulus_coeffs[j]));
      }
      p.resize(d);
      const Elem prod = index_of(p);
      r.mul[static_cast<std::size_t>(e1) * n + e2] = prod;
      r.mul[static_cast<std::size_t>(e2) * n + e1] = prod;
    }
  return FiniteRing(finish(std::move(r)));
}

FiniteRing FiniteRing::from_tables(std::string label, std::size_t size,
                                   Elem zero, Elem one,
                                   std::vector<std::vector<Elem>> add_table,
                                   std::vector<std::vector<Elem>> mul_table,
                                   std::vector<std::string> element_names,
                                   const Caps& caps) {
  check_cap(size, caps);
  Impl r;
  r.label = std::move(label);
  r.size = size;
  r.zero = zero;
  r.one = one;
  auto flatten = [size](const std::vector<std::vector<Elem>>& t) {
    std::vector<Elem> flat;
    flat.reserve(size * size);
    if (t.size() != size) throw invalid_ring_error("operation table has wrong shape");
    for (const auto& row : t) {
      if (row.size() != size) throw invalid_ring_error("operation table has wrong shape");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  };
  r.add = flatten(add_table);
  r.mul = flatten(mul_table);
  r.names = std::move(element_names);
  return FiniteRing(finish(std::move(r)));
}

std::size_t FiniteRing::size() const { return impl_->size; }
Elem FiniteRing::zero() const { return impl_->zero; }
Elem FiniteRing::one() const { return impl_->one; }
Elem FiniteRing::add(Elem a, Elem b) const { return impl_->at(impl_->add, a, b); }
Elem FiniteRing::mul(Elem a, Elem b) const { return impl_->at(impl_->mul, a, b); }
Elem FiniteRing::neg(Elem a) const { return impl_->neg[a]; }
Elem FiniteRing::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteRing::pow(Elem a, std::uint64_t n) const {
  Elem acc = a;
  for (std::uint64_t i = 1; i < n; ++i) acc = mul(acc, a);
  return acc;
}

const std::string& FiniteRing::label() const { return impl_->label; }
const std::string& FiniteRing::name(Elem a) const { return impl_->names[a]; }

std::vector<Elem> FiniteRing::units() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b)
      if (mul(a, b) == one()) {
        out.push_back(a);
        break;
      }
  return out;
}

std::vector<Elem> FiniteRing::zero_divisors() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < size(); ++a) {
    if (a == zero()) continue;
    for (Elem b = 0; b < size(); ++b)
      if (b != zero() && mul(a, b) == zero()) {
        out.push_back(a);
        break;
      }
  }
  return out;
}

std::vector<Elem> FiniteRing::idempotents() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < size(); ++a)
    if (mul(a, a) == a) out.push_back(a);
  return out;
}

std::vector<Elem> FiniteRing::nilpotents() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < size(); ++a) {
    // Powers of a cycle within |A| steps; stop at 0 or on a repeat.
    Elem x = a;
    std::vector<bool> seen(size(), false);
    while (!seen[x]) {
      seen[x] = true;
      if (x == zero()) {
        out.push_back(a);
        break;
      }
      x = mul(x, a);
    }
  }
  return out;
}

bool FiniteRing::is_field() const { return units().size() == size() - 1; }

std::string FiniteRing::to_json() const {
  nlohmann::ordered_json j;
  j["label"] = label();
  j["size"] = size();
  j["zero"] = zero();
  j["one"] = one();
  auto table = [this](const std::vector<Elem>& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < size(); ++a) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t b = 0; b < size(); ++b) row.push_back(t[a * size() + b]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["add"] = table(impl_->add);
  j["mul"] = table(impl_->mul);
  return j.dump(2) + "\n";
}

FiniteRing FiniteRing::from_json(const std::string& text, const Caps& caps) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_ring_error(std::string("bad ring JSON: ") + e.what());
  }
  try {
    return from_tables(j.at("label").get<std::string>(),
                       j.at("size").get<std::size_t>(), j.at("zero").get<Elem>(),
                       j.at("one").get<Elem>(),
                       j.at("add").get<std::vector<std::vector<Elem>>>(),
                       j.at("mul").get<std::vector<std::vector<Elem>>>(), {}, caps);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_ring_error(std::string("bad ring JSON: ") + e.what());
  }
}

bool FiniteRing::same_tables(const FiniteRing& other) const {
  return impl_->size == other.impl_->size && impl_->zero == other.impl_->zero &&
         impl_->one == other.impl_->one && impl_->add == other.impl_->add &&
         impl_->mul == other.impl_->mul;
}

}  // namespace finspec
