#include "qgv/field.hpp"

#include <map>
#include <sstream>

#include "qgv/errors.hpp"

namespace qgv {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kTableOrder = 256;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  // g is nonzero after trimming; leading coefficient inverted by Fermat.
  trim(f);
  const std::uint64_t lead = g.back();
  std::uint64_t lead_inv = 1;
  for (std::uint32_t e = p - 2, b = static_cast<std::uint32_t>(lead); e; e >>= 1) {
    if (e & 1) lead_inv = lead_inv * b % p;
    b = static_cast<std::uint32_t>(static_cast<std::uint64_t>(b) * b % p);
  }
  while (f.size() >= g.size()) {
    const std::uint64_t c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - c * g[i] % p) % p);
    }
    trim(f);
  }
  return f;
}

Poly to_poly(Element x, std::uint32_t p, std::uint32_t m) {
  Poly f(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    f[i] = x % p;
    x /= p;
  }
  return f;
}

Element from_poly(const Poly& f, std::uint32_t p) {
  Element x = 0;
  for (std::size_t i = f.size(); i-- > 0;) x = x * p + f[i];
  return x;
}

const std::map<std::uint32_t, Poly>& default_table() {
  // Conway polynomials, coefficients low degree first.
  static const std::map<std::uint32_t, Poly> table = {
      {4, {1, 1, 1}},          {8, {1, 1, 0, 1}},          {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}}, {64, {1, 1, 0, 1, 1, 0, 1}}, {9, {2, 2, 1}},
      {27, {1, 2, 0, 1}},       {81, {2, 1, 0, 0, 1}},       {25, {2, 4, 1}},
      {49, {3, 6, 1}},
  };
  return table;
}

}  // namespace

struct Field::Tables {
  std::vector<Element> add;
  std::vector<Element> mul;
  std::vector<Element> neg;
  std::vector<Element> inv;
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  // Every monic g with 1 <= deg g <= deg/2; the monic candidates of degree
  // e are indexed by p^e lower-coefficient tuples.
  for (std::size_t e = 1; 2 * e <= deg; ++e) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(e + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < e; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[e] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t q) {
  const auto& table = default_table();
  if (auto it = table.find(q); it != table.end()) return it->second;
  return std::nullopt;
}

Field::Field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus)
    : p_(p), m_(m), q_(1) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidArgument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidArgument("field order exceeds 65536");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (m > 1) {
    if (!modulus) modulus = default_modulus(q_);
    if (!modulus) {
      throw InvalidArgument("no default modulus for q=" + std::to_string(q_) + "; supply one");
    }
    modulus_ = *modulus;
    for (auto c : modulus_) {
      if (c >= p) throw InvalidArgument("modulus coefficient out of range [0, p)");
    }
    if (modulus_.size() != m + 1 || modulus_.back() != 1) {
      throw InvalidArgument("modulus must be monic of degree " + std::to_string(m));
    }
    if (!is_irreducible(modulus_, p)) throw InvalidArgument("modulus is reducible over GF(p)");
  } else if (modulus && !modulus->empty()) {
    // A degree-1 modulus carries no information; accept only x + c.
    if (modulus->size() != 2 || (*modulus)[1] != 1 || (*modulus)[0] >= p) {
      throw InvalidArgument("modulus must be monic of degree 1 for a prime field");
    }
  }

  if (q_ <= kTableOrder) {
    auto t = std::make_shared<Tables>();
    t->add.resize(static_cast<std::size_t>(q_) * q_);
    t->mul.resize(static_cast<std::size_t>(q_) * q_);
    t->neg.resize(q_);
    t->inv.resize(q_, 0);
    for (Element x = 0; x < q_; ++x) {
      t->neg[x] = neg_slow(x);
      for (Element y = 0; y < q_; ++y) {
        t->add[x * q_ + y] = add_slow(x, y);
        t->mul[x * q_ + y] = mul_slow(x, y);
      }
    }
    for (Element x = 1; x < q_; ++x) t->inv[x] = inv_slow(x);
    tables_ = std::move(t);
  }
}

Field Field::of_order(std::uint32_t q, std::optional<std::vector<std::uint32_t>> modulus) {
  if (q < 2) throw InvalidArgument("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  for (std::uint32_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
    ++m;
  }
  return Field(p, m, std::move(modulus));
}

Element Field::add_slow(Element x, Element y) const {
  if (m_ == 1) return (x + y) % p_;
  Element r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return r;
}

Element Field::neg_slow(Element x) const {
  if (m_ == 1) return (p_ - x) % p_;
  Element r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return r;
}

Element Field::mul_slow(Element x, Element y) const {
  if (m_ == 1) return static_cast<Element>(static_cast<std::uint64_t>(x) * y % p_);
  const Poly f = to_poly(x, p_, m_);
  const Poly g = to_poly(y, p_, m_);
  Poly h(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) {
      h[i + j] = static_cast<std::uint32_t>((h[i + j] + static_cast<std::uint64_t>(f[i]) * g[j]) % p_);
    }
  }
  return from_poly(poly_mod(std::move(h), modulus_, p_), p_);
}

Element Field::inv_slow(Element x) const {
  if (x == 0) throw DivisionByZero("inverse of zero in " + describe());
  if (m_ == 1) return pow(x, p_ - 2);
  // Extended Euclid on (modulus, x) tracking only the Bezout coefficient of x.
  auto poly_sub_mul = [this](const Poly& a, const Poly& b, const Poly& c) {
    // a - b*c
    Poly r = a;
    if (!b.empty() && !c.empty()) {
      if (r.size() < b.size() + c.size() - 1) r.resize(b.size() + c.size() - 1, 0);
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
          r[i + j] = static_cast<std::uint32_t>(
              (r[i + j] + p_ - static_cast<std::uint64_t>(b[i]) * c[j] % p_) % p_);
    }
    trim(r);
    return r;
  };
  auto poly_divmod = [this](Poly a, const Poly& b) {
    Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const std::uint64_t lead_inv = pow(b.back(), p_ - 2);
    trim(a);
    while (a.size() >= b.size()) {
      const std::uint32_t c = static_cast<std::uint32_t>(a.back() * lead_inv % p_);
      const std::size_t shift = a.size() - b.size();
      quot[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p_ - static_cast<std::uint64_t>(c) * b[i] % p_) % p_);
      trim(a);
    }
    trim(quot);
    return std::pair{quot, a};
  };
  Poly r0 = modulus_, r1 = to_poly(x, p_, m_);
  trim(r1);
  Poly t0, t1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(r0, r1);
    Poly t2 = poly_sub_mul(t0, quot, t1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t c = pow(r0[0], p_ - 2);
  for (auto& coef : t0) coef = static_cast<std::uint32_t>(coef * c % p_);
  t0.resize(m_, 0);
  return from_poly(t0, p_);
}

Element Field::add(Element x, Element y) const {
  if (tables_) return tables_->add[x * q_ + y];
  return add_slow(x, y);
}

Element Field::sub(Element x, Element y) const { return add(x, neg(y)); }

Element Field::neg(Element x) const {
  if (tables_) return tables_->neg[x];
  return neg_slow(x);
}

Element Field::mul(Element x, Element y) const {
  if (tables_) return tables_->mul[x * q_ + y];
  return mul_slow(x, y);
}

Element Field::inv(Element x) const {
  if (x == 0) throw DivisionByZero("inverse of zero in " + describe());
  if (tables_) return tables_->inv[x];
  return inv_slow(x);
}

Element Field::pow(Element x, std::uint64_t e) const {
  Element result = 1 % q_;
  // mul() would consult tables_, which are still being built when the
  // constructor calls inv_slow for prime fields; use the slow path there.
  auto times = [this](Element a, Element b) { return tables_ ? mul(a, b) : mul_slow(a, b); };
  while (e) {
    if (e & 1) result = times(result, x);
    x = times(x, x);
    e >>= 1;
  }
  return result;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (m_ > 1) {
    os << " mod [";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    os << "]";
  }
  return os.str();
}

}  // namespace qgv
