#include "gencover/gf.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <utility>

namespace gencover {

namespace {

constexpr std::uint32_t kTableLimit = 1u << 20;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = (lead * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits_of(Elem v, std::uint32_t p, unsigned m) {
  Poly d(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

Elem from_digits(const Poly& d, std::uint32_t p) {
  Elem v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::CharacteristicMismatch: return "CharacteristicMismatch";
    case Errc::NonPrimeBaseField: return "NonPrimeBaseField";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::RadiusOutOfRange: return "RadiusOutOfRange";
    case Errc::TOutOfRange: return "TOutOfRange";
    case Errc::DomainError: return "DomainError";
    case Errc::NoSignChange: return "NoSignChange";
    case Errc::SyndromeSpaceTooLarge: return "SyndromeSpaceTooLarge";
    case Errc::SearchTooLarge: return "SearchTooLarge";
    case Errc::MethodInfeasible: return "MethodInfeasible";
    case Errc::Infeasible: return "Infeasible";
    case Errc::ParseError: return "ParseError";
    case Errc::PropertyViolation: return "PropertyViolation";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Enumerate monic divisors g of degree d by their d low coefficients.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr Field::create(std::uint32_t p, unsigned m) {
  if (!gencover::is_prime(p))
    throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (m < 1 || m > 16) throw Error(Errc::DegreeOutOfRange, "degree must lie in [1, 16]");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > std::numeric_limits<std::uint32_t>::max())
      throw Error(Errc::DegreeOutOfRange, "p^m exceeds the 32-bit element range");
  }

  Poly modulus;
  if (m == 1) {
    modulus = {0, 1};
  } else {
    // Lexicographic order with the x^0 coefficient most significant.
    const std::uint64_t count = q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly cand(m + 1, 0);
      cand[m] = 1;
      std::uint64_t v = idx;
      for (unsigned i = 0; i < m; ++i) {
        cand[m - 1 - i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (is_irreducible(cand, p)) {
        modulus = std::move(cand);
        break;
      }
    }
  }
  auto field = std::shared_ptr<Field>(new Field(p, m, std::move(modulus)));
  field->build_tables();
  return field;
}

Field::Field(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
}

Elem Field::poly_mul(Elem a, Elem b) const {
  if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  const Poly da = digits_of(a, p_, m_);
  const Poly db = digits_of(b, p_, m_);
  Poly prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(m_, 0);
  return from_digits(r, p_);
}

Elem Field::poly_pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, a);
    a = poly_mul(a, a);
    e >>= 1;
  }
  return result;
}

void Field::build_tables() {
  if (q_ > kTableLimit) return;
  neg_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Elem v = a, out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint32_t d = v % p_;
      v /= p_;
      out += ((p_ - d) % p_) * scale;
      scale *= p_;
    }
    neg_[a] = out;
  }
  if (q_ == 2) {
    exp_ = {1};
    log_ = {0, 0};
    return;
  }
  // Primitive element: smallest g whose order is q - 1.
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  Elem gen = 0;
  for (Elem g = 2; g < q_ && gen == 0; ++g) {
    bool primitive = true;
    for (auto r : factors)
      if (poly_pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) gen = g;
  }
  exp_.resize(order);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = poly_mul(x, gen);
  }
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    Elem d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const noexcept {
  if (p_ == 2) return a;
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  if (!neg_.empty()) return neg_[a];
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    scale *= p_;
    a /= p_;
  }
  return out;
}

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  if (!exp_.empty()) {
    std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  return poly_mul(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in " + name());
  if (!exp_.empty() && q_ > 2) {
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
  }
  if (m_ == 1) {
    // Extended Euclid on integers.
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      const std::int64_t quot = r / new_r;
      std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
      std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }
  return poly_pow(a, std::uint64_t{q_} - 2);
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* context) {
  if (!same_field(a, b))
    throw Error(Errc::FieldMismatch, std::string(context) + ": operands live in different fields");
}

GFElement::GFElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_->contains(value_))
    throw Error(Errc::DomainError, std::to_string(value_) + " is not an element of " + field_->name());
}

GFElement GFElement::operator+(const GFElement& o) const {
  require_same_field(field_, o.field_, "gf_add");
  return {field_, field_->add(value_, o.value_)};
}

GFElement GFElement::operator-(const GFElement& o) const {
  require_same_field(field_, o.field_, "gf_sub");
  return {field_, field_->sub(value_, o.value_)};
}

GFElement GFElement::operator*(const GFElement& o) const {
  require_same_field(field_, o.field_, "gf_mul");
  return {field_, field_->mul(value_, o.value_)};
}

GFElement GFElement::operator/(const GFElement& o) const {
  require_same_field(field_, o.field_, "gf_div");
  return {field_, field_->div(value_, o.value_)};
}

GFElement GFElement::operator-() const { return {field_, field_->neg(value_)}; }

GFElement GFElement::inverse() const { return {field_, field_->inv(value_)}; }

GFElement embed_base(const GFElement& a, const FieldPtr& target) {
  const auto& base = a.field();
  if (!base->is_prime())
    throw Error(Errc::NonPrimeBaseField, "embedding requires a prime base field");
  if (base->characteristic() != target->characteristic())
    throw Error(Errc::CharacteristicMismatch,
                base->name() + " does not embed in " + target->name());
  return {target, a.value()};
}

}  // namespace gencover
