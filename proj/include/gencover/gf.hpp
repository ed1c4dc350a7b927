#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gencover/error.hpp"

namespace gencover {

/// Field elements are encoded as integers in [0, q): base-p digit i is the
/// coefficient of x^i in the polynomial representation.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * Finite field F_{p^m} = F_p[x] / (modulus).
 *
 * The modulus is the lexicographically smallest monic irreducible polynomial
 * of degree m, comparing coefficients from x^0 upward. For m = 1 it is x, so
 * arithmetic reduces to plain arithmetic mod p.
 *
 * Instances are immutable; share them through FieldPtr.
 */
class Field {
 public:
  /// Builds F_{p^m}. Throws NonPrimeCharacteristic or DegreeOutOfRange
  /// (m outside [1, 16] or p^m not below 2^32).
  static FieldPtr create(std::uint32_t p, unsigned m = 1);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime() const noexcept { return m_ == 1; }

  /// m + 1 coefficients, lowest degree first; the last one is 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws DivisionByZero for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool contains(Elem a) const noexcept { return a < q_; }

  /// "GF(4)" style label.
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

  Elem poly_mul(Elem a, Elem b) const;
  Elem poly_pow(Elem a, std::uint64_t e) const;
  void build_tables();

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;

  // Populated for q <= kTableLimit; otherwise arithmetic runs on digits.
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

/// Throws FieldMismatch unless a and b describe the same field.
void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* context);

bool is_prime(std::uint64_t n) noexcept;

/// True iff the monic polynomial `poly` (lowest degree first) is irreducible
/// over F_p, by trial division against every monic polynomial of degree at
/// most deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Checked element handle for API-level use. Kernels work on raw Elem values.
class GFElement {
 public:
  GFElement(FieldPtr field, Elem value);

  Elem value() const noexcept { return value_; }
  const FieldPtr& field() const noexcept { return field_; }

  GFElement operator+(const GFElement& o) const;
  GFElement operator-(const GFElement& o) const;
  GFElement operator*(const GFElement& o) const;
  GFElement operator/(const GFElement& o) const;
  GFElement operator-() const;
  GFElement inverse() const;

  friend bool operator==(const GFElement& a, const GFElement& b) {
    return same_field(a.field_, b.field_) && a.value_ == b.value_;
  }

 private:
  FieldPtr field_;
  Elem value_;
};

/// Constant-polynomial embedding of a prime-field element into an extension
/// of the same characteristic.
GFElement embed_base(const GFElement& a, const FieldPtr& target);

}  // namespace gencover
