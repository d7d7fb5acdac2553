#pragma once

// Exact scalars: the rationals (GMP) or a prime field F_p with p < 2^31.
// Every Scalar carries its field, so arithmetic between values from
// different fields is caught at runtime instead of silently mixing.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hhl {

class Field {
 public:
  enum class Kind : std::uint8_t { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  // Throws ConfigError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  // Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::uint32_t modulus() const { return modulus_; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  Field(Kind k, std::uint32_t p) : kind_(k), modulus_(p) {}

  Kind kind_;
  std::uint32_t modulus_;
};

class Scalar {
 public:
  // Rational zero. Mostly useful as a placeholder inside containers.
  Scalar() = default;

  static Scalar zero(Field f) { return from_int(0, f); }
  static Scalar one(Field f) { return from_int(1, f); }
  static Scalar from_int(long long v, Field f);
  static Scalar from_rational(const mpq_class& v);
  static Scalar from_residue(std::uint64_t v, std::uint32_t p);

  // "a", "-a", "a/b" with decimal integers. Decimal points and exponents are
  // rejected: q must be exact. For F_p, "a/b" means a * b^{-1}.
  static Scalar parse(std::string_view text, Field f);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  // Integer power; negative exponents need a nonzero base.
  Scalar pow(long long e) const;

  // "num/den" (or "num" when den = 1) for rationals, the residue in [0, p) otherwise.
  std::string to_string() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<Residue>(value_).value; }

  bool operator==(const Scalar& o) const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  void require_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_{mpq_class(0)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The coefficient ring of a Hecke algebra: a field together with the unit q.
struct ScalarConfig {
  Field field = Field::rationals();
  Scalar q = Scalar::one(Field::rationals());

  // Throws ConfigError when q is zero or lives over a different field.
  static ScalarConfig make(Field field, Scalar q);
  static ScalarConfig parse(std::string_view q_text, std::string_view field_text);

  Scalar zero() const { return Scalar::zero(field); }
  Scalar one() const { return Scalar::one(field); }
  Scalar from_int(long long v) const { return Scalar::from_int(v, field); }
  Scalar q_pow(long long e) const { return q.pow(e); }

  bool operator==(const ScalarConfig& o) const { return field == o.field && q == o.q; }
};

}  // namespace hhl
