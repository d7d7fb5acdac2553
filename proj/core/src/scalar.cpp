#include "hhl/scalar.hpp"

#include <charconv>
#include <ostream>

#include "hhl/errors.hpp"

namespace hhl {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_plain_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_plain_integer(s)) {
    throw ConfigError("not an exact integer: '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

std::uint32_t mpz_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw ConfigError("field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ConfigError("bad prime field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw ConfigError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

Scalar Scalar::from_int(long long v, Field f) {
  Scalar s;
  if (f.is_rational()) {
    s.value_ = mpq_class(mpz_class(static_cast<long>(v)));
  } else {
    s.value_ = Residue{reduce(v, f.modulus()), f.modulus()};
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& v) {
  Scalar s;
  mpq_class c = v;
  c.canonicalize();
  s.value_ = c;
  return s;
}

Scalar Scalar::from_residue(std::uint64_t v, std::uint32_t p) {
  Scalar s;
  s.value_ = Residue{static_cast<std::uint32_t>(v % p), p};
  return s;
}

Scalar Scalar::parse(std::string_view text, Field f) {
  auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  if (f.is_rational()) return from_rational(mpq_class(num, den));
  const std::uint32_t p = f.modulus();
  const std::uint32_t d = mpz_mod(den, p);
  if (d == 0) throw ConfigError("denominator of '" + std::string(text) + "' vanishes mod p");
  return from_residue(std::uint64_t{mpz_mod(num, p)} * pow_mod(d, p - 2, p), p);
}

Field Scalar::field() const {
  if (std::holds_alternative<mpq_class>(value_)) return Field::rationals();
  return Field(Field::Kind::Prime, std::get<Residue>(value_).modulus);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (value_.index() != o.value_.index()) throw ContextError("scalars over different fields");
  if (auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus != std::get<Residue>(o.value_).modulus) {
      throw ContextError("scalars over different prime fields");
    }
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (auto* q = std::get_if<mpq_class>(&s.value_)) {
    *q = -*q;
  } else {
    auto& r = std::get<Residue>(s.value_);
    r.value = r.value == 0 ? 0 : r.modulus - r.value;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = static_cast<std::uint32_t>(
        (std::uint64_t{r.value} + std::get<Residue>(o.value_).value) % r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = static_cast<std::uint32_t>(
        std::uint64_t{r.value} * std::get<Residue>(o.value_).value % r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Scalar s = *this;
  if (auto* q = std::get_if<mpq_class>(&s.value_)) {
    *q = 1 / *q;
  } else {
    auto& r = std::get<Residue>(s.value_);
    r.value = pow_mod(r.value, r.modulus - 2, r.modulus);
  }
  return s;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = Scalar::one(field());
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

bool Scalar::operator==(const Scalar& o) const {
  if (value_.index() != o.value_.index()) return false;
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == std::get<mpq_class>(o.value_);
  const auto& a = std::get<Residue>(value_);
  const auto& b = std::get<Residue>(o.value_);
  return a.value == b.value && a.modulus == b.modulus;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

ScalarConfig ScalarConfig::make(Field field, Scalar q) {
  if (!(q.field() == field)) throw ConfigError("q does not live in the configured field");
  if (q.is_zero()) throw ConfigError("q must be a unit; got 0");
  ScalarConfig cfg;
  cfg.field = field;
  cfg.q = std::move(q);
  return cfg;
}

ScalarConfig ScalarConfig::parse(std::string_view q_text, std::string_view field_text) {
  Field f = Field::parse(field_text);
  return make(f, Scalar::parse(q_text, f));
}

}  // namespace hhl
