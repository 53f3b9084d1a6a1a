#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

#include "clines/errors.hpp"

namespace clines {

enum class FieldKind { rationals, prime_field };

/// Which coefficient field a computation runs over. One spec per computation.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t modulus = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);
  /// Parses "q" or "fp:<prime>".
  static FieldSpec parse(const std::string& text);

  bool is_prime() const { return kind == FieldKind::prime_field; }
  std::string to_string() const {
    return is_prime() ? "fp:" + std::to_string(modulus) : std::string("q");
  }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline constexpr std::uint64_t kDefaultPrime = 10007;
// Products of two residues must fit in 64 bits.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p <= 2 || p > kMaxPrime || !clines::is_prime(p))
    throw InputError("field modulus must be an odd prime below 2^31, got " + std::to_string(p));
  return {FieldKind::prime_field, p};
}

inline FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 12 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad field modulus '" + digits + "'");
    return prime(std::stoull(digits));
  }
  throw InputError("unknown field '" + text + "' (expected q or fp:<prime>)");
}

/// Element of Z/pZ. Carries its modulus so arithmetic needs no context object.
class ModP {
 public:
  ModP() = default;
  ModP(const FieldSpec& field, long long v) : p_(field.modulus) {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    v_ = static_cast<std::uint64_t>(r);
  }
  static ModP raw(std::uint64_t value, std::uint64_t modulus) {
    ModP out;
    out.v_ = value;
    out.p_ = modulus;
    return out;
  }
  static ModP from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
    const mpz_class p(static_cast<unsigned long>(field.modulus));
    mpz_class d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw InputError("denominator " + den.get_str() + " is divisible by the field modulus");
    mpz_class n = num % p;
    if (n < 0) n += p;
    return raw(n.get_ui(), field.modulus) * raw(d.get_ui(), field.modulus).inverse();
  }
  static bool accepts(const FieldSpec& field) { return field.is_prime(); }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  ModP operator+(const ModP& o) const {
    std::uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return raw(s, p_);
  }
  ModP operator-(const ModP& o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP operator*(const ModP& o) const { return raw((v_ * o.v_) % p_, p_); }
  ModP operator/(const ModP& o) const { return *this * o.inverse(); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }

  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid on signed values
    long long a = static_cast<long long>(v_), m = static_cast<long long>(p_);
    long long x0 = 1, x1 = 0;
    while (m != 0) {
      const long long q = a / m;
      std::tie(a, m) = std::pair(m, a - q * m);
      std::tie(x0, x1) = std::pair(x1, x0 - q * x1);
    }
    long long r = x0 % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return raw(static_cast<std::uint64_t>(r), p_);
  }
  ModP pow(std::uint64_t e) const {
    ModP base = *this, out = raw(1 % p_, p_);
    while (e) {
      if (e & 1) out *= base;
      base *= base;
      e >>= 1;
    }
    return out;
  }

  /// Symmetric representative in (-p/2, p/2].
  long long signed_value() const {
    return v_ > p_ / 2 ? static_cast<long long>(v_) - static_cast<long long>(p_)
                       : static_cast<long long>(v_);
  }
  std::string to_string() const { return std::to_string(signed_value()); }

  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

/// Exact rational number (GMP).
class Rational {
 public:
  Rational() = default;
  Rational(const FieldSpec&, long long v) : q_(static_cast<long>(v)) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  static Rational from_fraction(const FieldSpec&, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InputError("zero denominator");
    return Rational(mpq_class(num, den));
  }
  static bool accepts(const FieldSpec& field) { return !field.is_prime(); }

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(q_ / o.q_));
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational inverse() const { return Rational(mpq_class(1)) / *this; }

  std::string to_string() const { return q_.get_str(); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

 private:
  mpq_class q_;
};

template <class C>
concept FieldElement = std::regular<C> && requires(const C a, const C b, const FieldSpec& f,
                                                   long long n, const mpz_class& z) {
  { C(f, n) };
  { C::from_fraction(f, z, z) } -> std::same_as<C>;
  { C::accepts(f) } -> std::same_as<bool>;
  { a + b } -> std::same_as<C>;
  { a - b } -> std::same_as<C>;
  { a * b } -> std::same_as<C>;
  { a / b } -> std::same_as<C>;
  { -a } -> std::same_as<C>;
  { a.inverse() } -> std::same_as<C>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.to_string() } -> std::same_as<std::string>;
};

/// Calls fn(std::type_identity<C>{}) with C the element type matching the field.
template <class Fn>
decltype(auto) with_field(const FieldSpec& field, Fn&& fn) {
  if (field.is_prime()) return std::forward<Fn>(fn)(std::type_identity<ModP>{});
  return std::forward<Fn>(fn)(std::type_identity<Rational>{});
}

}  // namespace clines
