#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "clines/errors.hpp"

namespace clines {

/// Exponent vector, one entry per ring variable, with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
  }
  Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(std::vector<std::uint32_t>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  void set(std::size_t i, std::uint32_t e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }
  /// Bitmask of variables with positive exponent (first 64 variables).
  std::uint64_t support() const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
      if (exps_[i]) mask |= std::uint64_t{1} << i;
    return mask;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out(a);
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
    out.degree_ += b.degree_;
    return out;
  }
  /// Exact quotient; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial out(a);
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] -= b.exps_[i];
    out.degree_ -= b.degree_;
    return out;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    for (auto e : out.exps_) out.degree_ += e;
    return out;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    for (auto e : out.exps_) out.degree_ += e;
    return out;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ull;
    return h;
  }
};

enum class OrderKind { grevlex, lex, elimination };

/// Monomial order. `elimination` compares the variables [0, split) by grevlex
/// first and breaks ties by grevlex on the remaining variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t split = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder elimination(std::size_t split) { return {OrderKind::elimination, split}; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::grevlex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        for (std::size_t i = a.size(); i-- > 0;)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
      case OrderKind::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case OrderKind::elimination: {
        const int first = grevlex_block(a, b, 0, split);
        return first != 0 ? first : grevlex_block(a, b, split, a.size());
      }
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool degree_compatible() const { return kind == OrderKind::grevlex; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static int grevlex_block(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace clines
