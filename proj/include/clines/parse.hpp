#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "clines/errors.hpp"
#include "clines/polynomial.hpp"

namespace clines {

namespace detail {

// expr    := ['+'|'-'] term (('+'|'-') term)*
// term    := factor (['*'] factor)*
// factor  := primary ['^' uint]
// primary := int ['/' uint] | var | '(' expr ')'
template <FieldElement C>
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial<C> parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial<C> out = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial<C> expression() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    Polynomial<C> acc = term();
    if (negate) acc = -acc;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      if (c == '+')
        acc += term();
      else
        acc -= term();
    }
    return acc;
  }

  Polynomial<C> term() {
    Polynomial<C> acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_factor(c)) {
        acc *= factor();
      } else if (c == '/') {
        fail("division is only allowed inside a rational literal");
      } else {
        return acc;
      }
    }
  }

  Polynomial<C> factor() {
    Polynomial<C> base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected a non-negative integer exponent");
      if (digits.size() > 4) {
        pos_ = start;
        fail("exponent too large");
      }
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial<C> primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial<C> inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  Polynomial<C> literal() {
    const std::size_t start = pos_;
    mpz_class num(read_digits());
    mpz_class den(1);
    if (peek() == '/') {
      ++pos_;
      skip_space();
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected a denominator");
      den = mpz_class(digits);
      if (den == 0) {
        pos_ = start;
        fail("zero denominator");
      }
    }
    try {
      return Polynomial<C>::constant(ring_, C::from_fraction(ring_->field, num, den));
    } catch (const InputError& e) {
      pos_ = start;
      fail(std::string("literal not representable in ") + ring_->field.to_string() + ": " + e.what());
    }
  }

  Polynomial<C> variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const auto index = ring_->index_of(name);
    if (!index) throw UnknownVariableError(name, start);
    return Polynomial<C>::variable(ring_, *index);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression over the ring's variables into canonical form.
template <FieldElement C>
Polynomial<C> parse_polynomial(std::string_view text, const RingPtr& ring) {
  if (!C::accepts(ring->field)) throw InternalError("coefficient type does not match the ring's field");
  return detail::PolynomialParser<C>(text, ring).parse();
}

template <FieldElement C>
Polynomial<C> parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                               const FieldSpec& field) {
  return parse_polynomial<C>(text, make_ring(variables, field));
}

/// Parses a comma-separated list of literals ("1,0,-1/2") into field elements.
template <FieldElement C>
std::vector<C> parse_vector(std::string_view text, const FieldSpec& field) {
  std::vector<C> out;
  std::size_t start = 0;
  const RingPtr ring = make_ring({}, field);
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    const Polynomial<C> value = parse_polynomial<C>(item, ring);
    out.push_back(value.is_zero() ? C(field, 0) : value.leading_coeff());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace clines
