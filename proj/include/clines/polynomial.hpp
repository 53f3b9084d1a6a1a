#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clines/errors.hpp"
#include "clines/field.hpp"
#include "clines/monomial.hpp"

namespace clines {

/// Variable names plus coefficient field. Shared between all polynomials of a ring.
struct Ring {
  std::vector<std::string> variables;
  FieldSpec field;

  std::size_t size() const { return variables.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables.begin());
  }
  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> variables, FieldSpec field) {
  return std::make_shared<const Ring>(Ring{std::move(variables), field});
}

/// Names prefix0 .. prefix{count-1}, or prefix{first} .. when first is given.
inline std::vector<std::string> numbered_names(const std::string& prefix, std::size_t count,
                                               std::size_t first = 0) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

template <FieldElement C>
struct Term {
  Monomial monomial;
  C coeff;
};

/// Sparse multivariate polynomial: terms sorted strictly descending in `order`,
/// no zero coefficients. The zero polynomial has no terms and degree -1.
template <FieldElement C>
class Polynomial {
 public:
  using coefficient_type = C;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring, MonomialOrder order = {}) : ring_(std::move(ring)), order_(order) {}

  static Polynomial constant(RingPtr ring, const C& c) {
    Polynomial out(std::move(ring));
    if (!c.is_zero()) out.terms_.push_back({Monomial(out.ring_->size()), c});
    return out;
  }
  static Polynomial constant(RingPtr ring, long long c) {
    const C value(ring->field, c);
    return constant(std::move(ring), value);
  }
  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial out(std::move(ring));
    out.terms_.push_back({Monomial::variable(out.ring_->size(), index), C(out.ring_->field, 1)});
    return out;
  }
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term<C>> terms, MonomialOrder order = {}) {
    Polynomial out(std::move(ring), order);
    std::sort(terms.begin(), terms.end(), [&](const Term<C>& a, const Term<C>& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
        out.terms_.back().coeff += t.coeff;
        if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }
  /// Terms must already be strictly descending with nonzero coefficients.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term<C>> terms, MonomialOrder order) {
    Polynomial out(std::move(ring), order);
    out.terms_ = std::move(terms);
    return out;
  }

  const RingPtr& ring() const { return ring_; }
  const FieldSpec& field() const { return ring_->field; }
  std::size_t nvars() const { return ring_->size(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term<C>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  C scalar(long long v) const { return C(ring_->field, v); }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
  }
  /// Degree in a single variable; -1 for zero.
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial[var]));
    return d;
  }
  bool is_homogeneous() const { return terms_.empty() || is_homogeneous(degree()); }
  /// True for the zero polynomial.
  bool is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term<C>& t) { return static_cast<int>(t.monomial.degree()) == d; });
  }

  const Term<C>& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const C& leading_coeff() const { return terms_.front().coeff; }

  C coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return scalar(0);
  }

  Polynomial with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    Polynomial out = *this;
    out.order_ = order;
    std::sort(out.terms_.begin(), out.terms_.end(), [&](const Term<C>& a, const Term<C>& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
    return out;
  }

  Polynomial monic() const {
    if (is_zero() || leading_coeff() == scalar(1)) return *this;
    return scaled(leading_coeff().inverse());
  }

  Polynomial scaled(const C& c) const {
    if (c.is_zero()) return Polynomial(ring_, order_);
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }

  /// this * c * m
  Polynomial mul_term(const Monomial& m, const C& c) const {
    if (c.is_zero()) return Polynomial(ring_, order_);
    Polynomial out = *this;
    for (auto& t : out.terms_) {
      t.monomial = t.monomial * m;
      t.coeff *= c;
    }
    return out;
  }

  /// this - c * m * g, by a single merge.
  Polynomial sub_mul(const C& c, const Monomial& m, const Polynomial& g) const {
    check_compatible(g);
    std::vector<Term<C>> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].monomial * m;
      const int cmp = i == terms_.size() ? -1 : order_.compare(terms_[i].monomial, gm);
      if (cmp > 0) {
        out.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(gm), -(c * g.terms_[j].coeff)});
        ++j;
      } else {
        C v = terms_[i].coeff - c * g.terms_[j].coeff;
        if (!v.is_zero()) out.push_back({std::move(gm), std::move(v)});
        ++i;
        ++j;
      }
    }
    return from_sorted(ring_, std::move(out), order_);
  }

  Polynomial operator-() const { return scaled(-scalar(1)); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return a;
    return a.sub_mul(-a.scalar(1), Monomial(a.nvars()), b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return a;
    return a.sub_mul(a.scalar(1), Monomial(a.nvars()), b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_, a.order_);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].monomial, b.terms_[0].coeff);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].monomial, a.terms_[0].coeff);
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        Monomial m = s.monomial * t.monomial;
        auto [it, fresh] = acc.try_emplace(std::move(m), s.coeff * t.coeff);
        if (!fresh) it->second += s.coeff * t.coeff;
      }
    std::vector<Term<C>> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) terms.push_back({m, c});
    return from_terms(a.ring_, std::move(terms), a.order_);
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Same ring, same terms. Polynomials in different orders are compared term-set-wise.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.order_ == b.order_) return equal_terms(a.terms_, b.terms_);
    return equal_terms(a.terms_, b.with_order(a.order_).terms_);
  }

  /// Canonical text form (grevlex descending), parseable by parse_polynomial.
  std::string to_string() const;

  void check_compatible(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw InputError("polynomials live in different rings");
    if (!(order_ == o.order_)) throw InternalError("polynomials use different monomial orders");
  }

 private:
  static bool equal_terms(const std::vector<Term<C>>& x, const std::vector<Term<C>>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!(x[i].monomial == y[i].monomial) || !(x[i].coeff == y[i].coeff)) return false;
    return true;
  }

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term<C>> terms_;
};

template <FieldElement C>
std::string Polynomial<C>::to_string() const {
  if (is_zero()) return "0";
  const Polynomial canon = with_order(MonomialOrder::grevlex());
  std::string out;
  bool first = true;
  for (const auto& t : canon.terms_) {
    std::string coeff = t.coeff.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    std::string body;
    if (t.monomial.is_one()) {
      body = coeff;
    } else {
      if (coeff != "1") body = coeff + "*";
      bool first_var = true;
      for (std::size_t i = 0; i < t.monomial.size(); ++i) {
        const auto e = t.monomial[i];
        if (e == 0) continue;
        if (!first_var) body += "*";
        body += ring_->variables[i];
        if (e > 1) body += "^" + std::to_string(e);
        first_var = false;
      }
    }
    if (first)
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

template <FieldElement C>
C evaluate(const Polynomial<C>& f, std::span<const C> point) {
  if (point.size() != f.nvars())
    throw InputError("evaluation point has " + std::to_string(point.size()) + " coordinates, ring has " +
                     std::to_string(f.nvars()) + " variables");
  C sum = f.scalar(0);
  for (const auto& t : f.terms()) {
    C v = t.coeff;
    for (std::size_t i = 0; i < point.size() && !v.is_zero(); ++i)
      for (std::uint32_t e = 0; e < t.monomial[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

template <FieldElement C>
C evaluate(const Polynomial<C>& f, const std::vector<C>& point) {
  return evaluate(f, std::span<const C>(point));
}

/// Ring homomorphism sending variable i of f's ring to images[i].
template <FieldElement C>
Polynomial<C> linear_substitute(const Polynomial<C>& f, std::span<const Polynomial<C>> images) {
  if (images.size() != f.nvars())
    throw InputError("substitution needs " + std::to_string(f.nvars()) + " images, got " +
                     std::to_string(images.size()));
  if (images.empty()) throw InputError("substitution into an empty ring");
  const RingPtr& target = images[0].ring();
  for (const auto& img : images) {
    if (!same_ring(img.ring(), target)) throw InputError("substitution images live in different rings");
  }
  if (!(target->field == f.field())) throw InputError("substitution changes the coefficient field");

  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Polynomial<C>>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial<C>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial<C>::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i].with_order(MonomialOrder{}));
    return cache[e];
  };

  std::unordered_map<Monomial, C, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    Polynomial<C> prod = Polynomial<C>::constant(target, t.coeff);
    for (std::size_t i = 0; i < f.nvars() && !prod.is_zero(); ++i)
      if (t.monomial[i]) prod = prod * power(i, t.monomial[i]);
    for (const auto& s : prod.terms()) {
      auto [it, fresh] = acc.try_emplace(s.monomial, s.coeff);
      if (!fresh) it->second += s.coeff;
    }
  }
  std::vector<Term<C>> terms;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.push_back({m, c});
  return Polynomial<C>::from_terms(target, std::move(terms));
}

template <FieldElement C>
Polynomial<C> linear_substitute(const Polynomial<C>& f, const std::vector<Polynomial<C>>& images) {
  return linear_substitute(f, std::span<const Polynomial<C>>(images));
}

/// Moves f into `target`, sending variable i to variable index_map[i].
template <FieldElement C>
Polynomial<C> embed(const Polynomial<C>& f, const RingPtr& target, std::span<const std::size_t> index_map,
                    MonomialOrder order = {}) {
  if (index_map.size() != f.nvars()) throw InternalError("embed: index map has wrong length");
  if (!(target->field == f.field())) throw InputError("embed changes the coefficient field");
  std::vector<Term<C>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> exps(target->size(), 0);
    for (std::size_t i = 0; i < index_map.size(); ++i) exps[index_map[i]] += t.monomial[i];
    terms.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial<C>::from_terms(target, std::move(terms), order);
}

template <FieldElement C>
Polynomial<C> pow(const Polynomial<C>& f, unsigned e) {
  Polynomial<C> out = Polynomial<C>::constant(f.ring(), 1).with_order(f.order());
  for (unsigned i = 0; i < e; ++i) out *= f;
  return out;
}

template <FieldElement C>
Polynomial<C> derivative(const Polynomial<C>& f, std::size_t var) {
  std::vector<Term<C>> terms;
  for (const auto& t : f.terms()) {
    const auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back({std::move(m), t.coeff * f.scalar(static_cast<long long>(e))});
  }
  return Polynomial<C>::from_terms(f.ring(), std::move(terms), f.order());
}

/// Part of f of total degree d.
template <FieldElement C>
Polynomial<C> homogeneous_component(const Polynomial<C>& f, int d) {
  std::vector<Term<C>> terms;
  for (const auto& t : f.terms())
    if (static_cast<int>(t.monomial.degree()) == d) terms.push_back(t);
  return Polynomial<C>::from_sorted(f.ring(), std::move(terms), f.order());
}

/// Linear form sum_i coeffs[i] * x_i.
template <FieldElement C>
Polynomial<C> linear_form(const RingPtr& ring, std::span<const C> coeffs) {
  std::vector<Term<C>> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) terms.push_back({Monomial::variable(ring->size(), i), coeffs[i]});
  return Polynomial<C>::from_terms(ring, std::move(terms));
}

}  // namespace clines
