#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "clines/errors.hpp"
#include "clines/groebner.hpp"
#include "clines/hilbert.hpp"
#include "clines/polynomial.hpp"

namespace clines {

inline constexpr std::uint64_t kDefaultEnumerationCeiling = 101;

/// Calls visit(point) for every point of P^(m-1)(F_p) in normalized form
/// (first nonzero coordinate 1), lexicographically. visit returns false to stop.
template <class Visit>
void for_each_projective_point(std::size_t m, const FieldSpec& field, Visit&& visit) {
  if (!field.is_prime()) throw InputError("point enumeration needs a prime field");
  const std::uint64_t p = field.modulus;
  std::vector<ModP> point(m, ModP(field, 0));
  for (std::size_t lead = 0; lead < m; ++lead) {
    std::fill(point.begin(), point.end(), ModP(field, 0));
    point[lead] = ModP(field, 1);
    const std::size_t free = m - lead - 1;
    std::vector<std::uint64_t> digits(free, 0);
    for (;;) {
      for (std::size_t k = 0; k < free; ++k) point[lead + 1 + k] = ModP::raw(digits[k], p);
      if (!visit(static_cast<const std::vector<ModP>&>(point))) return;
      std::size_t k = free;
      while (k > 0 && ++digits[k - 1] == p) digits[--k] = 0;
      if (k == 0) break;
    }
  }
}

/// Number of points of P^(m-1)(F_p).
inline std::uint64_t projective_point_count(std::size_t m, std::uint64_t p) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t k = 0; k < m; ++k) {
    total += power;
    power *= p;
  }
  return total;
}

inline void check_enumeration_ceiling(const FieldSpec& field, std::uint64_t ceiling) {
  if (!field.is_prime()) throw InputError("exhaustive enumeration needs a prime field, got " + field.to_string());
  if (field.modulus > ceiling)
    throw FieldTooLargeError("exhaustive enumeration over " + field.to_string() + " exceeds the ceiling p <= " +
                             std::to_string(ceiling));
}

/// F_p-points of V(ideal) by exhaustive search, filtered by vanishing of the reduced basis.
template <FieldElement C>
std::vector<std::vector<C>> enumerate_points(const IdealPresentation<C>& ideal, std::uint64_t ceiling,
                                             GroebnerBudget budget = {}) {
  if constexpr (!std::is_same_v<C, ModP>) {
    throw InputError("exhaustive enumeration needs a prime field");
  } else {
    check_enumeration_ceiling(ideal.field(), ceiling);
    const GroebnerBasis<C> gb = groebner_basis(ideal, MonomialOrder{}, budget);
    std::vector<std::vector<C>> out;
    if (gb.is_unit()) return out;
    for_each_projective_point(ideal.ring()->size(), ideal.field(), [&](const std::vector<ModP>& pt) {
      const bool on = std::all_of(gb.basis.begin(), gb.basis.end(),
                                  [&](const Polynomial<C>& g) { return evaluate(g, pt).is_zero(); });
      if (on) out.push_back(pt);
      return true;
    });
    return out;
  }
}

namespace detail {

// Dense univariate polynomials over F_p, coefficient i of x^i, trimmed.
using Dense = std::vector<ModP>;

inline void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline Dense dense_mod(Dense a, const Dense& b) {
  trim(a);
  const ModP inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const ModP f = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline Dense dense_div(Dense a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Dense q(a.size() - b.size() + 1, ModP::raw(0, b.back().modulus()));
  const ModP inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const ModP f = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

inline Dense dense_mulmod(const Dense& a, const Dense& b, const Dense& m) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, ModP::raw(0, m.back().modulus()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return dense_mod(std::move(out), m);
}

inline Dense dense_powmod(Dense base, std::uint64_t e, const Dense& m) {
  Dense out{ModP::raw(1, m.back().modulus())};
  base = dense_mod(std::move(base), m);
  while (e) {
    if (e & 1) out = dense_mulmod(out, base, m);
    base = dense_mulmod(base, base, m);
    e >>= 1;
  }
  return dense_mod(std::move(out), m);
}

inline Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const ModP inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

// Splits a squarefree product of distinct linear factors into its roots.
inline void split_linear(const Dense& g, std::uint64_t p, std::uint64_t& salt, std::vector<std::uint64_t>& roots) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    roots.push_back((-(g[0] / g[1])).value());
    return;
  }
  for (;;) {
    const ModP a = ModP::raw(salt++ % p, p);
    const Dense shifted{a, ModP::raw(1, p)};
    Dense h = dense_powmod(shifted, (p - 1) / 2, g);
    if (h.empty()) h.push_back(ModP::raw(0, p));
    h[0] -= ModP::raw(1, p);
    trim(h);
    const Dense d = dense_gcd(g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, p, salt, roots);
      split_linear(dense_div(g, d), p, salt, roots);
      return;
    }
  }
}

/// Distinct roots in F_p, ascending.
inline std::vector<std::uint64_t> roots_mod_p(Dense u) {
  trim(u);
  std::vector<std::uint64_t> roots;
  if (u.size() <= 1) {
    if (u.empty()) throw InternalError("roots of the zero polynomial requested");
    return roots;
  }
  const std::uint64_t p = u.back().modulus();
  if (p <= 4096) {
    for (std::uint64_t r = 0; r < p; ++r) {
      ModP acc = ModP::raw(0, p);
      const ModP x = ModP::raw(r, p);
      for (std::size_t i = u.size(); i-- > 0;) acc = acc * x + u[i];
      if (acc.is_zero()) roots.push_back(r);
    }
    return roots;
  }
  // gcd(u, x^p - x) is the product of the distinct linear factors.
  Dense xp = dense_powmod(Dense{ModP::raw(0, p), ModP::raw(1, p)}, p, u);
  xp.resize(std::max<std::size_t>(xp.size(), 2), ModP::raw(0, p));
  xp[1] -= ModP::raw(1, p);
  trim(xp);
  Dense g = xp.empty() ? dense_gcd(u, Dense{}) : dense_gcd(u, xp);
  if (g.size() > 1 && g[0].is_zero()) {
    roots.push_back(0);
    g = dense_div(g, Dense{ModP::raw(0, p), ModP::raw(1, p)});
  }
  std::uint64_t salt = 1;
  split_linear(g, p, salt, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Minimal polynomial of variable v modulo a zero-dimensional affine ideal.
inline Dense minimal_polynomial(const GroebnerBasis<ModP>& gb, std::size_t v) {
  const RingPtr& ring = gb.ring;
  const std::uint64_t p = ring->field.modulus;
  struct Row {
    Polynomial<ModP> vec;  // monic in its leading monomial
    Dense combo;           // row = sum combo[i] * NF(v^i)
  };
  std::vector<Row> rows;
  Polynomial<ModP> power = normal_form(Polynomial<ModP>::constant(ring, 1), gb);
  const Polynomial<ModP> var = Polynomial<ModP>::variable(ring, v).with_order(gb.order);
  for (std::size_t i = 0;; ++i) {
    Polynomial<ModP> u = power;
    Dense combo(i + 1, ModP::raw(0, p));
    combo[i] = ModP::raw(1, p);
    for (const auto& row : rows) {
      const ModP c = u.coefficient(row.vec.leading_monomial());
      if (c.is_zero()) continue;
      u = u - row.vec.scaled(c);
      for (std::size_t k = 0; k < row.combo.size(); ++k) combo[k] -= c * row.combo[k];
    }
    if (u.is_zero()) {
      trim(combo);
      return combo;
    }
    const ModP inv = u.leading_coeff().inverse();
    for (auto& c : combo) c *= inv;
    rows.push_back({u.scaled(inv), std::move(combo)});
    if (rows.size() > 100000) throw BudgetExhausted("minimal polynomial search exceeded 100000 powers");
    power = normal_form(power * var, gb);
  }
}

// All F_p solutions of an affine system, assigning the last variable first.
inline void solve_affine(const std::vector<Polynomial<ModP>>& polys, const RingPtr& ring, std::vector<ModP>& suffix,
                         std::vector<std::vector<ModP>>& out, const GroebnerBudget& budget) {
  const std::size_t k = ring->size();
  const GroebnerBasis<ModP> gb = groebner_basis(IdealPresentation<ModP>(ring, polys), MonomialOrder{}, budget);
  if (gb.is_unit()) return;
  if (k == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  if (krull_dimension(gb.leading_monomials(), k) != 0)
    throw InternalError("affine chart of a zero-dimensional scheme is positive-dimensional");
  const Dense minpoly = minimal_polynomial(gb, k - 1);
  const std::uint64_t p = ring->field.modulus;

  std::vector<std::string> names(ring->variables.begin(), ring->variables.end() - 1);
  const RingPtr smaller = make_ring(std::move(names), ring->field);
  for (const std::uint64_t r : roots_mod_p(minpoly)) {
    std::vector<Polynomial<ModP>> images;
    for (std::size_t i = 0; i + 1 < k; ++i) images.push_back(Polynomial<ModP>::variable(smaller, i));
    images.push_back(Polynomial<ModP>::constant(smaller, ModP::raw(r, p)));
    std::vector<Polynomial<ModP>> next;
    for (const auto& g : gb.basis) next.push_back(linear_substitute(g, images));
    suffix.push_back(ModP::raw(r, p));
    solve_affine(next, smaller, suffix, out, budget);
    suffix.pop_back();
  }
}

}  // namespace detail

/// F_p-rational points of a zero-dimensional projective scheme, solved chart by
/// chart through minimal polynomials. Points are normalized and sorted.
template <FieldElement C>
std::vector<std::vector<C>> rational_points(const IdealPresentation<C>& ideal, GroebnerBudget budget = {}) {
  if constexpr (!std::is_same_v<C, ModP>) {
    throw InputError("rational point search needs a prime field");
  } else {
    if (!ideal.homogeneous()) throw InputError("rational_points needs a homogeneous ideal");
    const RingPtr& ring = ideal.ring();
    const std::size_t m = ring->size();
    const GroebnerBasis<C> gb = groebner_basis(ideal, MonomialOrder{}, budget);
    const int dim = ideal_dimension(gb);
    if (dim > 0) throw InputError("rational_points needs a zero-dimensional scheme, dimension is " + std::to_string(dim));
    std::vector<std::vector<C>> out;
    if (dim < 0) return out;
    const ModP zero(ring->field, 0), one(ring->field, 1);
    // chart `lead`: w_b = 0 for b < lead, w_lead = 1
    for (std::size_t lead = 0; lead < m; ++lead) {
      const RingPtr chart = make_ring(std::vector<std::string>(ring->variables.begin() + static_cast<std::ptrdiff_t>(lead) + 1,
                                                               ring->variables.end()),
                                      ring->field);
      std::vector<Polynomial<C>> images;
      for (std::size_t b = 0; b < m; ++b) {
        if (b < lead)
          images.push_back(Polynomial<C>(chart));
        else if (b == lead)
          images.push_back(Polynomial<C>::constant(chart, one));
        else
          images.push_back(Polynomial<C>::variable(chart, b - lead - 1));
      }
      std::vector<Polynomial<C>> polys;
      for (const auto& g : gb.basis) polys.push_back(linear_substitute(g, images));
      std::vector<std::vector<C>> solutions;
      std::vector<C> suffix;
      detail::solve_affine(polys, chart, suffix, solutions, budget);
      for (auto& s : solutions) {
        std::vector<C> pt(lead, zero);
        pt.push_back(one);
        pt.insert(pt.end(), s.begin(), s.end());
        out.push_back(std::move(pt));
      }
    }
    std::sort(out.begin(), out.end(), [](const std::vector<C>& a, const std::vector<C>& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                          [](const C& x, const C& y) { return x.value() < y.value(); });
    });
    return out;
  }
}

}  // namespace clines
