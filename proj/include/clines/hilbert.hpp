#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "clines/errors.hpp"
#include "clines/groebner.hpp"
#include "clines/monomial.hpp"

namespace clines {

/// Dense integer polynomial in t, coefficient i of t^i.
using IntSeries = std::vector<mpz_class>;

namespace detail {

inline void trim(IntSeries& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
  if (a.empty() || b.empty()) return {};
  IntSeries out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline IntSeries series_add(IntSeries a, const IntSeries& b, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  trim(a);
  return a;
}

/// Drops generators divisible by another one (and duplicates).
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of K[x]/(gens).
inline IntSeries hilbert_numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  const std::size_t n = gens.front().size();

  std::vector<std::size_t> count(n, 0);
  bool pairwise_coprime = true;
  for (const auto& g : gens)
    for (std::size_t v = 0; v < n; ++v)
      if (g[v] && ++count[v] > 1) pairwise_coprime = false;
  if (pairwise_coprime) {
    IntSeries out{1};
    for (const auto& g : gens) {
      IntSeries factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] -= 1;
      out = series_mul(out, factor);
    }
    return out;
  }

  // Pivot x^e: x the most shared variable, e its least positive exponent.
  const std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::uint32_t e = 0;
  for (const auto& g : gens)
    if (g[x] && (e == 0 || g[x] < e)) e = g[x];
  const Monomial pivot = Monomial::variable(n, x, e);

  std::vector<Monomial> with_pivot{pivot};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (!pivot.divides(g)) with_pivot.push_back(g);
    colon.push_back(g / gcd(g, pivot));
  }
  // N(I) = N(I + x^e) + t^e N(I : x^e)
  return series_add(hilbert_numerator_rec(std::move(with_pivot)), hilbert_numerator_rec(std::move(colon)), e);
}

inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace detail

/// Krull dimension of K[x]/(monomials) via a maximal independent variable set;
/// -1 when the monomials include 1.
inline int krull_dimension(const std::vector<Monomial>& monomials, std::size_t nvars) {
  std::vector<std::uint64_t> supports;
  for (const auto& m : monomials) {
    if (m.is_one()) return -1;
    supports.push_back(m.support());
  }
  if (nvars > 64) throw InputError("dimension computation supports at most 64 variables");
  int best = 0;
  // Depth-first over variables: include v unless some support lies inside the set.
  std::function<void(std::size_t, std::uint64_t, int)> search = [&](std::size_t v, std::uint64_t set, int size) {
    if (size + static_cast<int>(nvars - v) <= best) return;
    if (v == nvars) {
      best = size;
      return;
    }
    const std::uint64_t with = set | (std::uint64_t{1} << v);
    const bool independent =
        std::none_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & ~with) == 0; });
    if (independent) search(v + 1, with, size + 1);
    search(v + 1, set, size);
  };
  search(0, 0, 0);
  return best;
}

/// Projective dimension of V(I) in P^(m-1); -1 for the empty scheme.
template <FieldElement C>
int ideal_dimension(const GroebnerBasis<C>& gb) {
  if (!gb.homogeneous()) throw InputError("ideal_dimension needs a homogeneous ideal");
  const int krull = krull_dimension(gb.leading_monomials(), gb.ring->size());
  return krull <= 0 ? -1 : krull - 1;
}

/// Numerator N(t) with Hilbert series N(t) / (1-t)^nvars.
inline IntSeries hilbert_numerator(const std::vector<Monomial>& monomials, std::size_t nvars) {
  if (monomials.empty()) return {1};
  for (const auto& m : monomials)
    if (m.size() != nvars) throw InternalError("monomial arity does not match the ring");
  return detail::hilbert_numerator_rec(monomials);
}

/// Value of the Hilbert function at degree s, read off the numerator.
inline mpz_class hilbert_function(const IntSeries& numerator, std::size_t nvars, long s) {
  mpz_class out = 0;
  for (std::size_t i = 0; i < numerator.size(); ++i)
    out += numerator[i] * detail::binomial(s - static_cast<long>(i) + static_cast<long>(nvars) - 1,
                                           static_cast<long>(nvars) - 1);
  return out;
}

/// Number of degree-s monomials outside the monomial ideal, by direct enumeration.
inline mpz_class count_standard_monomials(const std::vector<Monomial>& monomials, std::size_t nvars, unsigned s) {
  mpz_class count = 0;
  std::vector<std::uint32_t> exps(nvars, 0);
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t v, unsigned left) {
    if (v + 1 == nvars || nvars == 0) {
      if (nvars) exps[v] = left;
      else if (left) return;
      const Monomial m(exps);
      if (std::none_of(monomials.begin(), monomials.end(), [&](const Monomial& g) { return g.divides(m); }))
        ++count;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[v] = e;
      walk(v + 1, left - e);
    }
    exps[v] = 0;
  };
  walk(0, s);
  return count;
}

struct DegreeData {
  int krull_dimension;
  IntSeries numerator;
  /// N(t) / (1-t)^(nvars - krull_dimension)
  IntSeries reduced_numerator;
  mpz_class degree;
};

/// Degree data of K[x]/LT(I). For homogeneous I this is the Hilbert data of I itself.
inline DegreeData degree_data(const std::vector<Monomial>& monomials, std::size_t nvars) {
  DegreeData out;
  out.krull_dimension = krull_dimension(monomials, nvars);
  out.numerator = hilbert_numerator(monomials, nvars);
  IntSeries q = out.numerator;
  const int divisions = static_cast<int>(nvars) - std::max(out.krull_dimension, 0);
  for (int k = 0; k < divisions; ++k) {
    // synthetic division by (1 - t)
    IntSeries quotient(q.size() > 0 ? q.size() - 1 : 0, 0);
    mpz_class carry = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      carry += q[i];
      quotient[i] = carry;
    }
    if (!q.empty() && carry + q.back() != 0) throw InternalError("Hilbert numerator not divisible by (1-t)");
    detail::trim(quotient);
    q = std::move(quotient);
  }
  out.reduced_numerator = q;
  out.degree = 0;
  for (const auto& c : q) out.degree += c;
  return out;
}

/// Number of points with multiplicity of a zero-dimensional projective scheme.
template <FieldElement C>
mpz_class scheme_degree(const GroebnerBasis<C>& gb) {
  const int dim = ideal_dimension(gb);
  if (dim != 0) throw InputError("scheme_degree needs a zero-dimensional scheme, dimension is " + std::to_string(dim));
  const std::size_t n = gb.ring->size();
  const DegreeData data = degree_data(gb.leading_monomials(), n);
  // The Hilbert function is constant from the numerator's degree on.
  const long settle = static_cast<long>(data.reduced_numerator.size());
  const mpz_class h0 = hilbert_function(data.numerator, n, settle);
  const mpz_class h1 = hilbert_function(data.numerator, n, settle + 1);
  if (h0 != h1 || h0 != data.degree) throw InternalError("Hilbert function did not stabilize at the degree");
  return data.degree;
}

}  // namespace clines
