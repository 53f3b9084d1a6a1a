#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clines/contact.hpp"
#include "clines/errors.hpp"
#include "clines/groebner.hpp"
#include "clines/polynomial.hpp"

namespace clines {

enum class Family { quadric_surface, cubic_threefold, random, fermat, plane_in_quartic, cone, segre_zak };

/// Parsed example key. Grammar:
///   quadric-surface | cubic-threefold | random:<d>:<N>[:seed=S] | fermat:<d>:<N>
///   | plane-in-quartic[:seed=S] | cone:<key>[:vertex] | segre-zak
struct ExampleSpec {
  Family family = Family::quadric_surface;
  int degree = 2;
  int ambient = 3;
  std::uint64_t seed = 1;
  std::string inner;  // cone base key
  bool at_vertex = false;
  std::string key;

  static ExampleSpec parse(const std::string& key);
};

namespace detail {

inline std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(':', start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

inline long long parse_count(const std::string& text, const std::string& what, long long lo, long long hi) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || v < lo || v > hi)
    throw InputError("bad " + what + " '" + text + "' (expected an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "])");
  return v;
}

inline std::uint64_t parse_seed(const std::string& part) {
  if (part.rfind("seed=", 0) != 0) throw InputError("unexpected example parameter '" + part + "'");
  const std::string digits = part.substr(5);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
    throw InputError("bad seed '" + digits + "'");
  return std::stoull(digits);
}

}  // namespace detail

inline ExampleSpec ExampleSpec::parse(const std::string& key) {
  ExampleSpec s;
  s.key = key;
  if (key.rfind("cone:", 0) == 0) {
    s.family = Family::cone;
    s.inner = key.substr(5);
    const std::string suffix = ":vertex";
    if (s.inner.size() > suffix.size() && s.inner.compare(s.inner.size() - suffix.size(), suffix.size(), suffix) == 0) {
      s.at_vertex = true;
      s.inner.resize(s.inner.size() - suffix.size());
    }
    const ExampleSpec base = parse(s.inner);  // validates
    if (base.family == Family::cone || base.family == Family::segre_zak)
      throw InputError("cone base must be a hypersurface example");
    return s;
  }
  const auto parts = detail::split_colon(key);
  const std::string& name = parts[0];
  if (name == "quadric-surface" || name == "cubic-threefold" || name == "segre-zak") {
    if (parts.size() != 1) throw InputError("example '" + name + "' takes no parameters");
    if (name == "quadric-surface") s.family = Family::quadric_surface;
    if (name == "cubic-threefold") {
      s.family = Family::cubic_threefold;
      s.degree = 3;
      s.ambient = 4;
    }
    if (name == "segre-zak") {
      s.family = Family::segre_zak;
      s.ambient = 11;
    }
    return s;
  }
  if (name == "random" || name == "fermat") {
    if (parts.size() < 3 || parts.size() > (name == "random" ? 4u : 3u))
      throw InputError("example key '" + key + "' expects " + name + ":<d>:<N>" + (name == "random" ? "[:seed=S]" : ""));
    s.family = name == "random" ? Family::random : Family::fermat;
    s.degree = static_cast<int>(detail::parse_count(parts[1], "degree", 2, 12));
    s.ambient = static_cast<int>(detail::parse_count(parts[2], "ambient dimension", 2, 12));
    if (parts.size() == 4) s.seed = detail::parse_seed(parts[3]);
    return s;
  }
  if (name == "plane-in-quartic") {
    if (parts.size() > 2) throw InputError("example key '" + key + "' expects plane-in-quartic[:seed=S]");
    s.family = Family::plane_in_quartic;
    s.degree = 4;
    s.ambient = 4;
    if (parts.size() == 2) s.seed = detail::parse_seed(parts[1]);
    return s;
  }
  throw InputError("unknown example '" + key + "'");
}

template <FieldElement C>
struct Example {
  IdealPresentation<C> variety;
  ProjectivePoint<C> point;
  std::optional<int> expected_dimension;  // set when the variety is not a hypersurface
  std::vector<std::string> flags;
};

/// All monomials of degree d in n variables, exponent vectors in lex-descending order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(Monomial(e));
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

namespace detail {

template <FieldElement C>
C random_coefficient(const FieldSpec& field, std::mt19937_64& rng) {
  if (field.is_prime()) return C(field, static_cast<long long>(rng() % field.modulus));
  return C(field, static_cast<long long>(rng() % 19) - 9);
}

template <FieldElement C>
Polynomial<C> random_form(const RingPtr& ring, unsigned d, std::mt19937_64& rng) {
  std::vector<Term<C>> terms;
  for (auto& m : monomials_of_degree(ring->size(), d)) terms.push_back({std::move(m), random_coefficient<C>(ring->field, rng)});
  return Polynomial<C>::from_terms(ring, std::move(terms));
}

template <FieldElement C>
bool gradient_nonzero(const Polynomial<C>& f, const std::vector<C>& x) {
  for (std::size_t v = 0; v < f.nvars(); ++v)
    if (!evaluate(derivative(f, v), x).is_zero()) return true;
  return false;
}

inline constexpr int kRetries = 16;

}  // namespace detail

/// Random degree-d form in x0..xN through (1,0,...,0): the x0^d coefficient is
/// zeroed, and the draw is repeated while the gradient there vanishes.
template <FieldElement C>
std::pair<Polynomial<C>, ProjectivePoint<C>> random_hypersurface_through_point(int d, int N, std::uint64_t seed,
                                                                              const FieldSpec& field) {
  if (d < 2 || N < 2) throw InputError("random hypersurface needs d >= 2 and N >= 2");
  const RingPtr ring = make_ring(numbered_names("x", static_cast<std::size_t>(N) + 1), field);
  std::vector<C> x(ring->size(), C(field, 0));
  x[0] = C(field, 1);
  std::mt19937_64 rng(seed);
  const Monomial top = Monomial::variable(ring->size(), 0, static_cast<std::uint32_t>(d));
  for (int attempt = 0; attempt < detail::kRetries; ++attempt) {
    std::vector<Term<C>> terms;
    for (auto& m : monomials_of_degree(ring->size(), static_cast<unsigned>(d))) {
      C c = detail::random_coefficient<C>(field, rng);
      if (m == top) c = C(field, 0);
      terms.push_back({std::move(m), c});
    }
    Polynomial<C> f = Polynomial<C>::from_terms(ring, std::move(terms));
    if (detail::gradient_nonzero(f, x)) return {std::move(f), ProjectivePoint<C>(x)};
  }
  throw InputError("could not draw a hypersurface smooth at the base point in " + std::to_string(detail::kRetries) +
                   " attempts");
}

namespace detail {

template <FieldElement C>
Example<C> hypersurface_example(Polynomial<C> f, std::vector<C> point) {
  const RingPtr ring = f.ring();
  return Example<C>{IdealPresentation<C>(ring, {std::move(f)}), ProjectivePoint<C>(std::move(point)), std::nullopt, {}};
}

template <FieldElement C>
Example<C> fermat_example(int d, int N, const FieldSpec& field) {
  const RingPtr ring = make_ring(numbered_names("x", static_cast<std::size_t>(N) + 1), field);
  Polynomial<C> f(ring);
  for (std::size_t i = 0; i < ring->size(); ++i)
    f += pow(Polynomial<C>::variable(ring, i), static_cast<unsigned>(d));
  // need c with c^d = -1; odd d gives c = -1
  std::optional<C> c;
  if (d % 2 == 1) {
    c = C(field, -1);
  } else if (field.is_prime()) {
    for (std::uint64_t a = 1; a < field.modulus && !c; ++a) {
      const C cand(field, static_cast<long long>(a));
      C power(field, 1);
      for (int e = 0; e < d; ++e) power *= cand;
      if (power == C(field, -1)) c = cand;
    }
  }
  if (!c) throw InputError("fermat:" + std::to_string(d) + ":" + std::to_string(N) + " has no point of the form (1,c,0,...,0) over " + field.to_string());
  std::vector<C> x(ring->size(), C(field, 0));
  x[0] = C(field, 1);
  x[1] = *c;
  Example<C> ex = hypersurface_example(std::move(f), std::move(x));
  ex.flags.push_back("fermat_non_general: the Fermat hypersurface and its base point are special");
  return ex;
}

template <FieldElement C>
Example<C> plane_in_quartic(std::uint64_t seed, const FieldSpec& field) {
  const RingPtr ring = make_ring(numbered_names("x", 5), field);
  std::vector<C> x(5, C(field, 0));
  x[2] = C(field, 1);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    const Polynomial<C> a = random_form<C>(ring, 3, rng);
    const Polynomial<C> b = random_form<C>(ring, 3, rng);
    Polynomial<C> f = Polynomial<C>::variable(ring, 0) * a + Polynomial<C>::variable(ring, 1) * b;
    if (gradient_nonzero(f, x)) {
      Example<C> ex = hypersurface_example(std::move(f), x);
      ex.flags.push_back("contains the plane x0 = x1 = 0 through the base point");
      return ex;
    }
  }
  throw InputError("could not draw a plane-containing quartic smooth at the base point");
}

/// Seg(Y x C) in P^11 with Y = {y0 y3 = y1 y2}, C = {z0 z2 = z1^2}; coordinate
/// x(3i+j) stands for y_i z_j. Base point y = (1,1,1,1), z = (1,1,1).
template <FieldElement C>
Example<C> segre_zak(const FieldSpec& field) {
  const RingPtr ring = make_ring(numbered_names("x", 12), field);
  auto x = [&](int i, int j) { return Polynomial<C>::variable(ring, static_cast<std::size_t>(3 * i + j)); };
  std::vector<Polynomial<C>> gens;
  for (int i = 0; i < 4; ++i)
    for (int k = i + 1; k < 4; ++k)
      for (int j = 0; j < 3; ++j)
        for (int l = j + 1; l < 3; ++l) gens.push_back(x(i, j) * x(k, l) - x(i, l) * x(k, j));
  // polarized quadric of Y on pairs of columns, of C on pairs of rows
  for (int j = 0; j < 3; ++j)
    for (int l = j; l < 3; ++l)
      gens.push_back(x(0, j) * x(3, l) + x(0, l) * x(3, j) - x(1, j) * x(2, l) - x(1, l) * x(2, j));
  for (int i = 0; i < 4; ++i)
    for (int k = i; k < 4; ++k)
      gens.push_back(x(i, 0) * x(k, 2) + x(i, 2) * x(k, 0) - (x(i, 1) * x(k, 1)).scaled(C(field, 2)));
  std::vector<C> pt(12, C(field, 1));
  Example<C> ex{IdealPresentation<C>(ring, std::move(gens)), ProjectivePoint<C>(std::move(pt)), 3, {}};
  ex.flags.push_back("segre product of a quadric surface and a conic; expected dimension 3");
  return ex;
}

}  // namespace detail

template <FieldElement C>
Example<C> make_example(const ExampleSpec& spec, const FieldSpec& field) {
  Example<C> ex = [&]() -> Example<C> {
    switch (spec.family) {
      case Family::quadric_surface: {
        const RingPtr ring = make_ring(numbered_names("x", 4), field);
        auto v = [&](std::size_t i) { return Polynomial<C>::variable(ring, i); };
        std::vector<C> pt(4, C(field, 0));
        pt[0] = C(field, 1);
        return detail::hypersurface_example(v(0) * v(3) - v(1) * v(2), pt);
      }
      case Family::cubic_threefold:
      case Family::random: {
        auto [f, x] = random_hypersurface_through_point<C>(spec.degree, spec.ambient, spec.seed, field);
        return detail::hypersurface_example(std::move(f), x.coordinates());
      }
      case Family::fermat: return detail::fermat_example<C>(spec.degree, spec.ambient, field);
      case Family::plane_in_quartic: return detail::plane_in_quartic<C>(spec.seed, field);
      case Family::segre_zak: return detail::segre_zak<C>(field);
      case Family::cone: {
        const Example<C> base = make_example<C>(ExampleSpec::parse(spec.inner), field);
        const RingPtr inner = base.variety.ring();
        const std::size_t m = inner->size();
        const RingPtr ring = make_ring(numbered_names("x", m + 1), field);
        std::vector<std::size_t> map(m);
        for (std::size_t i = 0; i < m; ++i) map[i] = i;
        std::vector<Polynomial<C>> gens;
        for (const auto& g : base.variety.generators()) gens.push_back(embed(g, ring, std::span<const std::size_t>(map)));
        std::vector<C> pt(m + 1, C(field, 0));
        pt[m] = C(field, 1);
        if (!spec.at_vertex)
          for (std::size_t i = 0; i < m; ++i) pt[i] = base.point.coordinates()[i];
        Example<C> ex{IdealPresentation<C>(ring, std::move(gens)), ProjectivePoint<C>(std::move(pt)),
                      base.expected_dimension ? std::optional<int>(*base.expected_dimension + 1) : std::nullopt,
                      base.flags};
        ex.flags.push_back(spec.at_vertex ? "cone vertex: the base point is singular"
                                          : "cone: every point lies on the line to the vertex x" + std::to_string(m));
        return ex;
      }
    }
    throw InternalError("unhandled example family");
  }();
  for (const auto& g : ex.variety.generators())
    if (!evaluate(g, ex.point.coordinates()).is_zero()) throw InternalError("example base point is not on the variety");
  return ex;
}

}  // namespace clines
