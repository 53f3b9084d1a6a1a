#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "clines/groebner.hpp"

namespace clines {

namespace detail {

// Ring with one fresh variable inserted at `position` (0 = front, size = back).
inline RingPtr ring_with_fresh_variable(const RingPtr& ring, std::size_t position, const std::string& name) {
  std::vector<std::string> names = ring->variables;
  names.insert(names.begin() + static_cast<std::ptrdiff_t>(position), name);
  return make_ring(std::move(names), ring->field);
}

inline std::vector<std::size_t> shifted_indices(std::size_t count, std::size_t position) {
  std::vector<std::size_t> map(count);
  std::iota(map.begin(), map.end(), std::size_t{0});
  for (auto& i : map)
    if (i >= position) ++i;
  return map;
}

}  // namespace detail

/// True iff g vanishes on V(ideal), i.e. 1 lies in ideal + (1 - y*g).
template <FieldElement C>
bool radical_membership(const Polynomial<C>& g, const IdealPresentation<C>& ideal, GroebnerBudget budget = {}) {
  if (!same_ring(g.ring(), ideal.ring())) throw InputError("radical_membership: polynomial and ideal live in different rings");
  if (g.is_zero()) return true;
  const std::size_t n = ideal.ring()->size();
  const RingPtr ext = detail::ring_with_fresh_variable(ideal.ring(), n, "_y");
  const auto map = detail::shifted_indices(n, n);
  std::vector<Polynomial<C>> gens;
  for (const auto& f : ideal.generators()) gens.push_back(embed(f, ext, map));
  const Polynomial<C> y = Polynomial<C>::variable(ext, n);
  gens.push_back(Polynomial<C>::constant(ext, 1) - y * embed(g, ext, map));
  const GroebnerBasis<C> gb = groebner_basis(IdealPresentation<C>(ext, std::move(gens)), MonomialOrder{}, budget);
  return gb.is_unit();
}

/// Saturation ideal : h^inf, by eliminating y from ideal + (1 - y*h).
template <FieldElement C>
IdealPresentation<C> saturate(const IdealPresentation<C>& ideal, const Polynomial<C>& h, GroebnerBudget budget = {}) {
  if (!same_ring(h.ring(), ideal.ring())) throw InputError("saturate: polynomial and ideal live in different rings");
  const RingPtr& ring = ideal.ring();
  if (h.is_zero()) return IdealPresentation<C>(ring, {Polynomial<C>::constant(ring, 1)});
  const std::size_t n = ring->size();
  const RingPtr ext = detail::ring_with_fresh_variable(ring, 0, "_y");
  const auto map = detail::shifted_indices(n, 0);
  std::vector<Polynomial<C>> gens;
  for (const auto& f : ideal.generators()) gens.push_back(embed(f, ext, map));
  const Polynomial<C> y = Polynomial<C>::variable(ext, 0);
  gens.push_back(Polynomial<C>::constant(ext, 1) - y * embed(h, ext, map));
  const GroebnerBasis<C> gb =
      groebner_basis(IdealPresentation<C>(ext, std::move(gens)), MonomialOrder::elimination(1), budget);

  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) back[i] = i - 1;
  std::vector<Polynomial<C>> out;
  for (const auto& b : gb.basis) {
    if (b.degree_in(0) > 0) continue;
    // variable 0 is absent, so its image is irrelevant
    out.push_back(embed(b, ring, back));
  }
  return IdealPresentation<C>(ring, std::move(out));
}

}  // namespace clines
