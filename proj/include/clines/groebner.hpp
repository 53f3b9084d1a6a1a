#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "clines/errors.hpp"
#include "clines/polynomial.hpp"

namespace clines {

/// Resource limits for Gröbner computations. Exceeding one throws BudgetExhausted.
struct GroebnerBudget {
  std::size_t max_reductions = 20'000'000;
  std::size_t max_basis = 20'000;
};

/// Generators of an ideal in a common ring. Zero generators are dropped, so an
/// empty generator list presents the zero ideal.
template <FieldElement C>
class IdealPresentation {
 public:
  IdealPresentation(RingPtr ring, std::vector<Polynomial<C>> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) throw InputError("ideal generators live in different rings");
      if (!g.is_zero()) generators_.push_back(g.with_order(MonomialOrder{}));
    }
    homogeneous_ = std::all_of(generators_.begin(), generators_.end(),
                               [](const Polynomial<C>& g) { return g.is_homogeneous(); });
  }
  explicit IdealPresentation(std::vector<Polynomial<C>> generators)
      : IdealPresentation(generators.empty() ? throw InputError("empty generator list without a ring")
                                             : generators.front().ring(),
                          std::move(generators)) {}

  const RingPtr& ring() const { return ring_; }
  const FieldSpec& field() const { return ring_->field; }
  const std::vector<Polynomial<C>>& generators() const { return generators_; }
  bool homogeneous() const { return homogeneous_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial<C>> generators_;
  bool homogeneous_ = true;
};

/// Reduced Gröbner basis: monic, sorted ascending by leading monomial.
template <FieldElement C>
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial<C>> basis;
  std::size_t reductions = 0;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
  bool is_zero_ideal() const { return basis.empty(); }
  bool homogeneous() const {
    return std::all_of(basis.begin(), basis.end(), [](const Polynomial<C>& g) { return g.is_homogeneous(); });
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis) out.push_back(g.leading_monomial());
    return out;
  }
};

namespace detail {

struct ReducerIndex {
  std::vector<std::uint64_t> masks;
  std::vector<std::uint32_t> degrees;
};

/// Full reduction of f by `reducers` (all in f's order). The first reducer whose
/// leading monomial divides wins.
template <FieldElement C>
Polynomial<C> reduce(const Polynomial<C>& f, const std::vector<const Polynomial<C>*>& reducers,
                     std::size_t& steps, std::size_t max_steps, unsigned* sugar = nullptr) {
  std::vector<std::uint64_t> masks;
  masks.reserve(reducers.size());
  for (const auto* g : reducers) masks.push_back(g->leading_monomial().support());
  const MonomialOrder order = f.order();

  std::vector<Term<C>> rem;
  std::vector<Term<C>> p = f.terms();
  std::vector<Term<C>> scratch;
  std::size_t head = 0;
  while (head < p.size()) {
    const Monomial& lm = p[head].monomial;
    const std::uint64_t lm_mask = lm.support();
    const Polynomial<C>* divisor = nullptr;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      if ((masks[k] & ~lm_mask) != 0) continue;
      if (reducers[k]->leading_monomial().divides(lm)) {
        divisor = reducers[k];
        break;
      }
    }
    if (!divisor) {
      rem.push_back(std::move(p[head++]));
      continue;
    }
    if (++steps > max_steps) throw BudgetExhausted("Gröbner reduction step budget exhausted");
    const Monomial shift = lm / divisor->leading_monomial();
    const C factor = p[head].coeff / divisor->leading_coeff();
    if (sugar) *sugar = std::max(*sugar, static_cast<unsigned>(divisor->degree()) + shift.degree());
    // p[head+1..] - factor * shift * (divisor without its leading term)
    scratch.clear();
    scratch.reserve(p.size() - head + divisor->size());
    const auto& g = divisor->terms();
    std::size_t i = head + 1, j = 1;
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        scratch.push_back(std::move(p[i++]));
        continue;
      }
      Monomial gm = g[j].monomial * shift;
      const int cmp = i == p.size() ? -1 : order.compare(p[i].monomial, gm);
      if (cmp > 0) {
        scratch.push_back(std::move(p[i++]));
      } else if (cmp < 0) {
        scratch.push_back({std::move(gm), -(factor * g[j].coeff)});
        ++j;
      } else {
        C v = p[i].coeff - factor * g[j].coeff;
        if (!v.is_zero()) scratch.push_back({std::move(gm), std::move(v)});
        ++i;
        ++j;
      }
    }
    std::swap(p, scratch);
    head = 0;
  }
  return Polynomial<C>::from_sorted(f.ring(), std::move(rem), order);
}

template <FieldElement C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial<C> a = f.mul_term(l / f.leading_monomial(), f.leading_coeff().inverse());
  return a.sub_mul(g.leading_coeff().inverse(), l / g.leading_monomial(), g);
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and sugar selection.
template <FieldElement C>
class Buchberger {
 public:
  Buchberger(RingPtr ring, MonomialOrder order, GroebnerBudget budget)
      : ring_(std::move(ring)), order_(order), budget_(budget) {}

  GroebnerBasis<C> run(const std::vector<Polynomial<C>>& generators) {
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      if (unit_) break;
      Polynomial<C> f = g.with_order(order_);
      unsigned sug = static_cast<unsigned>(f.degree());
      f = reduce(f, active_reducers(), steps_, budget_.max_reductions, &sug);
      if (!f.is_zero()) insert(f.monic(), sug);
    }
    while (!pairs_.empty() && !unit_) {
      const std::size_t best = select_pair();
      const CriticalPair pair = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Polynomial<C> s = s_polynomial(polys_[pair.i], polys_[pair.j]);
      unsigned sug = pair.sugar;
      s = reduce(s, active_reducers(), steps_, budget_.max_reductions, &sug);
      if (!s.is_zero()) insert(s.monic(), sug);
    }
    return finish();
  }

 private:
  std::vector<const Polynomial<C>*> active_reducers() const {
    std::vector<const Polynomial<C>*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const int cmp = order_.compare(a.lcm, b.lcm);
      if (cmp < 0 || (cmp == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j))) best = k;
    }
    return best;
  }

  void insert(Polynomial<C> h, unsigned sug) {
    if (h.is_constant()) {
      unit_ = true;
      polys_.assign(1, std::move(h));
      active_.assign(1, true);
      pairs_.clear();
      return;
    }
    if (polys_.size() + 1 > budget_.max_basis) throw BudgetExhausted("Gröbner basis size budget exhausted");
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sug);
    active_.push_back(true);
    const Monomial& lh = polys_[hi].leading_monomial();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      unsigned sugar;
      bool keep = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].leading_monomial();
      Monomial l = lcm(lh, lg);
      const unsigned s = std::max(sugar_[hi] + (l.degree() - lh.degree()), sugar_[g] + (l.degree() - lg.degree()));
      cands.push_back({g, std::move(l), lh.coprime(lg), s});
    }
    // M: an lcm properly divisible by another new lcm is redundant.
    for (auto& c : cands)
      for (const auto& d : cands)
        if (&c != &d && d.lcm.divides(c.lcm) && !(d.lcm == c.lcm)) {
          c.keep = false;
          break;
        }
    // F and product criterion: one representative per lcm, none if any is coprime.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      bool any_coprime = cands[a].coprime;
      for (std::size_t b = a + 1; b < cands.size(); ++b)
        if (cands[b].keep && cands[b].lcm == cands[a].lcm) {
          any_coprime = any_coprime || cands[b].coprime;
          cands[b].keep = false;
        }
      if (any_coprime) cands[a].keep = false;
    }
    // B: old pairs whose lcm is strictly "bridged" by the new leading monomial.
    std::vector<CriticalPair> kept;
    kept.reserve(pairs_.size() + cands.size());
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                        !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& c : cands)
      if (c.keep) kept.push_back({c.g, hi, std::move(c.lcm), c.sugar});
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
  }

  GroebnerBasis<C> finish() {
    GroebnerBasis<C> out{ring_, order_, {}, 0};
    std::vector<Polynomial<C>> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) minimal.push_back(polys_[k]);
    // Interreduce tails; leading monomials are already pairwise non-divisible.
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial<C>*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(&minimal[l]);
      const Term<C> lead = minimal[k].leading_term();
      std::vector<Term<C>> tail(minimal[k].terms().begin() + 1, minimal[k].terms().end());
      Polynomial<C> rest = reduce(Polynomial<C>::from_sorted(ring_, std::move(tail), order_), others, steps_,
                                  budget_.max_reductions);
      std::vector<Term<C>> terms{lead};
      terms.insert(terms.end(), rest.terms().begin(), rest.terms().end());
      minimal[k] = Polynomial<C>::from_sorted(ring_, std::move(terms), order_).monic();
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial<C>& a, const Polynomial<C>& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    out.basis = std::move(minimal);
    out.reductions = steps_;
    return out;
  }

  RingPtr ring_;
  MonomialOrder order_;
  GroebnerBudget budget_;
  std::vector<Polynomial<C>> polys_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
  std::size_t steps_ = 0;
  bool unit_ = false;
};

}  // namespace detail

/// Remainder of f modulo the basis: no term is divisible by a leading monomial.
template <FieldElement C>
Polynomial<C> normal_form(const Polynomial<C>& f, const GroebnerBasis<C>& gb) {
  if (!same_ring(f.ring(), gb.ring)) throw InputError("normal_form: polynomial and basis live in different rings");
  std::vector<const Polynomial<C>*> reducers;
  for (const auto& g : gb.basis) reducers.push_back(&g);
  std::size_t steps = 0;
  return detail::reduce(f.with_order(gb.order), reducers, steps, std::numeric_limits<std::size_t>::max());
}

template <FieldElement C>
bool ideal_contains(const GroebnerBasis<C>& gb, const Polynomial<C>& f) {
  return normal_form(f, gb).is_zero();
}

/// Buchberger criterion: every S-polynomial of the basis reduces to zero.
template <FieldElement C>
bool satisfies_buchberger_criterion(const GroebnerBasis<C>& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
      if (!normal_form(detail::s_polynomial(gb.basis[i], gb.basis[j]), gb).is_zero()) return false;
  return true;
}

/// Number of bases that passed the post-check in this process (stays 0 unless CLINES_CHECK_GROEBNER).
inline std::atomic<std::size_t>& groebner_post_checks() {
  static std::atomic<std::size_t> count{0};
  return count;
}

template <FieldElement C>
GroebnerBasis<C> groebner_basis(const IdealPresentation<C>& ideal, MonomialOrder order = {},
                                GroebnerBudget budget = {}) {
  detail::Buchberger<C> engine(ideal.ring(), order, budget);
  GroebnerBasis<C> gb = engine.run(ideal.generators());
#ifdef CLINES_CHECK_GROEBNER
  if (!satisfies_buchberger_criterion(gb)) throw InternalError("Gröbner post-check failed: S-pair did not reduce to 0");
  ++groebner_post_checks();
#endif
  return gb;
}

}  // namespace clines
