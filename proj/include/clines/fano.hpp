#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "clines/contact.hpp"
#include "clines/errors.hpp"
#include "clines/groebner.hpp"
#include "clines/hilbert.hpp"
#include "clines/points.hpp"
#include "clines/radical.hpp"

namespace clines {

struct AnalysisOptions {
  std::uint64_t seed = 1;
  GroebnerBudget budget;
  std::size_t witness_count = 3;
  /// Slicing rounds for witness sampling; 0 means 4 * witness_count + 8.
  std::size_t witness_rounds = 0;
  std::uint64_t enumeration_ceiling = kDefaultEnumerationCeiling;
  std::optional<int> expected_dimension;
  /// Run excess-dimension certificates inside analyze_lines.
  bool certify_excess = true;

  FrameOptions frame_options() const { return {expected_dimension, budget}; }
  std::size_t rounds() const { return witness_rounds ? witness_rounds : 4 * witness_count + 8; }
};

/// First nonvanishing contact form at a direction.
struct ContainmentEvidence {
  std::size_t equation;
  int degree;
  std::string value;
};

struct LineContainment {
  bool contained;
  std::optional<ContainmentEvidence> evidence;
};

/// The line through x in direction sum w_a e_a lies in X iff every G_{j,i}(w) = 0.
template <FieldElement C>
LineContainment line_contained(const ContactSystem<C>& cs, const std::vector<C>& w) {
  if (w.size() != cs.n()) throw InputError("direction needs " + std::to_string(cs.n()) + " frame coordinates");
  if (std::all_of(w.begin(), w.end(), [](const C& c) { return c.is_zero(); }))
    throw InputError("direction is the zero vector");
  for (std::size_t j = 0; j < cs.forms.size(); ++j)
    for (int i = 2; i <= cs.degrees[j]; ++i) {
      const C value = evaluate(cs.form(j, i), w);
      if (!value.is_zero()) return {false, ContainmentEvidence{j, i, value.to_string()}};
    }
  return {true, std::nullopt};
}

template <FieldElement C>
std::vector<std::string> to_strings(const std::vector<C>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// Witness sampling

template <FieldElement C>
struct WitnessSample {
  std::vector<std::vector<C>> directions;
  std::size_t rounds_used = 0;
  int scheme_dimension = -1;
};

namespace detail {

template <FieldElement C>
Polynomial<C> random_linear_form(const RingPtr& ring, std::mt19937_64& rng) {
  const std::uint64_t p = ring->field.modulus;
  for (;;) {
    std::vector<C> coeffs;
    for (std::size_t i = 0; i < ring->size(); ++i) coeffs.push_back(C(ring->field, static_cast<long long>(rng() % p)));
    Polynomial<C> h = linear_form<C>(ring, coeffs);
    if (!h.is_zero()) return h;
  }
}

}  // namespace detail

/// Rational points on the top-dimensional part of a Sigma scheme. A scheme of
/// dimension D is cut by D-1 random hyperplanes, saturated by a last random
/// hyperplane h (dropping isolated points that h happens to hit) and then cut
/// by h; the F_p-points of that finite scheme are the witnesses of the round.
template <FieldElement C>
WitnessSample<C> sample_witnesses(const SigmaScheme<C>& scheme, std::size_t count, std::uint64_t seed,
                                  std::size_t max_rounds = 0, GroebnerBudget budget = {}) {
  const RingPtr& ring = scheme.ideal.ring();
  if (!ring->field.is_prime()) throw InputError("witness sampling needs a prime field (rational points need not exist)");
  WitnessSample<C> out;
  const GroebnerBasis<C> gb = groebner_basis(scheme.ideal, MonomialOrder{}, budget);
  const int dim = ideal_dimension(gb);
  out.scheme_dimension = dim;
  if (dim < 0 || count == 0) return out;
  if (dim == 0) {
    auto pts = rational_points(scheme.ideal, budget);
    if (pts.size() > count) pts.resize(count);
    out.directions = std::move(pts);
    return out;
  }
  if (max_rounds == 0) max_rounds = 4 * count + 8;
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::uint64_t>> seen;
  while (out.rounds_used < max_rounds && out.directions.size() < count) {
    ++out.rounds_used;
    std::vector<Polynomial<C>> gens = scheme.ideal.generators();
    for (int s = 0; s + 1 < dim; ++s) gens.push_back(detail::random_linear_form<C>(ring, rng));
    const Polynomial<C> last = detail::random_linear_form<C>(ring, rng);
    const IdealPresentation<C> curve_part = saturate(IdealPresentation<C>(ring, std::move(gens)), last, budget);
    std::vector<Polynomial<C>> cut = curve_part.generators();
    cut.push_back(last);
    const IdealPresentation<C> sliced(ring, std::move(cut));
    const int sliced_dim = ideal_dimension(groebner_basis(sliced, MonomialOrder{}, budget));
    if (sliced_dim != 0) continue;  // degenerate slice
    for (auto& pt : rational_points(sliced, budget)) {
      std::vector<std::uint64_t> key;
      for (const auto& c : pt) {
        if constexpr (std::is_same_v<C, ModP>) key.push_back(c.value());
      }
      if (!seen.insert(key).second) continue;
      out.directions.push_back(std::move(pt));
      if (out.directions.size() == count) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Excess-dimension certificate

enum class Verdict { certified, refuted_witness, not_applicable, inconclusive_budget };
enum class CertificateMethod { none, radical_equality, witness_sampling };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::refuted_witness: return "refuted_witness";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::inconclusive_budget: return "inconclusive_budget";
  }
  return "?";
}
inline std::string to_string(CertificateMethod m) {
  switch (m) {
    case CertificateMethod::none: return "none";
    case CertificateMethod::radical_equality: return "radical_equality";
    case CertificateMethod::witness_sampling: return "witness_sampling";
  }
  return "?";
}

struct RadicalCheck {
  std::size_t equation;
  int degree;
  bool member;
};

struct WitnessRecord {
  std::vector<std::string> direction;  // frame coordinates w
  std::vector<std::string> ambient;    // sum w_a e_a in K^(N+1)
  bool contained;
  std::optional<ContainmentEvidence> evidence;
};

struct CertificateReport {
  int k = 0;
  int dimension = -1;
  int expected_dimension = 0;
  bool excess = false;
  CertificateMethod method = CertificateMethod::none;
  std::vector<RadicalCheck> radical_checks;
  std::vector<WitnessRecord> witnesses;
  std::size_t requested_witnesses = 0;
  Verdict verdict = Verdict::not_applicable;
  std::string note;
};

template <FieldElement C>
CertificateReport excess_certificate(const ContactSystem<C>& cs, int k, const AnalysisOptions& options) {
  if (k < 2) throw InputError("certificate order k must be at least 2");
  CertificateReport rep;
  rep.k = k;
  rep.requested_witnesses = options.witness_count;
  rep.expected_dimension = static_cast<int>(cs.n()) - k;
  try {
    const SigmaScheme<C> sigma = with_invariants(sigma_ideal(cs, k), options.budget);
    rep.dimension = *sigma.dimension;
    rep.excess = rep.dimension >= 0 && rep.dimension > rep.expected_dimension;
    if (!rep.excess) {
      rep.verdict = Verdict::not_applicable;
      rep.note = "dimension does not exceed the expected dimension";
      return rep;
    }
    // (a) every Sigma^inf generator vanishes on V(Sigma^k)
    rep.method = CertificateMethod::radical_equality;
    bool all = true;
    for (std::size_t j = 0; j < cs.forms.size(); ++j)
      for (int i = k + 1; i <= cs.degrees[j]; ++i) {
        if (cs.form(j, i).is_zero()) continue;
        const bool member = radical_membership(cs.form(j, i), sigma.ideal, options.budget);
        rep.radical_checks.push_back({j, i, member});
        all = all && member;
      }
    if (all) {
      rep.verdict = Verdict::certified;
      rep.note = "V(Sigma^k) = V(Sigma^inf)";
      return rep;
    }
    // (b) witnesses on the top-dimensional components
    rep.method = CertificateMethod::witness_sampling;
    if (!cs.variety.field().is_prime()) {
      rep.verdict = Verdict::inconclusive_budget;
      rep.note = "radical equality failed and witness sampling needs a prime field";
      return rep;
    }
    const WitnessSample<C> sample =
        sample_witnesses(sigma, options.witness_count, options.seed, options.rounds(), options.budget);
    bool refuted = false;
    for (const auto& w : sample.directions) {
      const LineContainment lc = line_contained(cs, w);
      rep.witnesses.push_back({to_strings(w), to_strings(cs.frame.direction(w)), lc.contained, lc.evidence});
      refuted = refuted || !lc.contained;
    }
    if (refuted) {
      rep.verdict = Verdict::refuted_witness;
      rep.note = "a sampled direction is not a contained line: check generality of the point, "
                 "retry with another seed or a larger prime";
    } else if (sample.directions.size() >= options.witness_count) {
      rep.verdict = Verdict::certified;
      rep.note = "all sampled witnesses on the top-dimensional part are contained lines";
    } else {
      rep.verdict = Verdict::inconclusive_budget;
      rep.note = "found " + std::to_string(sample.directions.size()) + " of " +
                 std::to_string(options.witness_count) + " requested witnesses in " +
                 std::to_string(sample.rounds_used) + " rounds";
    }
  } catch (const BudgetExhausted& e) {
    rep.verdict = Verdict::inconclusive_budget;
    rep.note = e.what();
  }
  return rep;
}

template <FieldElement C>
CertificateReport excess_certificate(const IdealPresentation<C>& variety, const ProjectivePoint<C>& x, int k,
                                       const AnalysisOptions& options = {}) {
  const TangentFrame<C> frame = tangent_frame(variety, x, options.frame_options());
  const ContactSystem<C> cs = contact_system(variety, frame);
  if (k > cs.max_order) throw InputError("k = " + std::to_string(k) + " exceeds the top degree " + std::to_string(cs.max_order));
  return excess_certificate(cs, k, options);
}

// ---------------------------------------------------------------------------
// Exhaustive line count

/// F_p-rational directions in P(T_xX) whose line lies in X, by exhaustive search.
template <FieldElement C>
std::vector<std::vector<C>> contained_rational_directions(const ContactSystem<C>& cs,
                                                          std::uint64_t ceiling = kDefaultEnumerationCeiling) {
  if constexpr (!std::is_same_v<C, ModP>) {
    throw InputError("exhaustive line search needs a prime field");
  } else {
    check_enumeration_ceiling(cs.variety.field(), ceiling);
    std::vector<std::vector<ModP>> out;
    for_each_projective_point(cs.n(), cs.variety.field(), [&](const std::vector<ModP>& w) {
      if (line_contained(cs, w).contained) out.push_back(w);
      return true;
    });
    return out;
  }
}

template <FieldElement C>
std::size_t brute_force_line_count(const ContactSystem<C>& cs, std::uint64_t ceiling = kDefaultEnumerationCeiling) {
  return contained_rational_directions(cs, ceiling).size();
}

template <FieldElement C>
std::size_t brute_force_line_count(const IdealPresentation<C>& variety, const ProjectivePoint<C>& x,
                                   const AnalysisOptions& options = {}) {
  if (!variety.field().is_prime()) throw InputError("brute-force line count needs a prime field");
  check_enumeration_ceiling(variety.field(), options.enumeration_ceiling);
  const ContactSystem<C> cs = contact_system(variety, tangent_frame(variety, x, options.frame_options()));
  return brute_force_line_count(cs, options.enumeration_ceiling);
}

// ---------------------------------------------------------------------------
// Bound verification

struct SigmaRecord {
  int k = 0;  // 0 encodes infinity
  int dimension = -1;
  int expected_dimension = 0;
  std::optional<mpz_class> degree;
};

struct BoundCheck {
  int k = 0;
  mpz_class n_factorial;
  std::optional<mpz_class> degree;
  std::optional<bool> satisfied;
};

struct RationalLine {
  std::vector<std::string> direction;
  std::vector<std::string> ambient;
  bool contained;
};

struct AnalysisReport {
  FieldSpec field;
  std::uint64_t seed = 0;
  std::size_t ambient_dimension = 0;
  std::vector<std::string> variables;
  std::vector<std::string> equations;
  std::vector<int> degrees;
  std::vector<std::string> point;
  std::vector<std::vector<std::string>> tangent_basis;
  std::size_t n = 0;
  int max_order = 0;
  std::vector<SigmaRecord> sigma_chain;
  SigmaRecord sigma_infinity;
  BoundCheck bound;
  std::optional<int> stabilization_k;
  std::vector<CertificateReport> certificates;
  /// F_p-rational contained lines, when Sigma^inf is finite over a prime field.
  std::optional<std::vector<RationalLine>> rational_lines;
  std::vector<std::string> flags;

  bool bound_violated() const { return bound.satisfied.has_value() && !*bound.satisfied; }
  bool refuted() const {
    return std::any_of(certificates.begin(), certificates.end(),
                       [](const CertificateReport& c) { return c.verdict == Verdict::refuted_witness; });
  }
  bool inconclusive() const {
    return std::any_of(certificates.begin(), certificates.end(),
                       [](const CertificateReport& c) { return c.verdict == Verdict::inconclusive_budget; });
  }
  bool anomaly() const { return bound_violated() || refuted(); }
};

inline mpz_class factorial(unsigned long n) {
  if (n > 20) throw InputError("n! guard: tangent dimension " + std::to_string(n) + " exceeds 20");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// Sigma chain dimensions and degrees, the n! comparison for Sigma^n, chain
/// stabilization, and excess-dimension certificates.
template <FieldElement C>
AnalysisReport analyze_lines(const IdealPresentation<C>& variety, const ProjectivePoint<C>& x,
                               const AnalysisOptions& options = {}) {
  const TangentFrame<C> frame = tangent_frame(variety, x, options.frame_options());
  const ContactSystem<C> cs = contact_system(variety, frame);
  AnalysisReport rep;
  rep.field = variety.field();
  rep.seed = options.seed;
  rep.ambient_dimension = variety.ring()->size() - 1;
  rep.variables = variety.ring()->variables;
  for (const auto& f : variety.generators()) rep.equations.push_back(f.to_string());
  rep.degrees = cs.degrees;
  rep.point = to_strings(x.coordinates());
  for (const auto& v : frame.tangent_basis) rep.tangent_basis.push_back(to_strings(v));
  rep.n = cs.n();
  rep.max_order = cs.max_order;
  if (rep.n == 0) throw InputError("tangent space is zero-dimensional");
  rep.bound.n_factorial = factorial(rep.n);

  const int n = static_cast<int>(rep.n);
  const int top = std::max({cs.max_order, n, 2});
  std::vector<SigmaScheme<C>> schemes;  // schemes[k-2] = Sigma^k
  for (int k = 2; k <= top; ++k) {
    if (k > cs.max_order && k > 2) {
      schemes.push_back(schemes.back());
      schemes.back().k = ContactOrder::finite(k);
    } else {
      schemes.push_back(with_invariants(sigma_ideal(cs, k), options.budget));
    }
    const auto& s = schemes.back();
    rep.sigma_chain.push_back({k, *s.dimension, n - k, s.degree});
  }
  const SigmaScheme<C>& inf = schemes[static_cast<std::size_t>(std::max(cs.max_order, 2) - 2)];
  rep.sigma_infinity = {0, *inf.dimension, 0, inf.degree};
  rep.sigma_infinity.expected_dimension = n - std::max(cs.max_order, 2) - 1;

  const SigmaRecord& bound_rec = rep.sigma_chain[static_cast<std::size_t>(std::max(n, 2) - 2)];
  rep.bound.k = bound_rec.k;
  if (bound_rec.dimension == 0) {
    rep.bound.degree = *bound_rec.degree;
    rep.bound.satisfied = *bound_rec.degree <= rep.bound.n_factorial;
    if (!*rep.bound.satisfied) rep.flags.push_back("bound_violated");
  } else if (bound_rec.dimension < 0) {
    rep.flags.push_back("sigma_n_empty");
  } else {
    rep.flags.push_back("sigma_n_positive_dimensional");
  }

  // least k with V(Sigma^k) = V(Sigma^inf)
  for (int k = 2; k <= std::max(cs.max_order, 2); ++k) {
    const auto& s = schemes[static_cast<std::size_t>(k - 2)];
    if (*s.dimension != *inf.dimension) continue;
    bool equal = true;
    try {
      for (std::size_t j = 0; j < cs.forms.size() && equal; ++j)
        for (int i = k + 1; i <= cs.degrees[j] && equal; ++i)
          equal = radical_membership(cs.form(j, i), s.ideal, options.budget);
    } catch (const BudgetExhausted&) {
      rep.flags.push_back("stabilization_budget_exhausted");
      break;
    }
    if (equal) {
      rep.stabilization_k = k;
      break;
    }
  }

  if (options.certify_excess) {
    for (int k = 2; k <= cs.max_order; ++k) {
      const auto& rec = rep.sigma_chain[static_cast<std::size_t>(k - 2)];
      if (rec.dimension >= 0 && rec.dimension > rec.expected_dimension) rep.certificates.push_back(excess_certificate(cs, k, options));
    }
  }

  if (rep.field.is_prime() && *inf.dimension == 0) {
    std::vector<RationalLine> lines;
    for (const auto& w : rational_points(inf.ideal, options.budget))
      lines.push_back({to_strings(w), to_strings(frame.direction(w)), line_contained(cs, w).contained});
    if (inf.degree && mpz_class(static_cast<unsigned long>(lines.size())) == *inf.degree)
      rep.flags.push_back("split: every line is F_p-rational");
    rep.rational_lines = std::move(lines);
  }
  if (*inf.dimension > 0) rep.flags.push_back("infinitely many lines through the point");

  rep.flags.push_back("generality of the point is assumed, not certified");
  if (rep.field.is_prime())
    rep.flags.push_back("computed over " + rep.field.to_string() + "; characteristic-zero conclusions are not implied");
  if (rep.refuted()) rep.flags.push_back("refuted_witness");
  if (rep.inconclusive()) rep.flags.push_back("certificate_inconclusive");
  return rep;
}

}  // namespace clines
