#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "clines/errors.hpp"
#include "clines/groebner.hpp"
#include "clines/hilbert.hpp"
#include "clines/linalg.hpp"
#include "clines/polynomial.hpp"

namespace clines {

/// Contact order of a line or plane with a variety; infinite means contained.
class ContactOrder {
 public:
  static ContactOrder infinite() { return ContactOrder(-1); }
  static ContactOrder finite(int k) {
    if (k < 0) throw InputError("contact order must be non-negative");
    return ContactOrder(k);
  }
  bool is_infinite() const { return value_ < 0; }
  int value() const { return value_; }
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }
  friend bool operator==(const ContactOrder&, const ContactOrder&) = default;

 private:
  explicit ContactOrder(int v) : value_(v) {}
  int value_;
};

/// Point of P^N, normalized so the first nonzero coordinate is 1.
template <FieldElement C>
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<C> coords) : coords_(std::move(coords)) {
    auto it = std::find_if(coords_.begin(), coords_.end(), [](const C& c) { return !c.is_zero(); });
    if (it == coords_.end()) throw InputError("projective point has all coordinates zero");
    pivot_ = static_cast<std::size_t>(it - coords_.begin());
    const C inv = coords_[pivot_].inverse();
    for (auto& c : coords_) c *= inv;
  }
  const std::vector<C>& coordinates() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  /// Index of the first nonzero coordinate (which equals 1).
  std::size_t pivot() const { return pivot_; }
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? "," : "") + coords_[i].to_string();
    return out + ")";
  }
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<C> coords_;
  std::size_t pivot_ = 0;
};

/// Basis of T_xX inside the complement {v : v[pivot(x)] = 0}; the w-variables
/// are coordinates on P(T_xX) with respect to this basis.
template <FieldElement C>
struct TangentFrame {
  ProjectivePoint<C> point;
  std::vector<Vec<C>> tangent_basis;
  std::vector<Vec<C>> complement_basis;
  std::vector<std::string> w_variables;
  std::size_t jacobian_rank = 0;

  std::size_t n() const { return tangent_basis.size(); }
  /// Ambient vector sum_a w[a] * e_a.
  Vec<C> direction(const std::vector<C>& w) const {
    if (w.size() != n()) throw InputError("direction needs " + std::to_string(n()) + " frame coordinates");
    const C& one = point.coordinates()[point.pivot()];
    Vec<C> v(point.size(), one - one);
    for (std::size_t a = 0; a < n(); ++a)
      for (std::size_t m = 0; m < v.size(); ++m) v[m] += w[a] * tangent_basis[a][m];
    return v;
  }
};

struct FrameOptions {
  /// Dimension of X; inferred from a Gröbner basis when unset and the variety has several equations.
  std::optional<int> expected_dimension;
  GroebnerBudget budget;
};

namespace detail {

template <FieldElement C>
void check_on_variety(const IdealPresentation<C>& variety, const ProjectivePoint<C>& x) {
  if (x.size() != variety.ring()->size())
    throw InputError("point has " + std::to_string(x.size()) + " coordinates, ambient space needs " +
                     std::to_string(variety.ring()->size()));
  if (!variety.homogeneous()) throw InputError("variety equations must be homogeneous");
  if (variety.generators().empty()) throw InputError("variety needs at least one nonzero equation");
  for (std::size_t j = 0; j < variety.generators().size(); ++j)
    if (!evaluate(variety.generators()[j], x.coordinates()).is_zero())
      throw InputError("point " + x.to_string() + " is not on the variety (equation " + std::to_string(j) +
                       " does not vanish)");
}

template <FieldElement C>
std::vector<Vec<C>> jacobian_at(const IdealPresentation<C>& variety, const ProjectivePoint<C>& x) {
  std::vector<Vec<C>> rows;
  for (const auto& f : variety.generators()) {
    Vec<C> row;
    for (std::size_t m = 0; m < x.size(); ++m) row.push_back(evaluate(derivative(f, m), x.coordinates()));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <FieldElement C>
std::size_t expected_jacobian_rank(const IdealPresentation<C>& variety, const FrameOptions& options) {
  const std::size_t big_n = variety.ring()->size() - 1;
  if (options.expected_dimension) {
    const int dim = *options.expected_dimension;
    if (dim < 0 || static_cast<std::size_t>(dim) > big_n) throw InputError("expected dimension out of range");
    return big_n - static_cast<std::size_t>(dim);
  }
  if (variety.generators().size() == 1) return 1;
  const int dim = ideal_dimension(groebner_basis(variety, MonomialOrder{}, options.budget));
  if (dim < 0) throw InputError("the variety is empty");
  return big_n - static_cast<std::size_t>(dim);
}

template <FieldElement C>
std::vector<Vec<C>> complete_basis(const ProjectivePoint<C>& x, const std::vector<Vec<C>>& tangent) {
  std::vector<Vec<C>> current{x.coordinates()};
  current.insert(current.end(), tangent.begin(), tangent.end());
  std::vector<Vec<C>> out;
  const C zero = x.coordinates()[x.pivot()] - x.coordinates()[x.pivot()];
  const C one = x.coordinates()[x.pivot()];
  for (std::size_t m = 0; m < x.size() && current.size() < x.size(); ++m) {
    Vec<C> e(x.size(), zero);
    e[m] = one;
    current.push_back(e);
    if (linearly_independent(current, x.size()))
      out.push_back(std::move(e));
    else
      current.pop_back();
  }
  return out;
}

}  // namespace detail

/// Deterministic frame: kernel of the Jacobian at x intersected with the
/// complement {v[pivot] = 0}, by row reduction with smallest-index pivots.
template <FieldElement C>
TangentFrame<C> tangent_frame(const IdealPresentation<C>& variety, const ProjectivePoint<C>& x,
                              const FrameOptions& options = {}) {
  detail::check_on_variety(variety, x);
  std::vector<Vec<C>> rows = detail::jacobian_at(variety, x);
  const std::size_t rank = matrix_rank(rows, x.size());
  const std::size_t expected = detail::expected_jacobian_rank(variety, options);
  if (rank != expected)
    throw SingularPointError("singular point " + x.to_string() + ": Jacobian rank " + std::to_string(rank) +
                             ", expected " + std::to_string(expected));
  const FieldSpec& field = variety.field();
  Vec<C> slice(x.size(), C(field, 0));
  slice[x.pivot()] = C(field, 1);
  rows.push_back(std::move(slice));

  TangentFrame<C> frame{x, kernel_basis(std::move(rows), x.size(), field), {}, {}, rank};
  frame.complement_basis = detail::complete_basis(x, frame.tangent_basis);
  frame.w_variables = numbered_names("w", frame.tangent_basis.size(), 1);
  return frame;
}

/// Frame from caller-chosen tangent vectors (any basis of T_xX modulo x).
template <FieldElement C>
TangentFrame<C> tangent_frame_from_basis(const IdealPresentation<C>& variety, const ProjectivePoint<C>& x,
                                         std::vector<Vec<C>> basis, const FrameOptions& options = {}) {
  const TangentFrame<C> reference = tangent_frame(variety, x, options);
  if (basis.size() != reference.n())
    throw InputError("frame needs " + std::to_string(reference.n()) + " tangent vectors, got " +
                     std::to_string(basis.size()));
  const auto jac = detail::jacobian_at(variety, x);
  for (const auto& v : basis) {
    if (v.size() != x.size()) throw InputError("tangent vector has the wrong length");
    for (const auto& row : jac) {
      C dot = C(variety.field(), 0);
      for (std::size_t m = 0; m < v.size(); ++m) dot += row[m] * v[m];
      if (!dot.is_zero()) throw InputError("vector is not tangent to the variety at the point");
    }
  }
  std::vector<Vec<C>> with_x{x.coordinates()};
  with_x.insert(with_x.end(), basis.begin(), basis.end());
  if (!linearly_independent(with_x, x.size())) throw InputError("tangent vectors are dependent modulo the point");
  TangentFrame<C> frame{x, std::move(basis), {}, reference.w_variables, reference.jacobian_rank};
  frame.complement_basis = detail::complete_basis(x, frame.tangent_basis);
  return frame;
}

/// Graded pieces G_{j,i} of f_j(x + t*sum_a w_a e_a) = sum_i t^i G_{j,i}(w).
template <FieldElement C>
struct ContactSystem {
  IdealPresentation<C> variety;
  TangentFrame<C> frame;
  RingPtr w_ring;
  std::vector<int> degrees;
  /// forms[j][i] for 0 <= i <= degrees[j]; entries 0 and 1 are zero.
  std::vector<std::vector<Polynomial<C>>> forms;
  int max_order = 0;

  std::size_t n() const { return frame.n(); }
  const Polynomial<C>& form(std::size_t j, int i) const { return forms.at(j).at(static_cast<std::size_t>(i)); }
};

namespace detail {

// Images x_m + sum_s t_s * dirs[s][m] in `target`, where variable s of target is t_s.
template <FieldElement C>
std::vector<Polynomial<C>> affine_images(const ProjectivePoint<C>& x, const std::vector<Vec<C>>& dirs,
                                         const RingPtr& target) {
  std::vector<Polynomial<C>> images;
  for (std::size_t m = 0; m < x.size(); ++m) {
    std::vector<Term<C>> terms;
    if (!x.coordinates()[m].is_zero()) terms.push_back({Monomial(target->size()), x.coordinates()[m]});
    for (std::size_t s = 0; s < dirs.size(); ++s)
      if (!dirs[s][m].is_zero()) terms.push_back({Monomial::variable(target->size(), s), dirs[s][m]});
    images.push_back(Polynomial<C>::from_terms(target, std::move(terms)));
  }
  return images;
}

}  // namespace detail

template <FieldElement C>
ContactSystem<C> contact_system(const IdealPresentation<C>& variety, const TangentFrame<C>& frame) {
  if (frame.point.size() != variety.ring()->size()) throw InputError("frame does not belong to this variety");
  ContactSystem<C> cs{variety, frame, make_ring(frame.w_variables, variety.field()), {}, {}, 0};
  // x + sum_a w_a e_a: since t only scales w, the t^i coefficient is the w-degree-i part.
  const auto images = detail::affine_images(frame.point, frame.tangent_basis, cs.w_ring);
  for (const auto& f : variety.generators()) {
    const int d = f.degree();
    const Polynomial<C> expanded = linear_substitute(f, images);
    std::vector<Polynomial<C>> graded;
    for (int i = 0; i <= d; ++i) graded.push_back(homogeneous_component(expanded, i));
    if (!graded[0].is_zero() || (d >= 1 && !graded[1].is_zero()))
      throw InternalError("contact expansion has nonzero t^0 or t^1 coefficient; frame is inconsistent");
    if (expanded.degree() > d) throw InternalError("contact expansion exceeds the equation degree");
    cs.degrees.push_back(d);
    cs.max_order = std::max(cs.max_order, d);
    cs.forms.push_back(std::move(graded));
  }
  return cs;
}

/// Directions of lines with contact order >= k; k = infinite means contained lines.
template <FieldElement C>
struct SigmaScheme {
  ContactOrder k;
  IdealPresentation<C> ideal;
  /// (equation index, degree i) of each generator, in generator order.
  std::vector<std::pair<std::size_t, int>> labels;
  std::optional<int> dimension;
  std::optional<mpz_class> degree;
};

/// Sigma^k is generated by {G_{j,i} : 2 <= i <= min(k, d_j)}; Sigma^inf is Sigma^(d_max).
template <FieldElement C>
SigmaScheme<C> sigma_ideal(const ContactSystem<C>& cs, ContactOrder k) {
  if (!k.is_infinite() && k.value() < 2) throw InputError("contact order k must be at least 2, got " + k.to_string());
  if (!k.is_infinite() && k.value() > std::max(cs.max_order, 2))
    throw InputError("contact order k = " + k.to_string() + " exceeds the top degree " + std::to_string(cs.max_order) +
                     " (use inf)");
  std::vector<Polynomial<C>> gens;
  std::vector<std::pair<std::size_t, int>> labels;
  for (std::size_t j = 0; j < cs.forms.size(); ++j) {
    const int top = k.is_infinite() ? cs.degrees[j] : std::min(k.value(), cs.degrees[j]);
    for (int i = 2; i <= top; ++i) {
      if (cs.form(j, i).is_zero()) continue;
      gens.push_back(cs.form(j, i));
      labels.push_back({j, i});
    }
  }
  return SigmaScheme<C>{k, IdealPresentation<C>(cs.w_ring, std::move(gens)), std::move(labels), std::nullopt,
                        std::nullopt};
}

template <FieldElement C>
SigmaScheme<C> sigma_ideal(const ContactSystem<C>& cs, int k) {
  return sigma_ideal(cs, ContactOrder::finite(k));
}

/// Fills in dimension (and degree when zero-dimensional).
template <FieldElement C>
SigmaScheme<C> with_invariants(SigmaScheme<C> scheme, GroebnerBudget budget = {}) {
  const GroebnerBasis<C> gb = groebner_basis(scheme.ideal, MonomialOrder{}, budget);
  scheme.dimension = ideal_dimension(gb);
  if (*scheme.dimension == 0) scheme.degree = scheme_degree(gb);
  return scheme;
}

/// Largest l such that every f_j(x + sum_s t_s v_s) has no terms of total degree <= l.
template <FieldElement C>
ContactOrder plane_contact_order(const IdealPresentation<C>& variety, const TangentFrame<C>& frame,
                                 const std::vector<Vec<C>>& directions) {
  const ProjectivePoint<C>& x = frame.point;
  if (directions.empty()) throw InputError("plane needs at least one direction");
  std::vector<Vec<C>> with_x{x.coordinates()};
  for (const auto& v : directions) {
    if (v.size() != x.size()) throw InputError("direction has the wrong length");
    with_x.push_back(v);
  }
  if (!linearly_independent(with_x, x.size())) throw InputError("plane directions are dependent (or contain the point)");

  const RingPtr t_ring = make_ring(numbered_names("t", directions.size(), 1), variety.field());
  const auto images = detail::affine_images(x, directions, t_ring);
  int lowest = -1;
  for (const auto& f : variety.generators()) {
    const Polynomial<C> expanded = linear_substitute(f, images);
    for (const auto& t : expanded.terms()) {
      const int d = static_cast<int>(t.monomial.degree());
      if (lowest < 0 || d < lowest) lowest = d;
    }
  }
  if (lowest < 0) return ContactOrder::infinite();
  return ContactOrder::finite(std::max(lowest - 1, 0));
}

}  // namespace clines
