#include <gtest/gtest.h>

#include <random>

#include "clines/clines.hpp"
#include "oracles.hpp"

using namespace clines;

namespace {

const FieldSpec F10007 = FieldSpec::prime(10007);

std::vector<Monomial> random_monomials(std::size_t n, std::mt19937_64& rng, int count, unsigned max_deg) {
  std::vector<Monomial> out;
  for (int i = 0; i < count; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    const unsigned d = 1 + static_cast<unsigned>(rng() % max_deg);
    for (unsigned k = 0; k < d; ++k) ++e[rng() % n];
    out.push_back(Monomial(e));
  }
  return out;
}

Polynomial<ModP> random_form(const RingPtr& ring, unsigned d, std::mt19937_64& rng) {
  std::vector<Term<ModP>> terms;
  for (auto& m : monomials_of_degree(ring->size(), d))
    if (rng() % 3) terms.push_back({m, ModP(ring->field, static_cast<long long>(rng() % 10007))});
  return Polynomial<ModP>::from_terms(ring, std::move(terms));
}

}  // namespace

TEST(Hilbert, KrullDimensionOfMonomialIdeals) {
  EXPECT_EQ(krull_dimension({}, 3), 3);
  EXPECT_EQ(krull_dimension({Monomial{0, 0, 0}}, 3), -1);
  EXPECT_EQ(krull_dimension({Monomial{1, 0, 0}}, 3), 2);
  EXPECT_EQ(krull_dimension({Monomial{1, 1, 0}}, 3), 2);
  EXPECT_EQ(krull_dimension({Monomial{1, 0, 0}, Monomial{0, 1, 0}}, 3), 1);
  EXPECT_EQ(krull_dimension({Monomial{2, 0, 0}, Monomial{0, 3, 0}, Monomial{0, 0, 1}}, 3), 0);
}

TEST(Hilbert, NumeratorOfPrincipalIdeal) {
  // K[x,y]/(x^2 y): numerator 1 - t^3
  const auto num = hilbert_numerator({Monomial{2, 1}}, 2);
  ASSERT_EQ(num.size(), 4u);
  EXPECT_EQ(num[0], 1);
  EXPECT_EQ(num[1], 0);
  EXPECT_EQ(num[2], 0);
  EXPECT_EQ(num[3], -1);
}

TEST(Hilbert, FunctionMatchesStandardMonomialCount) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto gens = random_monomials(n, rng, 1 + static_cast<int>(rng() % 5), 4);
    const auto num = hilbert_numerator(gens, n);
    for (unsigned s = 0; s <= 9; ++s)
      EXPECT_EQ(hilbert_function(num, n, s), count_standard_monomials(gens, n, s)) << "trial " << trial << " s " << s;
  }
}

TEST(Hilbert, DegreeDataForMonomialIdeals) {
  // (x^2, y^3) in 3 variables: 6 points' worth of degree on the line z, krull 1
  const auto data = degree_data({Monomial{2, 0, 0}, Monomial{0, 3, 0}}, 3);
  EXPECT_EQ(data.krull_dimension, 1);
  EXPECT_EQ(data.degree, 6);
  // hypersurface x^2 y z^2 in 4 variables: degree 5
  EXPECT_EQ(degree_data({Monomial{2, 1, 2, 0}}, 4).degree, 5);
}

// The Hilbert function from the leading-term ideal agrees with the dimension of the
// degree-s piece of the quotient computed by dense linear algebra.
TEST(Hilbert, AgreesWithMacaulayMatrix) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 3 + rng() % 2;
    const RingPtr r = make_ring(numbered_names("w", n, 1), F10007);
    std::vector<Polynomial<ModP>> gens;
    const std::size_t g = 1 + rng() % n;
    for (std::size_t k = 0; k < g; ++k) {
      auto f = random_form(r, 1 + static_cast<unsigned>(rng() % 3), rng);
      if (!f.is_zero()) gens.push_back(std::move(f));
    }
    if (gens.empty()) continue;
    const auto gb = groebner_basis(IdealPresentation<ModP>(r, gens));
    const auto num = hilbert_numerator(gb.leading_monomials(), n);
    for (unsigned s = 0; s <= 6; ++s)
      EXPECT_EQ(hilbert_function(num, n, s), oracle::hilbert_value(gens, n, s)) << "trial " << trial << " s " << s;
  }
}

TEST(Hilbert, SchemeDegreeAgreesWithMacaulayMatrix) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 8; ++trial) {
    const RingPtr r = make_ring(numbered_names("w", 3, 1), F10007);
    // two products of linear forms: a finite scheme, often with repeated points
    auto lin = [&] { return random_form(r, 1, rng); };
    const auto l1 = lin(), l2 = lin();
    const std::vector<Polynomial<ModP>> gens{l1 * l1 * lin(), l2 * lin()};
    const auto gb = groebner_basis(IdealPresentation<ModP>(r, gens));
    if (ideal_dimension(gb) != 0) continue;
    EXPECT_EQ(scheme_degree(gb), static_cast<long>(oracle::hilbert_value(gens, 3, 12)));
  }
}
