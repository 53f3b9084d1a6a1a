#include <gtest/gtest.h>

#include <random>

#include "clines/clines.hpp"
#include "oracles.hpp"

using namespace clines;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F10007 = FieldSpec::prime(10007);

template <class C>
IdealPresentation<C> hypersurface(const std::string& f, std::size_t nvars, const FieldSpec& field) {
  const RingPtr r = make_ring(numbered_names("x", nvars), field);
  return IdealPresentation<C>(r, {parse_polynomial<C>(f, r)});
}

template <class C>
ProjectivePoint<C> point(const std::string& text, const FieldSpec& field) {
  return ProjectivePoint<C>(parse_vector<C>(text, field));
}

ModP rand_mod(std::mt19937_64& rng) { return ModP(F10007, static_cast<long long>(rng() % 10007)); }

std::vector<ModP> rand_vec(std::size_t n, std::mt19937_64& rng) {
  std::vector<ModP> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rand_mod(rng));
  return v;
}

// A second valid frame: a random invertible recombination of the default tangent
// basis, plus random multiples of x (which span the same directions modulo x).
TangentFrame<ModP> random_frame(const IdealPresentation<ModP>& X, const ProjectivePoint<ModP>& x,
                                std::mt19937_64& rng, FrameOptions opts = {}) {
  const auto base = tangent_frame(X, x, opts);
  const std::size_t n = base.n();
  for (;;) {
    std::vector<std::vector<ModP>> mix;
    for (std::size_t a = 0; a < n; ++a) mix.push_back(rand_vec(n, rng));
    if (matrix_rank(mix, n) != n) continue;
    std::vector<Vec<ModP>> basis;
    for (std::size_t a = 0; a < n; ++a) {
      Vec<ModP> v(x.size(), ModP(F10007, 0));
      const ModP shift = rand_mod(rng);
      for (std::size_t m = 0; m < x.size(); ++m) {
        v[m] = shift * x.coordinates()[m];
        for (std::size_t b = 0; b < n; ++b) v[m] += mix[a][b] * base.tangent_basis[b][m];
      }
      basis.push_back(std::move(v));
    }
    return tangent_frame_from_basis(X, x, std::move(basis), opts);
  }
}

}  // namespace

TEST(Frame, QuadricSurface) {
  const auto X = hypersurface<Rational>("x0*x3 - x1*x2", 4, Q);
  const auto frame = tangent_frame(X, point<Rational>("1,0,0,0", Q));
  ASSERT_EQ(frame.n(), 2u);
  EXPECT_EQ(frame.tangent_basis[0], parse_vector<Rational>("0,1,0,0", Q));
  EXPECT_EQ(frame.tangent_basis[1], parse_vector<Rational>("0,0,1,0", Q));
  EXPECT_EQ(frame.w_variables, (std::vector<std::string>{"w1", "w2"}));
  // (x, tangent, complement) is a basis of K^4
  std::vector<Vec<Rational>> all{frame.point.coordinates()};
  for (const auto& v : frame.tangent_basis) all.push_back(v);
  for (const auto& v : frame.complement_basis) all.push_back(v);
  EXPECT_EQ(all.size(), 4u);
  EXPECT_TRUE(linearly_independent(all, 4));
}

TEST(Frame, FermatCubic) {
  const auto X = hypersurface<Rational>("x0^3+x1^3+x2^3+x3^3+x4^3", 5, Q);
  const auto frame = tangent_frame(X, point<Rational>("1,-1,0,0,0", Q));
  EXPECT_EQ(frame.n(), 3u);
  EXPECT_EQ(frame.jacobian_rank, 1u);
}

TEST(Frame, Errors) {
  const auto cone = hypersurface<Rational>("x1*x3 - x2^2", 4, Q);
  EXPECT_THROW(tangent_frame(cone, point<Rational>("1,0,0,0", Q)), SingularPointError);
  const auto X = hypersurface<Rational>("x0*x3 - x1*x2", 4, Q);
  EXPECT_THROW(tangent_frame(X, point<Rational>("1,0,0,1", Q)), InputError);
  EXPECT_THROW(tangent_frame(X, point<Rational>("1,0,0", Q)), InputError);
  EXPECT_THROW(ProjectivePoint<Rational>(parse_vector<Rational>("0,0", Q)), InputError);
  const RingPtr r = make_ring(numbered_names("x", 3), Q);
  const IdealPresentation<Rational> nonhom(r, {parse_polynomial<Rational>("x0^2 - x1", r)});
  EXPECT_THROW(tangent_frame(nonhom, point<Rational>("0,0,1", Q)), InputError);
}

TEST(Frame, FromBasisValidates) {
  const auto X = hypersurface<Rational>("x0*x3 - x1*x2", 4, Q);
  const auto x = point<Rational>("1,0,0,0", Q);
  EXPECT_THROW(tangent_frame_from_basis(X, x, {parse_vector<Rational>("0,0,0,1", Q), parse_vector<Rational>("0,1,0,0", Q)}),
               InputError);  // not tangent
  EXPECT_THROW(tangent_frame_from_basis(X, x, {parse_vector<Rational>("1,1,0,0", Q), parse_vector<Rational>("0,1,0,0", Q)}),
               InputError);  // dependent modulo x
  EXPECT_NO_THROW(
      tangent_frame_from_basis(X, x, {parse_vector<Rational>("1,1,0,0", Q), parse_vector<Rational>("0,1,1,0", Q)}));
}

TEST(Contact, QuadricForms) {
  const auto X = hypersurface<Rational>("x0*x3 - x1*x2", 4, Q);
  const auto cs = contact_system(X, tangent_frame(X, point<Rational>("1,0,0,0", Q)));
  EXPECT_EQ(cs.max_order, 2);
  EXPECT_EQ(cs.form(0, 2).to_string(), "-w1*w2");
  const auto s = with_invariants(sigma_ideal(cs, 2));
  EXPECT_EQ(*s.dimension, 0);
  EXPECT_EQ(*s.degree, 2);
  EXPECT_THROW(sigma_ideal(cs, 1), InputError);
  EXPECT_THROW(sigma_ideal(cs, 3), InputError);
}

TEST(Contact, PlaneInQuarticFormsVanishOnThePlane) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto ex = make_example<ModP>(ExampleSpec::parse("plane-in-quartic:seed=" + std::to_string(seed)), F10007);
    const auto& f = ex.variety.generators()[0];
    const ModP a = evaluate(derivative(f, 0), ex.point.coordinates());
    const ModP b = evaluate(derivative(f, 1), ex.point.coordinates());
    std::vector<Vec<ModP>> basis{parse_vector<ModP>("0,0,0,1,0", F10007), parse_vector<ModP>("0,0,0,0,1", F10007),
                                 Vec<ModP>{b, -a, ModP(F10007, 0), ModP(F10007, 0), ModP(F10007, 0)}};
    const auto cs = contact_system(ex.variety, tangent_frame_from_basis(ex.variety, ex.point, basis));
    ASSERT_EQ(cs.max_order, 4);
    const std::vector<Polynomial<ModP>> kill_w3{Polynomial<ModP>::variable(cs.w_ring, 0),
                                                Polynomial<ModP>::variable(cs.w_ring, 1), Polynomial<ModP>(cs.w_ring)};
    for (int i = 2; i <= 4; ++i) {
      EXPECT_FALSE(cs.form(0, i).is_zero());
      EXPECT_TRUE(linear_substitute(cs.form(0, i), kill_w3).is_zero()) << "i = " << i;
    }
  }
}

TEST(Contact, FormsAreHomogeneousOfTheirOrder) {
  for (const char* key : {"random:3:4:seed=2", "random:5:3:seed=1", "plane-in-quartic", "segre-zak"}) {
    const auto ex = make_example<ModP>(ExampleSpec::parse(key), F10007);
    const auto cs = contact_system(ex.variety, tangent_frame(ex.variety, ex.point, {ex.expected_dimension, {}}));
    for (std::size_t j = 0; j < cs.forms.size(); ++j)
      for (int i = 2; i <= cs.degrees[j]; ++i)
        EXPECT_TRUE(cs.form(j, i).is_zero() || cs.form(j, i).is_homogeneous(i)) << key;
  }
}

TEST(Contact, SigmaInfinityIsTopOrder) {
  const auto ex = make_example<ModP>(ExampleSpec::parse("random:3:4:seed=3"), F10007);
  const auto cs = contact_system(ex.variety, tangent_frame(ex.variety, ex.point));
  const auto inf = sigma_ideal(cs, ContactOrder::infinite());
  const auto three = sigma_ideal(cs, 3);
  ASSERT_EQ(inf.ideal.generators().size(), three.ideal.generators().size());
  for (std::size_t g = 0; g < inf.ideal.generators().size(); ++g)
    EXPECT_EQ(inf.ideal.generators()[g], three.ideal.generators()[g]);
  EXPECT_EQ(inf.labels, three.labels);
}

// f_j(x + t v) evaluated directly equals sum_i t^i G_{j,i}(w), at random t and w.
TEST(Properties, InterpolationOracle) {
  std::mt19937_64 rng(4);
  for (const char* key : {"quadric-surface", "random:3:4:seed=5", "random:4:5:seed=1", "plane-in-quartic", "segre-zak"}) {
    const auto ex = make_example<ModP>(ExampleSpec::parse(key), F10007);
    const auto cs = contact_system(ex.variety, tangent_frame(ex.variety, ex.point, {ex.expected_dimension, {}}));
    for (int sample = 0; sample < 50; ++sample) {
      const auto w = rand_vec(cs.n(), rng);
      const auto v = cs.frame.direction(w);
      const ModP t = rand_mod(rng);
      for (std::size_t j = 0; j < cs.forms.size(); ++j) {
        ModP predicted(F10007, 0), tp(F10007, 1);
        for (int i = 0; i <= cs.degrees[j]; ++i, tp *= t) predicted += tp * evaluate(cs.form(j, i), w);
        EXPECT_EQ(oracle::restrict_to_line(ex.variety.generators()[j], ex.point.coordinates(), v, t), predicted)
            << key << " j=" << j;
      }
    }
  }
}

TEST(Properties, FrameIndependence) {
  std::mt19937_64 rng(10);
  const std::vector<std::string> keys{"quadric-surface",    "random:3:4:seed=1", "random:3:4:seed=2",
                                      "random:4:4:seed=3",  "random:5:4:seed=4", "random:4:5:seed=5",
                                      "plane-in-quartic",   "random:3:5:seed=6", "segre-zak",
                                      "fermat:3:4"};
  for (const auto& key : keys) {
    const auto ex = make_example<ModP>(ExampleSpec::parse(key), F10007);
    const FrameOptions opts{ex.expected_dimension, {}};
    const auto cs1 = contact_system(ex.variety, tangent_frame(ex.variety, ex.point, opts));
    const auto cs2 = contact_system(ex.variety, random_frame(ex.variety, ex.point, rng, opts));
    for (int k = 2; k <= cs1.max_order; ++k) {
      const auto s1 = with_invariants(sigma_ideal(cs1, k));
      const auto s2 = with_invariants(sigma_ideal(cs2, k));
      EXPECT_EQ(*s1.dimension, *s2.dimension) << key << " k=" << k;
      EXPECT_EQ(s1.degree, s2.degree) << key << " k=" << k;
    }
  }
}

TEST(Properties, ScalingInvariance) {
  const auto ex = make_example<ModP>(ExampleSpec::parse("random:3:4:seed=8"), F10007);
  const ModP c(F10007, 123), s(F10007, 4567);
  std::vector<ModP> scaled_x = ex.point.coordinates();
  for (auto& v : scaled_x) v *= s;
  const IdealPresentation<ModP> scaled_f(ex.variety.ring(), {ex.variety.generators()[0].scaled(c)});
  const auto cs1 = contact_system(ex.variety, tangent_frame(ex.variety, ex.point));
  const auto cs2 = contact_system(scaled_f, tangent_frame(scaled_f, ProjectivePoint<ModP>(scaled_x)));
  for (int k = 2; k <= 3; ++k) {
    const auto s1 = with_invariants(sigma_ideal(cs1, k)), s2 = with_invariants(sigma_ideal(cs2, k));
    EXPECT_EQ(*s1.dimension, *s2.dimension);
    EXPECT_EQ(s1.degree, s2.degree);
  }
}

TEST(Properties, MonotoneChain) {
  for (const char* key : {"random:4:4:seed=1", "random:5:5:seed=2", "plane-in-quartic"}) {
    const auto ex = make_example<ModP>(ExampleSpec::parse(key), F10007);
    const auto cs = contact_system(ex.variety, tangent_frame(ex.variety, ex.point));
    int previous = static_cast<int>(cs.n()) - 1;
    for (int k = 2; k <= cs.max_order; ++k) {
      const auto s = with_invariants(sigma_ideal(cs, k));
      EXPECT_LE(*s.dimension, previous) << key;
      previous = *s.dimension;
      if (k > 2) {
        const auto gb = groebner_basis(s.ideal);
        const auto lower = sigma_ideal(cs, k - 1);
        for (const auto& g : lower.ideal.generators()) EXPECT_TRUE(ideal_contains(gb, g));
      }
    }
  }
}

TEST(Properties, NonemptySigmaHasAtLeastExpectedDimension) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int d = 2 + static_cast<int>(seed % 4);
    const int N = 3 + static_cast<int>(seed % 3);
    const auto ex = make_example<ModP>(
        ExampleSpec::parse("random:" + std::to_string(d) + ":" + std::to_string(N) + ":seed=" + std::to_string(seed)),
        F10007);
    const auto cs = contact_system(ex.variety, tangent_frame(ex.variety, ex.point));
    const int n = static_cast<int>(cs.n());
    for (int k = 2; k <= cs.max_order; ++k) {
      const auto s = with_invariants(sigma_ideal(cs, k));
      if (*s.dimension >= 0) {
        EXPECT_GE(*s.dimension, n - k) << "seed " << seed << " k " << k;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(PlaneContact, WorkedExamples) {
  const auto X = hypersurface<Rational>("x0*x3 - x1*x2", 4, Q);
  const auto frame = tangent_frame(X, point<Rational>("1,0,0,0", Q));
  EXPECT_EQ(plane_contact_order(X, frame, frame.tangent_basis).to_string(), "1");
  EXPECT_TRUE(plane_contact_order(X, frame, {frame.tangent_basis[0]}).is_infinite());
  EXPECT_THROW(plane_contact_order(X, frame, {frame.tangent_basis[0], frame.tangent_basis[0]}), InputError);

  const auto ex = make_example<ModP>(ExampleSpec::parse("plane-in-quartic"), F10007);
  const auto pf = tangent_frame(ex.variety, ex.point);
  EXPECT_TRUE(plane_contact_order(ex.variety, pf,
                                  {parse_vector<ModP>("0,0,0,1,0", F10007), parse_vector<ModP>("0,0,0,0,1", F10007)})
                  .is_infinite());
}

TEST(Frame, SegreDimensionIsInferred) {
  const auto ex = make_example<ModP>(ExampleSpec::parse("segre-zak"), F10007);
  const auto inferred = tangent_frame(ex.variety, ex.point);
  EXPECT_EQ(inferred.n(), 3u);
  EXPECT_EQ(inferred.jacobian_rank, 8u);
  EXPECT_THROW(tangent_frame(ex.variety, ex.point, FrameOptions{4, {}}), SingularPointError);
}
