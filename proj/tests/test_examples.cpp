#include <gtest/gtest.h>

#include "clines/clines.hpp"

using namespace clines;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F10007 = FieldSpec::prime(10007);
}  // namespace

TEST(ExampleKeys, Parse) {
  auto s = ExampleSpec::parse("random:3:4:seed=7");
  EXPECT_EQ(s.family, Family::random);
  EXPECT_EQ(s.degree, 3);
  EXPECT_EQ(s.ambient, 4);
  EXPECT_EQ(s.seed, 7u);
  s = ExampleSpec::parse("cone:random:3:4:seed=2:vertex");
  EXPECT_EQ(s.family, Family::cone);
  EXPECT_EQ(s.inner, "random:3:4:seed=2");
  EXPECT_TRUE(s.at_vertex);
  EXPECT_EQ(ExampleSpec::parse("plane-in-quartic:seed=9").seed, 9u);
  for (const char* bad : {"nope", "random:3", "random:3:4:5", "random:1:4", "random:x:4", "quadric-surface:1",
                          "plane-in-quartic:seed=", "cone:segre-zak", "fermat:3:4:seed=1", "cone:nope"})
    EXPECT_THROW(ExampleSpec::parse(bad), InputError) << bad;
}

TEST(RandomHypersurface, ThroughBasePointAndSmooth) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto [f, x] = random_hypersurface_through_point<ModP>(3, 4, seed, F10007);
    EXPECT_TRUE(f.is_homogeneous(3));
    EXPECT_TRUE(evaluate(f, x.coordinates()).is_zero());
    bool nonzero = false;
    for (std::size_t v = 0; v < 5; ++v) nonzero = nonzero || !evaluate(derivative(f, v), x.coordinates()).is_zero();
    EXPECT_TRUE(nonzero) << "seed " << seed;
    EXPECT_EQ(x.coordinates()[0].value(), 1u);
  }
}

TEST(RandomHypersurface, Deterministic) {
  for (const FieldSpec& field : {Q, F10007}) {
    with_field(field, [&]<class C>(std::type_identity<C>) {
      const auto a = random_hypersurface_through_point<C>(4, 5, 3, field);
      const auto b = random_hypersurface_through_point<C>(4, 5, 3, field);
      EXPECT_EQ(a.first, b.first);
      EXPECT_EQ(a.second, b.second);
      const auto c = random_hypersurface_through_point<C>(4, 5, 4, field);
      EXPECT_FALSE(a.first == c.first);
    });
  }
  EXPECT_THROW(random_hypersurface_through_point<ModP>(1, 4, 1, F10007), InputError);
  EXPECT_THROW(random_hypersurface_through_point<ModP>(3, 1, 1, F10007), InputError);
}

TEST(Examples, QuadricSurface) {
  const auto ex = make_example<Rational>(ExampleSpec::parse("quadric-surface"), Q);
  ASSERT_EQ(ex.variety.generators().size(), 1u);
  EXPECT_EQ(ex.variety.generators()[0].to_string(), "-x1*x2 + x0*x3");
  EXPECT_EQ(ex.point.to_string(), "(1,0,0,0)");
  EXPECT_EQ(tangent_frame(ex.variety, ex.point).n(), 2u);
}

TEST(Examples, PlaneInQuarticContainsThePlane) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto ex = make_example<ModP>(ExampleSpec::parse("plane-in-quartic:seed=" + std::to_string(seed)), F10007);
    const auto& f = ex.variety.generators()[0];
    EXPECT_TRUE(f.is_homogeneous(4));
    const RingPtr r = f.ring();
    std::vector<Polynomial<ModP>> images{Polynomial<ModP>(r), Polynomial<ModP>(r)};
    for (std::size_t i = 2; i < 5; ++i) images.push_back(Polynomial<ModP>::variable(r, i));
    EXPECT_TRUE(linear_substitute(f, images).is_zero());
    EXPECT_EQ(ex.point.to_string(), "(0,0,1,0,0)");
  }
}

TEST(Examples, Fermat) {
  const auto ex = make_example<Rational>(ExampleSpec::parse("fermat:3:4"), Q);
  EXPECT_EQ(ex.variety.generators()[0].size(), 5u);
  EXPECT_EQ(ex.point.to_string(), "(1,-1,0,0,0)");
  EXPECT_FALSE(ex.flags.empty());
  // even degree over Q has no point of the required shape
  EXPECT_THROW(make_example<Rational>(ExampleSpec::parse("fermat:4:4"), Q), InputError);
  // -1 is a fourth power in F_17 (8 divides 16) but not in F_13
  const auto f17 = make_example<ModP>(ExampleSpec::parse("fermat:4:3"), FieldSpec::prime(17));
  EXPECT_TRUE(evaluate(f17.variety.generators()[0], f17.point.coordinates()).is_zero());
  EXPECT_THROW(make_example<ModP>(ExampleSpec::parse("fermat:4:3"), FieldSpec::prime(13)), InputError);
}

TEST(Examples, SegreZak) {
  const auto ex = make_example<ModP>(ExampleSpec::parse("segre-zak"), F10007);
  EXPECT_EQ(ex.variety.ring()->size(), 12u);
  EXPECT_EQ(ex.variety.generators().size(), 34u);
  EXPECT_EQ(ex.expected_dimension, 3);
  // the Segre image of random points of Y x C satisfies every equation
  const ModP a(F10007, 3), b(F10007, 5), c(F10007, 7);
  const std::vector<ModP> y{ModP(F10007, 1), a, b, a * b};
  const std::vector<ModP> z{ModP(F10007, 1), c, c * c};
  std::vector<ModP> pt;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) pt.push_back(y[i] * z[j]);
  for (const auto& g : ex.variety.generators()) EXPECT_TRUE(evaluate(g, pt).is_zero());
  // the ideal cuts out a threefold
  EXPECT_EQ(ideal_dimension(groebner_basis(ex.variety)), 3);
}

TEST(Examples, Cone) {
  const auto ex = make_example<ModP>(ExampleSpec::parse("cone:random:3:4:seed=2"), F10007);
  EXPECT_EQ(ex.variety.ring()->size(), 6u);
  EXPECT_NO_THROW(tangent_frame(ex.variety, ex.point));
  const auto vertex = make_example<ModP>(ExampleSpec::parse("cone:random:3:4:seed=2:vertex"), F10007);
  EXPECT_THROW(tangent_frame(vertex.variety, vertex.point), SingularPointError);
}

TEST(Examples, EveryFamilyIsSmoothAndAnalyzable) {
  for (const char* key : {"quadric-surface", "cubic-threefold", "random:3:4:seed=9", "random:4:5:seed=2",
                          "fermat:3:4", "plane-in-quartic", "cone:quadric-surface", "segre-zak"}) {
    for (const FieldSpec& field : {F10007, FieldSpec::prime(101)}) {
      with_field(field, [&]<class C>(std::type_identity<C>) {
        const auto ex = make_example<C>(ExampleSpec::parse(key), field);
        AnalysisOptions opts;
        opts.expected_dimension = ex.expected_dimension;
        EXPECT_NO_THROW(analyze_lines(ex.variety, ex.point, opts)) << key << " " << field.to_string();
      });
    }
  }
}
