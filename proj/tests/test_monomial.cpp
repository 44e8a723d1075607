#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "symbpow/errors.hpp"
#include "symbpow/monomial_ideal.hpp"

using namespace symbpow;
using fixtures::ideal;

namespace {

class MonomialCore : public ::testing::Test {
 protected:
  ContextPtr ctx = fixtures::xyz();
  Monomial m(std::vector<Exponent> e) const { return Monomial(ctx, std::move(e)); }
  Monomial p(std::string_view s) const { return parse_monomial(ctx, s); }
};

TEST_F(MonomialCore, Divides) {
  EXPECT_TRUE(divides(p("x*y"), p("x^2*y^3")));
  EXPECT_FALSE(divides(p("x^2"), p("x*y")));
  EXPECT_TRUE(divides(Monomial::one(ctx), p("x^3*z")));
}

TEST_F(MonomialCore, LcmGcd) {
  EXPECT_EQ(lcm(p("x^2*y"), p("y*z")), p("x^2*y*z"));
  EXPECT_EQ(gcd(p("x^2*y"), p("y*z")), p("y"));
  EXPECT_EQ(lcm(p("x*y^3"), p("x*y^3")), p("x*y^3"));
}

TEST_F(MonomialCore, ParseAndFormat) {
  EXPECT_EQ(p("x^2*y"), m({2, 1, 0}));
  EXPECT_EQ(p(" z * x "), m({1, 0, 1}));
  EXPECT_EQ(p("x*x"), m({2, 0, 0}));
  EXPECT_EQ(p("1"), Monomial::one(ctx));
  EXPECT_EQ(m({2, 1, 0}).to_string(), "x^2*y");
  EXPECT_EQ(Monomial::one(ctx).to_string(), "1");
  EXPECT_THROW(p("w"), ParseError);
  EXPECT_THROW(p("x^"), ParseError);
  EXPECT_THROW(p("x**y"), ParseError);
  EXPECT_THROW(p(""), ParseError);
}

TEST_F(MonomialCore, CanonicalOrderIsDescendingLex) {
  EXPECT_LT(p("x^2"), p("x*y"));
  EXPECT_LT(p("x*y"), p("x*z"));
  EXPECT_LT(p("x*z"), p("y"));
  const auto tri = fixtures::triangle();
  EXPECT_EQ(tri.to_string(), "(x*y, x*z, y*z)");
}

TEST_F(MonomialCore, Minimalize) {
  EXPECT_EQ(minimalize(ctx, {p("x*y"), p("x^2*y"), p("y*z")}),
            ideal(ctx, {{1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(minimalize(ctx, {p("x"), p("x")}).size(), 1u);
  EXPECT_TRUE(minimalize(ctx, {}).is_zero());

  // Pairwise divisibility scan by hand.
  const oracle::Gens input{{2, 2, 0}, {1, 1, 1}, {2, 1, 1}};
  oracle::Gens expected;
  for (std::size_t i = 0; i < input.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < input.size(); ++j) {
      dominated |= i != j && input[i] != input[j] && oracle::divides(input[j], input[i]);
    }
    if (!dominated) expected.push_back(input[i]);
  }
  const auto result = minimalize(ctx, {m({2, 2, 0}), m({1, 1, 1}), m({2, 1, 1})});
  EXPECT_EQ(result, ideal(ctx, expected));
  EXPECT_EQ(result.to_string(), "(x^2*y^2, x*y*z)");
}

TEST_F(MonomialCore, PowerOfTriangle) {
  const auto tri = fixtures::triangle();
  oracle::Gens products;
  const auto gens = fixtures::raw(tri);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) products.push_back(oracle::add(gens[i], gens[j]));
  }
  ASSERT_EQ(products.size(), 6u);
  for (std::size_t i = 0; i < products.size(); ++i) {
    for (std::size_t j = 0; j < products.size(); ++j) {
      if (i != j) ASSERT_FALSE(oracle::divides(products[i], products[j]));
    }
  }
  const auto sq = power(tri, 2);
  EXPECT_EQ(sq, ideal(ctx, products));
  EXPECT_EQ(sq.size(), 6u);
  EXPECT_TRUE(power(tri, 0).is_unit());
  EXPECT_EQ(power(tri, 1), tri);
}

TEST_F(MonomialCore, AddAndMultiply) {
  const auto a = ideal(ctx, {{1, 0, 0}});
  const auto b = ideal(ctx, {{2, 1, 0}, {0, 1, 0}});
  EXPECT_EQ(add(a, b), ideal(ctx, {{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(multiply(a, b), ideal(ctx, {{1, 1, 0}}));
  EXPECT_TRUE(multiply(a, MonomialIdeal::zero(ctx)).is_zero());
  EXPECT_EQ(multiply(a, MonomialIdeal::unit(ctx)), a);
}

TEST_F(MonomialCore, Intersect) {
  EXPECT_EQ(intersect(ideal(ctx, {{1, 0, 0}}), ideal(ctx, {{0, 1, 0}})), ideal(ctx, {{1, 1, 0}}));

  const auto xy = ideal(ctx, {{1, 0, 0}, {0, 1, 0}});
  const auto xz = ideal(ctx, {{1, 0, 0}, {0, 0, 1}});
  const auto yz = ideal(ctx, {{0, 1, 0}, {0, 0, 1}});
  const std::vector<MonomialIdeal> squares{power(xy, 2), power(xz, 2), power(yz, 2)};
  const auto result = intersect(squares);
  EXPECT_EQ(result, ideal(ctx, {{1, 1, 1}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}}));
  EXPECT_EQ(result, intersect(intersect(squares[0], squares[1]), squares[2]));

  const auto tri = fixtures::triangle();
  EXPECT_EQ(intersect(tri, MonomialIdeal::unit(ctx)), tri);
  EXPECT_THROW(intersect(std::span<const MonomialIdeal>{}), InvalidArgument);
}

TEST_F(MonomialCore, Colon) {
  EXPECT_EQ(colon(ideal(ctx, {{2, 2, 0}}), p("x*y")), ideal(ctx, {{1, 1, 0}}));
  const auto tri = fixtures::triangle();
  EXPECT_EQ(colon(tri, Monomial::one(ctx)), tri);
  EXPECT_EQ(colon_ideal(tri, MonomialIdeal::unit(ctx)), tri);
  EXPECT_THROW(colon_ideal(tri, MonomialIdeal::zero(ctx)), InvalidArgument);

  // xyz * g lies in (x^2y^2, x^2z^2, y^2z^2) for each g in (xy, xz, yz).
  const auto bracket = ideal(ctx, {{2, 2, 0}, {2, 0, 2}, {0, 2, 2}});
  const auto xyz = p("x*y*z");
  for (const auto& g : tri.generators()) {
    ASSERT_TRUE(oracle::in_ideal(fixtures::raw(bracket), (xyz * g).exponent_vector()));
  }
  EXPECT_TRUE(contains_monomial(colon_ideal(bracket, tri), xyz));
}

TEST_F(MonomialCore, BracketPower) {
  const auto tri = fixtures::triangle();
  EXPECT_EQ(bracket_power(tri, 2), ideal(ctx, {{2, 2, 0}, {2, 0, 2}, {0, 2, 2}}));
  EXPECT_EQ(bracket_power(tri, 1), tri);
  EXPECT_EQ(bracket_power(ideal(ctx, {{2, 0, 0}}), 3), ideal(ctx, {{6, 0, 0}}));
  EXPECT_THROW(bracket_power(tri, 0), InvalidArgument);
  EXPECT_THROW(bracket_power(tri, kMaxFrobeniusQ + 1), InvalidArgument);
  EXPECT_NO_THROW(bracket_power(tri, kMaxFrobeniusQ));
}

TEST_F(MonomialCore, Containment) {
  const auto tri = fixtures::triangle();
  EXPECT_TRUE(contains_monomial(tri, p("x*y*z")));
  EXPECT_FALSE(contains_monomial(ideal(ctx, {{1, 1, 0}}), p("x")));
  EXPECT_TRUE(ideal_contains(ideal(ctx, {{1, 1, 0}}), ideal(ctx, {{2, 2, 0}})));
  EXPECT_FALSE(ideal_contains(ideal(ctx, {{2, 2, 0}}), ideal(ctx, {{1, 1, 0}})));
  EXPECT_EQ(first_outside(ideal(ctx, {{2, 2, 0}}), tri), p("x*y"));
}

TEST_F(MonomialCore, Radical) {
  EXPECT_EQ(radical(ideal(ctx, {{2, 1, 0}, {0, 0, 3}})), ideal(ctx, {{1, 1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(is_squarefree(fixtures::triangle()));
  EXPECT_FALSE(is_squarefree(ideal(ctx, {{2, 1, 0}})));
  const auto tri = fixtures::triangle();
  EXPECT_EQ(radical(bracket_power(tri, 4)), radical(tri));
}

TEST_F(MonomialCore, OverflowGuard) {
  const auto small = make_context({"x", "y"}, 10);
  const Monomial a(small, {6, 0});
  const Monomial b(small, {5, 1});
  EXPECT_THROW(a * b, OverflowError);
  EXPECT_THROW(Monomial(small, {11, 0}), OverflowError);
  const MonomialIdeal i(small, {Monomial(small, {3, 0})});
  EXPECT_THROW(bracket_power(i, 4), OverflowError);
  EXPECT_THROW(power(i, 4), OverflowError);
  EXPECT_NO_THROW(power(i, 3));

  const auto wide = make_context({"x"});
  EXPECT_THROW(pow(Monomial(wide, {kDefaultExponentCap}), 2), OverflowError);
}

TEST_F(MonomialCore, ContextMismatch) {
  const auto other = make_context({"a", "b", "c"});
  EXPECT_THROW(divides(p("x"), Monomial(other, {1, 0, 0})), ContextMismatch);
  EXPECT_THROW(add(fixtures::triangle(), MonomialIdeal::unit(other)), ContextMismatch);
  EXPECT_THROW(Monomial(ctx, {1, 2}), ContextMismatch);
  // Structurally equal rings are interchangeable.
  EXPECT_NO_THROW(divides(p("x"), Monomial(fixtures::xyz(), {1, 0, 0})));
}

TEST(RingContext, Validation) {
  EXPECT_THROW(make_context({}), InvalidArgument);
  EXPECT_THROW(make_context({"x", "x"}), InvalidArgument);
  const auto ctx = indexed_context(3);
  EXPECT_EQ(ctx->var_name(2), "x3");
  EXPECT_EQ(ctx->index_of("x2"), 1u);
  EXPECT_FALSE(ctx->index_of("y").has_value());
}

// Random-instance properties.

class MonomialProperties : public ::testing::TestWithParam<int> {};

TEST_P(MonomialProperties, MinimalizeIsIdempotentAntichain) {
  std::mt19937_64 rng(1000 + GetParam());
  const auto i = fixtures::random_ideal(rng, 4, 8, 4);
  EXPECT_EQ(MonomialIdeal(i.context(), i.generators()), i);
  const auto& g = i.generators();
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a != b) EXPECT_FALSE(divides(g[a], g[b]));
    }
    if (a + 1 < g.size()) EXPECT_LT(g[a], g[a + 1]);
  }
}

TEST_P(MonomialProperties, BracketPowerIsFlat) {
  std::mt19937_64 rng(2000 + GetParam());
  const auto i = fixtures::random_ideal(rng, 4, 5, 3);
  auto j = fixtures::random_ideal(rng, 4, 5, 3);
  j = MonomialIdeal(i.context(), j.generators());
  for (unsigned q : {2u, 3u, 4u}) {
    EXPECT_EQ(bracket_power(intersect(i, j), q), intersect(bracket_power(i, q), bracket_power(j, q)));
    EXPECT_EQ(bracket_power(colon_ideal(i, j), q),
              colon_ideal(bracket_power(i, q), bracket_power(j, q)));
    EXPECT_EQ(radical(bracket_power(i, q)), radical(i));
  }
}

TEST_P(MonomialProperties, BracketCommutesWithPower) {
  std::mt19937_64 rng(3000 + GetParam());
  const auto i = fixtures::random_ideal(rng, 3, 4, 2);
  for (unsigned n : {1u, 2u, 3u}) {
    for (unsigned q : {2u, 3u}) {
      EXPECT_EQ(bracket_power(power(i, n), q), power(bracket_power(i, q), n));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Random, MonomialProperties, ::testing::Range(0, 20));

}  // namespace
