#include <gtest/gtest.h>

#include <random>

#include "test_helpers.hpp"

using namespace intcl;
using intcl::testing::ideal;
using intcl::testing::P;

namespace {

const std::vector<Exponents> kNorthcott{{2, 0}, {1, 4}, {0, 5}};

TEST(Lp, FeasiblePointSatisfiesSystem) {
  lp::Matrix A{{1, 2, 1}, {3, -1, 0}};
  std::vector<lp::Rational> b{4, 2};
  auto x = lp::feasible_point(A, b);
  ASSERT_TRUE(x);
  for (std::size_t i = 0; i < A.size(); ++i) {
    lp::Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_GE((*x)[j], 0);
      s += A[i][j] * (*x)[j];
    }
    EXPECT_EQ(s, b[i]);
  }
  // x0 + x1 = -1 with x >= 0
  EXPECT_FALSE(lp::feasible_point({{1, 1}}, {-1}));
}

TEST(Lp, FourierMotzkinStrictness) {
  // x <= 1, -x <= -1 is feasible; making one side strict is not.
  std::vector<lp::Inequality> sys{{{1}, 1, false}, {{-1}, -1, false}};
  EXPECT_TRUE(lp::fm_feasible(sys, 1));
  sys[1].strict = true;
  EXPECT_FALSE(lp::fm_feasible(sys, 1));
}

TEST(IsMonomial, Examples) {
  auto r = Ring::polynomial({"x", "y"});
  auto ex = monomial_exponents(ideal(r, "x^2, x*y^4, y^5"));
  ASSERT_TRUE(ex);
  EXPECT_EQ(ex->size(), 3u);
  EXPECT_FALSE(is_monomial_ideal(ideal(r, "x^2-y")));
  // generated by binomials but monomial after all
  EXPECT_TRUE(is_monomial_ideal(ideal(r, "x^2-x*y, x*y")));
}

TEST(IsMonomial, BinomialExampleAfterLinearChange) {
  auto src = PolynomialRing::make({"x", "y", "z", "w"});
  auto dst = PolynomialRing::make({"X", "Y", "Z", "W"});
  std::map<std::string, Polynomial> to_new{
      {"x", P(dst, "X+Y")}, {"y", P(dst, "Y")}, {"z", P(dst, "Z+W")}, {"w", P(dst, "W")}};
  std::vector<Polynomial> gens;
  for (const auto& s : {"x^2-x*y", "-x*y+y^2", "z^2-z*w", "-z*w+w^2"})
    gens.push_back(substitute_linear(P(src, s), to_new, dst));
  auto ex = monomial_exponents(Ideal(Ring(dst), gens));
  ASSERT_TRUE(ex);
  std::set<Exponents> got(ex->begin(), ex->end());
  std::set<Exponents> want{{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}};
  EXPECT_EQ(got, want);
}

TEST(NpMembership, Examples) {
  NewtonPolyhedron np(kNorthcott, 2);
  EXPECT_TRUE(np_membership({1, 3}, np));
  for (const auto& v : kNorthcott) EXPECT_TRUE(np_membership(v, np));
  EXPECT_FALSE(np_membership({1, 2}, NewtonPolyhedron({{2, 0}, {0, 5}}, 2)));
  EXPECT_FALSE(np_membership({0, 4}, np));
  EXPECT_THROW(np_membership({1, 1, 1}, np), PreconditionError);
}

TEST(NpMembership, FourierMotzkinAgrees) {
  NewtonPolyhedron np(kNorthcott, 2);
  for (long i = 0; i <= 3; ++i)
    for (long j = 0; j <= 6; ++j) EXPECT_EQ(np_membership({i, j}, np), np_membership_fm({i, j}, np)) << i << "," << j;
}

TEST(MonomialClosure, Examples) {
  auto r = Ring::polynomial({"x", "y"});
  EXPECT_EQ(monomial_integral_closure(ideal(r, "x^2, x*y^4, y^5")).canonical_strings(),
            ideal(r, "x^2, x*y^3, y^5").canonical_strings());
  EXPECT_TRUE(equal(monomial_integral_closure(ideal(r, "x^3")), ideal(r, "x^3")));
  EXPECT_THROW(monomial_integral_closure(ideal(r, "x^2-y")), PreconditionError);
  EXPECT_TRUE(monomial_integral_closure(Ideal::zero(r)).is_zero());
  EXPECT_TRUE(monomial_integral_closure(Ideal::unit(r)).is_unit());

  auto q = Ring::polynomial({"X", "Y", "Z", "W"});
  EXPECT_TRUE(equal(monomial_integral_closure(ideal(q, "X^2, X*Y, Z^2, Z*W")), ideal(q, "X^2, X*Y, Z^2, Z*W, X*Z")));
}

TEST(MonomialClosure, BinomialClosureMapsBack) {
  // closure in the new coordinates, pulled back, is the binomial example's closure
  auto src = PolynomialRing::make({"X", "Y", "Z", "W"});
  auto dst = PolynomialRing::make({"x", "y", "z", "w"});
  auto closed = monomial_integral_closure(ideal(Ring(src), "X^2, X*Y, Z^2, Z*W"));
  std::map<std::string, Polynomial> back{
      {"X", P(dst, "x-y")}, {"Y", P(dst, "y")}, {"Z", P(dst, "z-w")}, {"W", P(dst, "w")}};
  std::vector<Polynomial> gens;
  for (const auto& g : closed.gens()) gens.push_back(substitute_linear(g, back, dst));
  EXPECT_TRUE(equal(Ideal(Ring(dst), gens),
                    ideal(Ring(dst), "x^2-x*y, -x*y+y^2, z^2-z*w, -z*w+w^2, x*z-y*z-x*w+y*w")));
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(brute_force_oracle({1, 3}, kNorthcott, 2));
  EXPECT_FALSE(brute_force_oracle({1, 3}, kNorthcott, 1));
  for (const auto& v : kNorthcott) EXPECT_TRUE(brute_force_oracle(v, kNorthcott, 1));
  EXPECT_FALSE(brute_force_oracle({0, 4}, kNorthcott, 6));
  EXPECT_THROW(brute_force_oracle({0, 4}, kNorthcott, 0), PreconditionError);
}

struct RandomMonomial {
  std::vector<Exponents> gens;
  std::size_t n;
};

RandomMonomial random_monomial_ideal(std::mt19937_64& rng) {
  RandomMonomial out;
  out.n = 1 + rng() % 3;
  std::size_t m = 1 + rng() % 4;
  for (std::size_t i = 0; i < m; ++i) {
    Exponents v(out.n);
    for (auto& e : v) e = static_cast<long>(rng() % 7);
    out.gens.push_back(v);
  }
  return out;
}

Ideal to_ideal(const RandomMonomial& rm) {
  static const std::vector<std::string> names{"x", "y", "z"};
  Ring r = Ring::polynomial(std::vector<std::string>(names.begin(), names.begin() + rm.n));
  std::vector<Polynomial> gens;
  for (const auto& v : rm.gens) {
    std::vector<Monomial::exponent_type> e(v.begin(), v.end());
    gens.push_back(Polynomial::monomial(r.base(), Coefficient(1), Monomial(std::move(e))));
  }
  return Ideal(r, gens);
}

// Both directions, on points inside and just outside the generator box.
TEST(MonomialClosureProperty, OracleAgreement) {
  std::mt19937_64 rng(20261015);
  int ideals = 0, members = 0, non_members = 0;
  for (; ideals < 120; ++ideals) {
    auto rm = random_monomial_ideal(rng);
    NewtonPolyhedron np(rm.gens, rm.n);
    for (int s = 0; s < 8; ++s) {
      Exponents a(rm.n);
      for (auto& e : a) e = static_cast<long>(rng() % 8);
      bool lp = np_membership(a, np);
      bool oracle = brute_force_oracle(a, rm.gens, 12);
      EXPECT_EQ(lp, oracle) << "ideal " << to_ideal(rm).to_string() << " point " << s;
      EXPECT_EQ(lp, np_membership_fm(a, np));
      (lp ? members : non_members)++;
    }
  }
  EXPECT_GT(members, 100);
  EXPECT_GT(non_members, 100);
}

TEST(MonomialClosureProperty, IdempotentAndBetweenIdealAndRadical) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    auto rm = random_monomial_ideal(rng);
    Ideal I = to_ideal(rm);
    Ideal C = monomial_integral_closure(I);
    EXPECT_TRUE(is_subset(I, C));
    EXPECT_TRUE(equal(monomial_integral_closure(C), C)) << I.to_string();
    for (const auto& g : C.gens()) EXPECT_TRUE(radical_membership(g, I)) << I.to_string();
    // every closure generator is certified by the oracle
    for (const auto& g : C.gens()) EXPECT_TRUE(brute_force_oracle(exponents_of(g.leading_monomial()), rm.gens, 12));
  }
}

}  // namespace
