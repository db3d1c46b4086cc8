#include <gtest/gtest.h>

#include <cstdlib>

#include "test_helpers.hpp"

using namespace intcl;
using intcl::testing::ideal;
using intcl::testing::P;

namespace {

Ring xy() { return Ring::polynomial({"x", "y"}); }

Ideal J(const Ring& r) { return ideal(r, "x^3+y^6, x*y^3-y^5"); }
Ideal J3(const Ring& r) { return ideal(r, "x*y^3-y^5, y^6, x^3, x^2*y^2"); }

// T_i -> a_i t kills every generator (checked here independently of the
// check inside rees_presentation).
void expect_substitution_sound(const ReesPresentation& rp) {
  const auto& base = rp.base.base();
  std::vector<std::string> names = base->variables();
  names.push_back("t_check");
  auto rt = PolynomialRing::make(names);
  auto t = Polynomial::variable(rt, base->nvars());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < base->nvars(); ++i) images.push_back(Polynomial::variable(rt, i));
  for (const auto& a : rp.generators) images.push_back(change_ring(a, rt) * t);
  for (const auto& g : rp.presentation.gens()) EXPECT_TRUE(substitute(g, images, rt).is_zero()) << g.to_string();
}

TEST(ReesPresentation, MaximalIdeal) {
  auto r = xy();
  auto rp = rees_presentation(ideal(r, "x, y"));
  expect_substitution_sound(rp);
  Ring R(rp.ring);
  EXPECT_TRUE(equal(rp.presentation, ideal(R, "y*T1-x*T2")));
}

TEST(ReesPresentation, PrincipalAndZero) {
  auto r = xy();
  EXPECT_TRUE(rees_presentation(ideal(r, "x")).presentation.is_zero());
  EXPECT_THROW(rees_presentation(Ideal::zero(r)), PreconditionError);
}

TEST(ReesPresentation, LinearPartIsSyzygies) {
  auto r = xy();
  Ideal I = J(r);
  auto rp = rees_presentation(I);
  expect_substitution_sound(rp);
  Ring R(rp.ring);
  auto T1 = P(rp.ring, "T1"), T2 = P(rp.ring, "T2");
  auto syz = syzygy_matrix(I);
  ASSERT_GE(syz.cols(), 1u);
  std::vector<Polynomial> linear;
  for (std::size_t c = 0; c < syz.cols(); ++c) {
    auto form = change_ring(syz(0, c), rp.ring) * T1 + change_ring(syz(1, c), rp.ring) * T2;
    EXPECT_TRUE(rp.presentation.contains(form));
    linear.push_back(form);
  }
  // and the T-linear generators of Q lie in the module the syzygies span
  Ideal lin(R, linear);
  for (const auto& g : rp.presentation.gens()) {
    bool t_linear = true;
    for (const auto& term : g.terms()) t_linear = t_linear && term.mono[2] + term.mono[3] == 1;
    if (t_linear) EXPECT_TRUE(lin.contains(g)) << g.to_string();
  }
}

TEST(ReesPresentation, QuotientRing) {
  auto b = PolynomialRing::make({"x", "y"});
  Ring r(b, {P(b, "x*y")});
  auto rp = rees_presentation(ideal(r, "x, y"));
  // x*T2 and y*T1 both vanish once xy = 0
  EXPECT_TRUE(rp.presentation.contains(P(rp.ring, "x*T2")));
  EXPECT_TRUE(rp.presentation.contains(P(rp.ring, "y*T1")));
  EXPECT_TRUE(rp.presentation.contains(P(rp.ring, "T1*T2")));
  EXPECT_FALSE(rp.presentation.contains(P(rp.ring, "T1^2")));
}

TEST(Kernel, Examples) {
  auto r = PolynomialRing::make({"x", "y"});
  EXPECT_TRUE(kernel_of_ring_map(r, {P(r, "x^2"), P(r, "y^2")}).is_zero());
  auto k = kernel_of_ring_map(r, {P(r, "x^2"), P(r, "x*y"), P(r, "y^2")});
  EXPECT_TRUE(equal(k, ideal(k.ring(), "T1*T3-T2^2")));
  auto r7 = PolynomialRing::make({"x"}, MonomialOrder::grevlex(), 7);
  EXPECT_THROW(kernel_of_ring_map(r7, {P(r7, "x")}), PreconditionError);
}

TEST(Kernel, NonGradedGoesThroughElimination) {
  auto r = PolynomialRing::make({"x", "y"});
  auto k = kernel_of_ring_map(r, {P(r, "x+1"), P(r, "x^2")});
  EXPECT_TRUE(equal(k, ideal(k.ring(), "T2-T1^2+2*T1-1")));
  EXPECT_TRUE(kernel_of_ring_map(r, {P(r, "x"), P(r, "x^2+y")}).is_zero());
}

// graded answers against a direct elimination in k[x, y, T]
TEST(Kernel, GradedAgreesWithElimination) {
  auto r = PolynomialRing::make({"x", "y"});
  auto big = Ring::polynomial({"x", "y", "T1", "T2", "T3"});
  const std::vector<std::vector<std::string>> cases{
      {"x^2", "x*y", "y^2"}, {"x^3", "x^2*y", "y^3"}, {"x^2+y^2", "x*y", "x^2-y^2"}};
  for (const auto& c : cases) {
    std::vector<Polynomial> fs;
    std::string gens;
    for (std::size_t i = 0; i < 3; ++i) {
      fs.push_back(P(r, c[i]));
      gens += (i ? ", T" : "T") + std::to_string(i + 1) + "-(" + c[i] + ")";
    }
    auto k = kernel_of_ring_map(r, fs);
    auto e = eliminate(ideal(big, gens), {"T1", "T2", "T3"});
    EXPECT_EQ(k.canonical_strings(), e.canonical_strings()) << c[0];
  }
}

TEST(IsReduction, Examples) {
  auto r = xy();
  EXPECT_EQ(is_reduction(J(r), J(r), 3), 0);
  EXPECT_EQ(is_reduction(ideal(r, "x^2, y^2"), ideal(r, "x^2, x*y, y^2"), 3), 1);
  auto rJ3 = is_reduction(J(r), J3(r), 3);
  ASSERT_TRUE(rJ3);
  EXPECT_LE(*rJ3, 3);
  EXPECT_THROW(is_reduction(ideal(r, "x"), ideal(r, "y"), 2), PreconditionError);
  EXPECT_THROW(is_reduction(J(r), J(r), -1), PreconditionError);
  // (x^2, y^3) is not a reduction of (x, y)^2
  EXPECT_FALSE(is_reduction(ideal(r, "x^2, y^3"), ideal(r, "x^2, x*y, y^2"), 4));
}

TEST(IsReduction, CertifiesIntegrality) {
  auto r = xy();
  ASSERT_TRUE(is_reduction(J(r), J3(r), 3));
  Ideal H = J3(r);
  for (const auto& h : H.gens()) EXPECT_TRUE(integrality_witness_check(h, J(r))) << h.to_string();
}

TEST(ColonAscent, ComputingExample) {
  auto r = xy();
  auto chain = colon_ascent_chain(J(r), ideal(r, "x, y"), 2);
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_TRUE(equal(chain[0].ideal, ideal(r, "x^3+y^6, x*y^3-y^5, y^8")));
  EXPECT_TRUE(equal(chain[1].ideal, ideal(r, "x^3+y^6, x*y^3-y^5, x^2*y^2-y^6, y^7")));
  EXPECT_TRUE(chain[0].reduction_ok);
  EXPECT_TRUE(chain[1].reduction_ok);
  for (const auto& s : chain) EXPECT_TRUE(is_subset(s.ideal, J3(r)));
}

TEST(ColonAscent, RadicalIsStable) {
  auto r = xy();
  for (const auto& s : colon_ascent_chain(ideal(r, "x, y"), ideal(r, "x, y"), 3)) {
    EXPECT_TRUE(s.ideal.is_unit() || equal(s.ideal, ideal(r, "x, y")));
  }
  EXPECT_THROW(colon_ascent_chain(J(r), ideal(r, "x"), 1), PreconditionError);
}

TEST(ColonAscent, MonotoneOnMonomialIdeals) {
  auto r = xy();
  for (const auto* gens : {"x^4, y^3", "x^5, x*y^2, y^4", "x^3, y^3"}) {
    Ideal I = ideal(r, gens);
    auto chain = colon_ascent_chain(I, ideal(r, "x, y"), 4);
    for (std::size_t k = 0; k < chain.size(); ++k) {
      EXPECT_TRUE(is_subset(I, chain[k].ideal));
      if (k) EXPECT_TRUE(is_subset(chain[k - 1].ideal, chain[k].ideal));
    }
  }
}

TEST(PowerClosure, Examples) {
  auto r = xy();
  auto a = P(r.base(), "x^3+y^6"), b = P(r.base(), "x*y^3-y^5");
  EXPECT_TRUE(power_closure_check(a, b, J3(r), 2));
  EXPECT_TRUE(power_closure_check(a, b, J(r), 3));
  EXPECT_FALSE(power_closure_check(P(r.base(), "x^2"), P(r.base(), "y^2"), ideal(r, "x, y"), 2));
  EXPECT_THROW(power_closure_check(P(r.base(), "x"), P(r.base(), "x^2"), ideal(r, "x"), 2), PreconditionError);
}

TEST(PowerClosure, MonomialClosureOfSquares) {
  // (x^a, y^b) against its own closure computed on the Newton polyhedron
  auto r = xy();
  for (int e = 2; e <= 4; ++e)
    for (int f = 2; f <= 4; ++f) {
      auto a = P(r.base(), "x^" + std::to_string(e)), b = P(r.base(), "y^" + std::to_string(f));
      Ideal bar = monomial_integral_closure(Ideal(r, {a, b}));
      EXPECT_TRUE(power_closure_check(a, b, bar, 3)) << e << "," << f;
    }
}

TEST(Hypersurface, Examples) {
  auto r = PolynomialRing::make({"T1", "T2", "T3"});
  EXPECT_TRUE(hypersurface_normality(P(r, "T1*T3-T2^2")));
  auto rep = hypersurface_normality_report(P(r, "T1*T3-T2^2"));
  EXPECT_EQ(rep.dim_hypersurface, 2);
  EXPECT_EQ(rep.dim_singular, 0);
  // non-reduced input: every point is singular
  EXPECT_FALSE(hypersurface_normality(P(r, "T1^2")));
  // cuspidal cylinder is singular in codimension one
  EXPECT_FALSE(hypersurface_normality(P(r, "T1^2-T2^3")));
  EXPECT_THROW(hypersurface_normality(P(r, "5")), PreconditionError);
}

TEST(Hypersurface, PfaffianSubalgebraIsNotNormal) {
  if (!std::getenv("INTCL_SLOW_TESTS")) GTEST_SKIP() << "set INTCL_SLOW_TESTS=1 to run";
  auto r = PolynomialRing::make({"x", "y", "z", "w"});
  auto m = PolyMatrix::from_rows(
      r, {{P(r, "0"), P(r, "-x^2"), P(r, "-y^2"), P(r, "-z^2"), P(r, "-w^2")},
          {P(r, "x^2"), P(r, "0"), P(r, "-w^2"), P(r, "-x*y"), P(r, "-z^2")},
          {P(r, "y^2"), P(r, "w^2"), P(r, "0"), P(r, "-x^2"), P(r, "-x*y")},
          {P(r, "z^2"), P(r, "x*y"), P(r, "x^2"), P(r, "0"), P(r, "-y^2")},
          {P(r, "w^2"), P(r, "z^2"), P(r, "x*y"), P(r, "y^2"), P(r, "0")}});
  auto f = pfaffians(m, 4);
  ASSERT_EQ(f.size(), 5u);
  auto k = kernel_of_ring_map(r, f);
  ASSERT_EQ(k.canonical_gens().size(), 1u);
  EXPECT_FALSE(hypersurface_normality(k.canonical_gens()[0]));
}

}  // namespace
