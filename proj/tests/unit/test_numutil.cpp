#include <gtest/gtest.h>

#include <cmath>

#include "phyp/errors.hpp"
#include "phyp/numutil.hpp"

using namespace phyp;

TEST(Quadrature, GaussLegendreRuleIntegratesPolynomialsExactly) {
  const auto& rule = gauss_legendre_rule(16);
  ASSERT_EQ(rule.size(), 16u);
  double w = 0, m30 = 0, m31 = 0;
  for (const auto& [x, wt] : rule) {
    w += wt;
    m30 += wt * std::pow(x, 30);
    m31 += wt * std::pow(x, 31);
  }
  EXPECT_NEAR(w, 2.0, 1e-15);
  EXPECT_NEAR(m30, 2.0 / 31, 1e-15);
  EXPECT_NEAR(m31, 0.0, 1e-15);
}

TEST(Quadrature, AdaptiveMeetsTolerance) {
  auto f = [](double t) { return cplx(std::exp(t) * std::cos(20 * t), 1 / (1 + t * t)); };
  const QuadratureResult r = integrate(f, 0.0, 2.0);
  EXPECT_TRUE(r.converged);
  // exact: Re = [e^t (cos 20t + 20 sin 20t)/401]_0^2, Im = atan 2
  const double re = (std::exp(2.0) * (std::cos(40.0) + 20 * std::sin(40.0)) - 1) / 401;
  EXPECT_NEAR(r.value.real(), re, 1e-11);
  EXPECT_NEAR(r.value.imag(), std::atan(2.0), 1e-11);
  EXPECT_LE(std::abs(r.value - cplx(re, std::atan(2.0))), 10 * r.errorEstimate + 1e-15);
}

TEST(Quadrature, HandlesKinkAndEmptyInterval) {
  auto f = [](double t) { return cplx(std::fabs(t - 0.3)); };
  EXPECT_NEAR(integrate(f, 0.0, 1.0).value.real(), 0.5 * (0.09 + 0.49), 1e-11);
  EXPECT_EQ(integrate(f, 0.5, 0.5).value, cplx(0));
  EXPECT_THROW(integrate(f, 1.0, 0.0), DomainError);
  EXPECT_NEAR(integrate_checked(f, 1.0, 0.0).real(), -0.29, 1e-11);
}

TEST(Quadrature, CheckedThrowsWhenBudgetExhausted) {
  auto f = [](double t) { return cplx(std::sin(1 / (t + 1e-9))); };
  QuadraturePolicy tiny;
  tiny.maxPanels = 4;
  EXPECT_THROW(integrate_checked(f, 0.0, 1.0, tiny), QuadratureError);
}

TEST(Roots, BisectionNewton) {
  auto f = [](double x) { return std::cos(x) - x; };
  const RootResult r = find_root(f, RootBracket::make(f, 0.0, 1.0, 1e-13));
  EXPECT_NEAR(r.x, 0.7390851332151607, 1e-15);
  EXPECT_THROW(RootBracket::make(f, 2.0, 3.0, 1e-13), BracketError);
}

TEST(Roots, SignedBracketFromExactZero) {
  // f(0) = 0 exactly; f < 0 just right of 0, next root at pi
  auto f = [](double x) { return -std::sin(x); };
  const RootResult r = find_root_signed(f, 0.0, -1, 4.0, 1e-13);
  EXPECT_NEAR(r.x, M_PI, 1e-14);
}

TEST(FiniteDifferences, FornbergWeights) {
  const auto w = fornberg_weights(2, 0.0, {-1.0, 0.0, 1.0});
  EXPECT_NEAR(w[0], 1, 1e-15);
  EXPECT_NEAR(w[1], -2, 1e-15);
  EXPECT_NEAR(w[2], 1, 1e-15);
}

TEST(FiniteDifferences, DerivativesOfExponential) {
  auto y = [](double x) { return std::exp(cplx(0.3, 1.1) * x); };
  const cplx a(0.3, 1.1);
  for (int q = 1; q <= 4; ++q) {
    const cplx exact = std::pow(a, q) * y(0.7);
    EXPECT_LE(std::abs(derivative(y, q, 0.7) - exact), 1e-7 * std::abs(exact)) << q;
    EXPECT_LE(std::abs(derivative(y, q, 0.0, 0.0, Stencil::Forward, {0.0, 1.0}) - std::pow(a, q)),
              1e-5 * std::abs(std::pow(a, q)))
        << q;
    EXPECT_LE(std::abs(derivative(y, q, 1.0, 0.0, Stencil::Backward, {0.0, 1.0}) - std::pow(a, q) * y(1.0)),
              1e-5 * std::abs(std::pow(a, q) * y(1.0)))
        << q;
  }
  EXPECT_THROW(derivative(y, 1, 0.0, 0.0, Stencil::Central, {0.0, 1.0}), DomainError);
  EXPECT_LE(std::abs(apply_minus_iD_pow(3, y, 0.5) - std::pow(-cplx(0, 1) * a, 3) * y(0.5)), 1e-7);
}

TEST(LinearAlgebra, RandomMatrices) {
  Rng rng(3);
  const CMat u = random_unitary(5, rng);
  EXPECT_LE(max_abs(u * u.adjoint() - CMat::Identity(5, 5)), 1e-14);
  const CMat h = random_hermitian(4, rng);
  EXPECT_EQ(max_abs(h - h.adjoint()), 0.0);
  EXPECT_LE(std::abs(random_in_disk(2.0, rng)), 2.0);
  EXPECT_NEAR(std::abs(random_unimodular(rng)), 1.0, 1e-15);
}

TEST(LinearAlgebra, NullSpace) {
  CMat a(2, 4);
  a << 1, 2, 3, 4, 2, 4, 6, 8;
  const NullSpace ns = null_space(a);
  EXPECT_EQ(ns.rank, 1);
  EXPECT_EQ(ns.basis.cols(), 3);
  EXPECT_LE(max_abs(a * ns.basis), 1e-13);
  EXPECT_LE(max_abs(ns.basis.adjoint() * ns.basis - CMat::Identity(3, 3)), 1e-13);
}

TEST(Format, ShortScientific) { EXPECT_EQ(format_g(2.7143662564822421e-16), "2.71e-16"); }

TEST(Quadrature, BreakpointsSplitAtKinks) {
  std::vector<double> kinks;
  for (int i = 1; i < 200; ++i) kinks.push_back(i / 200.0);
  // piecewise linear sawtooth, exact integral 1/2
  auto saw = [](double t) {
    const double u = t * 200 - std::floor(t * 200);
    return cplx(u);
  };
  QuadraturePolicy pol;
  pol.nodesPerPanel = 4;
  pol.breakpoints = kinks;
  const QuadratureResult r = integrate(saw, 0.0, 1.0, pol);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.panels, 200);
  EXPECT_NEAR(r.value.real(), 0.5, 1e-13);
}
