#include <gtest/gtest.h>

#include "phyp/errors.hpp"
#include "phyp/pfun.hpp"
#include "phyp/spectral3.hpp"

using namespace phyp;

namespace {

const cplx I(0, 1);

// 40-digit roots of 3 Re(exp(-i phi/2) s_2(iu)), l = 1
const double kRootsPhi0[] = {5.2251542487689646315, 11.519219568811138399, 17.802358168805478474};
const double kRootsPhi1[] = {4.2747300769653408726, 10.518989780207568549, 16.802359164266723992};
const double kFirstNegativePhi1 = -6.2277425555910684386;

}  // namespace

TEST(Spectral3, SpecConstruction) {
  const OperatorSpec3 s = OperatorSpec3::from_phi(1.0, 2.0);
  EXPECT_NEAR(std::abs(s.theta - std::exp(I)), 0, 1e-16);
  EXPECT_NEAR(s.conjugate().phi, -1.0, 0);
  EXPECT_THROW(OperatorSpec3::from_phi(3.14159265, 1.0), DomainError);
  EXPECT_THROW(OperatorSpec3::from_phi(0.0, -1.0), DomainError);
  EXPECT_THROW(OperatorSpec3::from_theta(2.0, 1.0), DomainError);
  try {
    OperatorSpec3::from_phi(M_PI, 1.0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("theta = -1 excluded"), std::string::npos);
  }
}

TEST(Spectral3, RootsMatchOracle) {
  const auto r0 = eigen_zeros(OperatorSpec3::from_phi(0.0, 1.0), 3);
  ASSERT_EQ(r0.size(), 6u);
  for (int n = 0; n < 3; ++n) {
    EXPECT_EQ(r0[n].branch, Branch::Positive);
    EXPECT_EQ(r0[n].n, n + 1);
    EXPECT_NEAR(r0[n].mu, kRootsPhi0[n], 2e-15 * kRootsPhi0[n]);
    EXPECT_NEAR(r0[n + 3].mu, -kRootsPhi0[n], 2e-15 * kRootsPhi0[n]);
    EXPECT_NEAR(r0[n].eigenvalue, std::pow(r0[n].mu, 3), 1e-12 * r0[n].eigenvalue);
  }
  const auto r1 = eigen_zeros(OperatorSpec3::from_phi(1.0, 1.0), 3);
  for (int n = 0; n < 3; ++n) EXPECT_NEAR(r1[n].mu, kRootsPhi1[n], 2e-15 * kRootsPhi1[n]);
  EXPECT_NEAR(r1[3].mu, kFirstNegativePhi1, 2e-15 * 6.3);
  EXPECT_EQ(r1[3].branch, Branch::Negative);
}

TEST(Spectral3, FirstRootNearThetaMinusOne) {
  // as phi -> pi the first positive root slides towards 0 but stays labelled 1
  const auto r = eigen_zeros(OperatorSpec3::from_phi(3.0, 1.0), 2);
  EXPECT_EQ(r[0].n, 1);
  EXPECT_NEAR(r[0].mu, 1.61997, 1e-4);
  EXPECT_LE(r[0].relDelta, 1e-10);
}

TEST(Spectral3, CharacteristicForms) {
  const OperatorSpec3 s = OperatorSpec3::from_phi(0.7, 1.3);
  const cplx lam(1.1, -0.4);
  EXPECT_LE(std::abs(char_fn(s, lam) - char_fn_determinant(s, lam)), 1e-13);
  EXPECT_LE(std::abs(char_fn(s, 1e-5) - char_fn_at_zero(s)), 1e-8);
  EXPECT_THROW(char_fn(s, 0.0), DomainError);
  for (double x : {0.3, 2.0, 7.5}) {
    const double F = char_fn_real(s, x);
    EXPECT_NEAR(F, (1.5 * x * x * std::exp(-I * s.phi / 2.0) * char_fn(s, x)).real(),
                1e-12 * std::cosh(x * s.l));
    EXPECT_NEAR(char_fn_real_scaled(s, x), F / std::cosh(std::sqrt(3.0) / 2 * x * s.l), 1e-14);
  }
  EXPECT_THROW(char_fn_real(s, 1000.0), OverflowError);
}

TEST(Spectral3, EigenfunctionsSatisfyBoundaryConditions) {
  const OperatorSpec3 s = OperatorSpec3::from_phi(1.0, 1.5);
  for (const auto& r : eigen_zeros(s, 8)) {
    EXPECT_LE(std::abs(eigenfunction(s, r, 0.0)), 1e-12);
    EXPECT_LE(std::abs(eigenfunction(s, r, s.l)), 1e-12);
    EXPECT_LE(std::abs(eigenfunction(s, r, 0.0, 1) - s.theta * eigenfunction(s, r, s.l, 1)),
              1e-12 * std::fabs(r.mu));
    // L u = mu^3 u with the closed-form third derivative
    const cplx u = eigenfunction(s, r, 0.4), u3 = eigenfunction(s, r, 0.4, 3);
    EXPECT_LE(std::abs(I * u3 - r.eigenvalue * u), 1e-10 * std::fabs(r.eigenvalue));
  }
}

TEST(Spectral3, StableNumeratorMatchesDirect) {
  const OperatorSpec3 s = OperatorSpec3::from_phi(0.5, 1.0);
  const auto r = eigen_zeros(s, 2);
  const double sigma = std::exp(std::sqrt(3.0) / 2 * std::fabs(r[0].mu) * s.l);
  for (double x : {0.2, 0.5, 0.9})
    EXPECT_LE(std::abs(eigen_numerator_scaled(s, r[0].mu, x) * sigma - eigen_numerator_direct(s, r[0].mu, x)),
              1e-12 * sigma);
}

TEST(Spectral3, ThetaMinusOneEigenfunction) {
  EXPECT_EQ(theta_minus_one_eigenfunction(2.0, 1.0, 0.0), 0.0);
  EXPECT_EQ(theta_minus_one_eigenfunction(2.0, 1.0, 1.0), 0.0);
  EXPECT_EQ(theta_minus_one_eigenfunction(2.0, 1.0, 0.5), -0.5);
}

TEST(Spectral3, ResolventMatchesOracle) {
  // closed-form boundary value solution for f = 1 at 40 digits
  const OperatorSpec3 s = OperatorSpec3::from_phi(0.0, 1.0);
  const cplx lam(0.5, 0.3);
  const auto f = [](double) { return cplx(1); };
  const std::pair<double, cplx> pts[] = {
      {0.25, {-3.3723339433427228813e-7, -0.0078058380576061386395}},
      {0.5, {-6.5103789513628358897e-7, 0.000012890600277328031891}},
      {0.8, {-2.3312360496824893384e-7, 0.0080046311670780051188}},
  };
  for (const auto& [x, v] : pts) EXPECT_LE(std::abs(resolvent_apply(s, lam, f, x) - v), 1e-13) << x;
}

TEST(Spectral3, ResolventGuard) {
  const OperatorSpec3 s = OperatorSpec3::from_phi(0.0, 1.0);
  const auto f = [](double) { return cplx(1); };
  const auto recs = eigen_zeros(s, 6);
  for (const auto& r : recs) EXPECT_THROW(resolvent_apply(s, r.mu, f, 0.5), NearEigenvalueError) << r.n;
  try {
    resolvent_apply(s, recs[0].mu, f, 0.5);
  } catch (const NearEigenvalueError& e) {
    EXPECT_LE(e.absDelta, 1e-14);
  }
  EXPECT_THROW(resolvent_apply(s, 0.0, f, 0.5), DomainError);
  EXPECT_THROW(resolvent_apply(s, 0.5, f, 0.5, 3), DomainError);
}

TEST(Spectral3, KernelIdentity) {
  const auto r = kernel_identity_residual({0.3, 0.2}, {1.1, -0.5}, {-0.7, 0.9});
  EXPECT_LE(r.residual, 1e-14 * (1 + r.scale));
}
