#pragma once

#include <vector>

#include "phyp/numutil.hpp"

namespace phyp {

// L_theta = (-iD)^3 on (0, l) with y(0) = 0, y'(0) = theta y'(l), y(l) = 0.
struct OperatorSpec3 {
  cplx theta;
  double phi;  // arg theta in (-pi, pi]
  double l;

  static OperatorSpec3 from_phi(double phi, double l);
  static OperatorSpec3 from_theta(cplx theta, double l);
  void validate() const;
  // The same operator with conj(theta); its roots give the negative branch.
  OperatorSpec3 conjugate() const;
};

// |1 + theta| below this is treated as theta = -1.
inline constexpr double kThetaMinusOneGuard = 1e-8;

enum class Branch { Positive, Negative };

struct EigenRecord {
  Branch branch;
  int n;             // 1, 2, ... in order of |mu|; 0 only for a root below the first bracket
  double mu;         // real zero of the characteristic function
  double eigenvalue; // mu^3
  double aNorm;      // L2 norm of the unscaled numerator
  double aScaled;    // L2 norm of the numerator divided by exp(sqrt3/2 |mu| l)
  double absDelta;   // |Delta(mu)|
  double relDelta;   // |Delta(mu)| / ((|s_2(i mu l)| + |s_2(-i mu l)|) / mu^2)
};

// (1/lambda^2)[s_2(i lambda l) + theta s_2(-i lambda l)]
cplx char_fn(const OperatorSpec3& spec, cplx lambda);
// Determinant form (1/lambda^2)[theta s_1^2 + s_2 (1 - theta s_0)] at i lambda l.
cplx char_fn_determinant(const OperatorSpec3& spec, cplx lambda);
// -l^2 (1 + theta) / 2
cplx char_fn_at_zero(const OperatorSpec3& spec);

// Real form F(lambda) whose real zeros are those of char_fn on the real line:
//   F = cos(u - phi/2) - cos((u+phi)/2) cosh(u sqrt3/2) - sqrt3 sin((u+phi)/2) sinh(u sqrt3/2)
// with u = lambda l. Throws OverflowError past the exp range.
double char_fn_real(const OperatorSpec3& spec, double lambda);
// F / cosh(u sqrt3/2), overflow free; used by the root scan.
double char_fn_real_scaled(const OperatorSpec3& spec, double lambda);

// Positive-branch roots n = 1..nMax, then negative-branch roots -lambda_n(-phi).
std::vector<EigenRecord> eigen_zeros(const OperatorSpec3& spec, int nMax);

// Stable evaluation of theta s_1(i mu x) s_1(i mu l) + s_2(i mu x)(1 - theta s_0(i mu l))
// divided by sigma = exp(sqrt3/2 |mu| l), expanded over the exponentials
// exp(i mu zeta_m x) so that no growing exponential is ever cancelled. The
// derivative of the given order (0..3) is returned.
cplx eigen_numerator_scaled(const OperatorSpec3& spec, double mu, double x, int order = 0);
// The same numerator by direct s_k evaluation (unscaled, complex mu allowed).
cplx eigen_numerator_direct(const OperatorSpec3& spec, cplx mu, double x);

// Normalized eigenfunction u(mu, x) and its derivatives (order 0..3).
cplx eigenfunction(const OperatorSpec3& spec, const EigenRecord& rec, double x, int order = 0);

// theta = -1: lambda = 0 is an eigenvalue with eigenfunction C (x^2 - x l).
double theta_minus_one_eigenfunction(double c, double l, double x);

// Resolvent (L_theta - lambda^3)^{-1} f at x, or its derivative of order 0..2
// (the kernels are differentiated in closed form).
cplx resolvent_apply(const OperatorSpec3& spec, cplx lambda, const CFunc& f, double x,
                     int order = 0, const QuadraturePolicy& quad = {});

// Guard on |Delta(lambda)| used by resolvent_apply.
inline constexpr double kNearEigenGuard = 1e-8;

struct IdentityValue {
  double residual;
  double scale;
};

// Kernel identity at p = 3:
//   s1(x)s1(l-t)s2(l) - s1(x)s2(l-t)s1(l) + s2(x)s2(l-t)s0(l) - s2(x)s1(l-t)s1(l)
//     = s2(-t)s2(x-l) - s2(x-t)s2(-l)
IdentityValue kernel_identity_residual(cplx x, cplx l, cplx t);

}  // namespace phyp
