#include "phyp/cauchy.hpp"

#include <cmath>

#include "phyp/errors.hpp"
#include "phyp/pfun.hpp"

namespace phyp {

namespace {

double factorial(int n) {
  double f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

void check_point(const CauchyProblem& prob, double x) {
  const double slack = 1e-12 * prob.l;
  if (!(x >= -slack && x <= prob.l + slack))
    throw DomainError("evaluation point outside [0, l]");
}

}  // namespace

void CauchyProblem::validate() const {
  if (p < 1) throw DomainError("Cauchy problem: order p must be at least 1");
  if (static_cast<int>(inits.size()) != p)
    throw DomainError("Cauchy problem: need exactly p initial values");
  if (!(l > 0) || !std::isfinite(l)) throw DomainError("Cauchy problem: l must be finite and positive");
}

cplx solve_homogeneous(const CauchyProblem& prob, double x) {
  prob.validate();
  check_point(prob, x);
  if (prob.lambda == cplx(0)) {
    for (int k = 1; k < prob.p; ++k)
      if (prob.inits[k] != cplx(0))
        throw DomainError("lambda = 0 with nonzero higher initial data; use the polynomial solution");
    return prob.inits[0];
  }
  const cplx il = cplx(0, 1) * prob.lambda;
  const auto s = eval_s_all(prob.p, il * x);
  cplx y = 0;
  cplx scale = 1;
  for (int k = 0; k < prob.p; ++k) {
    if (prob.inits[k] != cplx(0)) y += prob.inits[k] * s[k] / scale;
    scale *= il;
  }
  return y;
}

cplx solve_inhomogeneous(const CauchyProblem& prob, double x, const QuadraturePolicy& quad) {
  if (prob.lambda == cplx(0)) throw DomainError("solve_inhomogeneous: lambda must be nonzero");
  cplx y = solve_homogeneous(prob, x);
  if (!prob.forcing || x <= 0) return y;
  const int p = prob.p;
  const CFunc& f = prob.forcing;
  const cplx il = cplx(0, 1) * prob.lambda;
  const cplx integral = integrate_checked(
      [&](double t) { return eval_s({p, p - 1, il * (x - t)}) * f(t); }, 0.0, x, quad);
  return y + cplx(0, 1) / std::pow(prob.lambda, p - 1) * integral;
}

cplx solve_polynomial(const CauchyProblem& prob, double x, const QuadraturePolicy& quad) {
  prob.validate();
  check_point(prob, x);
  cplx y = 0;
  for (int k = 0; k < prob.p; ++k) y += prob.inits[k] * std::pow(x, k) / factorial(k);
  if (!prob.forcing || x <= 0) return y;
  const int p = prob.p;
  const double c = factorial(p - 1);
  const CFunc& f = prob.forcing;
  return y + std::pow(cplx(0, 1), p) *
                 integrate_checked([&](double t) { return std::pow(x - t, p - 1) / c * f(t); }, 0.0, x,
                                   quad);
}

}  // namespace phyp
