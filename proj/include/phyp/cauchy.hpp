#pragma once

#include <vector>

#include "phyp/numutil.hpp"

namespace phyp {

// (-iD)^p y = lambda^p y + f on (0, l), with y^(s)(0) = inits[s].
struct CauchyProblem {
  int p;
  cplx lambda;
  std::vector<cplx> inits;
  CFunc forcing;  // may be empty (no forcing)
  double l;

  void validate() const;
};

// sum_k inits[k] s_k(i lambda x) / (i lambda)^k. With lambda = 0 only y_0 may
// be nonzero (DomainError otherwise); use solve_polynomial there.
cplx solve_homogeneous(const CauchyProblem& prob, double x);

// Homogeneous part plus (i / lambda^{p-1}) int_0^x s_{p-1}(i lambda (x - t)) f(t) dt.
// Requires lambda != 0.
cplx solve_inhomogeneous(const CauchyProblem& prob, double x, const QuadraturePolicy& quad = {});

// lambda = 0: sum_k y_k x^k/k! + i^p int_0^x (x - t)^{p-1}/(p-1)! f(t) dt.
cplx solve_polynomial(const CauchyProblem& prob, double x, const QuadraturePolicy& quad = {});

}  // namespace phyp
