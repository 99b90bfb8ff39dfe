#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "phyp/numutil.hpp"

namespace phyp {

// Default tolerances shared by the property suites; every check accepts
// overrides.
inline constexpr double kAbsTol = 1e-12;
inline constexpr double kRelTol = 1e-10;

struct RootSystem {
  int p;
  std::vector<cplx> zeta;  // zeta[m] = exp(2 pi i m / p)

  // zeta_{n mod p} for any integer n (negative allowed).
  cplx power(long n) const;
};

struct DftMatrix {
  int p;
  CMat U;  // U(j, m) = zeta_j^m / sqrt(p)
};

RootSystem roots_of_unity(int p);
DftMatrix dft_matrix(int p);

// Extended-precision root zeta_{n mod p}; used by the evaluators.
std::complex<long double> root_ld(int p, long n);

using ComplexFn = std::function<cplx(cplx)>;

// (1/p) sum_m zeta_m^{-k} f(zeta_m z).
cplx kp_component(const ComplexFn& f, int p, int k, cplx z);

}  // namespace phyp
