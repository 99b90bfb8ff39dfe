#include "phyp/cyclo.hpp"

#include <cmath>
#include <numbers>

#include "phyp/errors.hpp"

namespace phyp {

std::complex<long double> root_ld(int p, long n) {
  if (p < 1) throw DomainError("order p must be at least 1");
  long m = n % p;
  if (m < 0) m += p;
  // Exact values on the axes; otherwise reflect into the upper half so that
  // conj(zeta_m) == zeta_{p-m} holds bit for bit.
  if ((4 * m) % p == 0) {
    switch ((4 * m) / p) {
      case 0: return {1.0L, 0.0L};
      case 1: return {0.0L, 1.0L};
      case 2: return {-1.0L, 0.0L};
      default: return {0.0L, -1.0L};
    }
  }
  if (2 * m > p) return std::conj(root_ld(p, p - m));
  const long double a = 2 * std::numbers::pi_v<long double> * m / p;
  return {std::cos(a), std::sin(a)};
}

cplx RootSystem::power(long n) const {
  long m = n % p;
  if (m < 0) m += p;
  return zeta[m];
}

RootSystem roots_of_unity(int p) {
  if (p < 1) throw DomainError("roots_of_unity: p must be at least 1");
  RootSystem rs{p, std::vector<cplx>(p)};
  for (int m = 0; m < p; ++m) {
    const auto z = root_ld(p, m);
    rs.zeta[m] = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
  }
  return rs;
}

DftMatrix dft_matrix(int p) {
  const RootSystem rs = roots_of_unity(p);
  const double s = 1.0 / std::sqrt(static_cast<double>(p));
  DftMatrix d{p, CMat(p, p)};
  for (int j = 0; j < p; ++j)
    for (int m = 0; m < p; ++m) d.U(j, m) = rs.power(static_cast<long>(j) * m) * s;
  return d;
}

cplx kp_component(const ComplexFn& f, int p, int k, cplx z) {
  if (p < 1) throw DomainError("kp_component: p must be at least 1");
  if (k < 0 || k >= p) throw DomainError("kp_component: index k out of range");
  const RootSystem rs = roots_of_unity(p);
  cplx acc = 0;
  for (int m = 0; m < p; ++m) acc += rs.power(-static_cast<long>(k) * m) * f(rs.zeta[m] * z);
  return acc / static_cast<double>(p);
}

}  // namespace phyp
