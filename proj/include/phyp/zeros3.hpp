#pragma once

#include <utility>
#include <vector>

#include "phyp/numutil.hpp"

namespace phyp {

struct ZeroTable {
  int k;
  std::vector<double> zeros;      // x_1 > x_2 > ... (all <= 0)
  std::vector<double> residuals;  // |g_k(x_j)|
  std::vector<bool> simple;       // g_k'(x_j) != 0
  std::vector<double> seeds;      // nearest asymptotic root of cos(x sqrt3/2 - 2 pi k/3)
  std::vector<double> seedDistance;
};

// g_k(x) = cos(x sqrt3/2 - 2 pi k/3) + exp(3x/2)/2; its real zeros are the
// zeros of s_k (p = 3) on the negative axis.
double zero_residual(int k, double x);
double zero_residual_derivative(int k, double x);

// The n-th asymptotic root (n = 0, 1, ...) on the closed negative axis,
// ordered by decreasing x.
double asymptotic_root(int k, int n);

ZeroTable find_zeros(int k, int count);

// Zeros on the ray zeta_m * (negative axis): s_k(zeta_m x) = zeta_m^k s_k(x).
std::vector<cplx> rotate_zero_table(const ZeroTable& t, int m);

// Defects of the real/imaginary split of g_k at z = x + iy. Both vanish
// exactly at zeros of s_k.
std::pair<double, double> zero_system_defect(int k, double x, double y);

// sqrt3 tanh(y sqrt3/2) - sin(3y/2), accurate down to tiny y.
double tanh_sin_margin(double y);

}  // namespace phyp
