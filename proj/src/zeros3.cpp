#include "phyp/zeros3.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phyp/cyclo.hpp"
#include "phyp/errors.hpp"

namespace phyp {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;

void check_index(int k) {
  if (k < 0 || k > 2) throw DomainError("zero index k must be 0, 1 or 2");
}

double phase(int k, double x) { return x * kSqrt3 / 2 - 2 * kPi * k / 3; }

// Offset of the true zero from the asymptotic root x*, solved from
//   sin(d) = (-1)^n exp(3 x/2)/2,  x = x* + 2 d / sqrt3
// so that tiny offsets are obtained without cancellation.
double seed_offset(double seed, double phaseAtSeed) {
  const long n = std::lround(phaseAtSeed / kPi - 0.5);
  const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
  double d = 0;
  for (int it = 0; it < 60; ++it) {
    const double rhs = sgn * 0.5 * std::exp(1.5 * seed + kSqrt3 * d);
    if (std::fabs(rhs) >= 1) return NAN;
    const double dn = std::asin(rhs);
    if (dn == d) break;
    d = dn;
  }
  return 2 * d / kSqrt3;
}

}  // namespace

double zero_residual(int k, double x) {
  check_index(k);
  return std::cos(phase(k, x)) + 0.5 * std::exp(1.5 * x);
}

double zero_residual_derivative(int k, double x) {
  check_index(k);
  return -kSqrt3 / 2 * std::sin(phase(k, x)) + 0.75 * std::exp(1.5 * x);
}

double asymptotic_root(int k, int n) {
  check_index(k);
  if (n < 0) throw DomainError("asymptotic_root: n must be non-negative");
  // Roots are x = (2/sqrt3)(pi/2 + m pi + 2 pi k/3); take the m with x <= 0
  // in decreasing order.
  const double base = 2 * kPi * k / 3 + kPi / 2;
  const long mTop = static_cast<long>(std::floor(-base / kPi));
  return 2 / kSqrt3 * (base + (mTop - n) * kPi);
}

ZeroTable find_zeros(int k, int count) {
  check_index(k);
  if (count < 1) throw DomainError("find_zeros: count must be positive");
  ZeroTable t{k, {}, {}, {}, {}, {}};
  const double h = kPi / (2 * kSqrt3);
  const int maxSteps = 12;  // three asymptotic spacings
  auto g = [k](double x) { return zero_residual(k, x); };
  auto dg = [k](double x) { return zero_residual_derivative(k, x); };

  double x = 0.0;
  if (k != 0) {
    t.zeros.push_back(0.0);  // exact: cos(-2 pi k/3) = -1/2
    x = -h / 4;
  }
  double gx = g(x);
  int sinceLast = 0;
  while (static_cast<int>(t.zeros.size()) < count) {
    const double xn = x - h;
    const double gn = g(xn);
    ++sinceLast;
    double root = NAN;
    if (gn == 0) {
      root = xn;
    } else if ((gx > 0) != (gn > 0)) {
      root = find_root_signed(g, xn, gn > 0 ? 1 : -1, x, 1e-13, dg, 1).x;
    }
    if (!std::isnan(root)) {
      if (t.zeros.empty() || std::fabs(root - t.zeros.back()) > 1e-8) t.zeros.push_back(root);
      sinceLast = 0;
    } else if (sinceLast >= maxSteps) {
      throw BracketError("find_zeros: no sign change within three asymptotic spacings below x = " +
                         std::to_string(x));
    }
    x = xn;
    gx = gn;
  }

  const double spacing = 2 * kPi / kSqrt3;
  for (double z : t.zeros) {
    t.residuals.push_back(std::fabs(g(z)));
    t.simple.push_back(std::fabs(dg(z)) > 1e-8);
    // nearest asymptotic root
    const double base = 2 / kSqrt3 * (2 * kPi * k / 3 + kPi / 2);
    const double seed = base + std::round((z - base) / spacing) * spacing;
    t.seeds.push_back(seed);
    double dist = std::fabs(z - seed);
    if (0.5 * std::exp(1.5 * seed) < 0.05) {
      const double off = seed_offset(seed, phase(k, seed));
      if (std::isfinite(off)) dist = std::fabs(off);
    }
    t.seedDistance.push_back(dist);
  }
  return t;
}

std::vector<cplx> rotate_zero_table(const ZeroTable& t, int m) {
  const RootSystem rs = roots_of_unity(3);
  std::vector<cplx> out;
  out.reserve(t.zeros.size());
  for (double z : t.zeros) out.push_back(rs.power(m) * z);
  return out;
}

std::pair<double, double> zero_system_defect(int k, double x, double y) {
  check_index(k);
  const double a = phase(k, x), b = y * kSqrt3 / 2, e = 0.5 * std::exp(1.5 * x);
  return {std::cosh(b) * std::cos(a) + e * std::cos(1.5 * y),
          std::sinh(b) * std::sin(a) - e * std::sin(1.5 * y)};
}

double tanh_sin_margin(double y) {
  if (std::fabs(y) < 0.05) {
    // Linear terms cancel exactly; keep the series through y^7.
    const double a = y * kSqrt3 / 2, b = 1.5 * y;
    const double a3 = a * a * a, b3 = b * b * b;
    return kSqrt3 * (-a3 / 3 + 2 * a3 * a * a / 15 - 17 * a3 * a3 * a / 315) -
           (-b3 / 6 + b3 * b * b / 120 - b3 * b3 * b / 5040);
  }
  return kSqrt3 * std::tanh(y * kSqrt3 / 2) - std::sin(1.5 * y);
}

}  // namespace phyp
