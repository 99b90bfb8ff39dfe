#include "phyp/spectral3.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phyp/cyclo.hpp"
#include "phyp/errors.hpp"
#include "phyp/pfun.hpp"

namespace phyp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
const cplx I(0, 1);

// F(u) and dF/du divided by cosh(u sqrt3/2), u = lambda l.
struct ScaledF {
  double f;
  double df;
};

ScaledF scaled_real_form(double phi, double u) {
  const double b = u * kSqrt3 / 2;
  const double a = (u + phi) / 2;
  const double th = std::tanh(b);
  const double sech = std::fabs(b) > 700 ? 0.0 : 1 / std::cosh(b);
  double f;
  if (std::fabs(u) <= 1) {
    const cplx s2 = eval_s({3, 2, cplx(0, u)});
    f = 3 * std::real(std::polar(1.0, -phi / 2) * s2) * sech;
  } else {
    f = std::cos(u - phi / 2) * sech - std::cos(a) - kSqrt3 * std::sin(a) * th;
  }
  const double dfc = -std::sin(u - phi / 2) * sech - std::sin(a) - kSqrt3 * std::cos(a) * th;
  return {f, dfc - f * th * kSqrt3 / 2};
}

// Ascending positive zeros u_n = lambda_n l of F for angle phi, labelled by
// the bracket ((2n-1) pi - phi, (2n+1) pi - phi) containing them.
std::vector<std::pair<int, double>> scan_roots(double phi, int nMax) {
  const double step = kPi / 8;
  const double tol = 1e-13 * 2 * kPi;
  const double uMax = (2 * nMax + 5) * kPi;
  auto f = [phi](double u) { return scaled_real_form(phi, u).f; };
  auto df = [phi](double u) { return scaled_real_form(phi, u).df; };

  std::vector<std::pair<int, double>> roots;
  // F(u) ~ -(3/2) u^2 cos(phi/2) < 0 just right of 0.
  double uPrev = 0;
  int signPrev = -1;
  while (roots.empty() || roots.back().first < nMax) {
    const double u = uPrev + step;
    if (u > uMax) throw BracketError("eigen_zeros: scan ran past the expected bracket of n = " +
                                     std::to_string(nMax));
    const int sign = f(u) >= 0 ? 1 : -1;
    if (sign != signPrev) {
      const RootResult r = find_root_signed(f, uPrev, signPrev, u, tol, df);
      const double d = df(r.x);
      if (!(std::fabs(d) > 1e-8))
        throw SpuriousRootError("eigen_zeros: root at u = " + std::to_string(r.x) + " is not simple");
      const int label = static_cast<int>(std::floor((r.x + phi + kPi) / (2 * kPi)));
      if (!roots.empty()) {
        if (label != roots.back().first + 1)
          throw BracketError("eigen_zeros: missed or duplicated root near u = " + std::to_string(r.x));
        if (roots.back().first >= 1 && std::fabs(r.x - roots.back().second - 2 * kPi) > kPi)
          throw BracketError("eigen_zeros: root spacing deviates from 2 pi / l by more than 50%");
      } else if (label > 1) {
        throw BracketError("eigen_zeros: first root lies beyond the first bracket");
      }
      roots.push_back({label, r.x});
    }
    uPrev = u;
    signPrev = sign;
  }
  return roots;
}

double delta_scale(const OperatorSpec3& spec, double mu) {
  const cplx a = eval_s({3, 2, I * mu * spec.l}), b = eval_s({3, 2, -I * mu * spec.l});
  return (std::abs(a) + std::abs(b)) / (mu * mu);
}

void check_x(const OperatorSpec3& spec, double x) {
  if (!(x >= -1e-12 * spec.l && x <= spec.l * (1 + 1e-12)))
    throw DomainError("evaluation point outside [0, l]");
}

}  // namespace

OperatorSpec3 OperatorSpec3::from_phi(double phi, double l) {
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  double p = std::remainder(phi, 2 * kPi);
  if (p <= -kPi) p += 2 * kPi;
  OperatorSpec3 s{std::polar(1.0, p), p, l};
  s.validate();
  return s;
}

OperatorSpec3 OperatorSpec3::from_theta(cplx theta, double l) {
  if (std::fabs(std::abs(theta) - 1) > 1e-14) throw DomainError("theta must be unimodular");
  OperatorSpec3 s{theta, std::arg(theta), l};
  s.validate();
  return s;
}

void OperatorSpec3::validate() const {
  if (!(l > 0) || !std::isfinite(l)) throw DomainError("interval length l must be finite and positive");
  if (std::fabs(std::abs(theta) - 1) > 1e-14) throw DomainError("theta must be unimodular");
  if (std::abs(1.0 + theta) < kThetaMinusOneGuard)
    throw DomainError("theta = -1 excluded: lambda = 0 is then an eigenvalue");
}

OperatorSpec3 OperatorSpec3::conjugate() const { return {std::conj(theta), -phi, l}; }

cplx char_fn(const OperatorSpec3& spec, cplx lambda) {
  if (lambda == cplx(0)) throw DomainError("char_fn: lambda = 0; use char_fn_at_zero");
  const cplx z = I * lambda * spec.l;
  return (eval_s({3, 2, z}) + spec.theta * eval_s({3, 2, -z})) / (lambda * lambda);
}

cplx char_fn_determinant(const OperatorSpec3& spec, cplx lambda) {
  if (lambda == cplx(0)) throw DomainError("char_fn_determinant: lambda = 0");
  const auto s = eval_s_all(3, I * lambda * spec.l);
  return (spec.theta * s[1] * s[1] + s[2] * (1.0 - spec.theta * s[0])) / (lambda * lambda);
}

cplx char_fn_at_zero(const OperatorSpec3& spec) { return -spec.l * spec.l * (1.0 + spec.theta) / 2.0; }

double char_fn_real(const OperatorSpec3& spec, double lambda) {
  const double u = lambda * spec.l;
  const double b = u * kSqrt3 / 2;
  if (std::fabs(b) > kMaxExpArg) throw OverflowError("char_fn_real: lambda l sqrt3/2 beyond 700");
  if (std::fabs(u) <= 1) return 3 * std::real(std::polar(1.0, -spec.phi / 2) * eval_s({3, 2, cplx(0, u)}));
  const double a = (u + spec.phi) / 2;
  return std::cos(u - spec.phi / 2) - std::cos(a) * std::cosh(b) - kSqrt3 * std::sin(a) * std::sinh(b);
}

double char_fn_real_scaled(const OperatorSpec3& spec, double lambda) {
  return scaled_real_form(spec.phi, lambda * spec.l).f;
}

cplx eigen_numerator_scaled(const OperatorSpec3& spec, double mu, double x, int order) {
  if (mu == 0) throw DomainError("eigen numerator: mu must be nonzero");
  if (order < 0 || order > 3) throw DomainError("eigen numerator: derivative order must be 0..3");
  const RootSystem rs = roots_of_unity(3);
  const double l = spec.l;
  const double logSigma = kSqrt3 / 2 * std::fabs(mu) * l;
  cplx c[3];
  for (int m = 0; m < 3; ++m) c[m] = I * mu * rs.zeta[m];
  cplx acc = 0;
  for (int m = 0; m < 3; ++m) {
    cplx inner = std::exp(c[m] * x - logSigma);
    for (int j = 0; j < 3; ++j) {
      if (j == m) continue;
      inner += spec.theta / 3.0 * (rs.power(m - j) - 1.0) * std::exp(c[j] * l + c[m] * x - logSigma);
    }
    acc += rs.power(-2 * m) / 3.0 * std::pow(c[m], order) * inner;
  }
  return acc;
}

cplx eigen_numerator_direct(const OperatorSpec3& spec, cplx mu, double x) {
  const auto sl = eval_s_all(3, I * mu * spec.l);
  const auto sx = eval_s_all(3, I * mu * x);
  return spec.theta * sx[1] * sl[1] + sx[2] * (1.0 - spec.theta * sl[0]);
}

std::vector<EigenRecord> eigen_zeros(const OperatorSpec3& spec, int nMax) {
  spec.validate();
  if (nMax < 1) throw DomainError("eigen_zeros: nMax must be positive");
  std::vector<EigenRecord> out;
  for (Branch br : {Branch::Positive, Branch::Negative}) {
    const OperatorSpec3 scanSpec = br == Branch::Positive ? spec : spec.conjugate();
    for (const auto& [n, u] : scan_roots(scanSpec.phi, nMax)) {
      const double mu = (br == Branch::Positive ? u : -u) / spec.l;
      EigenRecord rec{br, n, mu, mu * mu * mu, 0, 0, 0, 0};
      rec.absDelta = std::abs(char_fn(spec, mu));
      rec.relDelta = rec.absDelta / delta_scale(spec, mu);
      if (!(rec.relDelta <= 1e-10))
        throw SpuriousRootError("eigen_zeros: root at mu = " + std::to_string(mu) +
                                " fails residual certification");
      QuadraturePolicy pol;
      pol.targetAbsError = 1e-14;
      pol.targetRelError = 1e-13;
      const QuadratureResult q = integrate(
          [&](double x) { return cplx(std::norm(eigen_numerator_scaled(spec, mu, x))); }, 0.0, spec.l, pol);
      rec.aScaled = std::sqrt(q.value.real());
      if (!(rec.aScaled > 1e-13))
        throw SpuriousRootError("eigen_zeros: eigenfunction numerator vanishes at mu = " + std::to_string(mu));
      rec.aNorm = rec.aScaled * std::exp(kSqrt3 / 2 * std::fabs(mu) * spec.l);
      out.push_back(rec);
    }
  }
  return out;
}

cplx eigenfunction(const OperatorSpec3& spec, const EigenRecord& rec, double x, int order) {
  check_x(spec, x);
  return eigen_numerator_scaled(spec, rec.mu, x, order) / rec.aScaled;
}

double theta_minus_one_eigenfunction(double c, double l, double x) { return c * (x * x - x * l); }

cplx resolvent_apply(const OperatorSpec3& spec, cplx lambda, const CFunc& f, double x, int order,
                     const QuadraturePolicy& quad) {
  spec.validate();
  check_x(spec, x);
  if (order < 0 || order > 2) throw DomainError("resolvent_apply: derivative order must be 0..2");
  if (lambda == cplx(0)) throw DomainError("resolvent_apply: lambda must be nonzero");
  const double l = spec.l;
  const cplx il = I * lambda;
  const cplx s2l = eval_s({3, 2, il * l}), s2ml = eval_s({3, 2, -il * l});
  const cplx delta = (s2l + spec.theta * s2ml) / (lambda * lambda);
  const double absDelta = std::abs(delta);
  const double rel = absDelta / ((std::abs(s2l) + std::abs(s2ml)) / std::norm(lambda));
  if (absDelta <= kNearEigenGuard * l * l || rel <= kNearEigenGuard)
    throw NearEigenvalueError("lambda^3 is too close to the spectrum: |Delta| = " + format_g(absDelta),
                              absDelta);

  const int k = 2 - order;
  auto K = [&](cplx z) { return eval_s({3, k, z}); };
  const cplx left = integrate_checked([&](double t) { return K(il * (x - t)) * f(t); }, 0.0, x, quad);
  const cplx right = integrate_checked([&](double t) { return K(il * (x - t)) * f(t); }, x, l, quad);
  const cplx g1 = integrate_checked([&](double t) { return eval_s({3, 2, -il * t}) * f(t); }, 0.0, l, quad);
  const cplx g2 =
      integrate_checked([&](double t) { return eval_s({3, 2, il * (l - t)}) * f(t); }, 0.0, l, quad);
  const cplx braces = left * s2l - spec.theta * s2ml * right + spec.theta * K(il * (x - l)) * g1 -
                      K(il * x) * g2;
  return I * std::pow(il, order) / (std::pow(lambda, 4) * delta) * braces;
}

IdentityValue kernel_identity_residual(cplx x, cplx l, cplx t) {
  const auto sx = eval_s_all(3, x), sl = eval_s_all(3, l), slt = eval_s_all(3, l - t);
  const cplx terms[6] = {sx[1] * slt[1] * sl[2],
                         -sx[1] * slt[2] * sl[1],
                         sx[2] * slt[2] * sl[0],
                         -sx[2] * slt[1] * sl[1],
                         -s3(2, -t) * s3(2, x - l),
                         s3(2, x - t) * s3(2, -l)};
  cplx sum = 0;
  double scale = 0;
  for (const cplx& v : terms) {
    sum += v;
    scale += std::abs(v);
  }
  return {std::abs(sum), scale};
}

}  // namespace phyp
