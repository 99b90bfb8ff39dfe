#include "phyp/numutil.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>

#include "phyp/errors.hpp"

namespace phyp {

namespace {

// Legendre P_n and its derivative at x.
std::pair<long double, long double> legendre(int n, long double x) {
  long double p0 = 1, p1 = x;
  for (int j = 2; j <= n; ++j) {
    const long double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1)};
}

std::vector<std::pair<double, double>> compute_gauss_legendre(int n) {
  std::vector<std::pair<double, double>> rule(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    for (int it = 0; it < 100; ++it) {
      const auto [pn, dp] = legendre(n, x);
      const long double dx = pn / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    const long double dp = legendre(n, x).second;
    const double w = static_cast<double>(2 / ((1 - x * x) * dp * dp));
    rule[i] = {-static_cast<double>(x), w};
    rule[n - 1 - i] = {static_cast<double>(x), w};
  }
  if (n % 2 == 1) rule[n / 2].first = 0.0;
  return rule;
}

struct Panel {
  double a, b;
  cplx value;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel eval_panel(const CFunc& f, double a, double b,
                 const std::vector<std::pair<double, double>>& rule) {
  auto gl = [&](double lo, double hi, double& absSum) {
    const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    cplx s = 0;
    for (const auto& [x, w] : rule) {
      const cplx v = f(c + r * x);
      s += w * v;
      absSum += w * std::abs(v);
    }
    absSum *= r;
    return s * r;
  };
  double absCoarse = 0, absL = 0, absR = 0;
  const cplx coarse = gl(a, b, absCoarse);
  const double m = 0.5 * (a + b);
  const cplx fine = gl(a, m, absL) + gl(m, b, absR);
  const double eps = std::numeric_limits<double>::epsilon();
  const double err = std::abs(coarse - fine) + 50 * eps * (absL + absR);
  return {a, b, fine, err};
}

}  // namespace

const std::vector<std::pair<double, double>>& gauss_legendre_rule(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<std::pair<double, double>>>> cache;
  if (n < 2) throw DomainError("gauss_legendre_rule: need at least 2 nodes");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<std::vector<std::pair<double, double>>>(compute_gauss_legendre(n));
  return *slot;
}

QuadratureResult integrate(const CFunc& f, double a, double b, const QuadraturePolicy& policy) {
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (policy.nodesPerPanel < 2 || !(policy.targetAbsError > 0))
    throw DomainError("integrate: invalid quadrature policy");
  if (a == b) return {0.0, 0.0, 0, true};

  const auto& rule = gauss_legendre_rule(policy.nodesPerPanel);
  std::priority_queue<Panel> heap;
  double lo = a;
  for (double c : policy.breakpoints) {
    if (!(c > lo) || !(c < b)) continue;
    heap.push(eval_panel(f, lo, c, rule));
    lo = c;
  }
  heap.push(eval_panel(f, lo, b, rule));
  const int seeds = static_cast<int>(heap.size());
  cplx total = 0;
  double err = 0;
  {
    auto copy = heap;
    for (; !copy.empty(); copy.pop()) {
      total += copy.top().value;
      err += copy.top().err;
    }
  }
  int panels = seeds;

  auto done = [&] {
    return err <= policy.targetAbsError + policy.targetRelError * std::abs(total);
  };
  while (!done() && panels - seeds + 1 < policy.maxPanels) {
    Panel worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    Panel left = eval_panel(f, worst.a, m, rule);
    Panel right = eval_panel(f, m, worst.b, rule);
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++panels;
    // Re-sum now and then so cancellation in the running update cannot drift.
    if (panels % 64 == 0) {
      auto copy = heap;
      total = 0;
      err = 0;
      while (!copy.empty()) {
        total += copy.top().value;
        err += copy.top().err;
        copy.pop();
      }
    }
  }
  return {total, err, panels, done()};
}

cplx integrate_uniform(const CFunc& f, double a, double b, int panels, int nodesPerPanel) {
  if (panels < 1) throw DomainError("integrate_uniform: panels must be positive");
  const auto& rule = gauss_legendre_rule(nodesPerPanel);
  const double w = (b - a) / panels;
  cplx total = 0;
  for (int i = 0; i < panels; ++i) {
    const double c = a + (i + 0.5) * w, r = 0.5 * w;
    cplx s = 0;
    for (const auto& [x, wt] : rule) s += wt * f(c + r * x);
    total += s * r;
  }
  return total;
}

cplx integrate_checked(const CFunc& f, double a, double b, const QuadraturePolicy& policy) {
  if (a > b) return -integrate_checked(f, b, a, policy);
  const QuadratureResult r = integrate(f, a, b, policy);
  if (!r.converged)
    throw QuadratureError("quadrature did not converge within " + std::to_string(r.panels) +
                              " panels (error estimate " + format_g(r.errorEstimate) + ")",
                          r.errorEstimate);
  return r.value;
}

RootBracket RootBracket::make(const RFunc& f, double lo, double hi, double tol) {
  if (lo > hi) std::swap(lo, hi);
  const double flo = f(lo), fhi = f(hi);
  if (!(flo * fhi < 0)) throw BracketError("no sign change on bracket");
  if (!(tol > 0)) throw DomainError("bracket tolerance must be positive");
  return {lo, hi, tol};
}

RootResult find_root_signed(const RFunc& f, double lo, int signLo, double hi, double tol,
                            const RFunc& df, int maxNewton) {
  double a = lo, b = hi;
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if (fm == 0) {
      a = b = m;
      break;
    }
    if ((fm > 0) == (signLo > 0))
      a = m;
    else
      b = m;
  }
  double x = 0.5 * (a + b);
  double fx = f(x);
  const double lo0 = std::min(lo, hi), hi0 = std::max(lo, hi);
  int steps = 0;
  for (int it = 0; it < maxNewton && fx != 0; ++it) {
    double d;
    if (df) {
      d = df(x);
    } else {
      const double h = std::max(tol, 1e-8 * (1 + std::fabs(x)));
      d = (f(x + h) - f(x - h)) / (2 * h);
    }
    if (!(std::isfinite(d)) || d == 0) break;
    const double xn = x - fx / d;
    if (!(xn >= lo0 && xn <= hi0)) break;
    const double fn = f(xn);
    if (!(std::fabs(fn) < std::fabs(fx))) break;
    x = xn;
    fx = fn;
    ++steps;
  }
  return {x, fx, steps};
}

RootResult find_root(const RFunc& f, const RootBracket& br, const RFunc& df, int maxNewton) {
  const double flo = f(br.lo);
  if (flo == 0) return {br.lo, 0.0, 0};
  const double fhi = f(br.hi);
  if (fhi == 0) return {br.hi, 0.0, 0};
  if (!(flo * fhi < 0)) throw BracketError("find_root: bracket lost its sign change");
  return find_root_signed(f, br.lo, flo > 0 ? 1 : -1, br.hi, br.tol, df, maxNewton);
}

std::vector<double> fornberg_weights(int m, double x0, const std::vector<double>& nodes) {
  const int n = static_cast<int>(nodes.size()) - 1;
  if (n < m) throw DomainError("fornberg_weights: not enough nodes");
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, 0.0));
  double c1 = 1, c4 = nodes[0] - x0;
  c[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = c[i][m];
  return w;
}

double default_step(int order, double x) {
  return std::pow(10.0, -16.0 / (order + 6)) * (1 + std::fabs(x));
}

namespace {

std::vector<int> stencil_offsets(int order, Stencil s) {
  std::vector<int> off;
  if (s == Stencil::Central) {
    const int m = (order + 1) / 2 + 1;
    for (int j = -m; j <= m; ++j) off.push_back(j);
  } else {
    const int n = order + 4;
    for (int j = 0; j < n; ++j) off.push_back(s == Stencil::Forward ? j : -j);
  }
  return off;
}

cplx apply_stencil(const CFunc& y, int order, double x, double h, const std::vector<int>& off) {
  std::vector<double> nodes(off.begin(), off.end());
  const std::vector<double> w = fornberg_weights(order, 0.0, nodes);
  cplx acc = 0;
  for (std::size_t j = 0; j < off.size(); ++j)
    if (w[j] != 0) acc += w[j] * y(x + off[j] * h);
  return acc / std::pow(h, order);
}

}  // namespace

cplx derivative(const CFunc& y, int order, double x, double h, Stencil stencil, Domain dom) {
  if (order < 0) throw DomainError("derivative: negative order");
  if (order == 0) return y(x);
  if (h <= 0) h = default_step(order, x);
  const std::vector<int> off = stencil_offsets(order, stencil);
  const auto [mn, mx] = std::minmax_element(off.begin(), off.end());
  if (x + *mn * h < dom.lo || x + *mx * h > dom.hi)
    throw DomainError("derivative: stencil exits domain");
  const cplx d1 = apply_stencil(y, order, x, h, off);
  const cplx d2 = apply_stencil(y, order, x, h / 2, off);
  return d2 + (d2 - d1) / 15.0;
}

cplx apply_minus_iD_pow(int p, const CFunc& y, double x, double h, Domain dom) {
  if (p < 1) throw DomainError("apply_minus_iD_pow: p must be positive");
  return std::pow(cplx(0, -1), p) * derivative(y, p, x, h, Stencil::Central, dom);
}

CMat random_complex_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CMat g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = cplx(nd(rng), nd(rng)) / std::sqrt(2.0);
  return g;
}

CMat random_unitary(int k, Rng& rng) {
  const CMat g = random_complex_gaussian(k, k, rng);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < k; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

CMat random_hermitian(int k, Rng& rng) {
  const CMat g = random_complex_gaussian(k, k, rng);
  return (g + g.adjoint()) / 2.0;
}

cplx random_in_disk(double radius, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double a = 2 * std::numbers::pi * u(rng);
  return std::polar(r, a);
}

cplx random_unimodular(Rng& rng) {
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  return std::polar(1.0, u(rng));
}

NullSpace null_space(const CMat& a, double relTol) {
  const int n = static_cast<int>(a.cols());
  if (a.rows() == 0) return {CMat::Identity(n, n), 0};
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > relTol * smax) ++rank;
  return {svd.matrixV().rightCols(n - rank), rank};
}

double max_abs(const CMat& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

std::string format_g(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace phyp
