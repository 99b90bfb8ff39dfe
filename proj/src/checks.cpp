#include "phyp/checks.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include "phyp/cauchy.hpp"
#include "phyp/cyclo.hpp"
#include "phyp/errors.hpp"
#include "phyp/pfun.hpp"
#include "phyp/sabc.hpp"
#include "phyp/spectral3.hpp"
#include "phyp/zeros3.hpp"

namespace phyp {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0, 1);

struct Batch {
  std::string name;
  double threshold;
  int n = 0;
  double mx = 0;

  void add(double r) {
    ++n;
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    mx = std::max(mx, r);
  }
  CheckRow row() const { return {name, n, mx, threshold, mx <= threshold}; }
};

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

int uniform_int(Rng& rng, int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }

// ---------------------------------------------------------------------------

std::vector<CheckRow> cyclo_suite(Rng& rng) {
  std::vector<CheckRow> rows;
  const double ulp4 = 4 * std::numeric_limits<double>::epsilon();
  Batch prod{"roots_product_rule", ulp4}, conj{"roots_conjugation_rule", ulp4},
      sums{"roots_power_sums_over_p", 1e-14}, unit{"dft_unitarity_over_p2", 1e-13};
  for (int p = 1; p <= 16; ++p) {
    const RootSystem rs = roots_of_unity(p);
    for (int j = 0; j < p; ++j) {
      conj.add(std::abs(std::conj(rs.zeta[j]) - rs.power(p - j)));
      for (int m = 0; m < p; ++m) prod.add(std::abs(rs.zeta[j] * rs.zeta[m] - rs.power(j + m)));
    }
    for (int n = 0; n <= 2 * p; ++n) {
      cplx s = 0;
      for (int m = 0; m < p; ++m) s += std::pow(rs.zeta[m], n);
      sums.add(std::abs(s - (n % p == 0 ? double(p) : 0.0)) / p);
    }
    if (p >= 2) {
      const DftMatrix d = dft_matrix(p);
      unit.add(max_abs(d.U * d.U.adjoint() - CMat::Identity(p, p)) / (p * p));
    }
  }

  Batch recon{"kp_reconstruction", 1e-12}, even{"kp_evenness", 1e-12}, shift{"kp_derivative_shift", 1e-8};
  for (int trial = 0; trial < 200; ++trial) {
    const int p = uniform_int(rng, 2, 7);
    const int deg = uniform_int(rng, 0, 8);
    std::vector<cplx> a(deg + 1);
    for (auto& c : a) c = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    auto f = [a](cplx z) {
      cplx v = 0;
      for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * z + *it;
      return v;
    };
    const cplx z = random_in_disk(3.0, rng);
    double mag = 0;
    for (std::size_t n = 0; n < a.size(); ++n) mag += std::abs(a[n]) * std::pow(std::abs(z), n);
    cplx total = 0;
    for (int k = 0; k < p; ++k) total += kp_component(f, p, k, z);
    recon.add(std::abs(total - f(z)) / (1 + std::abs(f(z))));
    const RootSystem rs = roots_of_unity(p);
    const int k = uniform_int(rng, 0, p - 1);
    const cplx base = kp_component(f, p, k, z);
    for (int j = 0; j < p; ++j)
      even.add(std::abs(kp_component(f, p, k, rs.zeta[j] * z) - rs.power(static_cast<long>(j) * k) * base) /
               (1 + mag));
    // the derivative of the k component is the (k-1) component of f'
    std::vector<cplx> da(a.size() > 1 ? a.size() - 1 : 1, cplx(0));
    for (std::size_t n = 1; n < a.size(); ++n) da[n - 1] = double(n) * a[n];
    auto fd = [da](cplx w) {
      cplx v = 0;
      for (auto it = da.rbegin(); it != da.rend(); ++it) v = v * w + *it;
      return v;
    };
    const double h = 1e-5;
    const cplx lhs = (kp_component(f, p, k, z + h) - kp_component(f, p, k, z - h)) / (2 * h);
    const cplx rhs = kp_component(fd, p, (k + p - 1) % p, z);
    shift.add(std::abs(lhs - rhs) / (1 + mag));
  }
  for (const Batch* b : {&prod, &conj, &sums, &unit, &recon, &even, &shift}) rows.push_back(b->row());
  return rows;
}

// ---------------------------------------------------------------------------

std::vector<CheckRow> pfun_suite(Rng& rng) {
  std::vector<CheckRow> rows;
  Batch red{"p2_reduction_over_exp_re", 1e-12}, exps{"sum_equals_exp", 1e-12},
      rot{"rotation_covariance", 1e-12}, cyc{"derivative_cycle", 1e-7}, real{"reality_on_real_axis", 1e-14},
      det{"w_determinant", 1e-9}, group{"w_group_law", 1e-11}, spec{"w_spectral_form", 1e-11},
      regime{"regime_agreement", 1e-11}, wr{"wronskian_constancy", 1e-9}, euler{"euler_reconstruct", 1e-11};
  for (int t = 0; t < 1000; ++t) {
    const cplx z = random_in_disk(5.0, rng);
    const double g = std::exp(std::fabs(z.real()));
    red.add(std::abs(s_fn(2, 0, z) - std::cosh(z)) / g);
    red.add(std::abs(s_fn(2, 1, z) - std::sinh(z)) / g);
  }
  for (int t = 0; t < 200; ++t) {
    const int p = uniform_int(rng, 2, 7);
    const cplx z = random_in_disk(3.0, rng);
    const auto s = eval_s_all(p, z);
    cplx sum = 0;
    for (const cplx& v : s) sum += v;
    exps.add(std::abs(sum - std::exp(z)) / std::abs(std::exp(z)));
    const RootSystem rs = roots_of_unity(p);
    for (int k = 0; k < p; ++k) {
      const int m = uniform_int(rng, 0, p - 1);
      rot.add(std::abs(s_fn(p, k, rs.zeta[m] * z) - rs.power(static_cast<long>(m) * k) * s[k]) /
              std::max(1.0, std::abs(s[k])));
      const double h = 1e-5;
      const cplx d = (s_fn(p, k, z + h) - s_fn(p, k, z - h)) / (2 * h);
      cyc.add(std::abs(d - s[(k + p - 1) % p]) / std::max(1.0, std::abs(s[k])));
      euler.add(std::abs(euler_reconstruct(p, k, z) - std::exp(z * rs.zeta[k])) / std::abs(std::exp(z * rs.zeta[k])));
    }
    const double x = uniform(rng, -8, 8);
    for (int k = 0; k < p; ++k) real.add(std::fabs(s_fn(p, k, x).imag()) / std::exp(std::fabs(x)));
    det.add(std::abs(w_matrix(p, z).entries.determinant() - 1.0));
    const cplx z2 = random_in_disk(3.0, rng);
    const CMat w1 = w_matrix(p, z).entries, w2 = w_matrix(p, z2).entries;
    group.add(max_abs(w_matrix(p, z + z2).entries - w1 * w2) / std::max(1.0, max_abs(w1) * max_abs(w2) * p));
    spec.add(max_abs(w1 - w_matrix_spectral(p, z)));
    const cplx zb = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, -kPi, kPi));
    for (int k = 0; k < p; ++k) {
      const cplx a = eval_s({p, k, zb}, {Regime::Taylor}), b = eval_s({p, k, zb}, {Regime::Exponential});
      regime.add(std::abs(a - b) / std::abs(a));
    }
    const CMat y = random_complex_gaussian(p, p, rng);
    const cplx dy = y.determinant();
    for (int i = 0; i < 5; ++i) {
      const double xs = uniform(rng, -3, 3);
      wr.add(std::abs((w_matrix(p, xs).entries * y).determinant() - dy) / std::max(1.0, std::abs(dy)));
    }
  }
  for (const Batch* b : {&red, &exps, &rot, &cyc, &real, &det, &group, &spec, &regime, &wr, &euler})
    rows.push_back(b->row());

  std::map<std::string, Batch> ids;
  std::vector<std::string> order;
  for (int t = 0; t < 100; ++t) {
    const cplx z = random_in_disk(2.0, rng), w = random_in_disk(2.0, rng);
    for (const auto& r : identity_residuals_p3(z, w)) {
      if (r.diagnostic) continue;
      auto [it, fresh] = ids.try_emplace(r.name, Batch{"identity_" + r.name + "_over_1+scale", 1e-10});
      if (fresh) order.push_back(r.name);
      it->second.add(r.residual / (1 + r.scale));
    }
  }
  for (const auto& name : order) rows.push_back(ids.at(name).row());
  return rows;
}

// ---------------------------------------------------------------------------

std::vector<CheckRow> zeros_suite(Rng& rng) {
  std::vector<CheckRow> rows;
  Batch res{"zero_residual", 1e-11}, origin{"origin_hits", 1e-14}, sval{"s_k_vanishes_over_exp_half", 1e-11},
      inter{"interlacing_violations", 0}, mono{"seed_distance_not_decreasing", 0},
      sys{"real_system_defect", 1e-11};
  std::vector<ZeroTable> tabs;
  for (int k = 0; k < 3; ++k) tabs.push_back(find_zeros(k, 20));
  for (const auto& t : tabs) {
    for (std::size_t j = 0; j < t.zeros.size(); ++j) {
      const double x = t.zeros[j];
      res.add(t.residuals[j]);
      if (x == 0) origin.add(t.residuals[j]);
      sval.add(std::abs(s3(t.k, x)) / std::exp(std::fabs(x) / 2));
      const auto [e1, e2] = zero_system_defect(t.k, x, 0.0);
      sys.add(std::max(std::fabs(e1), std::fabs(e2)));
      if (j >= 3) mono.add(t.seedDistance[j] < t.seedDistance[j - 1] ? 0 : 1);
    }
  }
  // Between consecutive zeros of s_0 there is exactly one zero of s_1 and one of s_2.
  for (std::size_t j = 0; j + 1 < tabs[0].zeros.size(); ++j) {
    const double hi = tabs[0].zeros[j], lo = tabs[0].zeros[j + 1];
    for (int k = 1; k <= 2; ++k) {
      int cnt = 0;
      if (lo < tabs[k].zeros.back()) continue;
      for (double x : tabs[k].zeros) cnt += (x < hi && x > lo);
      inter.add(cnt == 1 ? 0 : 1);
    }
  }
  // Off the three negative rays s_k does not vanish.
  Batch off{"off_ray_minimum_0.01_over_abs_s", 1.0};
  const RootSystem rs = roots_of_unity(3);
  for (int t = 0; t < 10000; ++t) {
    const cplx z = std::polar(uniform(rng, 0.3, 6.0), uniform(rng, -kPi, kPi));
    double dist = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 3; ++m) {
      const cplx dir = -rs.zeta[m];
      const double along = std::max(0.0, std::real(z * std::conj(dir)));
      dist = std::min(dist, std::abs(z - along * dir));
    }
    if (dist < 0.2) continue;
    for (int k = 0; k < 3; ++k) off.add(0.01 / std::abs(s3(k, z)));
  }
  Batch lem{"tanh_sin_margin_nonpositive", 0}, decay{"tanh_sin_margin_cubic_decay", 1e-2};
  for (int i = 0; i < 2000; ++i) {
    const double y = 50.0 * (i + 1) / 2000.0 * uniform(rng, 0.999, 1.0);
    lem.add(tanh_sin_margin(y) > 0 ? 0 : 1);
  }
  for (double y = 1e-4; y <= 1e-2; y *= 1.5) decay.add(std::fabs(tanh_sin_margin(y) / (3 * y * y * y / 16) - 1));
  for (const Batch* b : {&res, &origin, &sval, &inter, &mono, &sys, &off, &lem, &decay}) rows.push_back(b->row());
  return rows;
}

// ---------------------------------------------------------------------------

CFunc random_smooth(Rng& rng) {
  const cplx a0(uniform(rng, -1, 1), uniform(rng, -1, 1)), a1(uniform(rng, -1, 1), uniform(rng, -1, 1)),
      a2(uniform(rng, -1, 1), uniform(rng, -1, 1));
  const double w = uniform(rng, 0.5, 4), ph = uniform(rng, 0, 2 * kPi);
  return [=](double t) { return a0 + a1 * t + a2 * std::cos(w * t + ph); };
}

std::vector<CheckRow> cauchy_suite(Rng& rng) {
  Batch init{"initial_data_defect", 1e-6}, ode{"ode_residual_relative", 1e-5}, lin{"linearity", 1e-12},
      quad{"quadrature_refinement_over_estimate", 1.0}, poly{"lambda_zero_ode_residual", 1e-5},
      hom{"homogeneous_ode_residual", 1e-5};
  for (int t = 0; t < 12; ++t) {
    const int p = uniform_int(rng, 2, 4);
    const double l = uniform(rng, 0.5, 2.0);
    CauchyProblem prob{p, random_in_disk(2.0, rng), {}, random_smooth(rng), l};
    for (int k = 0; k < p; ++k) prob.inits.push_back(cplx(uniform(rng, -1, 1), uniform(rng, -1, 1)));
    const QuadraturePolicy tight{16, 1e-14, 1e-14, 4096};
    auto y = [&](double x) { return solve_inhomogeneous(prob, x, tight); };
    const Domain dom{0.0, l};
    for (int s = 0; s < p; ++s) {
      const cplx d = derivative(y, s, 0.0, 0.0, Stencil::Forward, dom);
      init.add(std::abs(d - prob.inits[s]) / std::max(1.0, std::abs(prob.inits[s])));
    }
    const cplx lp = std::pow(prob.lambda, p);
    for (double frac : {0.3, 0.5, 0.7}) {
      const double x = frac * l;
      const cplx Ly = apply_minus_iD_pow(p, y, x, 0.0, dom);
      const cplx yx = y(x), fx = prob.forcing(x);
      ode.add(std::abs(Ly - lp * yx - fx) / std::max({1.0, std::abs(lp * yx), std::abs(fx)}));
    }
    CauchyProblem free = prob;
    free.forcing = nullptr;
    auto yh = [&](double x) { return solve_homogeneous(free, x); };
    const double xm = 0.5 * l;
    hom.add(std::abs(apply_minus_iD_pow(p, yh, xm, 0.0, dom) - lp * yh(xm)) / std::max(1.0, std::abs(lp * yh(xm))));
    // superposition of (inits, f) and (inits2, g)
    CauchyProblem second{p, prob.lambda, {}, random_smooth(rng), l};
    for (int k = 0; k < p; ++k) second.inits.push_back(cplx(uniform(rng, -1, 1), uniform(rng, -1, 1)));
    CauchyProblem both{p, prob.lambda, {}, nullptr, l};
    for (int k = 0; k < p; ++k) both.inits.push_back(prob.inits[k] + second.inits[k]);
    const CFunc f1 = prob.forcing, f2 = second.forcing;
    both.forcing = [f1, f2](double s) { return f1(s) + f2(s); };
    const cplx a = solve_inhomogeneous(prob, xm), b = solve_inhomogeneous(second, xm),
               c = solve_inhomogeneous(both, xm);
    lin.add(std::abs(c - a - b) / std::max(1.0, std::abs(c)));
    // a finer uniform rule moves the value by less than the estimate
    auto integrand = [&](double s) { return eval_s({p, p - 1, I * prob.lambda * (xm - s)}) * prob.forcing(s); };
    const QuadratureResult q = integrate(integrand, 0.0, xm);
    const cplx refined = integrate_uniform(integrand, 0.0, xm, 4 * q.panels);
    quad.add(std::abs(refined - q.value) / std::max(q.errorEstimate, 1e-300));
    // lambda = 0 polynomial solution
    CauchyProblem zero = prob;
    zero.lambda = 0;
    auto yz = [&](double x) { return solve_polynomial(zero, x, tight); };
    poly.add(std::abs(apply_minus_iD_pow(p, yz, xm, 0.0, dom) - zero.forcing(xm)) /
             std::max(1.0, std::abs(zero.forcing(xm))));
  }
  std::vector<CheckRow> rows;
  for (const Batch* b : {&init, &ode, &hom, &lin, &quad, &poly}) rows.push_back(b->row());
  return rows;
}

// ---------------------------------------------------------------------------

std::vector<CheckRow> sabc_suite(Rng& rng) {
  Batch jalg{"j_algebra", 0}, basis{"j_eigenbasis", 1e-13}, split{"quadratic_form_split", 1e-12},
      annul{"annulment", 1e-12}, herm{"cayley_hermitian_over_k2", 1e-12}, trip{"cayley_round_trip", 1e-10},
      direct{"cayley_direct_agreement", 1e-10};
  for (int p = 1; p <= 8; ++p) {
    const CMat j = concomitant_matrix(p);
    const double sg = (p % 2 == 1) ? 1.0 : -1.0;
    jalg.add(max_abs(j.adjoint() - sg * j));
    jalg.add(max_abs(j * j - sg * CMat::Identity(p, p)));
    const CVec y = random_complex_gaussian(p, 1, rng).col(0), z = random_complex_gaussian(p, 1, rng).col(0);
    jalg.add(std::abs(concomitant(p, y, z) - z.dot(j * y)) > 1e-13 ? 1 : 0);
    if (p < 2) continue;
    const auto b = jp_eigenbasis(p);
    CMat e(p, static_cast<long>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i) {
      e.col(i) = b[i].v;
      basis.add((j * b[i].v - b[i].eigenvalue * b[i].v).norm());
    }
    basis.add(max_abs(e.adjoint() * e - CMat::Identity(p, p)));
    const CVec h = random_complex_gaussian(p, 1, rng).col(0);
    cplx expect = 0;
    for (const auto& v : b) expect += v.eigenvalue * std::norm(v.v.dot(h));
    split.add(std::abs(h.dot(j * h) - expect) / h.squaredNorm());
    if (p % 2 == 0) {
      const int k = p / 2;
      const CMat v = random_unitary(k, rng);
      const CVec a = random_complex_gaussian(k, 1, rng).col(0), va = v * a;
      CVec hv = CVec::Zero(p);
      for (int s = 0; s < k; ++s) hv += a(s) * b[s].v + va(s) * b[k + s].v;
      annul.add(std::abs(hv.dot(j * hv)) / hv.squaredNorm());
    }
  }
  for (int k = 1; k <= 4; ++k) {
    for (int t = 0; t < 10; ++t) {
      const CMat v = random_unitary(k, rng);
      const CMat b = cayley_b(v);
      herm.add(max_abs(b - b.adjoint()) / (k * k));
      trip.add(max_abs(cayley_v(b) - v));
      direct.add(max_abs(cayley_b_direct(v) - b) / std::max(1.0, max_abs(b)));
    }
  }
  std::vector<CheckRow> rows;
  for (const Batch* b : {&jalg, &basis, &split, &annul, &herm, &trip, &direct}) rows.push_back(b->row());

  const char* names[4] = {"even_separated", "even_unseparated", "odd_separated", "odd_unseparated"};
  for (int fam = 0; fam < 4; ++fam) {
    Batch w{std::string("witness_") + names[fam], 1e-9};
    for (int p = 2; p <= 5; ++p) {
      const bool odd = p % 2 == 1;
      if (odd != (fam >= 2)) continue;
      const BcKind kind = (fam % 2 == 0) ? BcKind::Separated : BcKind::Unseparated;
      for (int t = 0; t < 5; ++t) {
        const BoundarySpec s = odd ? BoundarySpec(random_odd_spec(p / 2, kind, rng))
                                   : BoundarySpec(random_even_spec(p / 2, kind, rng));
        w.add(selfadjointness_check(s, uniform(rng, 0.5, 2.0), 4, rng()).maxScaledDefect);
      }
    }
    rows.push_back(w.row());
  }
  return rows;
}

// ---------------------------------------------------------------------------

std::vector<CheckRow> spectral_suite(Rng& rng) {
  Batch sym1{"char_symmetry_conjugate", 1e-11}, sym2{"char_symmetry_reflection", 1e-11},
      sym3{"char_symmetry_rotation", 1e-11}, forms{"char_forms_agree", 1e-11}, lim{"char_limit_at_zero", 1e-6},
      realf{"real_form_consistency", 1e-11};
  const RootSystem rs = roots_of_unity(3);
  for (int t = 0; t < 200; ++t) {
    const OperatorSpec3 s = OperatorSpec3::from_phi(uniform(rng, -3.0, 3.0), uniform(rng, 0.5, 2.0));
    const cplx lam = random_in_disk(4.0, rng);
    if (std::abs(lam) < 1e-3) continue;
    const cplx d = char_fn(s, lam);
    const double scale = (std::abs(s3(2, I * lam * s.l)) + std::abs(s3(2, -I * lam * s.l))) / std::norm(lam);
    sym1.add(std::abs(std::conj(d) - std::conj(s.theta) * char_fn(s, std::conj(lam))) / scale);
    sym2.add(std::abs(char_fn(s, -lam) - s.theta * char_fn(s.conjugate(), lam)) / scale);
    for (int j = 1; j < 3; ++j) sym3.add(std::abs(char_fn(s, lam * rs.zeta[j]) - d) / scale);
    forms.add(std::abs(char_fn_determinant(s, lam) - d) / scale);
    const double x = uniform(rng, -8.0, 8.0);
    if (std::fabs(x) > 1e-3) {
      const cplx dx = char_fn(s, x);
      const double sx = (std::abs(s3(2, I * x * s.l)) + std::abs(s3(2, -I * x * s.l))) / (x * x);
      const cplx viaDelta = 1.5 * x * x * std::polar(1.0, -s.phi / 2) * dx;
      realf.add(std::abs(viaDelta - char_fn_real(s, x)) / (1.5 * x * x * sx));
    }
  }
  for (int t = 0; t < 10; ++t) {
    const OperatorSpec3 s = OperatorSpec3::from_phi(uniform(rng, -3.0, 3.0), uniform(rng, 0.5, 2.0));
    lim.add(std::abs(char_fn(s, 1e-4) - char_fn_at_zero(s)) / std::abs(char_fn_at_zero(s)));
  }

  const OperatorSpec3 s = OperatorSpec3::from_phi(0.0, 1.0);
  const auto recs = eigen_zeros(s, 15);
  Batch rel{"eigen_relative_residual", 1e-10}, absd{"eigen_abs_residual_n_le_3", 1e-10},
      excl{"denominator_exclusion_1e-6_over_min", 1.0}, spacing{"spacing_deviation_at_n15", 0.02},
      scale{"scale_law_l2", 1e-10}, bc{"eigenfunction_boundary_defects", 1e-9}, gram{"gram_defect", 1e-7},
      rot{"zeta_rotation_degeneracy", 1e-8}, reality{"eigenvalue_reality", 1e-10};
  const auto recs2 = eigen_zeros(OperatorSpec3::from_phi(0.0, 2.0), 15);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    rel.add(r.relDelta);
    if (r.n <= 3) absd.add(r.absDelta);
    excl.add(1e-6 / std::abs(1.0 - s.theta * s3(0, I * r.mu * s.l)));
    scale.add(std::fabs(recs2[i].mu * 2 - r.mu) / std::fabs(r.mu));
    if (r.n == 15) {
      const double gap = r.mu - recs[i - 1].mu;
      spacing.add(std::fabs(std::fabs(gap) - 2 * kPi) / (2 * kPi));
    }
  }
  std::vector<EigenRecord> first;
  for (const auto& r : recs)
    if (r.branch == Branch::Positive && r.n <= 5) first.push_back(r);
  for (const auto& r : recs)
    if (r.branch == Branch::Negative && r.n <= 5) first.push_back(r);
  for (const auto& r : first) {
    bc.add(std::abs(eigenfunction(s, r, 0.0)));
    bc.add(std::abs(eigenfunction(s, r, s.l)));
    bc.add(std::abs(eigenfunction(s, r, 0.0, 1) - s.theta * eigenfunction(s, r, s.l, 1)) / std::fabs(r.mu));
    const cplx q = integrate_checked(
        [&](double x) { return I * eigenfunction(s, r, x, 3) * std::conj(eigenfunction(s, r, x)); }, 0.0, s.l);
    reality.add(std::fabs(q.imag()) / std::pow(std::fabs(r.mu), 3));
  }
  for (std::size_t a = 0; a < first.size(); ++a)
    for (std::size_t b = a; b < first.size(); ++b) {
      const cplx g = integrate_checked(
          [&](double x) { return eigenfunction(s, first[a], x) * std::conj(eigenfunction(s, first[b], x)); }, 0.0,
          s.l);
      gram.add(std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  for (int n = 0; n < 2; ++n) {
    const double mu = recs[n].mu;
    const cplx c0 = eigen_numerator_direct(s, mu, 0.37), c1 = eigen_numerator_direct(s, mu * rs.zeta[1], 0.37);
    const cplx ratio = c1 / c0;
    rot.add(std::fabs(std::abs(ratio) - 1));
    for (double x : {0.1, 0.5, 0.9})
      rot.add(std::abs(eigen_numerator_direct(s, mu * rs.zeta[1], x) - ratio * eigen_numerator_direct(s, mu, x)) /
              std::abs(eigen_numerator_direct(s, mu, x)));
  }

  Batch rbc{"resolvent_boundary_defects", 1e-8}, rode{"resolvent_ode_residual", 1e-5},
      kid{"kernel_identity_over_1+scale", 1e-10}, tm1{"theta_minus_one_eigenfunction", 1e-12};
  const cplx lam(0.5, 0.3);
  for (int t = 0; t < 3; ++t) {
    const CFunc f = random_smooth(rng);
    rbc.add(std::abs(resolvent_apply(s, lam, f, 0.0)));
    rbc.add(std::abs(resolvent_apply(s, lam, f, s.l)));
    rbc.add(std::abs(resolvent_apply(s, lam, f, 0.0, 1) - s.theta * resolvent_apply(s, lam, f, s.l, 1)));
    auto y2 = [&](double x) { return resolvent_apply(s, lam, f, x, 2); };
    for (double x : {0.3, 0.6}) {
      const cplx Ly = I * derivative(y2, 1, x, 0.0, Stencil::Central, {0.0, s.l});
      const cplx rhs = lam * lam * lam * resolvent_apply(s, lam, f, x) + f(x);
      rode.add(std::abs(Ly - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  for (int t = 0; t < 200; ++t) {
    const auto r = kernel_identity_residual(random_in_disk(2, rng), random_in_disk(2, rng), random_in_disk(2, rng));
    kid.add(r.residual / (1 + r.scale));
  }
  {
    // u = c (x^2 - x l) vanishes at both ends, u'(0) = -u'(l), and its third derivative is 0
    const double c = 1.7, l = 1.3;
    auto u = [&](double x) { return cplx(theta_minus_one_eigenfunction(c, l, x)); };
    tm1.add(std::fabs(u(0).real()) + std::fabs(u(l).real()));
    const Domain dom{0.0, l};
    tm1.add(std::abs(derivative(u, 1, 0.0, 0.0, Stencil::Forward, dom) +
                     derivative(u, 1, l, 0.0, Stencil::Backward, dom)) / 1e3);
    tm1.add(std::abs(derivative(u, 3, 0.5 * l, 0.0, Stencil::Central, dom)) / 1e3);
  }

  std::vector<CheckRow> rows;
  for (const Batch* b : {&sym1, &sym2, &sym3, &forms, &lim, &realf, &rel, &absd, &excl, &spacing, &scale, &bc,
                         &gram, &rot, &reality, &rbc, &rode, &kid, &tm1})
    rows.push_back(b->row());
  return rows;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {"cyclo", "pfun", "zeros", "cauchy", "sabc", "spectral"};
  return names;
}

std::vector<CheckRow> run_check_suite(const std::string& suite, std::uint64_t seed) {
  using Fn = std::vector<CheckRow> (*)(Rng&);
  static const std::map<std::string, Fn> table = {{"cyclo", cyclo_suite},   {"pfun", pfun_suite},
                                                  {"zeros", zeros_suite},   {"cauchy", cauchy_suite},
                                                  {"sabc", sabc_suite},     {"spectral", spectral_suite}};
  std::vector<CheckRow> out;
  for (const auto& name : check_suite_names()) {
    if (suite != "all" && suite != name) continue;
    Rng rng(seed);
    for (auto& row : table.at(name)(rng)) {
      row.name = name + "." + row.name;
      out.push_back(std::move(row));
    }
  }
  if (out.empty()) throw DomainError("unknown check suite '" + suite + "'");
  return out;
}

}  // namespace phyp
