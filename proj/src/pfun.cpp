#include "phyp/pfun.hpp"

#include <cmath>
#include <initializer_list>

#include "phyp/errors.hpp"

namespace phyp {

namespace {

using cld = std::complex<long double>;

cplx to_double(cld v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

cld taylor_s(int p, int k, cplx zd) {
  const cld z(zd.real(), zd.imag());
  if (zd == cplx(0)) return k == 0 ? cld(1) : cld(0);
  cld term = 1;
  for (int j = 1; j <= k; ++j) term *= z / static_cast<long double>(j);
  cld sum = term;
  cld zp = 1;
  for (int j = 0; j < p; ++j) zp *= z;
  long idx = k;
  for (int n = 1; n < 200; ++n) {
    long double denom = 1;
    for (int j = 1; j <= p; ++j) denom *= static_cast<long double>(idx + j);
    idx += p;
    term *= zp / denom;
    sum += term;
    if (std::abs(term) < 1e-17L * std::abs(sum)) break;
  }
  return sum;
}

void check_overflow(int p, cplx z) {
  double mx = -INFINITY;
  for (int m = 0; m < p; ++m) {
    const auto r = root_ld(p, m);
    mx = std::max(mx, static_cast<double>(z.real() * r.real() - z.imag() * r.imag()));
  }
  if (mx > kMaxExpArg)
    throw OverflowError("exponential argument beyond the representable range (Re = " +
                        format_g(mx) + ")");
}

std::vector<cld> exponentials(int p, cplx zd) {
  const cld z(zd.real(), zd.imag());
  std::vector<cld> e(p);
  for (int m = 0; m < p; ++m) e[m] = std::exp(z * root_ld(p, m));
  return e;
}

cld exp_sum(int p, int k, const std::vector<cld>& e) {
  cld acc = 0;
  for (int m = 0; m < p; ++m) acc += root_ld(p, -static_cast<long>(k) * m) * e[m];
  return acc / static_cast<long double>(p);
}

bool use_taylor(cplx z, const EvalPolicy& policy) {
  switch (policy.regime) {
    case Regime::Taylor: return true;
    case Regime::Exponential: return false;
    default: return std::abs(z) <= policy.switchRadius;
  }
}

}  // namespace

void PFunQuery::validate() const {
  if (p < 1) throw DomainError("order p must be at least 1");
  if (k < 0 || k >= p) throw DomainError("index k must satisfy 0 <= k < p");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("non-finite argument");
}

cplx eval_s(const PFunQuery& q, const EvalPolicy& policy) {
  q.validate();
  if (use_taylor(q.z, policy)) {
    if (policy.regime == Regime::Taylor && std::abs(q.z) > 8.0)
      throw DomainError("Taylor regime forced outside its useful range");
    return to_double(taylor_s(q.p, q.k, q.z));
  }
  check_overflow(q.p, q.z);
  return to_double(exp_sum(q.p, q.k, exponentials(q.p, q.z)));
}

cplx eval_c(const PFunQuery& q, const EvalPolicy& policy) {
  q.validate();
  const cplx i(0, 1);
  return eval_s({q.p, q.k, i * q.z}, policy) / std::pow(i, q.k);
}

std::vector<cplx> eval_s_all(int p, cplx z, const EvalPolicy& policy) {
  PFunQuery{p, 0, z}.validate();
  std::vector<cplx> out(p);
  if (use_taylor(z, policy)) {
    for (int k = 0; k < p; ++k) out[k] = eval_s({p, k, z}, policy);
    return out;
  }
  check_overflow(p, z);
  const auto e = exponentials(p, z);
  for (int k = 0; k < p; ++k) out[k] = to_double(exp_sum(p, k, e));
  return out;
}

WMatrix w_matrix(int p, cplx z) {
  const auto s = eval_s_all(p, z);
  WMatrix w{p, z, CMat(p, p)};
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < p; ++c) w.entries(r, c) = s[((c - r) % p + p) % p];
  return w;
}

CMat w_matrix_spectral(int p, cplx z) {
  const DftMatrix d = dft_matrix(p);
  const RootSystem rs = roots_of_unity(p);
  check_overflow(p, z);
  CVec lam(p);
  for (int m = 0; m < p; ++m) lam(m) = std::exp(z * rs.zeta[m]);
  return d.U * lam.asDiagonal() * d.U.adjoint();
}

cplx euler_reconstruct(int p, int k, cplx z) {
  PFunQuery{p, k, z}.validate();
  const RootSystem rs = roots_of_unity(p);
  const auto s = eval_s_all(p, z);
  cplx acc = 0;
  for (int j = 0; j < p; ++j) acc += rs.power(static_cast<long>(j) * k) * s[j];
  return acc;
}

std::vector<IdentityResidual> identity_residuals_p3(cplx z, cplx w) {
  const RootSystem rs = roots_of_unity(3);
  auto S = [](cplx x) { return eval_s_all(3, x); };
  const auto a = S(z), b = S(w), am = S(-z);
  const auto s0 = a[0], s1 = a[1], s2 = a[2];

  std::vector<IdentityResidual> out;
  auto add = [&](std::string name, cplx lhs, std::initializer_list<cplx> terms, bool diag = false) {
    cplx rhs = 0;
    double scale = std::abs(lhs);
    for (cplx t : terms) {
      rhs += t;
      scale += std::abs(t);
    }
    out.push_back({std::move(name), std::abs(lhs - rhs), scale, diag});
  };
  auto idx = [](int k) { return ((k % 3) + 3) % 3; };

  for (int k = 0; k < 3; ++k)
    add("euler_" + std::to_string(k), std::exp(z * rs.zeta[k]),
        {s0, rs.power(k) * s1, rs.power(2 * k) * s2});

  add("main", 1.0, {s0 * s0 * s0, s1 * s1 * s1, s2 * s2 * s2, -3.0 * s0 * s1 * s2});

  const auto zw = S(z + w);
  for (int k = 0; k < 3; ++k)
    add("addition_" + std::to_string(k), zw[k],
        {a[0] * b[idx(k)], a[1] * b[idx(k - 1)], a[2] * b[idx(k - 2)]});

  const auto d = S(2.0 * z);
  add("double_0", d[0], {s0 * s0, 2.0 * s1 * s2});
  add("double_1", d[1], {2.0 * s0 * s1, s2 * s2});
  add("double_2", d[2], {2.0 * s0 * s2, s1 * s1});

  const auto t = S(3.0 * z);
  add("triple_0", t[0], {1.0, 9.0 * s0 * s1 * s2});
  add("triple_1", t[1], {3.0 * s0 * s0 * s1, 3.0 * s0 * s2 * s2, 3.0 * s1 * s1 * s2});
  add("triple_2", t[2], {3.0 * s0 * s0 * s2, 3.0 * s0 * s1 * s1, 3.0 * s1 * s2 * s2});
  add("triple_1_printed", t[1], {3.0 * s0 * s0 * s1, 3.0 * s0 * s0 * s2, 3.0 * s1 * s1 * s2}, true);
  add("triple_2_printed", t[2], {3.0 * s0 * s1 * s1, 3.0 * s0 * s2 * s2, 3.0 * s1 * s2 * s2}, true);

  // 3 s_a(z) s_b(w) = sum_j zeta_j^{-b} s_{a+b}(z + zeta_j w)
  std::vector<std::vector<cplx>> shifted(3);
  for (int j = 0; j < 3; ++j) shifted[j] = S(z + rs.zeta[j] * w);
  const int pairs[6][2] = {{0, 0}, {1, 2}, {1, 0}, {2, 2}, {2, 0}, {1, 1}};
  for (const auto& pr : pairs) {
    const int ai = pr[0], bi = pr[1], c = idx(ai + bi);
    add("product_to_sum_" + std::to_string(ai) + std::to_string(bi), 3.0 * a[ai] * b[bi],
        {shifted[0][c], rs.power(-bi) * shifted[1][c], rs.power(-2 * bi) * shifted[2][c]});
  }
  add("product_to_sum_11_printed", 3.0 * a[1] * b[1],
      {shifted[0][2], rs.zeta[2] * shifted[1][2], rs.zeta[1] * shifted[2][1]}, true);

  for (int k = 0; k < 3; ++k)
    add("opposite_pair_" + std::to_string(k), k == 0 ? 1.0 : 0.0,
        {a[0] * am[idx(k)], a[1] * am[idx(k - 1)], a[2] * am[idx(k - 2)]});

  add("opposite_0", am[0], {s0 * s0, -s1 * s2});
  add("opposite_1", am[1], {s2 * s2, -s0 * s1});
  add("opposite_2", am[2], {s1 * s1, -s0 * s2});
  return out;
}

}  // namespace phyp
