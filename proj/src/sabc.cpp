#include "phyp/sabc.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "phyp/errors.hpp"
#include "phyp/pfun.hpp"

namespace phyp {

namespace {

const cplx I(0, 1);

void check_square(const CMat& m, int k, const char* name) {
  if (m.rows() != k || m.cols() != k)
    throw DomainError(std::string("boundary spec: ") + name + " must be k x k");
}

void check_hermitian(const CMat& b, const char* name) {
  if (max_abs(b - b.adjoint()) > 1e-12 * std::max(1.0, max_abs(b)))
    throw DomainError(std::string("boundary spec: ") + name + " is not self-adjoint");
}

void check_unitary(const CMat& v, const char* name) {
  const CMat e = v * v.adjoint() - CMat::Identity(v.rows(), v.cols());
  if (max_abs(e) > 1e-12) throw DomainError(std::string("boundary spec: ") + name + " is not unitary");
}

void check_pair(BcKind kind, int k, const CMat& B0, const CMat& Bl, const CMat& V, const CMat& Vt) {
  if (k < 0) throw DomainError("boundary spec: k must be non-negative");
  if (kind == BcKind::Separated) {
    check_square(B0, k, "B0");
    check_square(Bl, k, "Bl");
    check_hermitian(B0, "B0");
    check_hermitian(Bl, "Bl");
  } else {
    check_square(V, k, "V");
    check_square(Vt, k, "Vt");
    check_unitary(V, "V");
    check_unitary(Vt, "Vt");
  }
}

struct Split {
  CVec y0, y1;
  cplx mid;
};

Split split_stack(int k, bool odd, const CVec& y) {
  Split s;
  s.y0 = y.head(k);
  s.y1 = y.tail(k);
  s.mid = odd ? y(k) : cplx(0);
  return s;
}

CVec defect_even(const BoundarySpecEven& spec, const CVec& y0, const CVec& yl) {
  const int k = spec.k;
  const CMat J = concomitant_matrix(k);
  const Split a = split_stack(k, false, y0), b = split_stack(k, false, yl);
  CVec d(2 * k);
  if (spec.kind == BcKind::Separated) {
    d.head(k) = J * a.y1 - spec.B0 * a.y0;
    d.tail(k) = J * b.y1 - spec.Bl * b.y0;
  } else {
    const CMat sum = spec.V + spec.Vt, diff = spec.V - spec.Vt;
    const CVec jy1 = J * a.y1;
    d.head(k) = 2.0 * b.y0 - sum * a.y0 - I * (diff * jy1);
    d.tail(k) = 2.0 * I * (J * b.y1) - diff * a.y0 - I * (sum * jy1);
  }
  return d;
}

CVec defect_odd(const BoundarySpecOdd& spec, const CVec& y0, const CVec& yl) {
  const int k = spec.k;
  const CMat J = concomitant_matrix(k);
  const Split a = split_stack(k, true, y0), b = split_stack(k, true, yl);
  CVec d(2 * k + 1);
  if (spec.kind == BcKind::Separated) {
    d.head(k) = J * a.y1 - I * (spec.B0 * a.y0);
    d.segment(k, k) = J * b.y1 - I * (spec.Bl * b.y0);
  } else {
    const CMat sum = spec.V + spec.Vt, diff = spec.V - spec.Vt;
    const CVec jy1 = J * a.y1;
    d.head(k) = 2.0 * b.y0 - sum * a.y0 - diff * jy1;
    d.segment(k, k) = 2.0 * (J * b.y1) - diff * a.y0 - sum * jy1;
  }
  d(2 * k) = b.mid - spec.theta * a.mid;
  return d;
}

// d^n/dx^n s_j(i lam x) = (i lam)^n s_{j-n}(i lam x)
CVec basis_stack(int p, int j, cplx lam, double x) {
  const cplx il = I * lam;
  const auto s = eval_s_all(p, il * x);
  CVec out(p);
  cplx f = 1;
  for (int n = 0; n < p; ++n) {
    out(n) = f * s[((j - n) % p + p) % p];
    f *= il;
  }
  return out;
}

}  // namespace

CMat concomitant_matrix(int p) {
  if (p < 0) throw DomainError("concomitant_matrix: negative order");
  CMat j = CMat::Zero(p, p);
  for (int r = 0; r < p; ++r) j(r, p - 1 - r) = (r % 2 == 0) ? 1.0 : -1.0;
  return j;
}

cplx concomitant(int p, const CVec& y, const CVec& z) {
  if (y.size() != p || z.size() != p) throw DomainError("concomitant: stacks must have length p");
  cplx q = 0;
  for (int r = 0; r < p; ++r) q += ((r % 2 == 0) ? 1.0 : -1.0) * y(p - 1 - r) * std::conj(z(r));
  return q;
}

void BoundarySpecEven::validate() const {
  if (k < 1) throw DomainError("even boundary spec: k must be at least 1");
  check_pair(kind, k, B0, Bl, V, Vt);
}

void BoundarySpecOdd::validate() const {
  check_pair(kind, k, B0, Bl, V, Vt);
  if (std::fabs(std::abs(theta) - 1) > 1e-14) throw DomainError("odd boundary spec: |theta| must be 1");
}

int order_of(const BoundarySpec& spec) {
  return std::visit([](const auto& s) { return s.p(); }, spec);
}

CMat cayley_b(const CMat& v) {
  const int k = static_cast<int>(v.rows());
  if (v.cols() != k) throw DomainError("cayley_b: square matrix required");
  if (k == 0) return CMat(0, 0);
  Eigen::ComplexSchur<CMat> schur(v);
  const CMat& q = schur.matrixU();
  const CMat& t = schur.matrixT();
  CVec d(k);
  for (int i = 0; i < k; ++i) {
    const cplx e = t(i, i);
    if (std::abs(1.0 - e) < 1e-10)
      throw DegenerateSpecError("cayley_b: 1 is an eigenvalue of V (excluded Cayley point)");
    d(i) = -1.0 / std::tan(std::arg(e) / 2);
  }
  return q * d.asDiagonal() * q.adjoint();
}

CMat cayley_b_direct(const CMat& v) {
  const int k = static_cast<int>(v.rows());
  const CMat id = CMat::Identity(k, k);
  Eigen::FullPivLU<CMat> lu(id - v);
  if (!lu.isInvertible()) throw DegenerateSpecError("cayley_b_direct: I - V is singular");
  return I * lu.solve(id + v);
}

CMat cayley_v(const CMat& b) {
  const int k = static_cast<int>(b.rows());
  const CMat id = CMat::Identity(k, k);
  return (b + I * id).fullPivLu().solve(b - I * id);
}

std::vector<LabelledVector> jp_eigenbasis(int p) {
  if (p < 2) throw DomainError("jp_eigenbasis: p must be at least 2");
  std::vector<LabelledVector> out;
  const double r = 1 / std::sqrt(2.0);
  const int k = p / 2;
  const bool odd = p % 2 == 1;
  for (int sign : {1, -1}) {
    for (int s = 1; s <= k; ++s) {
      CVec e = CVec::Zero(p);
      const double alt = (s % 2 == 1) ? 1.0 : -1.0;  // (-1)^{s-1}
      e(s - 1) = sign * r;
      e(p - s) = odd ? cplx(alt * r) : cplx(0, alt * r);
      const cplx ev = odd ? cplx(sign) : cplx(0, sign);
      out.push_back({std::string(sign > 0 ? "e+" : "e-") + std::to_string(s), e, ev});
    }
  }
  if (odd) {
    CVec e = CVec::Zero(p);
    e(k) = 1;
    out.push_back({"mid", e, (k % 2 == 0) ? 1.0 : -1.0});
  }
  return out;
}

double BoundaryResidual::max() const {
  double m = 0;
  for (const auto& d : defects) m = std::max(m, d.second);
  return m;
}

CVec boundary_defect_vector(const BoundarySpec& spec, const CVec& y0, const CVec& yl) {
  const int p = order_of(spec);
  if (y0.size() != p || yl.size() != p) throw DomainError("boundary stacks must have length p");
  if (const auto* e = std::get_if<BoundarySpecEven>(&spec)) return defect_even(*e, y0, yl);
  return defect_odd(std::get<BoundarySpecOdd>(spec), y0, yl);
}

BoundaryResidual boundary_residual(const BoundarySpec& spec, double l, const CVec& y0, const CVec& yl) {
  if (!(l > 0)) throw DomainError("boundary_residual: l must be positive");
  std::visit([](const auto& s) { s.validate(); }, spec);
  const CVec d = boundary_defect_vector(spec, y0, yl);
  const int p = order_of(spec), k = p / 2;
  const bool separated =
      std::visit([](const auto& s) { return s.kind == BcKind::Separated; }, spec);
  BoundaryResidual r;
  r.defects.push_back({separated ? "left" : "values", d.head(k).norm()});
  r.defects.push_back({separated ? "right" : "derivatives", d.segment(k, k).norm()});
  if (p % 2 == 1) r.defects.push_back({"middle", std::abs(d(2 * k))});
  return r;
}

cplx TrialFunction::value(double x) const {
  cplx v = 0;
  for (std::size_t j = 0; j < lambdas.size(); ++j)
    v += coeffs(j) * eval_s({p, static_cast<int>(j % p), I * lambdas[j] * x});
  return v;
}

CVec TrialFunction::stack(double x) const {
  CVec st = CVec::Zero(p);
  for (std::size_t j = 0; j < lambdas.size(); ++j)
    st += coeffs(j) * basis_stack(p, static_cast<int>(j % p), lambdas[j], x);
  return st;
}

cplx TrialFunction::apply_operator(double x) const {
  cplx v = 0;
  for (std::size_t j = 0; j < lambdas.size(); ++j)
    v += coeffs(j) * std::pow(lambdas[j], p) *
         eval_s({p, static_cast<int>(j % p), I * lambdas[j] * x});
  return v;
}

TrialSet admissible_trials(const BoundarySpec& spec, double l, int count, std::uint64_t seed) {
  std::visit([](const auto& s) { s.validate(); }, spec);
  if (!(l > 0)) throw DomainError("admissible_trials: l must be positive");
  const int p = order_of(spec);
  const int n = 2 * p;
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> lambdas(n);
  for (auto& lam : lambdas) lam = std::polar((0.5 + 2.0 * u(rng)) / l, 2 * M_PI * u(rng));

  CMat c(p, n);
  for (int j = 0; j < n; ++j)
    c.col(j) = boundary_defect_vector(spec, basis_stack(p, j % p, lambdas[j], 0.0),
                                      basis_stack(p, j % p, lambdas[j], l));
  const NullSpace ns = null_space(c);
  if (ns.rank < p)
    throw DegenerateSpecError("constraint matrix is rank deficient (rank " + std::to_string(ns.rank) +
                              " < " + std::to_string(p) + ")");
  TrialSet set{{}, ns.rank};
  for (int t = 0; t < count; ++t) {
    CVec a = random_complex_gaussian(static_cast<int>(ns.basis.cols()), 1, rng).col(0);
    CVec coeffs = ns.basis * a;
    coeffs /= coeffs.norm();
    set.trials.push_back({p, lambdas, coeffs});
  }
  return set;
}

SelfAdjointReport selfadjointness_check(const BoundarySpec& spec, double l, int trialCount,
                                        std::uint64_t seed) {
  if (trialCount < 1) throw DomainError("selfadjointness_check: trialCount must be positive");
  const TrialSet set = admissible_trials(spec, l, 2 * trialCount, seed);
  const int p = order_of(spec);
  SelfAdjointReport rep{0, 0, 0, trialCount};
  for (int t = 0; t < trialCount; ++t) {
    const TrialFunction& y = set.trials[2 * t];
    const TrialFunction& z = set.trials[2 * t + 1];
    const CVec y0 = y.stack(0), yl = y.stack(l), z0 = z.stack(0), zl = z.stack(l);
    const double defect = std::abs(concomitant(p, yl, zl) - concomitant(p, y0, z0));
    const double scale = y0.norm() * z0.norm() + yl.norm() * zl.norm();
    rep.maxDefect = std::max(rep.maxDefect, defect);
    rep.maxScaledDefect = std::max(rep.maxScaledDefect, defect / scale);
    const double bd = std::max(boundary_defect_vector(spec, y0, yl).norm() / (y0.norm() + yl.norm()),
                               boundary_defect_vector(spec, z0, zl).norm() / (z0.norm() + zl.norm()));
    rep.maxBoundaryDefect = std::max(rep.maxBoundaryDefect, bd);
  }
  return rep;
}

BoundarySpecEven random_even_spec(int k, BcKind kind, Rng& rng) {
  BoundarySpecEven s{k, kind, {}, {}, {}, {}};
  if (kind == BcKind::Separated) {
    s.B0 = random_hermitian(k, rng);
    s.Bl = random_hermitian(k, rng);
  } else {
    s.V = random_unitary(k, rng);
    s.Vt = random_unitary(k, rng);
  }
  return s;
}

BoundarySpecOdd random_odd_spec(int k, BcKind kind, Rng& rng) {
  BoundarySpecOdd s{k, random_unimodular(rng), kind, {}, {}, {}, {}};
  if (kind == BcKind::Separated) {
    s.B0 = random_hermitian(k, rng);
    s.Bl = random_hermitian(k, rng);
  } else {
    s.V = random_unitary(k, rng);
    s.Vt = random_unitary(k, rng);
  }
  return s;
}

}  // namespace phyp
