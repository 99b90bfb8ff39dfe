#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace phyp {

using cplx = std::complex<double>;
using CFunc = std::function<cplx(double)>;
using RFunc = std::function<double(double)>;

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// ---------------------------------------------------------------------------
// Quadrature: adaptive composite Gauss-Legendre.

struct QuadraturePolicy {
  int nodesPerPanel = 16;
  double targetAbsError = 1e-11;
  double targetRelError = 1e-11;
  int maxPanels = 4096;
  // Sorted points where the integrand has a kink; panels never straddle them and
  // the panel budget counts refinements on top of this initial split.
  std::vector<double> breakpoints = {};
};

struct QuadratureResult {
  cplx value;
  double errorEstimate = 0.0;
  int panels = 0;
  bool converged = false;
};

// Nodes and weights on [-1, 1]; cached per n.
const std::vector<std::pair<double, double>>& gauss_legendre_rule(int n);

// Requires a <= b. Never throws on non-convergence; inspect `converged`.
QuadratureResult integrate(const CFunc& f, double a, double b,
                           const QuadraturePolicy& policy = {});

// Fixed composite rule on `panels` equal panels (reference for refinement checks).
cplx integrate_uniform(const CFunc& f, double a, double b, int panels, int nodesPerPanel = 16);

// Like integrate(), but signed for b < a and throws QuadratureError when the
// panel budget runs out.
cplx integrate_checked(const CFunc& f, double a, double b,
                       const QuadraturePolicy& policy = {});

// ---------------------------------------------------------------------------
// Bracketed root finding.

struct RootBracket {
  double lo;
  double hi;
  double tol;

  // Throws BracketError unless f(lo) and f(hi) have strictly opposite signs.
  static RootBracket make(const RFunc& f, double lo, double hi, double tol);
};

struct RootResult {
  double x;
  double fx;
  int newtonSteps;
};

// Bisection down to bracket.tol, then up to maxNewton Newton steps. The
// derivative is taken from `df` when given, otherwise by centered difference.
// A Newton step that leaves the bracket or increases |f| is discarded.
RootResult find_root(const RFunc& f, const RootBracket& bracket,
                     const RFunc& df = nullptr, int maxNewton = 3);

// Bisection with a caller-known sign at `lo` (useful when f(lo) is exactly 0
// analytically but the sign just right of it is known).
RootResult find_root_signed(const RFunc& f, double lo, int signLo, double hi,
                            double tol, const RFunc& df = nullptr, int maxNewton = 3);

// ---------------------------------------------------------------------------
// Finite differences.

enum class Stencil { Central, Forward, Backward };

struct Domain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

// Fornberg weights for the m-th derivative at x0 on the given nodes.
std::vector<double> fornberg_weights(int m, double x0, const std::vector<double>& nodes);

// Step balancing truncation of the Richardson-extrapolated stencil against
// rounding, for a derivative of the given order.
double default_step(int order, double x);

// order-th derivative of y at x: 4th-order stencil, one Richardson step over
// {h, h/2}. h <= 0 selects default_step. Throws DomainError if the stencil
// leaves `dom`.
cplx derivative(const CFunc& y, int order, double x, double h = 0.0,
                Stencil stencil = Stencil::Central, Domain dom = {});

// (-i)^p y^(p)(x).
cplx apply_minus_iD_pow(int p, const CFunc& y, double x, double h = 0.0, Domain dom = {});

// ---------------------------------------------------------------------------
// Small dense linear algebra helpers.

using Rng = std::mt19937_64;

CMat random_complex_gaussian(int rows, int cols, Rng& rng);
// Haar-distributed unitary via QR with phase fix.
CMat random_unitary(int k, Rng& rng);
CMat random_hermitian(int k, Rng& rng);
cplx random_in_disk(double radius, Rng& rng);
cplx random_unimodular(Rng& rng);

struct NullSpace {
  CMat basis;  // columns span ker(A)
  int rank;
};
NullSpace null_space(const CMat& a, double relTol = 1e-10);

double max_abs(const CMat& a);

// %.{digits}g formatting for messages.
std::string format_g(double v, int digits = 3);

}  // namespace phyp
