#pragma once

#include <string>
#include <variant>
#include <vector>

#include "phyp/numutil.hpp"

namespace phyp {

// J_p: anti-diagonal, J(r, p-1-r) = (-1)^r.
CMat concomitant_matrix(int p);

// Q = sum_r (-1)^r y^(p-1-r) conj(z^(r)) for stacks (y, y', ..., y^(p-1)).
cplx concomitant(int p, const CVec& y, const CVec& z);

enum class BcKind { Separated, Unseparated };

// p = 2k. Separated: J_k Y1 = B Y0 at each end. Unseparated: endpoint
// coupling through the unitary pair (V, Vt).
struct BoundarySpecEven {
  int k;
  BcKind kind;
  CMat B0, Bl;
  CMat V, Vt;

  int p() const { return 2 * k; }
  void validate() const;
};

// p = 2k + 1. Same families with the middle derivative tied by
// y^(k)(l) = theta y^(k)(0).
struct BoundarySpecOdd {
  int k;
  cplx theta;
  BcKind kind;
  CMat B0, Bl;
  CMat V, Vt;

  int p() const { return 2 * k + 1; }
  void validate() const;
};

using BoundarySpec = std::variant<BoundarySpecEven, BoundarySpecOdd>;

int order_of(const BoundarySpec& spec);

// B = i (I - V)^{-1} (I + V), computed through the eigen-decomposition of V
// so that B is Hermitian to rounding. Throws DegenerateSpecError when 1 is an
// eigenvalue of V.
CMat cayley_b(const CMat& v);
// The literal formula, for cross-checking.
CMat cayley_b_direct(const CMat& v);
// Inverse map: V = (B + iI)^{-1} (B - iI).
CMat cayley_v(const CMat& b);

struct LabelledVector {
  std::string label;  // "e+1", "e-2", "mid" ...
  CVec v;
  cplx eigenvalue;
};

// Orthonormal eigenvectors of J_p (p >= 2).
std::vector<LabelledVector> jp_eigenbasis(int p);

struct BoundaryResidual {
  std::vector<std::pair<std::string, double>> defects;
  double max() const;
};

// Stacked boundary defects (one entry per scalar condition, p in total).
CVec boundary_defect_vector(const BoundarySpec& spec, const CVec& y0, const CVec& yl);
BoundaryResidual boundary_residual(const BoundarySpec& spec, double l, const CVec& y0, const CVec& yl);

// Trial function sum_j c_j s_{j mod p}(i lambda_j x) whose boundary stacks
// satisfy the spec's conditions.
struct TrialFunction {
  int p;
  std::vector<cplx> lambdas;
  CVec coeffs;

  cplx value(double x) const;
  CVec stack(double x) const;  // (y, y', ..., y^(p-1))
  // (-iD)^p y, exact: each basis term is multiplied by lambda_j^p.
  cplx apply_operator(double x) const;
};

struct TrialSet {
  std::vector<TrialFunction> trials;
  int constraintRank;
};

// Throws DegenerateSpecError when the constraint matrix has rank < p.
TrialSet admissible_trials(const BoundarySpec& spec, double l, int count, std::uint64_t seed);

struct SelfAdjointReport {
  double maxDefect;        // max |Q_l - Q_0|
  double maxScaledDefect;  // max |Q_l - Q_0| / stack scale
  double maxBoundaryDefect;
  int pairs;
};

SelfAdjointReport selfadjointness_check(const BoundarySpec& spec, double l, int trialCount,
                                        std::uint64_t seed = 1);

// Random members of each family (Hermitian B's or Haar unitary V's).
BoundarySpecEven random_even_spec(int k, BcKind kind, Rng& rng);
BoundarySpecOdd random_odd_spec(int k, BcKind kind, Rng& rng);

}  // namespace phyp
