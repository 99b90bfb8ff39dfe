#pragma once

#include <string>
#include <vector>

#include "phyp/cyclo.hpp"
#include "phyp/numutil.hpp"

namespace phyp {

struct PFunQuery {
  int p;
  int k;
  cplx z;

  void validate() const;  // throws DomainError unless p >= 1 and 0 <= k < p
};

enum class Regime { Auto, Taylor, Exponential };

struct EvalPolicy {
  Regime regime = Regime::Auto;
  double switchRadius = 1.0;  // Taylor series for |z| <= switchRadius
};

// Exponentials beyond this real part raise OverflowError.
inline constexpr double kMaxExpArg = 700.0;

// s_k(z) = (1/p) sum_m zeta_m^{-k} exp(z zeta_m).
cplx eval_s(const PFunQuery& q, const EvalPolicy& policy = {});
// c_k(z) = s_k(iz) / i^k.
cplx eval_c(const PFunQuery& q, const EvalPolicy& policy = {});

// Shorthands.
inline cplx s_fn(int p, int k, cplx z) { return eval_s({p, k, z}); }
inline cplx s3(int k, cplx z) { return eval_s({3, k, z}); }

// All p functions at once, sharing the exponentials.
std::vector<cplx> eval_s_all(int p, cplx z, const EvalPolicy& policy = {});

struct WMatrix {
  int p;
  cplx z;
  CMat entries;  // entries(r, c) = s_{(c - r) mod p}(z)
};

WMatrix w_matrix(int p, cplx z);
// U diag(exp(z zeta_m)) U*, the spectral form of the same matrix.
CMat w_matrix_spectral(int p, cplx z);

// sum_j zeta_j^k s_j(z), which should equal exp(z zeta_k).
cplx euler_reconstruct(int p, int k, cplx z);

struct IdentityResidual {
  std::string name;
  double residual;  // |lhs - rhs|
  double scale;     // sum of magnitudes of the terms involved
  bool diagnostic;  // printed variants that are known not to hold
};

// Every identity of the p = 3 suite evaluated at (z, w): Euler identities,
// determinant identity, addition, double and triple argument, product to
// sum, and the direct/opposite argument relations.
std::vector<IdentityResidual> identity_residuals_p3(cplx z, cplx w);

}  // namespace phyp
