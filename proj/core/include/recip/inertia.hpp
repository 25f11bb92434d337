#ifndef RECIP_INERTIA_HPP
#define RECIP_INERTIA_HPP

#include <vector>

#include "recip/ratmat.hpp"

namespace recip {

struct InertiaResult {
  int positive = 0;  // pi
  int negative = 0;  // nu
  int zero = 0;
  int rank() const { return positive + negative; }
  int signature() const { return positive - negative; }
  bool operator==(const InertiaResult& o) const {
    return positive == o.positive && negative == o.negative && zero == o.zero;
  }
};

// Exact inertia of a symmetric rational matrix by congruence elimination.
// Zero-diagonal cases are handled with 2x2 hyperbolic pivots, each of which
// contributes one positive and one negative eigenvalue.
InertiaResult inertia(const RatMat& m);

// Certificate for Sylvester's law of inertia.  The canonical form is
// diag(I_pi, -I_nu, 0) but over the rationals the scaling onto unit pivots
// would need square roots, so the transform is stored split as a rational
// matrix L together with a rational diagonal weight vector whose signs
// follow the canonical layout:  L^T diag(weights) L == M  exactly, and
// R = diag(sqrt|weights|) L satisfies R^T diag(I,-I,0) R == M over the reals.
struct CongruenceWitness {
  RatMat transform;           // L, nonsingular
  std::vector<Rat> weights;   // ordered: positives, negatives, zeros
  InertiaResult inertia;

  RatMat reconstruct() const;  // L^T diag(weights) L, exact
  Eigen::MatrixXd real_transform() const;  // diag(sqrt|w|) * L
};

CongruenceWitness congruence_diagonalize(const RatMat& m);

// inertia(S^T P S), exact.
InertiaResult project_inertia(const RatMat& p, const RatMat& s);

// The generalized Sylvester law (both double inequalities), computed and
// checked exactly.
struct SylvesterBoundsReport {
  InertiaResult inertia_p;
  InertiaResult inertia_sps;
  int nullity_st = 0;  // nullity(S^T)
  bool pi_lower_holds = false, pi_upper_holds = false;
  bool nu_lower_holds = false, nu_upper_holds = false;
  bool holds() const {
    return pi_lower_holds && pi_upper_holds && nu_lower_holds && nu_upper_holds;
  }
};

SylvesterBoundsReport sylvester_bounds_check(const RatMat& p, const RatMat& s);

// Constructive route through the three-case proof of the generalized law
// (case (a) diagonal weights / full-column-rank S with the normal-equation
// pseudoinverse, case (b) nonsingular P, case (c) general).  Returns the
// same inertia of S^T P S, derived from the constructed congruences; used
// as an independent cross-check of sylvester_bounds_check.
InertiaResult lemma_inertia_constructive(const RatMat& p, const RatMat& s);

}  // namespace recip

#endif
