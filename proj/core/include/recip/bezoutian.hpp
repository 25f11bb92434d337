#ifndef RECIP_BEZOUTIAN_HPP
#define RECIP_BEZOUTIAN_HPP

#include "recip/inertia.hpp"
#include "recip/mfd.hpp"
#include "recip/polymat.hpp"

namespace recip {

// Bez(Q,P): the block matrix with (Bez)_{ij} the coefficient of
// z^{i-1} w^{j-1} in (Q(z)P(w)^T - P(z)Q(w)^T) / (z - w).
struct BezoutianMatrix {
  int m = 0;      // block order: max entry degree of P and Q
  int n = 0;      // block size
  RatMat data;    // (m n) x (m n)
};

// Throws if P, Q sizes mismatch, or if the numerator is not divisible by
// (z - w) (which happens exactly when Q P^T is not symmetric).
BezoutianMatrix bezoutian(const PolyMatrix& p, const PolyMatrix& q);

// Lemma-style gamma/delta from the Bezoutian inertia:
// gamma = pi - nu, delta = rank.  Requires a symmetric transfer function.
struct GammaDelta {
  int gamma = 0;
  int delta = 0;
  InertiaResult bez_inertia;
};

GammaDelta gamma_delta_bez(const LeftMFD& h);

// Floating-point oracle for the extended Cauchy index: sweeps the real
// line through every real pole of H (and through infinity, via a Moebius
// relocation when H is improper) and counts signed eigenvalue jumps.
// epsilon <= 0 selects the default 1e-6 x (minimal pole separation).
int cauchy_sweep(const LeftMFD& h, double epsilon = 0.0, int samples = 2);

}  // namespace recip

#endif
