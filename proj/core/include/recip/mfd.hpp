#ifndef RECIP_MFD_HPP
#define RECIP_MFD_HPP

#include <optional>

#include "recip/inertia.hpp"
#include "recip/polymat.hpp"

namespace recip {

// Left matrix-fraction description H = Q^{-1} P with Q square nonsingular.
struct LeftMFD {
  PolyMatrix Q, P;

  LeftMFD() = default;
  LeftMFD(PolyMatrix q, PolyMatrix p);

  int ports() const { return Q.rows(); }
  static LeftMFD scalar(const Poly& q, const Poly& p) {
    return LeftMFD(PolyMatrix(q), PolyMatrix(p));
  }
};

// Markov parameters of a proper H:  H = Wminus1 + W[0]/xi + W[1]/xi^2 + ...
struct MarkovSeries {
  RatMat Wminus1;
  std::vector<RatMat> W;
};

// Block Hankel matrix of order r with blocks W[i+j].
struct HankelMatrix {
  int r = 0;
  RatMat data;
};

// Rational matrix function num/den with a scalar common denominator.
// Used for constant left/right multiples S^T H S of MFDs, which need not
// be square.
struct RatFunMatrix {
  PolyMatrix num;
  Poly den;

  static RatFunMatrix from_mfd(const LeftMFD& h);
  RatFunMatrix left_mul(const RatMat& s) const;   // S * this
  RatFunMatrix right_mul(const RatMat& s) const;  // this * S
  RatFunMatrix plus_const(const RatMat& x) const;

  bool is_proper() const;  // per-entry reduced degree test
  bool is_finite_at(const Rat& a) const;
  // Substitution xi -> a + 1/w; requires is_finite_at(a).
  RatFunMatrix mobius(const Rat& a) const;
  MarkovSeries markov(int order) const;  // requires proper
  // McMillan degree via Hankel rank stabilization (Moebius-reduces first
  // when improper).
  int mcmillan() const;
};

bool is_proper(const LeftMFD& h);
bool is_symmetric_tf(const LeftMFD& h);

// Requires is_proper(h); expands the series to W[order].
MarkovSeries markov(const LeftMFD& h, int order);

// Assembles Hankel blocks W[i+j] (shift = 0) or W[i+j+1] (shift = 1).
HankelMatrix hankel(const MarkovSeries& s, int r, int shift = 0);

// Primary route: deg det Qtilde of the coprime factorization (note B1),
// after a Moebius reduction when improper.
int mcmillan_degree(const LeftMFD& h);

// Hankel verification route for the McMillan degree, with the rank sweep
// stopped at the a priori bound r = deg det Q.
int mcmillan_degree_hankel(const LeftMFD& h);

// pi - nu of the stabilized Hankel matrix; requires proper and symmetric.
int gamma_hankel(const LeftMFD& h);

// MFD of xi -> H(pivot + 1/w); requires pivot not a pole of H.
LeftMFD mobius_transform(const LeftMFD& h, const Rat& pivot);

// A rational point where H is finite (tries small integers outward).
Rat find_regular_point(const RatFunMatrix& h);

}  // namespace recip

#endif
