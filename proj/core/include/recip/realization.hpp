#ifndef RECIP_REALIZATION_HPP
#define RECIP_REALIZATION_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "recip/bezoutian.hpp"
#include "recip/mfd.hpp"

namespace recip {

// dx/dt = Ax + Bu, y = Cx + Du.
struct StateSpace {
  RatMat A, B, C, D;

  StateSpace() = default;
  StateSpace(RatMat a, RatMat b, RatMat c, RatMat d);
  int states() const { return A.rows(); }
  int ports() const { return D.rows(); }
};

// Signature-symmetric realization, stored with a rational diagonal weight
// matrix W = diag(weights) instead of the +-1 signature itself:
//   A W = W A^T,  B = W C^T,  D = D^T.
// The signature is sign(W); scaling the states by diag(sqrt|w|) turns the
// relations into the textbook A Sigma = Sigma A^T, B = Sigma C^T, but that
// scaling needs square roots, so it is kept out of the exact data.  A plain
// realization with Sigma itself is the weights = +-1 special case.
struct SignatureRealization {
  StateSpace ss;
  std::vector<Rat> weights;  // one nonzero rational per state

  SignatureRealization() = default;
  SignatureRealization(StateSpace s, std::vector<Rat> w);
  RatMat sigma() const;  // diag(sign(weights))
  RatMat weight_matrix() const;
  int pi() const;  // states of even parity (capacitors)
  int nu() const;  // states of odd parity (inductors)
};

// Exact left MFD of D + C(xi I - A)^{-1} B: Q = chi I, P = C adj(xi I - A) B
// + D chi with chi the characteristic polynomial.  Proper by construction.
LeftMFD transfer_function(const StateSpace& ss);

// Characteristic polynomial of a square rational matrix (Faddeev-LeVerrier,
// exact); also used for the uncontrollable-mode polynomial.
Poly char_poly(const RatMat& a);

bool is_signature_symmetric(const SignatureRealization& sr);

// Basis (as columns) of the controllable subspace im[B AB ... A^{d-1}B].
RatMat controllable_subspace(const RatMat& a, const RatMat& b);
// Basis of the unobservable subspace ker[C; CA; ...; CA^{d-1}].
RatMat unobservable_subspace(const RatMat& a, const RatMat& c);

// Characteristic polynomial of A restricted to an A-invariant subspace
// spanned by the (full-column-rank) columns of v.
Poly restricted_char_poly(const RatMat& a, const RatMat& v);

// char(A) / char(A restricted to controllable + unobservable states): the
// modes that are uncontrollable yet visible at the output.  This is the
// polynomial that must match det F for the realization to reproduce the
// autonomous part of the behavior.
Poly hidden_observable_poly(const StateSpace& ss);

struct Mode {
  std::complex<double> lambda;
  std::optional<Rat> exact;  // set when lambda is a rational eigenvalue
  int multiplicity = 0;      // PBH rank deficiency of [lambda I - A, B]
};

// PBH test over the eigenvalues of A.  Rational eigenvalues are handled
// exactly; the rest numerically with the given singular-value tolerance.
std::vector<Mode> uncontrollable_modes(const RatMat& a, const RatMat& b,
                                       double tol = 1e-9);

bool same_transfer(const LeftMFD& a, const LeftMFD& b);

struct Theorem5Report {
  bool signature_symmetric = false;
  bool transfer_match = false;
  bool mode_match = false;
  std::string diagnosis;  // empty when the realization realizes the behavior
  bool realizes() const { return signature_symmetric && transfer_match && mode_match; }

  int pi_sigma = 0, nu_sigma = 0;
  int pi_bez = 0, nu_bez = 0;
  int zeta = 0;
  int pi_slack = 0, nu_slack = 0;  // pi_sigma - (pi_bez + zeta), likewise nu
  bool pi_holds = false, nu_holds = false;
  bool holds() const { return pi_holds && nu_holds; }
};

// Checks pi(Sigma) >= pi(Bez(Q,P)) + zeta and nu(Sigma) >= nu(Bez) + zeta.
// With require_realization (the default) a realization that fails the
// behavior checks is rejected with a diagnosis; pass false to compute the
// counts anyway, e.g. for realizations padded with extra states.
Theorem5Report verify_theorem5(const SignatureRealization& sr, const LeftMFD& behavior,
                               bool require_realization = true);

struct Theorem9Report {
  int gamma_h = 0, delta_h = 0;
  int gamma_shs = 0, delta_shs = 0;
  int delta_sh = 0;
  // (5): gamma(H) + delta(H) >= gamma(S^T H S) - delta(S^T H S) + 2 delta(S^T H)
  // (6): gamma(H) - delta(H) <= gamma(S^T H S) + delta(S^T H S) - 2 delta(S^T H)
  int lhs5 = 0, rhs5 = 0, lhs6 = 0, rhs6 = 0;
  bool ineq5_holds = false, ineq6_holds = false;
  bool holds() const { return ineq5_holds && ineq6_holds; }
};

Theorem9Report check_theorem9(const LeftMFD& h, const RatMat& s);

// Minimal signature-symmetric realization of a proper symmetric behavior:
// d = rank Bez + 2 zeta, pi(Sigma) = pi(Bez) + zeta, nu(Sigma) = nu(Bez) +
// zeta.  The controllable part comes from a congruence factorization of the
// stabilized Hankel matrix; each simple rational root lambda of det F adds
// an autonomous two-state block (lambda I_2, weights (1,-1)) that leaves
// the transfer function untouched.  Repeated, irrational, or complex roots
// of det F are rejected as unsupported.
SignatureRealization minimal_signature_realization(const LeftMFD& behavior);

}  // namespace recip

#endif
