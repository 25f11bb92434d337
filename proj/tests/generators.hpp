#ifndef RECIP_TESTS_GENERATORS_HPP
#define RECIP_TESTS_GENERATORS_HPP

#include <random>

#include "recip/mfd.hpp"
#include "recip/polymat.hpp"
#include "recip/realization.hpp"

namespace recip::gen {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// integer coefficient in [-3, 3], the default trial distribution
inline Rat coeff(Rng& rng) { return Rat(rand_int(rng, -3, 3)); }

inline Poly poly(Rng& rng, int max_deg) {
  std::vector<Rat> c(size_t(max_deg) + 1);
  for (auto& x : c) x = coeff(rng);
  return Poly(std::move(c));
}

inline Poly nonzero_poly(Rng& rng, int max_deg) {
  for (;;) {
    Poly p = poly(rng, max_deg);
    if (!p.is_zero()) return p;
  }
}

inline RatMat ratmat(Rng& rng, int rows, int cols) {
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = coeff(rng);
  return m;
}

inline PolyMatrix polymat(Rng& rng, int rows, int cols, int max_deg) {
  PolyMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = poly(rng, max_deg);
  return m;
}

inline PolyMatrix sym_polymat(Rng& rng, int n, int max_deg) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Poly p = poly(rng, max_deg);
      m.at(i, j) = p;
      m.at(j, i) = p;
    }
  return m;
}

// (P, Q) with Q P^T = P Q^T, so the Bezoutian numerator divides by z - w.
// Scalars commute; for n > 1 take P = Q S with S a symmetric polynomial
// matrix.
inline std::pair<PolyMatrix, PolyMatrix> compatible_pair(Rng& rng, int n, int max_deg) {
  if (n == 1) return {polymat(rng, 1, 1, max_deg), polymat(rng, 1, 1, max_deg)};
  int dq = max_deg / 2;
  PolyMatrix q = polymat(rng, n, n, dq);
  PolyMatrix p = q * sym_polymat(rng, n, max_deg - dq);
  return {p, q};
}

// Random signature-symmetric state matrices: A = S Sigma with S symmetric
// gives A Sigma = Sigma A^T.
inline std::pair<RatMat, RatMat> sig_sym_pair(Rng& rng, int d) {
  std::vector<Rat> diag(static_cast<size_t>(d));
  for (auto& x : diag) x = rand_int(rng, 0, 1) ? Rat(1) : Rat(-1);
  RatMat sigma = RatMat::diagonal(diag);
  RatMat s(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat v = coeff(rng);
      s.at(i, j) = v;
      s.at(j, i) = v;
    }
  return {s * sigma, sigma};
}

// Proper symmetric transfer function with McMillan degree at most d, as the
// MFD of a random signature-symmetric realization.
inline LeftMFD proper_symmetric_mfd(Rng& rng, int n, int d) {
  auto [a, sigma] = sig_sym_pair(rng, d);
  RatMat c = ratmat(rng, n, d);
  RatMat b = sigma * c.transpose();
  RatMat dm(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat v = coeff(rng);
      dm.at(i, j) = v;
      dm.at(j, i) = v;
    }
  return transfer_function(StateSpace(a, b, c, dm));
}

}  // namespace recip::gen

#endif
