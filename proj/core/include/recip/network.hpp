#ifndef RECIP_NETWORK_HPP
#define RECIP_NETWORK_HPP

#include "recip/realization.hpp"

namespace recip {

// Hybrid description of the resistor-transformer part of an RLCT network
// together with the storage-element values.  Index groups: the n external
// ports, the d1 "a"-group storage ports (state variables: inductor currents
// where sigma1 = -1, capacitor voltages where sigma1 = +1, with values
// lambda1), and the d2 "b"-group storage ports (values lambda2, signs
// sigma2).  The interconnection signs e2a = S1 e1a, r2a = -S1 r1a,
// r2b = S2 r1b, e2b = -S2 e1b are baked into the extraction formulas.
struct NetworkData {
  RatMat M11, M12, M21, M22, M23;
  std::vector<Rat> sigmaE, sigma1, sigma2;  // +-1 diagonals
  std::vector<Rat> lambda1, lambda2;        // positive diagonals

  int ports() const { return M11.rows(); }
  int group_a() const { return int(sigma1.size()); }
  int group_b() const { return int(sigma2.size()); }
  RatMat sigma_e_mat() const { return RatMat::diagonal(sigmaE); }
  RatMat sigma1_mat() const { return RatMat::diagonal(sigma1); }
  RatMat sigma2_mat() const { return RatMat::diagonal(sigma2); }
  RatMat lambda1_mat() const { return RatMat::diagonal(lambda1); }
  RatMat lambda2_mat() const { return RatMat::diagonal(lambda2); }
};

// Checks every reciprocity relation of the hybrid matrix:
//   M11 Se and M22 S1 symmetric, M21 Se = -S1 M12^T, M23 S2 = S1 M23,
// plus dimensions, +-1 signatures, and positive storage values.  Throws a
// named diagnostic on the first violation; returns the data unchanged.
const NetworkData& validate_network(const NetworkData& data);

struct OmegaPair {
  RatMat omega;            // Lambda1 + S1 M23 S2 Lambda2 S2 M23^T S1, exact
  Eigen::MatrixXd half;    // symmetric positive-definite square root
};

// Requires validated data; throws if Omega is not positive definite (exact
// inertia test).  The square root is the single floating-point step; it is
// re-symmetrized and commutes with sigma1 to about 1e-10.
OmegaPair omega(const NetworkData& data);

struct NetworkRealization {
  // Exact rational signature-symmetric realization (diagonal weights),
  // obtained from (At, Bt, Ct, Dt) by a rational congruence on the state.
  SignatureRealization exact;
  // Balanced coordinates A = W^{1/2} At W^{-1/2} etc., where the signature
  // matrix is sigma1 itself; floating point because of the square root.
  Eigen::MatrixXd A, B, C, D;
  RatMat sigma;  // sigma1
};

NetworkRealization network_realization(const NetworkData& data);

struct BoundsReport {
  int piBez = 0, nuBez = 0;
  int zeta = 0;
  int minCapacitors = 0, minInductors = 0;
  int gamma = 0, delta = 0;
  int rlctgStorageCount = 0;
};

// Lower bounds on the element counts of any RLCT network realizing the
// behavior P u = Q y: minCapacitors = pi(Bez) + zeta, minInductors =
// nu(Bez) + zeta, and the RLCTG storage count rank(Bez) + zeta.
BoundsReport element_bounds(const PolyMatrix& p, const PolyMatrix& q);

}  // namespace recip

#endif
