#include "recip/network.hpp"

#include <Eigen/Eigenvalues>

namespace recip {

namespace {

bool all_pm_one(const std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (x != 1 && x != -1) return false;
  return true;
}

}  // namespace

const NetworkData& validate_network(const NetworkData& data) {
  const int n = data.ports(), d1 = data.group_a(), d2 = data.group_b();
  if (data.M11.cols() != n) throw std::invalid_argument("network: M11 not square");
  if (data.M12.rows() != n || data.M12.cols() != d1)
    throw std::invalid_argument("network: M12 must be ports x groupA");
  if (data.M21.rows() != d1 || data.M21.cols() != n)
    throw std::invalid_argument("network: M21 must be groupA x ports");
  if (data.M22.rows() != d1 || data.M22.cols() != d1)
    throw std::invalid_argument("network: M22 must be groupA x groupA");
  if (data.M23.rows() != d1 || data.M23.cols() != d2)
    throw std::invalid_argument("network: M23 must be groupA x groupB");
  if (int(data.sigmaE.size()) != n)
    throw std::invalid_argument("network: sigmaE size must match ports");
  if (int(data.lambda1.size()) != d1 || int(data.lambda2.size()) != d2)
    throw std::invalid_argument("network: lambda sizes must match storage groups");
  if (!all_pm_one(data.sigmaE) || !all_pm_one(data.sigma1) || !all_pm_one(data.sigma2))
    throw std::invalid_argument("network: signature entries must be +-1");
  for (const Rat& x : data.lambda1)
    if (x <= 0) throw std::invalid_argument("network: lambda1 entries must be positive");
  for (const Rat& x : data.lambda2)
    if (x <= 0) throw std::invalid_argument("network: lambda2 entries must be positive");
  RatMat se = data.sigma_e_mat(), s1 = data.sigma1_mat(), s2 = data.sigma2_mat();
  if (!(data.M11 * se).is_symmetric())
    throw std::invalid_argument("network: M11 sigmaE is not symmetric");
  if (!(data.M22 * s1).is_symmetric())
    throw std::invalid_argument("network: M22 sigma1 is not symmetric");
  if (data.M21 * se != -(s1 * data.M12.transpose()))
    throw std::invalid_argument("network: M21 sigmaE != -sigma1 M12^T");
  if (data.M23 * s2 != s1 * data.M23)
    throw std::invalid_argument("network: M23 sigma2 != sigma1 M23");
  return data;
}

OmegaPair omega(const NetworkData& data) {
  RatMat s1 = data.sigma1_mat(), s2 = data.sigma2_mat();
  RatMat om = data.lambda1_mat() +
              s1 * data.M23 * s2 * data.lambda2_mat() * s2 * data.M23.transpose() * s1;
  InertiaResult in = inertia(om);
  if (in.positive != om.rows())
    throw std::invalid_argument("network: Omega is not positive definite");
  if (!(om * s1).is_symmetric())
    throw std::logic_error("network: Omega sigma1 lost symmetry");
  if (om.rows() == 0) return {std::move(om), Eigen::MatrixXd(0, 0)};
  Eigen::MatrixXd od = om.to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(od);
  Eigen::MatrixXd v = es.eigenvectors();
  Eigen::MatrixXd sq = es.eigenvalues().cwiseSqrt().asDiagonal();
  Eigen::MatrixXd half = v * sq * v.transpose();
  half = (half + half.transpose()) / 2;
  Eigen::MatrixXd s1d = s1.to_double();
  if (half.size() > 0 && (half * s1d - s1d * half).cwiseAbs().maxCoeff() > 1e-10)
    throw std::logic_error("network: Omega^(1/2) does not commute with sigma1");
  return {std::move(om), std::move(half)};
}

NetworkRealization network_realization(const NetworkData& data) {
  validate_network(data);
  OmegaPair op = omega(data);
  RatMat se = data.sigma_e_mat(), s1 = data.sigma1_mat();
  RatMat oinv = op.omega.inverse();
  RatMat at = -(oinv * s1 * data.M22 * s1);
  RatMat bt = -(oinv * s1 * data.M21 * se);
  RatMat ct = data.M12 * s1;
  RatMat dt = data.M11 * se;

  // (At, Bt, Ct) satisfies At W = W At^T, Bt = W Ct^T with the symmetric
  // nondiagonal weight W = Omega^{-1} sigma1; a rational congruence on the
  // state diagonalizes W and gives the exact realization.
  RatMat w = oinv * s1;
  if (!w.is_symmetric()) throw std::logic_error("network: Omega^{-1} sigma1 not symmetric");
  CongruenceWitness cw = congruence_diagonalize(w);
  if (cw.inertia.zero != 0) throw std::logic_error("network: singular weight matrix");
  RatMat linv = cw.transform.inverse();
  RatMat t = linv.transpose();  // T W T^T = diag(cw.weights)
  NetworkRealization nr;
  nr.exact = SignatureRealization(
      StateSpace(t * at * t.inverse(), t * bt, ct * t.inverse(), dt), cw.weights);
  if (!is_signature_symmetric(nr.exact))
    throw std::logic_error("network: extracted realization not signature symmetric");

  Eigen::MatrixXd h = op.half;
  Eigen::MatrixXd hinv = h.inverse();
  nr.A = h * at.to_double() * hinv;
  nr.B = h * bt.to_double();
  nr.C = ct.to_double() * hinv;
  nr.D = dt.to_double();
  nr.sigma = s1;
  Eigen::MatrixXd s1d = s1.to_double();
  double err = 0;
  if (nr.A.size() > 0)
    err = std::max(err, (nr.A * s1d - s1d * nr.A.transpose()).cwiseAbs().maxCoeff());
  if (nr.B.size() > 0)
    err = std::max(err, (nr.B - s1d * nr.C.transpose()).cwiseAbs().maxCoeff());
  if (err > 1e-9)
    throw std::logic_error("network: balanced realization fails the 1e-9 symmetry check");
  return nr;
}

BoundsReport element_bounds(const PolyMatrix& p, const PolyMatrix& q) {
  if (p.rows() != p.cols() || q.rows() != q.cols() || p.rows() != q.rows())
    throw std::invalid_argument("element_bounds: P, Q must be square of equal size");
  if (normalrank(PolyMatrix::hstack(p, -q)) != p.rows())
    throw std::invalid_argument("element_bounds: [P -Q] must have full normal rank");
  LeftMFD behavior(q, p);
  if (!is_symmetric_tf(behavior))
    throw std::invalid_argument("element_bounds: behavior is not reciprocal");
  BoundsReport rep;
  InertiaResult bz = inertia(bezoutian(p, q).data);
  rep.piBez = bz.positive;
  rep.nuBez = bz.negative;
  rep.gamma = bz.signature();
  rep.delta = bz.rank();
  rep.zeta = zeta(p, q);
  rep.minCapacitors = rep.piBez + rep.zeta;
  rep.minInductors = rep.nuBez + rep.zeta;
  rep.rlctgStorageCount = rep.piBez + rep.nuBez + rep.zeta;
  return rep;
}

}  // namespace recip
