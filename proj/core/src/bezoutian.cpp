#include "recip/bezoutian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "recip/sturm.hpp"

namespace recip {

BezoutianMatrix bezoutian(const PolyMatrix& p, const PolyMatrix& q) {
  const int n = p.rows();
  if (p.cols() != n || q.rows() != n || q.cols() != n)
    throw std::invalid_argument("bezoutian: P, Q must be square of equal size");
  const int m = std::max(p.max_degree(), q.max_degree());
  BezoutianMatrix bz;
  bz.n = n;
  bz.m = std::max(m, 0);
  bz.data = RatMat(bz.m * n, bz.m * n);
  if (m <= 0) {
    // constant P, Q: numerator is constant; divisibility forces it to vanish
    RatMat num = q.coeff(0) * p.coeff(0).transpose() - p.coeff(0) * q.coeff(0).transpose();
    if (!num.is_zero())
      throw std::invalid_argument("bezoutian: numerator not divisible by (z - w)");
    return bz;
  }
  // N(z,w) = sum_{a,b} (Q_a P_b^T - P_a Q_b^T) z^a w^b, as z-coefficients
  // N_a(w) = sum_b C_{ab} w^b.
  std::vector<RatMat> pc(size_t(m) + 1), qc(size_t(m) + 1);
  for (int k = 0; k <= m; ++k) {
    pc[size_t(k)] = p.coeff(k);
    qc[size_t(k)] = q.coeff(k);
  }
  // nz[a][b] = coefficient matrix of z^a w^b
  std::vector<std::vector<RatMat>> nz(size_t(m) + 1,
                                      std::vector<RatMat>(size_t(m) + 1, RatMat(n, n)));
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b)
      nz[size_t(a)][size_t(b)] =
          qc[size_t(a)] * pc[size_t(b)].transpose() - pc[size_t(a)] * qc[size_t(b)].transpose();
  // Synthetic division by (z - w): quotient c_{a}(w) for a = m-1 .. 0 with
  // c_{m-1} = N_m, c_{a-1} = N_a + w c_a; remainder N_0 + w c_0 = N(w,w).
  // Quotient coefficient of z^a w^b lands in block (a+1, b+1).
  std::vector<std::vector<RatMat>> c(size_t(m), std::vector<RatMat>(size_t(m) + 1, RatMat(n, n)));
  for (int a = m - 1; a >= 0; --a) {
    for (int b = 0; b <= m; ++b) c[size_t(a)][size_t(b)] = nz[size_t(a) + 1][size_t(b)];
    if (a + 1 < m)
      for (int b = 1; b <= m; ++b)
        c[size_t(a)][size_t(b)] = c[size_t(a)][size_t(b)] + c[size_t(a) + 1][size_t(b) - 1];
  }
  // remainder check: N_0(w) + w c_0(w) == 0
  for (int b = 0; b <= m + 1; ++b) {
    RatMat rem(n, n);
    if (b <= m) rem = rem + nz[0][size_t(b)];
    if (b >= 1 && b - 1 <= m) rem = rem + c[0][size_t(b) - 1];
    if (!rem.is_zero())
      throw std::invalid_argument("bezoutian: numerator not divisible by (z - w)");
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) bz.data.set_block(a * n, b * n, c[size_t(a)][size_t(b)]);
  return bz;
}

GammaDelta gamma_delta_bez(const LeftMFD& h) {
  if (!is_symmetric_tf(h))
    throw std::invalid_argument("gamma_delta_bez: transfer function not symmetric");
  BezoutianMatrix bz = bezoutian(h.P, h.Q);
  GammaDelta gd;
  gd.bez_inertia = inertia(bz.data);
  gd.gamma = gd.bez_inertia.signature();
  gd.delta = gd.bez_inertia.rank();
  return gd;
}

namespace {

// Eigenvalues of H(x) = Qt(x)^{-1} Pt(x), symmetrized, in double precision.
Eigen::VectorXd eigs_at(const PolyMatrix& pt, const PolyMatrix& qt, double x) {
  Eigen::MatrixXcd qv = qt.eval(std::complex<double>(x, 0));
  Eigen::MatrixXcd pv = pt.eval(std::complex<double>(x, 0));
  Eigen::MatrixXd hv = qv.real().partialPivLu().solve(pv.real());
  Eigen::MatrixXd sym = (hv + hv.transpose()) / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  return es.eigenvalues();
}

int count_divergent_positive(const Eigen::VectorXd& e, double threshold) {
  int c = 0;
  for (int i = 0; i < e.size(); ++i)
    if (e[i] > threshold) ++c;
  return c;
}

}  // namespace

int cauchy_sweep(const LeftMFD& h, double epsilon, int samples) {
  if (!is_symmetric_tf(h))
    throw std::invalid_argument("cauchy_sweep: transfer function not symmetric");
  if (samples < 1) throw std::invalid_argument("cauchy_sweep: samples must be >= 1");
  // Reduce to the coprime description; relocate any pole at infinity first.
  LeftMFD cur = h;
  if (!is_proper(cur)) {
    RatFunMatrix f = RatFunMatrix::from_mfd(cur);
    cur = mobius_transform(cur, find_regular_point(f));
  }
  CoprimeDecomposition cd = coprime_decompose(cur.P, cur.Q);
  Poly poledet = cd.Qtilde.det();
  std::vector<double> poles = real_roots(poledet);
  if (poles.empty()) return 0;
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < poles.size(); ++i) gap = std::min(gap, poles[i] - poles[i - 1]);
  if (!std::isfinite(gap)) gap = 1.0;
  double eps = epsilon > 0 ? epsilon : 1e-6 * gap;
  if (eps >= gap / 4)
    throw std::invalid_argument("cauchy_sweep: epsilon too large for the pole spacing");
  int total = 0;
  for (double lam : poles) {
    int contrib = 0;
    for (int s = 0; s < samples; ++s) {
      double e = eps / std::pow(2.0, s);
      double threshold = 1.0 / std::sqrt(e);
      int right = count_divergent_positive(eigs_at(cd.Ptilde, cd.Qtilde, lam + e), threshold);
      int left = count_divergent_positive(eigs_at(cd.Ptilde, cd.Qtilde, lam - e), threshold);
      int c = right - left;
      if (s == 0) {
        contrib = c;
      } else if (c != contrib) {
        throw std::runtime_error(
            "cauchy_sweep: jump count unstable across epsilon refinement; "
            "use a smaller epsilon");
      }
    }
    total += contrib;
  }
  return total;
}

}  // namespace recip
