#include "recip/inertia.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace recip {

namespace {

struct PivotRecord {
  int pos;        // starting index in the eliminated matrix
  bool pair;      // true: 2x2 hyperbolic pivot, false: 1x1
  Rat value;      // diagonal pivot d, or off-diagonal b for a pair
};

// Symmetric congruence elimination A -> G^T A G with 1x1 pivots and 2x2
// hyperbolic pivots for all-zero diagonals.  acc_inv accumulates the
// inverse of the congruence product so that M = acc_inv^T * D * acc_inv.
std::vector<PivotRecord> eliminate(RatMat a, RatMat* acc_inv) {
  const int n = a.rows();
  std::vector<PivotRecord> pivots;
  auto sym_swap = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (int k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, j));
    if (acc_inv)
      for (int k = 0; k < n; ++k) std::swap(acc_inv->at(i, k), acc_inv->at(j, k));
  };
  int k = 0;
  while (k < n) {
    int diag = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, i) != 0) { diag = i; break; }
    if (diag >= 0) {
      sym_swap(k, diag);
      Rat d = a.at(k, k);
      for (int j = k + 1; j < n; ++j) {
        if (a.at(k, j) == 0) continue;
        Rat f = a.at(k, j) / d;
        // col_j -= f * col_k (and symmetric row update)
        for (int i = k; i < n; ++i) a.at(i, j) -= f * a.at(i, k);
        for (int i = k; i < n; ++i) a.at(j, i) -= f * a.at(k, i);
        if (acc_inv)
          for (int c = 0; c < n; ++c) acc_inv->at(k, c) += f * acc_inv->at(j, c);
      }
      pivots.push_back({k, false, d});
      ++k;
      continue;
    }
    // all trailing diagonal entries are zero
    int pi = -1, pj = -1;
    for (int i = k; i < n && pi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a.at(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;  // trailing block is zero
    sym_swap(k, pi);
    sym_swap(k + 1, pj);
    Rat b = a.at(k, k + 1);
    for (int j = k + 2; j < n; ++j) {
      // pivot block [[0,b],[b,0]]: col_j -= (a(k+1,j)/b) col_k + (a(k,j)/b) col_{k+1}
      Rat f0 = a.at(k + 1, j) / b;
      Rat f1 = a.at(k, j) / b;
      if (f0 == 0 && f1 == 0) continue;
      for (int i = k; i < n; ++i) a.at(i, j) -= f0 * a.at(i, k) + f1 * a.at(i, k + 1);
      for (int i = k; i < n; ++i) a.at(j, i) -= f0 * a.at(k, i) + f1 * a.at(k + 1, i);
      if (acc_inv)
        for (int c = 0; c < n; ++c) {
          acc_inv->at(k, c) += f0 * acc_inv->at(j, c);
          acc_inv->at(k + 1, c) += f1 * acc_inv->at(j, c);
        }
    }
    pivots.push_back({k, true, b});
    k += 2;
  }
  return pivots;
}

}  // namespace

InertiaResult inertia(const RatMat& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("inertia: matrix not symmetric");
  InertiaResult res;
  for (const auto& p : eliminate(m, nullptr)) {
    if (p.pair) {
      ++res.positive;
      ++res.negative;
    } else if (p.value > 0) {
      ++res.positive;
    } else {
      ++res.negative;
    }
  }
  res.zero = m.rows() - res.positive - res.negative;
  return res;
}

RatMat CongruenceWitness::reconstruct() const {
  return transform.transpose() * RatMat::diagonal(weights) * transform;
}

Eigen::MatrixXd CongruenceWitness::real_transform() const {
  Eigen::MatrixXd l = transform.to_double();
  for (int i = 0; i < l.rows(); ++i) l.row(i) *= std::sqrt(std::abs(to_double(weights[size_t(i)])));
  return l;
}

CongruenceWitness congruence_diagonalize(const RatMat& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("congruence_diagonalize: not symmetric");
  const int n = m.rows();
  RatMat acc_inv = RatMat::identity(n);
  auto pivots = eliminate(m, &acc_inv);
  // Split each hyperbolic block [[0,b],[b,0]] = J^T diag(b,-b) J rationally
  // with J = [[1,1/2],[1,-1/2]], then reorder rows as (+, -, 0).
  RatMat j = RatMat::identity(n);
  std::vector<Rat> w(size_t(n), Rat(0));
  for (const auto& p : pivots) {
    if (p.pair) {
      j.at(p.pos, p.pos) = 1;
      j.at(p.pos, p.pos + 1) = Rat(1, 2);
      j.at(p.pos + 1, p.pos) = 1;
      j.at(p.pos + 1, p.pos + 1) = Rat(-1, 2);
      w[size_t(p.pos)] = p.value;
      w[size_t(p.pos) + 1] = -p.value;
    } else {
      w[size_t(p.pos)] = p.value;
    }
  }
  RatMat l_pre = j * acc_inv;
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    auto cls = [&](int i) { return w[size_t(i)] > 0 ? 0 : (w[size_t(i)] < 0 ? 1 : 2); };
    return cls(x) < cls(y);
  });
  CongruenceWitness cw;
  cw.transform = RatMat(n, n);
  cw.weights.resize(size_t(n));
  for (int i = 0; i < n; ++i) {
    cw.weights[size_t(i)] = w[size_t(order[size_t(i)])];
    for (int c = 0; c < n; ++c) cw.transform.at(i, c) = l_pre.at(order[size_t(i)], c);
  }
  for (const auto& wi : cw.weights) {
    if (wi > 0) ++cw.inertia.positive;
    else if (wi < 0) ++cw.inertia.negative;
    else ++cw.inertia.zero;
  }
  return cw;
}

InertiaResult project_inertia(const RatMat& p, const RatMat& s) {
  if (p.cols() != s.rows()) throw std::invalid_argument("project_inertia: shape mismatch");
  return inertia(s.transpose() * p * s);
}

SylvesterBoundsReport sylvester_bounds_check(const RatMat& p, const RatMat& s) {
  SylvesterBoundsReport rep;
  rep.inertia_p = inertia(p);
  rep.inertia_sps = project_inertia(p, s);
  rep.nullity_st = s.transpose().nullity();
  rep.pi_lower_holds = rep.inertia_p.positive - rep.nullity_st <= rep.inertia_sps.positive;
  rep.pi_upper_holds = rep.inertia_sps.positive <= rep.inertia_p.positive;
  rep.nu_lower_holds = rep.inertia_p.negative - rep.nullity_st <= rep.inertia_sps.negative;
  rep.nu_upper_holds = rep.inertia_sps.negative <= rep.inertia_p.negative;
  return rep;
}

namespace {

// Extends the full-column-rank matrix x2 to a basis of R^n with standard
// basis vectors; returns the completion columns.
RatMat complete_basis(const RatMat& x2, int n) {
  RatMat acc = x2;
  RatMat ext(n, n - x2.cols());
  int k = 0, cur = acc.rank();
  for (int i = 0; i < n && k < ext.cols(); ++i) {
    RatMat e(n, 1);
    e.at(i, 0) = 1;
    RatMat trial = RatMat::hstack(acc, e);
    if (trial.rank() > cur) {
      acc = trial;
      ++cur;
      ext.at(i, k) = 1;
      ++k;
    }
  }
  return ext;
}

// Case (a): weights = diag(dp, -dn) with dp, dn positive diagonal, s full
// column rank.  Builds the proof's Z with the weighted normal-equation
// pseudoinverse and reads the inertia off diag(X11, -Gram).
InertiaResult case_a(const std::vector<Rat>& dp, const std::vector<Rat>& dn, const RatMat& s) {
  int n1 = int(dp.size()), n2 = int(dn.size());
  RatMat s1 = s.block(0, 0, n1, s.cols());
  RatMat s2 = s.block(n1, 0, n2, s.cols());
  RatMat y2 = s1.nullspace();
  RatMat y1 = complete_basis(y2, s.cols());
  RatMat dnm = RatMat::diagonal(dn);
  RatMat s2y2 = s2 * y2;
  RatMat gram = s2y2.transpose() * dnm * s2y2;
  InertiaResult gi = inertia(gram);
  if (gi.positive != gram.rows())
    throw std::logic_error("case_a: weighted Gram matrix not positive definite");
  RatMat z(s.cols(), s.cols());
  if (y1.cols() > 0) {
    RatMat corr(y2.cols(), y1.cols());
    if (y2.cols() > 0)
      corr = gram.inverse() * (s2y2.transpose() * (dnm * (s2 * y1)));
    z.set_block(0, 0, y1 - y2 * corr);
  }
  z.set_block(0, y1.cols(), y2);
  RatMat sz = s * z;
  RatMat proj = sz.transpose() *
                RatMat::block_diag({RatMat::diagonal(dp), -dnm}) * sz;
  // assert the block-diagonal structure the proof establishes
  RatMat off = proj.block(0, y1.cols(), y1.cols(), y2.cols());
  if (!off.is_zero()) throw std::logic_error("case_a: off-diagonal block nonzero");
  RatMat x11 = proj.block(0, 0, y1.cols(), y1.cols());
  InertiaResult res = inertia(x11);
  res.negative += y2.cols();
  res.zero = s.cols() - res.positive - res.negative;
  return res;
}

}  // namespace

InertiaResult lemma_inertia_constructive(const RatMat& p, const RatMat& s) {
  if (!p.is_symmetric()) throw std::invalid_argument("lemma_inertia_constructive: P not symmetric");
  if (p.cols() != s.rows()) throw std::invalid_argument("lemma_inertia_constructive: shapes");
  // Case (c): P = L^T diag(w) L; keep nonzero-weight rows.
  CongruenceWitness cw = congruence_diagonalize(p);
  int r = cw.inertia.rank();
  RatMat r1 = cw.transform.block(0, 0, r, p.cols());
  std::vector<Rat> wp, wn;
  for (int i = 0; i < r; ++i)
    (cw.weights[size_t(i)] > 0 ? wp : wn).push_back(cw.weights[size_t(i)] > 0
                                                        ? cw.weights[size_t(i)]
                                                        : Rat(-cw.weights[size_t(i)]));
  RatMat sp = r1 * s;  // S^T P S == (R1 S)^T diag(wp,-wn) (R1 S)
  // Case (b): restrict to a complement of the null space of sp.
  RatMat x2 = sp.nullspace();
  RatMat x1 = complete_basis(x2, sp.cols());
  InertiaResult res;
  if (x1.cols() > 0) res = case_a(wp, wn, sp * x1);
  res.zero = s.cols() - res.positive - res.negative;
  return res;
}

}  // namespace recip
