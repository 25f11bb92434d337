#include "recip/realization.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "recip/polymat.hpp"
#include "recip/sturm.hpp"

namespace recip {

StateSpace::StateSpace(RatMat a, RatMat b, RatMat c, RatMat d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
  if (A.rows() != A.cols()) throw std::invalid_argument("StateSpace: A not square");
  if (D.rows() != D.cols()) throw std::invalid_argument("StateSpace: D not square");
  if (B.rows() != A.rows() || C.cols() != A.rows() || B.cols() != D.cols() ||
      C.rows() != D.rows())
    throw std::invalid_argument("StateSpace: dimension mismatch");
}

SignatureRealization::SignatureRealization(StateSpace s, std::vector<Rat> w)
    : ss(std::move(s)), weights(std::move(w)) {
  if (int(weights.size()) != ss.states())
    throw std::invalid_argument("SignatureRealization: one weight per state required");
  for (const Rat& x : weights)
    if (x == 0) throw std::invalid_argument("SignatureRealization: zero weight");
}

RatMat SignatureRealization::sigma() const {
  std::vector<Rat> s;
  s.reserve(weights.size());
  for (const Rat& w : weights) s.push_back(Rat(sgn(w)));
  return RatMat::diagonal(s);
}

RatMat SignatureRealization::weight_matrix() const { return RatMat::diagonal(weights); }

int SignatureRealization::pi() const {
  return int(std::count_if(weights.begin(), weights.end(),
                           [](const Rat& w) { return w > 0; }));
}

int SignatureRealization::nu() const { return ss.states() - pi(); }

Poly char_poly(const RatMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const int d = a.rows();
  std::vector<Rat> c(size_t(d) + 1, Rat(0));
  c[size_t(d)] = 1;
  RatMat m = RatMat::identity(d);
  for (int k = 1; k <= d; ++k) {
    RatMat am = a * m;
    Rat tr(0);
    for (int i = 0; i < d; ++i) tr += am.at(i, i);
    c[size_t(d - k)] = -tr / k;
    m = am + RatMat::identity(d).scaled(c[size_t(d - k)]);
  }
  return Poly(std::move(c));
}

LeftMFD transfer_function(const StateSpace& ss) {
  const int d = ss.states(), n = ss.ports();
  if (d == 0) return LeftMFD(PolyMatrix::identity(n), PolyMatrix(ss.D));
  // Faddeev-LeVerrier: adj(xi I - A) = sum_k xi^{d-1-k} M_k with M_0 = I,
  // M_k = A M_{k-1} + c_{d-k} I, and chi = sum_k c_k xi^k.
  std::vector<Rat> c(size_t(d) + 1, Rat(0));
  c[size_t(d)] = 1;
  std::vector<RatMat> ms;
  ms.push_back(RatMat::identity(d));
  for (int k = 1; k <= d; ++k) {
    RatMat am = ss.A * ms.back();
    Rat tr(0);
    for (int i = 0; i < d; ++i) tr += am.at(i, i);
    c[size_t(d - k)] = -tr / k;
    if (k < d) ms.push_back(am + RatMat::identity(d).scaled(c[size_t(d - k)]));
  }
  Poly chi(c);
  PolyMatrix adj(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<Rat> e(size_t(d), Rat(0));
      for (int k = 0; k < d; ++k) e[size_t(d - 1 - k)] = ms[size_t(k)].at(i, j);
      adj.at(i, j) = Poly(std::move(e));
    }
  PolyMatrix p = PolyMatrix(ss.C) * adj * PolyMatrix(ss.B) + PolyMatrix(ss.D).scaled(chi);
  return LeftMFD(PolyMatrix::identity(n).scaled(chi), std::move(p));
}

bool is_signature_symmetric(const SignatureRealization& sr) {
  RatMat w = sr.weight_matrix();
  return (sr.ss.A * w).is_symmetric() && sr.ss.B == w * sr.ss.C.transpose() &&
         sr.ss.D.is_symmetric();
}

namespace {

// Greedy column-space basis: keep each column that raises the rank.
RatMat col_basis(const RatMat& m) {
  RatMat basis(m.rows(), 0);
  int rk = 0;
  for (int j = 0; j < m.cols(); ++j) {
    RatMat cand = RatMat::hstack(basis, m.block(0, j, m.rows(), 1));
    if (cand.rank() > rk) {
      basis = std::move(cand);
      ++rk;
    }
  }
  return basis;
}

}  // namespace

RatMat controllable_subspace(const RatMat& a, const RatMat& b) {
  const int d = a.rows();
  RatMat k = b, pw = b;
  for (int i = 1; i < d; ++i) {
    pw = a * pw;
    k = RatMat::hstack(k, pw);
  }
  if (d == 0) return RatMat(0, 0);
  return col_basis(k);
}

RatMat unobservable_subspace(const RatMat& a, const RatMat& c) {
  const int d = a.rows();
  if (d == 0) return RatMat(0, 0);
  RatMat o = c, pw = c;
  for (int i = 1; i < d; ++i) {
    pw = pw * a;
    o = RatMat::vstack(o, pw);
  }
  return o.nullspace();
}

Poly restricted_char_poly(const RatMat& a, const RatMat& v) {
  if (v.cols() == 0) return Poly(1);
  // v spans an A-invariant subspace, so A v = v A11 has an exact solution.
  RatMat a11 = v.solve(a * v);
  return char_poly(a11);
}

Poly hidden_observable_poly(const StateSpace& ss) {
  RatMat ctrb = controllable_subspace(ss.A, ss.B);
  RatMat unobs = unobservable_subspace(ss.A, ss.C);
  RatMat v = col_basis(RatMat::hstack(ctrb, unobs));
  Poly whole = char_poly(ss.A);
  Poly inner = restricted_char_poly(ss.A, v);
  auto [quot, rem] = Poly::divmod(whole, inner);
  if (!rem.is_zero())
    throw std::logic_error("hidden_observable_poly: restriction does not divide char poly");
  return quot;
}

std::vector<Mode> uncontrollable_modes(const RatMat& a, const RatMat& b, double tol) {
  const int d = a.rows();
  std::vector<Mode> modes;
  if (d == 0) return modes;
  Poly cp = char_poly(a);
  auto [rats, fully_split] = rational_roots(cp);
  std::vector<Rat> distinct;
  for (const Rat& r : rats)
    if (std::find(distinct.begin(), distinct.end(), r) == distinct.end())
      distinct.push_back(r);
  for (const Rat& lam : distinct) {
    RatMat pbh = RatMat::hstack(RatMat::identity(d).scaled(lam) - a, b);
    int def = d - pbh.rank();
    if (def > 0)
      modes.push_back({std::complex<double>(to_double(lam), 0.0), lam, def});
  }
  if (!fully_split) {
    // fall back to floating point for the irrational / complex eigenvalues
    Eigen::EigenSolver<Eigen::MatrixXd> es(a.to_double());
    std::vector<std::complex<double>> seen;
    for (const Rat& lam : distinct) seen.emplace_back(to_double(lam), 0.0);
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      std::complex<double> lam = es.eigenvalues()[i];
      bool dup = false;
      for (const auto& s : seen)
        if (std::abs(lam - s) < 1e-6) dup = true;
      if (dup) continue;
      seen.push_back(lam);
      Eigen::MatrixXcd pbh(d, d + b.cols());
      pbh << lam * Eigen::MatrixXcd::Identity(d, d) - a.to_double().cast<std::complex<double>>(),
          b.to_double().cast<std::complex<double>>();
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pbh);
      double thresh = tol * std::max(1.0, svd.singularValues()[0]);
      int rk = 0;
      for (int k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()[k] > thresh) ++rk;
      if (d - rk > 0) modes.push_back({lam, std::nullopt, d - rk});
    }
  }
  std::sort(modes.begin(), modes.end(), [](const Mode& x, const Mode& y) {
    if (x.lambda.real() != y.lambda.real()) return x.lambda.real() < y.lambda.real();
    return x.lambda.imag() < y.lambda.imag();
  });
  return modes;
}

bool same_transfer(const LeftMFD& a, const LeftMFD& b) {
  if (a.ports() != b.ports()) return false;
  RatFunMatrix fa = RatFunMatrix::from_mfd(a);
  RatFunMatrix fb = RatFunMatrix::from_mfd(b);
  return fa.num.scaled(fb.den) == fb.num.scaled(fa.den);
}

Theorem5Report verify_theorem5(const SignatureRealization& sr, const LeftMFD& behavior,
                               bool require_realization) {
  if (!is_proper(behavior))
    throw std::invalid_argument("verify_theorem5: behavior is not proper");
  Theorem5Report rep;
  rep.signature_symmetric = is_signature_symmetric(sr);
  rep.transfer_match = same_transfer(transfer_function(sr.ss), behavior);
  CoprimeDecomposition cd = coprime_decompose(behavior.P, behavior.Q);
  Poly fdet = cd.F.det().monic();
  rep.mode_match = hidden_observable_poly(sr.ss).monic() == fdet;
  if (!rep.signature_symmetric)
    rep.diagnosis = "realization is not signature symmetric";
  else if (!rep.transfer_match)
    rep.diagnosis = "transfer mismatch: C(xi I - A)^{-1}B + D differs from Q^{-1}P";
  else if (!rep.mode_match)
    rep.diagnosis = "mode mismatch: hidden observable modes differ from det F";
  if (require_realization && !rep.realizes())
    throw std::invalid_argument("verify_theorem5: " + rep.diagnosis);

  rep.pi_sigma = sr.pi();
  rep.nu_sigma = sr.nu();
  InertiaResult bz = inertia(bezoutian(behavior.P, behavior.Q).data);
  rep.pi_bez = bz.positive;
  rep.nu_bez = bz.negative;
  rep.zeta = cd.zeta;
  rep.pi_slack = rep.pi_sigma - rep.pi_bez - rep.zeta;
  rep.nu_slack = rep.nu_sigma - rep.nu_bez - rep.zeta;
  rep.pi_holds = rep.pi_slack >= 0;
  rep.nu_holds = rep.nu_slack >= 0;
  return rep;
}

Theorem9Report check_theorem9(const LeftMFD& h, const RatMat& s) {
  if (!is_symmetric_tf(h))
    throw std::invalid_argument("check_theorem9: transfer function not symmetric");
  if (s.rows() != h.ports())
    throw std::invalid_argument("check_theorem9: S row count must match H");
  Theorem9Report rep;
  GammaDelta gd = gamma_delta_bez(h);
  rep.gamma_h = gd.gamma;
  rep.delta_h = gd.delta;
  const int k = s.cols();
  if (k > 0) {
    RatFunMatrix f = RatFunMatrix::from_mfd(h);
    RatFunMatrix shs = f.left_mul(s.transpose()).right_mul(s);
    LeftMFD shs_mfd(PolyMatrix::identity(k).scaled(shs.den), shs.num);
    GammaDelta gds = gamma_delta_bez(shs_mfd);
    rep.gamma_shs = gds.gamma;
    rep.delta_shs = gds.delta;
    rep.delta_sh = f.left_mul(s.transpose()).mcmillan();
  }
  rep.lhs5 = rep.gamma_h + rep.delta_h;
  rep.rhs5 = rep.gamma_shs - rep.delta_shs + 2 * rep.delta_sh;
  rep.lhs6 = rep.gamma_h - rep.delta_h;
  rep.rhs6 = rep.gamma_shs + rep.delta_shs - 2 * rep.delta_sh;
  rep.ineq5_holds = rep.lhs5 >= rep.rhs5;
  rep.ineq6_holds = rep.lhs6 <= rep.rhs6;
  return rep;
}

SignatureRealization minimal_signature_realization(const LeftMFD& behavior) {
  if (!is_symmetric_tf(behavior))
    throw std::invalid_argument("minimal_signature_realization: transfer not symmetric");
  if (!is_proper(behavior))
    throw std::invalid_argument("minimal_signature_realization: behavior not proper");
  const int n = behavior.ports();
  CoprimeDecomposition cd = coprime_decompose(behavior.P, behavior.Q);
  LeftMFD reduced(cd.Qtilde, cd.Ptilde);
  const int delta = cd.Qtilde.det().degree();

  MarkovSeries series = markov(reduced, std::max(2 * delta, 0));
  RatMat a(delta, delta), b(delta, n), c(n, delta);
  RatMat d = series.Wminus1;
  std::vector<Rat> weights;
  if (delta > 0) {
    // Hankel congruence factorization: H_delta = X^T W X with X the weighted
    // rows of the witness transform, then the shift realization in those
    // coordinates.  A W symmetric and B = W C^T come out exactly.
    HankelMatrix hm = hankel(series, delta);
    CongruenceWitness cw = congruence_diagonalize(hm.data);
    if (cw.inertia.rank() != delta)
      throw std::logic_error("minimal_signature_realization: Hankel rank below delta");
    RatMat x = cw.transform.block(0, 0, delta, hm.data.cols());
    weights.assign(cw.weights.begin(), cw.weights.begin() + delta);
    RatMat w = RatMat::diagonal(weights);
    RatMat g = x * x.transpose();
    RatMat kmat = x * hankel(series, delta, 1).data * x.transpose();
    RatMat ginv = g.inverse();
    a = ginv * kmat * ginv * w.inverse();
    RatMat xfirst = x.block(0, 0, delta, n);
    c = xfirst.transpose();
    b = w * xfirst;
  }

  // one autonomous two-state block per simple rational root of det F
  Poly fdet = cd.F.det();
  if (fdet.degree() > 0) {
    auto [roots, fully_split] = rational_roots(fdet);
    if (!fully_split)
      throw std::invalid_argument(
          "minimal_signature_realization: det F has irrational or complex roots "
          "(unsupported)");
    std::vector<Rat> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument(
          "minimal_signature_realization: det F has repeated roots (unsupported)");
    for (const Rat& lam : sorted) {
      RatMat fv = cd.F.eval(lam);
      RatMat ker = fv.nullspace();
      if (ker.cols() < 1)
        throw std::logic_error("minimal_signature_realization: empty kernel at det F root");
      RatMat qt = cd.Qtilde.eval(lam);
      if (qt.rank() < n)
        throw std::invalid_argument(
            "minimal_signature_realization: root of det F is also a pole of the "
            "controllable part (unsupported)");
      RatMat wv = qt.inverse() * ker.block(0, 0, n, 1);  // Qhat(lam) wv = 0
      int d0 = a.rows();
      RatMat a2(d0 + 2, d0 + 2);
      a2.set_block(0, 0, a);
      a2.at(d0, d0) = lam;
      a2.at(d0 + 1, d0 + 1) = lam;
      RatMat b2 = RatMat::vstack(RatMat::vstack(b, wv.transpose()), -wv.transpose());
      RatMat c2 = RatMat::hstack(RatMat::hstack(c, wv), wv);
      a = std::move(a2);
      b = std::move(b2);
      c = std::move(c2);
      weights.push_back(Rat(1));
      weights.push_back(Rat(-1));
    }
  }

  SignatureRealization sr(StateSpace(a, b, c, d), weights);
  if (!is_signature_symmetric(sr))
    throw std::logic_error("minimal_signature_realization: symmetry relations violated");
  if (!same_transfer(transfer_function(sr.ss), behavior))
    throw std::logic_error("minimal_signature_realization: transfer round trip failed");
  return sr;
}

}  // namespace recip
