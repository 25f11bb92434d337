#include "recip/mfd.hpp"

namespace recip {

LeftMFD::LeftMFD(PolyMatrix q, PolyMatrix p) : Q(std::move(q)), P(std::move(p)) {
  if (Q.rows() != Q.cols()) throw std::invalid_argument("LeftMFD: Q not square");
  if (P.rows() != Q.rows() || P.cols() != Q.cols())
    throw std::invalid_argument("LeftMFD: P/Q size mismatch");
  if (Q.det().is_zero()) throw std::invalid_argument("LeftMFD: Q singular");
}

RatFunMatrix RatFunMatrix::from_mfd(const LeftMFD& h) {
  return {h.Q.adjugate() * h.P, h.Q.det()};
}

RatFunMatrix RatFunMatrix::left_mul(const RatMat& s) const {
  return {PolyMatrix(s) * num, den};
}

RatFunMatrix RatFunMatrix::right_mul(const RatMat& s) const {
  return {num * PolyMatrix(s), den};
}

RatFunMatrix RatFunMatrix::plus_const(const RatMat& x) const {
  return {num + PolyMatrix(x).scaled(den), den};
}

bool RatFunMatrix::is_proper() const {
  // Common factors shift numerator and denominator degree alike, so the
  // unreduced comparison is already exact.
  return num.max_degree() <= den.degree();
}

bool RatFunMatrix::is_finite_at(const Rat& a) const {
  for (int i = 0; i < num.rows(); ++i)
    for (int j = 0; j < num.cols(); ++j) {
      const Poly& p = num.at(i, j);
      if (p.is_zero()) continue;
      Poly g = Poly::gcd(p, den);
      Poly dred = Poly::divmod(den, g).first;
      if (dred.eval(a) == 0) return false;
    }
  return true;
}

RatFunMatrix RatFunMatrix::mobius(const Rat& a) const {
  if (!is_finite_at(a))
    throw std::invalid_argument("mobius: pivot is a pole of the function");
  int d = std::max(num.max_degree(), den.degree());
  PolyMatrix n2(num.rows(), num.cols());
  for (int i = 0; i < num.rows(); ++i)
    for (int j = 0; j < num.cols(); ++j)
      if (!num.at(i, j).is_zero()) n2.at(i, j) = num.at(i, j).shifted_reciprocal(a, d);
  return {n2, den.shifted_reciprocal(a, d)};
}

Rat find_regular_point(const RatFunMatrix& h) {
  for (int k = 0;; ++k) {
    for (int s : {1, -1}) {
      Rat a(s * k);
      if (h.is_finite_at(a)) return a;
      if (k == 0) break;
    }
  }
}

MarkovSeries RatFunMatrix::markov(int order) const {
  if (!is_proper()) throw std::invalid_argument("markov: function is not proper");
  if (order < 0) throw std::invalid_argument("markov: negative order");
  const int nr = num.rows(), nc = num.cols();
  const int d = den.degree();
  Poly bh = den.reversed(d);  // bh(0) = lead(den) != 0
  MarkovSeries s;
  s.Wminus1 = RatMat(nr, nc);
  s.W.assign(size_t(order) + 1, RatMat(nr, nc));
  const Rat b0inv = Rat(1) / bh.coeff(0);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) {
      const Poly& a = num.at(i, j);
      if (a.is_zero()) continue;
      Poly ah = a.reversed(d);
      // power series division ah/bh to order+1 terms
      std::vector<Rat> c(size_t(order) + 2, Rat(0));
      for (size_t k = 0; k < c.size(); ++k) {
        Rat acc = ah.coeff(int(k));
        for (size_t l = 1; l <= k; ++l) acc -= bh.coeff(int(l)) * c[k - l];
        c[k] = acc * b0inv;
      }
      s.Wminus1.at(i, j) = c[0];
      for (int t = 0; t <= order; ++t) s.W[size_t(t)].at(i, j) = c[size_t(t) + 1];
    }
  return s;
}

int RatFunMatrix::mcmillan() const {
  RatFunMatrix f = *this;
  if (!f.is_proper()) f = f.mobius(find_regular_point(f));
  int bound = f.den.degree();
  if (bound <= 0) return 0;
  MarkovSeries s = f.markov(2 * bound);
  HankelMatrix h = hankel(s, bound);
  return h.data.rank();
}

bool is_proper(const LeftMFD& h) {
  return delta_max_minor(PolyMatrix::hstack(-h.P, h.Q)) == h.Q.det().degree();
}

bool is_symmetric_tf(const LeftMFD& h) {
  return h.P * h.Q.transpose() == h.Q * h.P.transpose();
}

MarkovSeries markov(const LeftMFD& h, int order) {
  if (!is_proper(h)) throw std::invalid_argument("markov: MFD is not proper");
  return RatFunMatrix::from_mfd(h).markov(order);
}

HankelMatrix hankel(const MarkovSeries& s, int r, int shift) {
  if (r < 0) throw std::invalid_argument("hankel: negative order");
  int need = 2 * (r - 1) + shift;
  if (r > 0 && need >= int(s.W.size()))
    throw std::invalid_argument("hankel: series order insufficient");
  int br = r > 0 ? s.Wminus1.rows() : 0;
  int bc = r > 0 ? s.Wminus1.cols() : 0;
  HankelMatrix hm;
  hm.r = r;
  hm.data = RatMat(r * br, r * bc);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) hm.data.set_block(i * br, j * bc, s.W[size_t(i + j + shift)]);
  return hm;
}

int mcmillan_degree(const LeftMFD& h) {
  if (!is_proper(h)) {
    RatFunMatrix f = RatFunMatrix::from_mfd(h);
    return mcmillan_degree(mobius_transform(h, find_regular_point(f)));
  }
  return coprime_decompose(h.P, h.Q).Qtilde.det().degree();
}

int mcmillan_degree_hankel(const LeftMFD& h) {
  RatFunMatrix f = RatFunMatrix::from_mfd(h);
  if (!f.is_proper()) f = f.mobius(find_regular_point(f));
  int bound = f.den.degree();
  if (bound <= 0) return 0;
  MarkovSeries s = f.markov(2 * bound);
  int prev = -1;
  for (int r = 1; r <= bound; ++r) {
    int rk = hankel(s, r).data.rank();
    if (rk == prev && rk == hankel(s, bound).data.rank()) return rk;
    prev = rk;
  }
  return hankel(s, bound).data.rank();
}

int gamma_hankel(const LeftMFD& h) {
  if (!is_proper(h)) throw std::invalid_argument("gamma_hankel: MFD not proper");
  if (!is_symmetric_tf(h)) throw std::invalid_argument("gamma_hankel: transfer not symmetric");
  int d = mcmillan_degree(h);
  if (d == 0) return 0;
  MarkovSeries s = markov(h, 2 * d);
  InertiaResult in = inertia(hankel(s, d).data);
  return in.signature();
}

LeftMFD mobius_transform(const LeftMFD& h, const Rat& pivot) {
  RatFunMatrix f = RatFunMatrix::from_mfd(h);
  if (!f.is_finite_at(pivot))
    throw std::invalid_argument("mobius_transform: pivot is a pole of H");
  int d = std::max(h.P.max_degree(), h.Q.max_degree());
  PolyMatrix q2(h.Q.rows(), h.Q.cols()), p2(h.P.rows(), h.P.cols());
  for (int i = 0; i < h.Q.rows(); ++i)
    for (int j = 0; j < h.Q.cols(); ++j) {
      if (!h.Q.at(i, j).is_zero()) q2.at(i, j) = h.Q.at(i, j).shifted_reciprocal(pivot, d);
      if (!h.P.at(i, j).is_zero()) p2.at(i, j) = h.P.at(i, j).shifted_reciprocal(pivot, d);
    }
  return LeftMFD(std::move(q2), std::move(p2));
}

}  // namespace recip
