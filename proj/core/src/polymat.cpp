#include "recip/polymat.hpp"

#include <sstream>

namespace recip {

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<Poly> entries)
    : r_(rows), c_(cols), e_(std::move(entries)) {
  if (e_.size() != size_t(rows) * cols) throw std::invalid_argument("PolyMatrix: entry count");
}

PolyMatrix::PolyMatrix(const RatMat& constant)
    : PolyMatrix(constant.rows(), constant.cols()) {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) at(i, j) = Poly(constant.at(i, j));
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly(1);
  return m;
}

PolyMatrix PolyMatrix::pencil(const RatMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("pencil: A not square");
  PolyMatrix m(a.rows(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j) {
      m.at(i, j) = Poly(-a.at(i, j));
      if (i == j) m.at(i, j) += Poly::xi();
    }
  return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("PolyMatrix +: shape mismatch");
  PolyMatrix m(r_, c_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
  return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const { return *this + (-o); }

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix m(r_, c_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("PolyMatrix *: shape mismatch");
  PolyMatrix m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

PolyMatrix PolyMatrix::scaled(const Poly& s) const {
  PolyMatrix m(r_, c_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = i + 1; j < c_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

PolyMatrix PolyMatrix::block(int i0, int j0, int nrows, int ncols) const {
  if (i0 < 0 || j0 < 0 || i0 + nrows > r_ || j0 + ncols > c_)
    throw std::invalid_argument("PolyMatrix::block: out of range");
  PolyMatrix m(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m.at(i, j) = at(i0 + i, j0 + j);
  return m;
}

void PolyMatrix::set_block(int i0, int j0, const PolyMatrix& b) {
  if (i0 + b.rows() > r_ || j0 + b.cols() > c_)
    throw std::invalid_argument("PolyMatrix::set_block: out of range");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  PolyMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
  PolyMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

int PolyMatrix::max_degree() const {
  int d = Poly::kDegNegInf;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

RatMat PolyMatrix::eval(const Rat& x) const {
  RatMat m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j).eval(x);
  return m;
}

Eigen::MatrixXcd PolyMatrix::eval(const std::complex<double>& x) const {
  Eigen::MatrixXcd m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = at(i, j).eval(x);
  return m;
}

RatMat PolyMatrix::coeff(int k) const {
  RatMat m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j).coeff(k);
  return m;
}

Poly PolyMatrix::det() const {
  if (r_ != c_) throw std::invalid_argument("det: not square");
  const int n = r_;
  if (n == 0) return Poly(1);
  PolyMatrix a = *this;
  Poly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a.at(i, k).is_zero()) { piv = i; break; }
    if (piv < 0) return Poly();
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Poly num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        auto [q, rem] = Poly::divmod(num, prev);
        if (!rem.is_zero()) throw std::logic_error("det: Bareiss division not exact");
        a.at(i, j) = q;
      }
    prev = a.at(k, k);
  }
  Poly d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

PolyMatrix PolyMatrix::adjugate() const {
  if (r_ != c_) throw std::invalid_argument("adjugate: not square");
  const int n = r_;
  if (n == 0) return *this;
  if (n == 1) return PolyMatrix(1, 1, {Poly(1)});
  PolyMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = at(r, c);
          ++mc;
        }
        ++mr;
      }
      Poly cof = minor.det();
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

std::string PolyMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    os << "[ ";
    for (int j = 0; j < c_; ++j) {
      os << at(i, j).str();
      if (j + 1 < c_) os << ", ";
    }
    os << " ]\n";
  }
  return os.str();
}

int normalrank(const PolyMatrix& r) {
  // Division-free echelon over Q[xi]; degree growth is acceptable at the
  // matrix sizes this library targets.
  PolyMatrix a = r;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!a.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    for (int i = row + 1; i < a.rows(); ++i) {
      if (a.at(i, col).is_zero()) continue;
      Poly f = a.at(i, col), p = a.at(row, col);
      for (int j = col; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) * p - f * a.at(row, j);
    }
    ++row;
  }
  return row;
}

int delta_max_minor(const PolyMatrix& r) {
  const int m = r.rows(), n = r.cols();
  if (m > n || normalrank(r) != m)
    throw std::invalid_argument("delta_max_minor: matrix not full row rank");
  std::vector<int> sel(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) sel[size_t(i)] = i;
  int best = Poly::kDegNegInf;
  while (true) {
    PolyMatrix sub(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub.at(i, j) = r.at(i, sel[size_t(j)]);
    best = std::max(best, sub.det().degree());
    // next combination
    int k = m - 1;
    while (k >= 0 && sel[size_t(k)] == n - m + k) --k;
    if (k < 0) break;
    ++sel[size_t(k)];
    for (int i = k + 1; i < m; ++i) sel[size_t(i)] = sel[size_t(i - 1)] + 1;
  }
  return best;
}

bool is_unimodular(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_unimodular: not square");
  Poly d = m.det();
  return d.is_constant() && !d.is_zero();
}

PolyMatrix CoprimeDecomposition::unimodular_block() const {
  return PolyMatrix::vstack(PolyMatrix::hstack(Ptilde, -Qtilde),
                            PolyMatrix::hstack(U, V));
}

CoprimeDecomposition coprime_decompose(const PolyMatrix& p, const PolyMatrix& q) {
  const int n = p.rows();
  if (p.cols() != n || q.rows() != n || q.cols() != n)
    throw std::invalid_argument("coprime_decompose: P, Q must be square and equal size");
  PolyMatrix m = PolyMatrix::hstack(p, -q);
  if (normalrank(m) != n)
    throw std::invalid_argument(
        "coprime_decompose: normalrank([P -Q]) < n, not a valid behavior");
  // Column Hermite reduction m -> [F 0] while maintaining
  // [P -Q] == m * winv with winv unimodular.
  PolyMatrix winv = PolyMatrix::identity(2 * n);
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int j = 0; j < 2 * n; ++j) std::swap(winv.at(a, j), winv.at(b, j));
  };
  for (int i = 0; i < n; ++i) {
    while (true) {
      int best = -1;
      for (int j = i; j < 2 * n; ++j) {
        if (m.at(i, j).is_zero()) continue;
        if (best < 0 || m.at(i, j).degree() < m.at(i, best).degree()) best = j;
      }
      if (best < 0) throw std::logic_error("coprime_decompose: lost row rank");
      swap_cols(i, best);
      bool clean = true;
      for (int j = i + 1; j < 2 * n; ++j) {
        if (m.at(i, j).is_zero()) continue;
        Poly quot = Poly::divmod(m.at(i, j), m.at(i, i)).first;
        // col_j -= quot * col_i;  winv: row_i += quot * row_j
        for (int r = 0; r < n; ++r) m.at(r, j) -= quot * m.at(r, i);
        for (int c = 0; c < 2 * n; ++c) winv.at(i, c) += quot * winv.at(j, c);
        if (!m.at(i, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
    // monic pivot for a deterministic F
    Rat lead = m.at(i, i).lead();
    if (lead != 1) {
      Rat inv = Rat(1) / lead;
      for (int r = 0; r < n; ++r) m.at(r, i) = m.at(r, i).scaled(inv);
      for (int c = 0; c < 2 * n; ++c) winv.at(i, c) = winv.at(i, c).scaled(lead);
    }
  }
  CoprimeDecomposition d;
  d.F = m.block(0, 0, n, n);
  d.Ptilde = winv.block(0, 0, n, n);
  d.Qtilde = -winv.block(0, n, n, n);
  d.U = winv.block(n, 0, n, n);
  d.V = winv.block(n, n, n, n);
  d.zeta = 0;
  for (int i = 0; i < n; ++i) d.zeta += d.F.at(i, i).degree();
  if (d.F * d.Ptilde != p || d.F * d.Qtilde != q)
    throw std::logic_error("coprime_decompose: recomposition failed");
  return d;
}

int zeta(const PolyMatrix& p, const PolyMatrix& q) {
  return coprime_decompose(p, q).zeta;
}

}  // namespace recip
