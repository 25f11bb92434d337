#include "recip/ratmat.hpp"

namespace recip {

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref_inplace(RatMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    Rat inv = Rat(1) / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RatMat::RatMat(int rows, int cols, std::vector<Rat> entries)
    : r_(rows), c_(cols), e_(std::move(entries)) {
  if (e_.size() != size_t(rows) * cols) throw std::invalid_argument("RatMat: entry count");
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::diagonal(const std::vector<Rat>& d) {
  RatMat m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
  return m;
}

RatMat RatMat::from_double(const Eigen::MatrixXd& m, double tol) {
  RatMat out(int(m.rows()), int(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = rationalize(m(i, j), tol);
  return out;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("RatMat +: shape mismatch");
  RatMat m(r_, c_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
  return m;
}

RatMat RatMat::operator-(const RatMat& o) const { return *this + (-o); }

RatMat RatMat::operator-() const {
  RatMat m(r_, c_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("RatMat *: shape mismatch");
  RatMat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.c_; ++j) m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

RatMat RatMat::scaled(const Rat& s) const {
  RatMat m(r_, c_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
  return m;
}

RatMat RatMat::transpose() const {
  RatMat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool RatMat::is_symmetric() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = i + 1; j < c_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMat::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::block(int i0, int j0, int nrows, int ncols) const {
  if (i0 < 0 || j0 < 0 || i0 + nrows > r_ || j0 + ncols > c_)
    throw std::invalid_argument("RatMat::block: out of range");
  RatMat m(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m.at(i, j) = at(i0 + i, j0 + j);
  return m;
}

void RatMat::set_block(int i0, int j0, const RatMat& b) {
  if (i0 + b.rows() > r_ || j0 + b.cols() > c_)
    throw std::invalid_argument("RatMat::set_block: out of range");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

RatMat RatMat::hstack(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  RatMat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

RatMat RatMat::vstack(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
  RatMat m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

RatMat RatMat::block_diag(const std::vector<RatMat>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) { r += b.rows(); c += b.cols(); }
  RatMat m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

int RatMat::rank() const {
  RatMat m = *this;
  return int(rref_inplace(m).size());
}

RatMat RatMat::nullspace() const {
  RatMat m = *this;
  std::vector<int> pivots = rref_inplace(m);
  std::vector<bool> is_pivot(size_t(c_), false);
  for (int p : pivots) is_pivot[size_t(p)] = true;
  int nfree = c_ - int(pivots.size());
  RatMat basis(c_, nfree);
  int k = 0;
  for (int col = 0; col < c_; ++col) {
    if (is_pivot[size_t(col)]) continue;
    basis.at(col, k) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(pivots[pi], k) = -m.at(int(pi), col);
    ++k;
  }
  return basis;
}

RatMat RatMat::inverse() const {
  if (r_ != c_) throw std::invalid_argument("inverse: not square");
  RatMat aug = hstack(*this, identity(r_));
  std::vector<int> pivots = rref_inplace(aug);
  // [M | I] always has full row rank; M is invertible exactly when every
  // pivot lands in the left block
  for (int p : pivots)
    if (p >= r_) throw std::invalid_argument("inverse: singular matrix");
  if (int(pivots.size()) != r_) throw std::invalid_argument("inverse: singular matrix");
  return aug.block(0, r_, r_, r_);
}

RatMat RatMat::solve(const RatMat& rhs) const {
  if (rhs.rows() != r_) throw std::invalid_argument("solve: shape mismatch");
  RatMat aug = hstack(*this, rhs);
  std::vector<int> pivots = rref_inplace(aug);
  for (int p : pivots)
    if (p >= c_) throw std::invalid_argument("solve: inconsistent system");
  if (int(pivots.size()) != c_) throw std::invalid_argument("solve: rank-deficient system");
  RatMat x(c_, rhs.cols());
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    for (int j = 0; j < rhs.cols(); ++j) x.at(pivots[pi], j) = aug.at(int(pi), c_ + j);
  return x;
}

Eigen::MatrixXd RatMat::to_double() const {
  Eigen::MatrixXd m(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = recip::to_double(at(i, j));
  return m;
}

}  // namespace recip
