#ifndef RECIP_RATMAT_HPP
#define RECIP_RATMAT_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "recip/rational.hpp"

namespace recip {

// Dense matrix of exact rationals.  Everything here is desk scale, so the
// algorithms are plain Gaussian elimination without pivd-size heuristics.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols, Rat(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMat: negative size");
  }
  RatMat(int rows, int cols, std::vector<Rat> entries);

  static RatMat identity(int n);
  static RatMat diagonal(const std::vector<Rat>& d);
  static RatMat from_double(const Eigen::MatrixXd& m, double tol = 1e-9);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& at(int i, int j) { return e_[size_t(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return e_[size_t(i) * c_ + j]; }

  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator-() const;
  bool operator==(const RatMat& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

  RatMat scaled(const Rat& s) const;
  RatMat transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  RatMat block(int i0, int j0, int nrows, int ncols) const;
  void set_block(int i0, int j0, const RatMat& b);
  static RatMat hstack(const RatMat& a, const RatMat& b);
  static RatMat vstack(const RatMat& a, const RatMat& b);
  static RatMat block_diag(const std::vector<RatMat>& blocks);

  int rank() const;
  int nullity() const { return c_ - rank(); }
  // Columns form a basis of the kernel (canonical pivot-ordered rref basis).
  RatMat nullspace() const;
  RatMat inverse() const;  // throws if singular
  // Solves A X = B; throws if inconsistent or underdetermined solution is
  // needed (returns the unique solution on the column space when A has full
  // column rank).
  RatMat solve(const RatMat& rhs) const;

  Eigen::MatrixXd to_double() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> e_;
};

}  // namespace recip

#endif
