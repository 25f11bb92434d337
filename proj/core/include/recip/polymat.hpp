#ifndef RECIP_POLYMAT_HPP
#define RECIP_POLYMAT_HPP

#include <vector>

#include "recip/poly.hpp"
#include "recip/ratmat.hpp"

namespace recip {

// Matrix with univariate rational-coefficient polynomial entries.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative size");
  }
  PolyMatrix(int rows, int cols, std::vector<Poly> entries);
  explicit PolyMatrix(const RatMat& constant);
  explicit PolyMatrix(const Poly& scalar) : PolyMatrix(1, 1) { at(0, 0) = scalar; }

  static PolyMatrix identity(int n);
  // xi*I - A for a constant square A.
  static PolyMatrix pencil(const RatMat& a);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Poly& at(int i, int j) { return e_[size_t(i) * c_ + j]; }
  const Poly& at(int i, int j) const { return e_[size_t(i) * c_ + j]; }

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  bool operator==(const PolyMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

  PolyMatrix scaled(const Poly& s) const;
  PolyMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  PolyMatrix block(int i0, int j0, int nrows, int ncols) const;
  void set_block(int i0, int j0, const PolyMatrix& b);
  static PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
  static PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);

  // Max degree over entries; kDegNegInf for the zero matrix.
  int max_degree() const;
  RatMat eval(const Rat& x) const;
  Eigen::MatrixXcd eval(const std::complex<double>& x) const;
  // Coefficient matrix of xi^k.
  RatMat coeff(int k) const;

  // Exact determinant, fraction-free Bareiss elimination over Q[xi].
  Poly det() const;
  // Adjugate, det = adj * M = M * adj.  Cofactor expansion.
  PolyMatrix adjugate() const;

  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Poly> e_;
};

// Rank over the rational-function field, by fraction-free elimination.
int normalrank(const PolyMatrix& r);

// Delta(R): maximal degree among all m x m minors of a full-row-rank m x n
// polynomial matrix.  Throws if R is not full row rank.
int delta_max_minor(const PolyMatrix& r);

// True iff det(M) is a nonzero constant.
bool is_unimodular(const PolyMatrix& m);

// Greatest common left divisor decomposition of note A1:
//   P = F*Ptilde, Q = F*Qtilde, [[Ptilde, -Qtilde],[U, V]] unimodular,
//   zeta = deg det F (the number of uncontrollable modes).
struct CoprimeDecomposition {
  PolyMatrix F, Ptilde, Qtilde, U, V;
  int zeta = 0;
  PolyMatrix unimodular_block() const;  // [[Ptilde, -Qtilde],[U, V]]
};

// Requires P, Q square n x n with normalrank([P -Q]) = n.
CoprimeDecomposition coprime_decompose(const PolyMatrix& p, const PolyMatrix& q);

int zeta(const PolyMatrix& p, const PolyMatrix& q);

}  // namespace recip

#endif
