#ifndef RECIP_POLY_HPP
#define RECIP_POLY_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "recip/rational.hpp"

namespace recip {

// Univariate polynomial over the rationals, coefficients stored in
// ascending powers of xi with no trailing zero.  The zero polynomial has
// an empty coefficient list and degree kDegNegInf.
class Poly {
 public:
  static constexpr int kDegNegInf = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }
  Poly(int constant) : c_{Rat(constant)} { normalize(); }  // NOLINT(google-explicit-constructor)
  Poly(const Rat& constant) : c_{constant} { normalize(); }  // NOLINT(google-explicit-constructor)

  static Poly xi() { return Poly({Rat(0), Rat(1)}); }
  static Poly monomial(int k, const Rat& coeff = Rat(1));

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return c_.empty() ? kDegNegInf : int(c_.size()) - 1; }
  Rat coeff(int k) const {
    return (k < 0 || k >= int(c_.size())) ? Rat(0) : c_[size_t(k)];
  }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Poly scaled(const Rat& s) const;
  Poly derivative() const;
  Poly monic() const;  // divide by leading coefficient (zero stays zero)

  // Euclidean division: a = q*b + r with deg r < deg b.  Throws on b == 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(const Poly& a, const Poly& b);  // monic gcd

  Rat eval(const Rat& x) const;  // Horner
  double eval(double x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  // xi^d * p(1/xi) for d >= degree (series reversal).
  Poly reversed(int d) const;
  // w^d * p(a + 1/w) for d >= degree (Moebius substitution helper).
  Poly shifted_reciprocal(const Rat& a, int d) const;
  // p(a + xi) (Taylor shift).
  Poly shifted(const Rat& a) const;

  std::string str(const std::string& var = "xi") const;

  // hidden friend: found by argument lookup only, so it stays out of
  // overload sets for unrelated types (Eigen expressions in particular)
  friend Poly operator*(const Rat& s, const Poly& p) { return p.scaled(s); }

 private:
  void normalize();
  std::vector<Rat> c_;
};

}  // namespace recip

#endif
