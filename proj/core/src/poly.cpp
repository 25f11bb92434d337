#include "recip/poly.hpp"

#include <sstream>

namespace recip {

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(num, den);
}

std::string rational_str(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rat rationalize(double x, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("rationalize: tol must be positive");
  bool neg = x < 0;
  double y = neg ? -x : x;
  // continued fraction convergents
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = y;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e18) break;
    Int a = Int(static_cast<long long>(fl));
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rat approx(p1, q1);
    if (std::abs(to_double(approx) - y) <= tol) break;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  Rat r(p1, q1);
  return neg ? Rat(-r) : r;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(int k, const Rat& coeff) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  std::vector<Rat> c(size_t(k) + 1, Rat(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(c));
}

Poly Poly::scaled(const Rat& s) const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return Poly(std::move(c));
}


Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(int(i)) * c_[i];
  return Poly(std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return scaled(Rat(1) / lead());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly r = a;
  std::vector<Rat> q;
  int db = b.degree();
  if (a.degree() >= db) q.assign(size_t(a.degree() - db) + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rat f = r.lead() / b.lead();
    q[size_t(k)] = f;
    r -= Poly::monomial(k, f) * b;
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
  return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
  std::complex<double> acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
  return acc;
}

Poly Poly::reversed(int d) const {
  if (d < degree()) throw std::invalid_argument("reversed: d below degree");
  if (is_zero()) return Poly();
  std::vector<Rat> c(size_t(d) + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[size_t(d) - i] = c_[i];
  return Poly(std::move(c));
}

Poly Poly::shifted(const Rat& a) const {
  // Horner form: p(a + xi) built from the top coefficient down.
  Poly res;
  Poly lin({a, Rat(1)});
  for (size_t i = c_.size(); i-- > 0;) res = res * lin + Poly(c_[i]);
  return res;
}

Poly Poly::shifted_reciprocal(const Rat& a, int d) const {
  return shifted(a).reversed(d);
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rat c = c_[i];
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rat ac = rat_abs(c);
    if (i == 0 || ac != 1) os << rational_str(ac);
    if (i > 0) {
      if (ac != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace recip
