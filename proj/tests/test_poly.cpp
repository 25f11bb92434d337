#include <doctest.h>

#include "recip/poly.hpp"

using namespace recip;

TEST_CASE("poly basics") {
  Poly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == Poly::kDegNegInf);

  Poly p({Rat(1), Rat(2), Rat(1)});  // 1 + 2x + x^2
  CHECK(p.degree() == 2);
  CHECK(p.lead() == 1);
  CHECK(p.eval(Rat(2)) == 9);
  CHECK((p - p).is_zero());
  CHECK(p * Poly(1) == p);
  CHECK((Rat(2) * p).coeff(1) == 4);

  // trailing zeros are stripped
  Poly q({Rat(3), Rat(0), Rat(0)});
  CHECK(q.degree() == 0);
}

TEST_CASE("divmod and gcd") {
  Poly a({Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
  Poly b({Rat(1), Rat(1)});           // x + 1
  auto [q, r] = Poly::divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == Poly({Rat(-1), Rat(1)}));
  CHECK(Poly::gcd(a, b) == b.monic());

  Poly c({Rat(1), Rat(2), Rat(1)});
  CHECK(Poly::gcd(a, c) == b);  // gcd is monic x + 1
  CHECK(Poly::gcd(Poly(), c) == c.monic());
}

TEST_CASE("derivative and shifts") {
  Poly p({Rat(1), Rat(-3), Rat(0), Rat(2)});  // 1 - 3x + 2x^3
  CHECK(p.derivative() == Poly({Rat(-3), Rat(0), Rat(6)}));

  // p(a + x) evaluated matches p at a + t
  Poly s = p.shifted(Rat(2));
  CHECK(s.eval(Rat(1)) == p.eval(Rat(3)));
  CHECK(s.eval(Rat(0)) == p.eval(Rat(2)));

  // x^d p(1/x)
  Poly r = p.reversed(3);
  CHECK(r == Poly({Rat(2), Rat(0), Rat(-3), Rat(1)}));

  // w^d p(a + 1/w): check via evaluation
  Poly sr = p.shifted_reciprocal(Rat(1), 3);
  Rat w(5);
  CHECK(sr.eval(w) == w * w * w * p.eval(Rat(1) + Rat(1) / w));
}

TEST_CASE("rational parse and print") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(parse_rational("-2/6") == Rat(-1, 3));
  CHECK(rational_str(Rat(3, 4)) == "3/4");
  CHECK(rational_str(Rat(5)) == "5");
  CHECK(rational_str(Rat(-1, 2)) == "-1/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("rationalize snaps simple fractions") {
  CHECK(rationalize(0.5) == Rat(1, 2));
  CHECK(rationalize(-2.0) == Rat(-2));
  CHECK(rationalize(1.0 / 3.0) == Rat(1, 3));
  CHECK(rationalize(0.0) == Rat(0));
}
