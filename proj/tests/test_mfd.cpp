#include <doctest.h>

#include "generators.hpp"
#include "recip/bezoutian.hpp"
#include "recip/mfd.hpp"

using namespace recip;

namespace {
Poly xi() { return Poly::xi(); }
LeftMFD scalar_mfd(const Poly& q, const Poly& p) { return LeftMFD::scalar(q, p); }
}  // namespace

TEST_CASE("properness via the minor-degree identity") {
  CHECK(is_proper(scalar_mfd(xi(), Poly(1))));
  CHECK_FALSE(is_proper(scalar_mfd(Poly(1), xi())));
  CHECK(is_proper(scalar_mfd(xi() * xi() + xi(), xi() + Poly(1))));
}

TEST_CASE("transfer symmetry") {
  CHECK(is_symmetric_tf(scalar_mfd(xi(), Poly(1))));
  PolyMatrix q = PolyMatrix::identity(2);
  PolyMatrix p(2, 2, {Poly(), Poly(1), Poly(), Poly()});
  CHECK_FALSE(is_symmetric_tf(LeftMFD(q, p)));
  PolyMatrix qd(2, 2, {xi(), Poly(), Poly(), Poly(1)});
  PolyMatrix pd(2, 2, {Poly(1), Poly(), Poly(), xi()});
  CHECK(is_symmetric_tf(LeftMFD(qd, pd)));
}

TEST_CASE("markov parameters") {
  MarkovSeries s = markov(scalar_mfd(xi(), Poly(1)), 2);
  CHECK(s.Wminus1.at(0, 0) == 0);
  CHECK(s.W[0].at(0, 0) == 1);
  CHECK(s.W[1].at(0, 0) == 0);
  CHECK(s.W[2].at(0, 0) == 0);

  MarkovSeries s2 = markov(scalar_mfd(xi() * xi() + Poly(1), Poly(1)), 3);
  CHECK(s2.W[0].at(0, 0) == 0);
  CHECK(s2.W[1].at(0, 0) == 1);
  CHECK(s2.W[2].at(0, 0) == 0);
  CHECK(s2.W[3].at(0, 0) == -1);

  MarkovSeries s3 = markov(scalar_mfd(Poly(1), Poly(5)), 2);
  CHECK(s3.Wminus1.at(0, 0) == 5);
  CHECK(s3.W[1].is_zero());

  CHECK_THROWS(markov(scalar_mfd(Poly(1), xi()), 2));
}

TEST_CASE("hankel assembly") {
  HankelMatrix h = hankel(markov(scalar_mfd(xi(), Poly(1)), 2), 2);
  CHECK(h.data == RatMat(2, 2, {Rat(1), Rat(0), Rat(0), Rat(0)}));
  HankelMatrix h2 = hankel(markov(scalar_mfd(xi() * xi() + Poly(1), Poly(1)), 2), 2);
  CHECK(h2.data == RatMat(2, 2, {Rat(0), Rat(1), Rat(1), Rat(0)}));
  HankelMatrix hz = hankel(markov(scalar_mfd(xi(), Poly()), 4), 3);
  CHECK(hz.data.is_zero());
}

TEST_CASE("mcmillan degree routes") {
  CHECK(mcmillan_degree(scalar_mfd(xi(), Poly(1))) == 1);
  CHECK(mcmillan_degree(scalar_mfd(xi() * xi() + xi(), xi() + Poly(1))) == 1);
  PolyMatrix qd(2, 2, {xi(), Poly(), Poly(), Poly(1)});
  PolyMatrix pd(2, 2, {Poly(1), Poly(), Poly(), xi()});
  LeftMFD diag_h(qd, pd);
  CHECK(mcmillan_degree(diag_h) == 2);
  CHECK(mcmillan_degree_hankel(diag_h) == 2);
  CHECK(mcmillan_degree_hankel(scalar_mfd(xi() * xi() + xi(), xi() + Poly(1))) == 1);
}

TEST_CASE("gamma via hankel inertia") {
  CHECK(gamma_hankel(scalar_mfd(xi(), Poly(1))) == 1);
  CHECK(gamma_hankel(scalar_mfd(xi(), Poly(-1))) == -1);
  CHECK(gamma_hankel(scalar_mfd(xi() * xi() + Poly(1), Poly(1))) == 0);
  CHECK_THROWS(gamma_hankel(scalar_mfd(Poly(1), xi())));
}

TEST_CASE("mobius transform") {
  // H = xi, pivot 0 -> 1/w
  LeftMFD m = mobius_transform(scalar_mfd(Poly(1), xi()), Rat(0));
  CHECK(is_proper(m));
  CHECK(mcmillan_degree(m) == 1);
  // H = c
  LeftMFD c = mobius_transform(scalar_mfd(Poly(1), Poly(7)), Rat(2));
  MarkovSeries cs = markov(c, 1);
  CHECK(cs.Wminus1.at(0, 0) == 7);
  CHECK(cs.W[0].is_zero());
  // pivot at a pole rejected
  CHECK_THROWS(mobius_transform(scalar_mfd(xi(), Poly(1)), Rat(0)));
  // H = 1/xi, pivot 1: delta is preserved, gamma flips with the
  // orientation of the substitution
  LeftMFD m2 = mobius_transform(scalar_mfd(xi(), Poly(1)), Rat(1));
  CHECK(mcmillan_degree(m2) == 1);
  CHECK(gamma_delta_bez(m2).gamma == -1);
  CHECK(gamma_delta_bez(m2).delta == 1);
}

TEST_CASE("notes B2, B3, B4 on random proper symmetric functions") {
  gen::Rng rng(41);
  for (int t = 0; t < 25; ++t) {
    int n = gen::rand_int(rng, 1, 2), d = gen::rand_int(rng, 0, 3);
    LeftMFD h = gen::proper_symmetric_mfd(rng, n, d);
    int delta = mcmillan_degree(h);
    CHECK(delta == mcmillan_degree_hankel(h));
    // B2: Delta([-P Q]) = zeta + delta
    int dmm = delta_max_minor(PolyMatrix::hstack(-h.P, h.Q));
    CHECK(dmm == zeta(h.P, h.Q) + delta);
    // B3: adding a constant keeps the degree
    RatFunMatrix f = RatFunMatrix::from_mfd(h);
    CHECK(f.plus_const(gen::ratmat(rng, n, n)).mcmillan() == delta);
    // B4: constant multiples cannot raise the degree
    RatMat s = gen::ratmat(rng, gen::rand_int(rng, 1, 2), n);
    RatMat tt = gen::ratmat(rng, n, gen::rand_int(rng, 1, 2));
    CHECK(f.left_mul(s).right_mul(tt).mcmillan() <= delta);
  }
}

TEST_CASE("hankel rank is monotone and stabilizes at delta") {
  gen::Rng rng(43);
  for (int t = 0; t < 15; ++t) {
    LeftMFD h = gen::proper_symmetric_mfd(rng, 1, gen::rand_int(rng, 1, 4));
    int delta = mcmillan_degree(h);
    int bound = h.Q.det().degree();
    if (bound < 1) continue;
    MarkovSeries s = markov(h, 2 * bound + 2);
    int prev = 0;
    for (int r = 1; r <= bound + 1; ++r) {
      int rk = hankel(s, r).data.rank();
      CHECK(rk >= prev);
      if (r >= delta) CHECK(rk == delta);
      prev = rk;
    }
  }
}
