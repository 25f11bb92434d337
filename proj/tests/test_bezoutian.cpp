#include <doctest.h>

#include "generators.hpp"
#include "recip/bezoutian.hpp"
#include "recip/realization.hpp"

using namespace recip;

namespace {
Poly xi() { return Poly::xi(); }

// evaluate sum_{i,j} data[i n + a][j n + b] z^i w^j at scalar points
Rat bez_eval(const BezoutianMatrix& bz, const Rat& z, const Rat& w) {
  REQUIRE(bz.n == 1);
  Rat acc(0);
  Rat zi(1);
  for (int i = 0; i < bz.m; ++i) {
    Rat wj(1);
    for (int j = 0; j < bz.m; ++j) {
      acc += bz.data.at(i, j) * zi * wj;
      wj *= w;
    }
    zi *= z;
  }
  return acc;
}
}  // namespace

TEST_CASE("scalar bezoutians") {
  BezoutianMatrix b1 = bezoutian(PolyMatrix(Poly(1)), PolyMatrix(xi()));
  CHECK(b1.data == RatMat(1, 1, {Rat(1)}));
  BezoutianMatrix b2 = bezoutian(PolyMatrix(xi()), PolyMatrix(Poly(1)));
  CHECK(b2.data == RatMat(1, 1, {Rat(-1)}));
  BezoutianMatrix b3 =
      bezoutian(PolyMatrix(xi() + Poly(1)), PolyMatrix(xi() * xi() + xi()));
  CHECK(b3.data == RatMat(2, 2, {Rat(1), Rat(1), Rat(1), Rat(1)}));
  BezoutianMatrix b4 = bezoutian(PolyMatrix(xi() * xi() + Poly(1)), PolyMatrix(xi()));
  CHECK(b4.data == RatMat(2, 2, {Rat(1), Rat(0), Rat(0), Rat(-1)}));
}

TEST_CASE("defining identity holds at sample points") {
  gen::Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    Poly p = gen::poly(rng, gen::rand_int(rng, 0, 4));
    Poly q = gen::nonzero_poly(rng, gen::rand_int(rng, 0, 4));
    BezoutianMatrix bz = bezoutian(PolyMatrix(p), PolyMatrix(q));
    for (int s = 0; s < 4; ++s) {
      Rat z(s + 2), w(-s - 3);
      CHECK(bez_eval(bz, z, w) * (z - w) == q.eval(z) * p.eval(w) - p.eval(z) * q.eval(w));
    }
    CHECK(bz.data == bz.data.transpose());
    // swapping the pair flips the sign
    BezoutianMatrix neg = bezoutian(PolyMatrix(q), PolyMatrix(p));
    CHECK(neg.data == -bz.data);
  }
}

TEST_CASE("asymmetric matrix pairs are rejected") {
  PolyMatrix q = PolyMatrix::identity(2);
  PolyMatrix p(2, 2, {Poly(), Poly(1), Poly(), Poly()});
  CHECK_THROWS(bezoutian(p, q));
}

TEST_CASE("signature matrices are their own bezoutians") {
  gen::Rng rng(37);
  for (int t = 0; t < 20; ++t) {
    int d = gen::rand_int(rng, 1, 4);
    auto [a, sigma] = gen::sig_sym_pair(rng, d);
    PolyMatrix q = (PolyMatrix::identity(d).scaled(xi()) - PolyMatrix(a)) * PolyMatrix(sigma);
    BezoutianMatrix bz = bezoutian(PolyMatrix::identity(d), q);
    CHECK(bz.data == sigma);
  }
}

TEST_CASE("gamma and delta from the bezoutian inertia") {
  auto gd = gamma_delta_bez(LeftMFD::scalar(xi(), Poly(1)));
  CHECK(gd.gamma == 1);
  CHECK(gd.delta == 1);
  auto gd2 = gamma_delta_bez(LeftMFD::scalar(xi(), Poly(-1)));
  CHECK(gd2.gamma == -1);
  // non-coprime pair: the bezoutian route still reports the reduced function
  auto gd3 = gamma_delta_bez(LeftMFD::scalar(xi() * xi() + xi(), xi() + Poly(1)));
  CHECK(gd3.gamma == 1);
  CHECK(gd3.delta == 1);
  // improper with cancelling index contributions
  auto gd4 = gamma_delta_bez(LeftMFD::scalar(xi(), xi() * xi() + Poly(1)));
  CHECK(gd4.gamma == 0);
  CHECK(gd4.delta == 2);
}

TEST_CASE("floating sweep agrees with the exact index") {
  CHECK(cauchy_sweep(LeftMFD::scalar(xi(), Poly(1))) == 1);
  CHECK(cauchy_sweep(LeftMFD::scalar(xi(), Poly(-1))) == -1);
  CHECK(cauchy_sweep(LeftMFD::scalar(xi() * xi() + Poly(1), Poly(1))) == 0);
  // improper: H = xi + 1/xi
  CHECK(cauchy_sweep(LeftMFD::scalar(xi(), xi() * xi() + Poly(1))) == 0);
  // non-coprime input reduces first
  CHECK(cauchy_sweep(LeftMFD::scalar(xi() * xi() + xi(), xi() + Poly(1))) == 1);
  // H = 1/((xi-1)(xi+2)): opposite jumps cancel
  Poly den = (xi() - Poly(1)) * (xi() + Poly(2));
  CHECK(cauchy_sweep(LeftMFD::scalar(den, Poly(1))) == 0);
  // oversized epsilon refused
  CHECK_THROWS(cauchy_sweep(LeftMFD::scalar(den, Poly(1)), 10.0));
}

TEST_CASE("sweep matches bezoutian gamma on random symmetric functions") {
  gen::Rng rng(47);
  for (int t = 0; t < 20; ++t) {
    LeftMFD h = gen::proper_symmetric_mfd(rng, gen::rand_int(rng, 1, 2),
                                          gen::rand_int(rng, 1, 3));
    CHECK(cauchy_sweep(h) == gamma_delta_bez(h).gamma);
  }
}
