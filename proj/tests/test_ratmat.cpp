#include <doctest.h>

#include "generators.hpp"
#include "recip/ratmat.hpp"

using namespace recip;

TEST_CASE("rank, nullspace, inverse") {
  RatMat m(3, 3, {Rat(1), Rat(2), Rat(3), Rat(2), Rat(4), Rat(6), Rat(0), Rat(1), Rat(1)});
  CHECK(m.rank() == 2);
  RatMat ns = m.nullspace();
  CHECK(ns.cols() == 1);
  CHECK((m * ns).is_zero());

  RatMat inv_in(2, 2, {Rat(2), Rat(1), Rat(1), Rat(1)});
  RatMat inv = inv_in.inverse();
  CHECK(inv_in * inv == RatMat::identity(2));
  CHECK_THROWS(m.inverse());
}

TEST_CASE("solve with full column rank") {
  RatMat a(3, 2, {Rat(1), Rat(0), Rat(0), Rat(1), Rat(1), Rat(1)});
  RatMat x(2, 1, {Rat(2), Rat(-1)});
  RatMat b = a * x;
  CHECK(a.solve(b) == x);
}

TEST_CASE("blocks and stacking") {
  gen::Rng rng(7);
  RatMat a = gen::ratmat(rng, 2, 3), b = gen::ratmat(rng, 2, 2);
  RatMat h = RatMat::hstack(a, b);
  CHECK(h.cols() == 5);
  CHECK(h.block(0, 3, 2, 2) == b);
  RatMat v = RatMat::vstack(a, gen::ratmat(rng, 1, 3));
  CHECK(v.rows() == 3);
  RatMat d = RatMat::block_diag({a, b});
  CHECK(d.rows() == 4);
  CHECK(d.cols() == 5);
  CHECK(d.block(2, 3, 2, 2) == b);
}

TEST_CASE("from_double round trip") {
  RatMat m(2, 2, {Rat(1, 2), Rat(-3), Rat(0), Rat(7, 4)});
  CHECK(RatMat::from_double(m.to_double()) == m);
}

TEST_CASE("random inverse property") {
  gen::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    RatMat m = gen::ratmat(rng, 4, 4);
    if (m.rank() < 4) continue;
    CHECK(m * m.inverse() == RatMat::identity(4));
    CHECK(m.nullspace().cols() == 0);
  }
}
