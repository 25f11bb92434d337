#include <doctest.h>

#include "generators.hpp"
#include "recip/polymat.hpp"

using namespace recip;

namespace {
Poly xi() { return Poly::xi(); }
PolyMatrix scalar(const Poly& p) { return PolyMatrix(p); }
}  // namespace

TEST_CASE("determinants") {
  PolyMatrix t(2, 2, {xi(), Poly(1), Poly(), xi()});
  CHECK(t.det() == xi() * xi());
  CHECK(PolyMatrix::identity(3).det() == Poly(1));
  PolyMatrix m(2, 2, {xi() + Poly(1), xi(), xi(), xi() - Poly(1)});
  CHECK(m.det() == Poly(-1));
  CHECK(PolyMatrix(0, 0).det() == Poly(1));
  // adjugate identity
  CHECK(m * m.adjugate() == PolyMatrix::identity(2).scaled(m.det()));
}

TEST_CASE("normalrank") {
  PolyMatrix r(1, 2, {xi() + Poly(1), -(xi() * xi() + xi())});
  CHECK(normalrank(r) == 1);
  CHECK(normalrank(PolyMatrix(2, 3)) == 0);
  PolyMatrix prop(2, 2, {xi(), Poly(1), xi() * xi(), xi()});
  CHECK(normalrank(prop) == 1);

  // equals rank at a random regular point
  gen::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    PolyMatrix m = gen::polymat(rng, 2, 3, 2);
    int nr = normalrank(m);
    int best = 0;
    for (int s = 0; s < 5; ++s) best = std::max(best, m.eval(Rat(s + 2)).rank());
    CHECK(nr == best);
  }
}

TEST_CASE("delta of maximal minors") {
  PolyMatrix r(1, 2, {-(xi() + Poly(1)), xi() * xi() + xi()});
  CHECK(delta_max_minor(r) == 2);
  PolyMatrix c = PolyMatrix::hstack(PolyMatrix::identity(2), PolyMatrix(2, 1));
  CHECK(delta_max_minor(c) == 0);
  CHECK_THROWS(delta_max_minor(PolyMatrix(2, 2)));
}

TEST_CASE("unimodularity") {
  PolyMatrix u(2, 2, {Poly(1), -xi(), Poly(), Poly(1)});
  CHECK(is_unimodular(u));
  PolyMatrix nu(2, 2, {xi(), Poly(), Poly(), Poly(1)});
  CHECK_FALSE(is_unimodular(nu));
  CHECK(is_unimodular(PolyMatrix::identity(3)));
}

TEST_CASE("coprime decomposition on scalars") {
  auto cd = coprime_decompose(scalar(Poly(1)), scalar(xi()));
  CHECK(cd.zeta == 0);
  CHECK(cd.F.det().degree() == 0);

  auto cd2 = coprime_decompose(scalar(xi() + Poly(1)), scalar(xi() * xi() + xi()));
  CHECK(cd2.zeta == 1);
  CHECK(cd2.F * cd2.Ptilde == scalar(xi() + Poly(1)));
  CHECK(cd2.F * cd2.Qtilde == scalar(xi() * xi() + xi()));
  CHECK(is_unimodular(cd2.unimodular_block()));

  auto cd3 = coprime_decompose(scalar(xi()), scalar(xi()));
  CHECK(cd3.zeta == 1);
}

TEST_CASE("zeta examples") {
  CHECK(zeta(scalar(Poly(1)), scalar(xi())) == 0);
  CHECK(zeta(scalar(xi() + Poly(1)), scalar(xi() * xi() + xi())) == 1);
  Poly f = xi() + Poly(2);
  PolyMatrix p = PolyMatrix::identity(2).scaled(f);
  PolyMatrix q(2, 2, {f * xi(), Poly(), Poly(), f * xi()});
  CHECK(zeta(p, q) == 2);
}

TEST_CASE("decomposition round trip on random pairs") {
  gen::Rng rng(23);
  int done = 0;
  while (done < 40) {
    int n = gen::rand_int(rng, 1, 3);
    PolyMatrix p = gen::polymat(rng, n, n, 2);
    PolyMatrix q = gen::polymat(rng, n, n, 2);
    if (normalrank(PolyMatrix::hstack(p, -q)) != n) continue;
    ++done;
    auto cd = coprime_decompose(p, q);
    CHECK(cd.F * cd.Ptilde == p);
    CHECK(cd.F * cd.Qtilde == q);
    CHECK(is_unimodular(cd.unimodular_block()));
    CHECK(cd.zeta == cd.F.det().degree());
    // the reduced pair is coprime: repeating the extraction finds nothing
    CHECK(zeta(cd.Ptilde, cd.Qtilde) == 0);
  }
}

TEST_CASE("zeta invariances") {
  gen::Rng rng(29);
  PolyMatrix p = scalar((xi() + Poly(1)) * (xi() - Poly(2)));
  PolyMatrix q = scalar((xi() + Poly(1)) * xi());
  int z = zeta(p, q);
  CHECK(z == 1);
  // premultiplying by a unimodular (here a nonzero constant) keeps zeta
  CHECK(zeta(p.scaled(Poly(Rat(3))), q.scaled(Poly(Rat(3)))) == z);
  // right-multiplying [P -Q] by a constant nonsingular 2x2 matrix keeps zeta:
  // [P' -Q'] = [P -Q] * [[a,b],[c,d]]
  for (int t = 0; t < 10; ++t) {
    RatMat s = gen::ratmat(rng, 2, 2);
    if (s.rank() < 2) continue;
    PolyMatrix pq = PolyMatrix::hstack(p, -q);
    PolyMatrix mixed = pq * PolyMatrix(s);
    PolyMatrix p2 = mixed.block(0, 0, 1, 1);
    PolyMatrix q2 = -mixed.block(0, 1, 1, 1);
    CHECK(zeta(p2, q2) == z);
  }
}
