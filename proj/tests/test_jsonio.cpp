#include <doctest.h>

#include "generators.hpp"
#include "recip/jsonio.hpp"

using namespace recip;

TEST_CASE("rational round trips") {
  CHECK(rat_to_json(Rat(5)) == json(5));
  CHECK(rat_to_json(Rat(-1, 3)) == json("-1/3"));
  CHECK(rat_from_json(json(7)) == Rat(7));
  CHECK(rat_from_json(json("22/7")) == Rat(22, 7));
  CHECK(rat_from_json(rat_to_json(Rat(-355, 113))) == Rat(-355, 113));
  // huge values survive via the string form
  Rat big(Int("123456789012345678901234567890"), Int(7));
  CHECK(rat_from_json(rat_to_json(big)) == big);
  CHECK_THROWS(rat_from_json(json("1/0")));
  CHECK_THROWS(rat_from_json(json("abc")));
  CHECK_THROWS(rat_from_json(json(nullptr)));
}

TEST_CASE("matrix and polynomial round trips") {
  gen::Rng rng(67);
  RatMat m = gen::ratmat(rng, 3, 2);
  m.at(0, 0) = Rat(1, 2);
  CHECK(ratmat_from_json(ratmat_to_json(m)) == m);

  PolyMatrix pm = gen::polymat(rng, 2, 3, 3);
  CHECK(polymat_from_json(polymat_to_json(pm)) == pm);
  // zero-column matrices keep their shape
  PolyMatrix empty(2, 0);
  PolyMatrix back = polymat_from_json(polymat_to_json(empty));
  CHECK(back.rows() == 2);
  CHECK(back.cols() == 0);
}

TEST_CASE("mfd, realization, network round trips") {
  LeftMFD h = LeftMFD::scalar(Poly::xi(), Poly(1));
  LeftMFD h2 = mfd_from_json(mfd_to_json(h));
  CHECK(h2.Q == h.Q);
  CHECK(h2.P == h.P);

  SignatureRealization sr(
      StateSpace(RatMat(1, 1, {Rat(0)}), RatMat(1, 1, {Rat(2)}),
                 RatMat(1, 1, {Rat(1)}), RatMat(1, 1, {Rat(0)})),
      {Rat(2)});
  SignatureRealization sr2 = realization_from_json(realization_to_json(sr));
  CHECK(sr2.ss.A == sr.ss.A);
  CHECK(sr2.ss.B == sr.ss.B);
  CHECK(sr2.weights == sr.weights);

  NetworkData nd;
  nd.M11 = RatMat(1, 1, {Rat(0)});
  nd.M12 = RatMat(1, 1, {Rat(1)});
  nd.M21 = RatMat(1, 1, {Rat(-1)});
  nd.M22 = RatMat(1, 1, {Rat(0)});
  nd.M23 = RatMat(1, 0);
  nd.sigmaE = {Rat(1)};
  nd.sigma1 = {Rat(1)};
  nd.lambda1 = {Rat(1)};
  NetworkData nd2 = network_from_json(network_to_json(nd));
  CHECK(nd2.M21 == nd.M21);
  CHECK(nd2.sigma1 == nd.sigma1);
  CHECK(nd2.group_b() == 0);
  CHECK_NOTHROW(validate_network(nd2));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(ratmat_from_json(json::parse(R"([[1, 2], [3]])")));
  CHECK_THROWS(mfd_from_json(json::parse(R"({"Q": 1})")));
  CHECK_THROWS(realization_from_json(json::parse(R"({"A": [[0]]})")));
  CHECK_THROWS(load_json_file("/nonexistent/path.json"));
}
