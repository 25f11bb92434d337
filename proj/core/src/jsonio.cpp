#include "recip/jsonio.hpp"

#include <fstream>

namespace recip {

json rat_to_json(const Rat& r) {
  if (denominator(r) == 1) {
    Int num = numerator(r);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max())
      return json(num.convert_to<std::int64_t>());
  }
  return json(rational_str(r));
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected integer or \"p/q\" string, got " + j.dump());
}

json ratmat_to_json(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat ratmat_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  int rows = int(j.size());
  int cols = rows > 0 ? int(j.at(0).size()) : 0;
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j.at(size_t(i));
    if (!row.is_array() || int(row.size()) != cols)
      throw std::invalid_argument("matrix rows must be arrays of equal length");
    for (int c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(row.at(size_t(c)));
  }
  return m;
}

json polymat_to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      json coeffs = json::array();
      for (const Rat& c : m.at(i, j).coeffs()) coeffs.push_back(rat_to_json(c));
      row.push_back(std::move(coeffs));
    }
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

PolyMatrix polymat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("polynomial matrix needs rows, cols, entries");
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const json& entries = j.at("entries");
  if (int(entries.size()) != rows)
    throw std::invalid_argument("entries row count does not match rows");
  PolyMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries.at(size_t(i));
    if (int(row.size()) != cols)
      throw std::invalid_argument("entries column count does not match cols");
    for (int c = 0; c < cols; ++c) {
      const json& coeffs = row.at(size_t(c));
      if (!coeffs.is_array())
        throw std::invalid_argument("each entry must be a coefficient array");
      std::vector<Rat> cs;
      cs.reserve(coeffs.size());
      for (const json& x : coeffs) cs.push_back(rat_from_json(x));
      m.at(i, c) = Poly(std::move(cs));
    }
  }
  return m;
}

json mfd_to_json(const LeftMFD& h) {
  return json{{"Q", polymat_to_json(h.Q)}, {"P", polymat_to_json(h.P)}};
}

LeftMFD mfd_from_json(const json& j) {
  if (!j.is_object() || !j.contains("Q") || !j.contains("P"))
    throw std::invalid_argument("MFD needs Q and P");
  return LeftMFD(polymat_from_json(j.at("Q")), polymat_from_json(j.at("P")));
}

json realization_to_json(const SignatureRealization& sr) {
  json sigma = json::array();
  for (const Rat& w : sr.weights) sigma.push_back(rat_to_json(w));
  return json{{"A", ratmat_to_json(sr.ss.A)}, {"B", ratmat_to_json(sr.ss.B)},
              {"C", ratmat_to_json(sr.ss.C)}, {"D", ratmat_to_json(sr.ss.D)},
              {"sigma", std::move(sigma)}};
}

SignatureRealization realization_from_json(const json& j) {
  for (const char* key : {"A", "B", "C", "D", "sigma"})
    if (!j.is_object() || !j.contains(key))
      throw std::invalid_argument(std::string("realization needs ") + key);
  RatMat a = ratmat_from_json(j.at("A"));
  int d = int(j.at("sigma").size());
  // empty-state realizations lose their dimensions in JSON arrays
  auto fix = [](RatMat m, int rows, int cols) {
    return (m.rows() == 0 || m.cols() == 0) ? RatMat(rows, cols) : m;
  };
  RatMat dd = ratmat_from_json(j.at("D"));
  int n = dd.rows();
  RatMat b = fix(ratmat_from_json(j.at("B")), d, n);
  RatMat c = fix(ratmat_from_json(j.at("C")), n, d);
  a = fix(a, d, d);
  std::vector<Rat> weights;
  for (const json& x : j.at("sigma")) weights.push_back(rat_from_json(x));
  return SignatureRealization(StateSpace(std::move(a), std::move(b), std::move(c),
                                         std::move(dd)),
                              std::move(weights));
}

json network_to_json(const NetworkData& d) {
  auto diag = [](const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_to_json(x));
    return a;
  };
  return json{{"M11", ratmat_to_json(d.M11)}, {"M12", ratmat_to_json(d.M12)},
              {"M21", ratmat_to_json(d.M21)}, {"M22", ratmat_to_json(d.M22)},
              {"M23", ratmat_to_json(d.M23)}, {"sigmaE", diag(d.sigmaE)},
              {"sigma1", diag(d.sigma1)},     {"sigma2", diag(d.sigma2)},
              {"lambda1", diag(d.lambda1)},   {"lambda2", diag(d.lambda2)}};
}

NetworkData network_from_json(const json& j) {
  for (const char* key :
       {"M11", "M12", "M21", "M22", "M23", "sigmaE", "sigma1", "sigma2", "lambda1", "lambda2"})
    if (!j.is_object() || !j.contains(key))
      throw std::invalid_argument(std::string("network needs ") + key);
  auto diag = [&](const char* key) {
    std::vector<Rat> v;
    for (const json& x : j.at(key)) v.push_back(rat_from_json(x));
    return v;
  };
  NetworkData d;
  d.M11 = ratmat_from_json(j.at("M11"));
  d.M12 = ratmat_from_json(j.at("M12"));
  d.M21 = ratmat_from_json(j.at("M21"));
  d.M22 = ratmat_from_json(j.at("M22"));
  d.M23 = ratmat_from_json(j.at("M23"));
  d.sigmaE = diag("sigmaE");
  d.sigma1 = diag("sigma1");
  d.sigma2 = diag("sigma2");
  d.lambda1 = diag("lambda1");
  d.lambda2 = diag("lambda2");
  const int n = int(d.sigmaE.size()), d1 = int(d.sigma1.size()), d2 = int(d.sigma2.size());
  auto fix = [](RatMat m, int rows, int cols) {
    return (m.rows() == 0 || m.cols() == 0) ? RatMat(rows, cols) : m;
  };
  d.M11 = fix(d.M11, n, n);
  d.M12 = fix(d.M12, n, d1);
  d.M21 = fix(d.M21, d1, n);
  d.M22 = fix(d.M22, d1, d1);
  d.M23 = fix(d.M23, d1, d2);
  return d;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace recip
