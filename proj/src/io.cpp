#include "gk/io.hpp"

namespace gk {

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw InvalidInput("bad_rational", "expected \"num/den\" string, got " + j.dump());
  std::string s = j.get<std::string>();
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw InvalidInput("bad_rational", "cannot parse \"" + s + "\"");
  if (r.get_den() == 0) throw InvalidInput("bad_rational", "zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

json rational_json(const Rational& x) { return x.get_str(); }

Matrix parse_matrix(const json& j) {
  if (!j.is_array()) throw InvalidInput("bad_matrix", "matrix must be an array of rows");
  std::size_t n = j.size();
  std::size_t cols = n ? (j[0].is_array() ? j[0].size() : 0) : 0;
  Matrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InvalidInput("bad_matrix", "ragged or malformed row " + std::to_string(i + 1));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_rational(j[i][k]);
  }
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

HalfIntegralForm parse_form(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("matrix"))
    throw InvalidInput("bad_input", "expected {\"p\": int, \"matrix\": [...]}");
  if (!j["p"].is_number_integer()) throw InvalidInput("bad_prime", "p must be an integer");
  PrimeContext ctx(j["p"].get<long>());
  return HalfIntegralForm::validate(parse_matrix(j["matrix"]), ctx);
}

json form_json(const HalfIntegralForm& b) { return json{{"p", b.ctx().p()}, {"matrix", matrix_json(b.matrix())}}; }

json sigma_json(const Involution& s) {
  json a = json::array();
  for (int x : s.images()) a.push_back(x + 1);
  return a;
}

Involution parse_sigma(const json& j) {
  const json& a = j.is_object() && j.contains("sigma") ? j["sigma"] : j;
  if (!a.is_array()) throw InvalidInput("bad_sigma", "sigma must be an array of 1-indexed images");
  std::vector<int> img;
  for (const auto& x : a) {
    if (!x.is_number_integer()) throw InvalidInput("bad_sigma", "sigma entries must be integers");
    img.push_back(x.get<int>() - 1);
  }
  return Involution(std::move(img));
}

json certificate_json(const ReductionCertificate& c) {
  return json{{"U", matrix_json(c.U.matrix())},
              {"R", matrix_json(c.R.matrix())},
              {"ua", c.type.ua.values()},
              {"sigma", sigma_json(c.type.sigma)}};
}

ReductionCertificate parse_certificate(const json& j, const PrimeContext& ctx) {
  for (const char* k : {"U", "R", "ua", "sigma"})
    if (!j.contains(k)) throw InvalidInput("bad_certificate", std::string("missing field ") + k);
  Matrix U = parse_matrix(j["U"]);
  if (!U.square()) throw InvalidInput("bad_certificate", "U must be square");
  HalfIntegralForm R = HalfIntegralForm::validate(parse_matrix(j["R"]), ctx);
  std::vector<int> ua;
  for (const auto& x : j["ua"]) ua.push_back(x.get<int>());
  // U is checked by the verifier, not here, so that rejection carries a reason code.
  return {trusted_transform(U), R, GKType{ExponentSeq(ua), parse_sigma(j["sigma"])}};
}

json egk_json(const EGKDatum& g) { return json{{"n", g.n}, {"m", g.m}, {"zeta", g.zeta}}; }

EGKDatum parse_egk(const json& j) {
  for (const char* k : {"n", "m", "zeta"})
    if (!j.contains(k) || !j[k].is_array()) throw InvalidInput("bad_egk", std::string("missing array ") + k);
  EGKDatum g;
  for (const auto& x : j["n"]) g.n.push_back(x.get<int>());
  for (const auto& x : j["m"]) g.m.push_back(x.get<int>());
  for (const auto& x : j["zeta"]) g.zeta.push_back(x.get<int>());
  return g;
}

json ord_json(Ord o) {
  if (o.is_infinite()) return "inf";
  return o.value();
}

}  // namespace gk
