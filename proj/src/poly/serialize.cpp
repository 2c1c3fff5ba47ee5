#include "flopkit/poly/serialize.hpp"

namespace flopkit {

Json to_json(const MPoly& f) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back(Json::array({it->first, to_string(it->second)}));
  return Json{{"vars", f.nvars()}, {"terms", terms}};
}

MPoly mpoly_from_json(const Json& j) {
  MPoly f(j.at("vars").get<int>());
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) throw Error("malformed polynomial term");
    f.add_term(t[0].get<Monomial>(), parse_rational(t[1].get<std::string>()));
  }
  return f;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.push_back(to_string(m(r, c)));
  return out;
}

RatMatrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols) throw Error("malformed matrix");
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = parse_rational(j[r * cols + c].get<std::string>());
  return m;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

RatVector vector_from_json(const Json& j) {
  RatVector v;
  for (const auto& e : j) v.push_back(parse_rational(e.get<std::string>()));
  return v;
}

Json to_json(const ComplexMP& z, int digits) {
  return Json::array({z.real().str(digits, std::ios_base::scientific), z.imag().str(digits, std::ios_base::scientific)});
}

}  // namespace flopkit
