#include "lhl/io.hpp"

#include <fstream>
#include <limits>
#include <utility>

#include "lhl/error.hpp"

namespace lhl {

Json to_json(const BigInt& value) {
  if (mpz_fits_slong_p(value.get_mpz_t())) return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(value.get_str());
}

BigInt big_int_from_json(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return BigInt(std::to_string(value.get<std::uint64_t>()));
    return BigInt(static_cast<long>(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    BigInt out;
    if (out.set_str(value.get<std::string>(), 10) != 0) {
      throw Error(ErrorKind::InvalidArgument, "not a decimal integer: " + value.get<std::string>());
    }
    return out;
  }
  throw Error(ErrorKind::InvalidArgument, "expected an integer, got " + value.dump());
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

IntPolynomial polynomial_from_json(const Json& value) {
  if (!value.is_array()) throw Error(ErrorKind::InvalidArgument, "polynomial must be a JSON array");
  std::vector<BigInt> coeffs;
  for (const auto& c : value) coeffs.push_back(big_int_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

Json to_json(const LatticeSimplex& simplex) {
  Json out = Json::array();
  for (const auto& v : simplex.vertices()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_json(x));
    out.push_back(std::move(row));
  }
  return out;
}

LatticeSimplex simplex_from_json(const Json& value) {
  if (!value.is_array()) throw Error(ErrorKind::InvalidArgument, "simplex must be an array of vertices");
  std::vector<IntPoint> vertices;
  for (const auto& row : value) {
    if (!row.is_array()) throw Error(ErrorKind::InvalidArgument, "each vertex must be an array");
    IntPoint v;
    for (const auto& x : row) v.push_back(big_int_from_json(x));
    vertices.push_back(std::move(v));
  }
  return LatticeSimplex(std::move(vertices));
}

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back(Json::array({a, b}));
  return Json{{"n", p.size()}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("n") || !value["n"].is_number_unsigned()) {
    throw Error(ErrorKind::InvalidArgument, R"(poset must look like {"n": 3, "covers": [[1, 3]]})");
  }
  std::vector<std::pair<int, int>> relations;
  if (value.contains("covers")) {
    for (const auto& pair : value["covers"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        throw Error(ErrorKind::InvalidArgument, "each cover must be a pair of integers");
      }
      relations.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  return Poset(value["n"].get<std::size_t>(), relations);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, "invalid JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace lhl
