#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lhl/polynomial.hpp"
#include "lhl/poset.hpp"
#include "lhl/simplex.hpp"

namespace lhl {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
Json to_json(const BigInt& value);
BigInt big_int_from_json(const Json& value);

// [c_0, c_1, ...]; the zero polynomial is [].
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& value);

// [[x, y, ...], ...], one array per vertex.
Json to_json(const LatticeSimplex& simplex);
LatticeSimplex simplex_from_json(const Json& value);

// {"n": 3, "covers": [[1, 3], [2, 3]]}
Json to_json(const Poset& p);
Poset poset_from_json(const Json& value);

Json read_json_file(const std::filesystem::path& path);

}  // namespace lhl
