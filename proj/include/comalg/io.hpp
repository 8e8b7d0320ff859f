#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "comalg/bounds.hpp"
#include "comalg/families.hpp"
#include "comalg/family.hpp"
#include "comalg/matrix.hpp"
#include "comalg/partition.hpp"
#include "comalg/rational.hpp"

namespace comalg {

/// Insertion-ordered JSON, so emitted key order is the documented order.
using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, anything else a string
/// "p" or "p/q".
Json to_json(const Rational& x);
/// Accepts a JSON integer or a string "p" / "p/q" with q > 0.
Rational rational_from_json(const Json& j, const std::string& where);

/// {"n": <int>, "entries": [[...], ...]}
Json to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j, const std::string& where = "");

/// {"n": <int>, "matrices": [<matrix>, ...]}
Json to_json(const CommutingFamily& family);
/// Shape-checked, commutation not yet verified.
CommutingFamily family_from_json(const Json& j, const std::string& where = "");

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j, const std::string& where = "");

Json to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const Json& j, const std::string& where = "");

/// {"quantity", "inequality", "lhs", "rhs", "holds", "approx"}; integers as
/// decimal strings.
Json to_json(const BoundReport& r);

/// Parses a JSON document; syntax errors report the line number.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::filesystem::path& path);

}  // namespace comalg
