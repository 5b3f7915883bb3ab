#pragma once

// JSON / CSV encodings. Rationals are strings "p/q" ("p" when q = 1).

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "laurent/bigrat.hpp"
#include "laurent/elliptic.hpp"
#include "laurent/equation.hpp"
#include "laurent/quartic.hpp"

namespace laurent {

using Json = nlohmann::ordered_json;

Json rat_to_json(const BigRat& q);
/// Accepts "p/q" strings and JSON integers. Throws PreconditionError otherwise.
BigRat rat_from_json(const Json& j);

/// {"a2", "a4", "a6"}
Json curve_to_json(const WeierstrassCurve& e);
WeierstrassCurve curve_from_json(const Json& j);

/// {"x", "y"} or {"identity": true}
Json point_to_json(const ECPoint& p);
ECPoint point_from_json(const Json& j);

/// {"c4", "c3", "c2", "c1", "c0"}
Json quartic_to_json(const QuarticModel& q);
QuarticModel quartic_from_json(const Json& j);

/// {"A", "B", "C", "n", "x", "y", "z", "verified", "nontrivial", "provenance"}
Json solution_to_json(const SolutionTriple& t);
/// Reads the fields back as stored; does not re-verify.
SolutionTriple solution_from_json(const Json& j);

std::string solution_jsonl(const SolutionTriple& t);

std::string_view csv_header();  // A,B,C,n,x,y,z
std::string solution_csv(const SolutionTriple& t);

}  // namespace laurent
