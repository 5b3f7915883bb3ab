#include "laurent/serialize.hpp"

#include "laurent/errors.hpp"

namespace laurent {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw PreconditionError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

long integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw PreconditionError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<long>();
}

}  // namespace

Json rat_to_json(const BigRat& q) { return q.to_string(); }

BigRat rat_from_json(const Json& j) {
  if (j.is_string()) return BigRat::parse(j.get<std::string>());
  if (j.is_number_integer()) return BigRat(j.get<long>());
  throw PreconditionError("rational must be a \"p/q\" string or an integer");
}

Json curve_to_json(const WeierstrassCurve& e) {
  return Json{{"a2", rat_to_json(e.a2())}, {"a4", rat_to_json(e.a4())}, {"a6", rat_to_json(e.a6())}};
}

WeierstrassCurve curve_from_json(const Json& j) {
  return WeierstrassCurve(rat_from_json(field(j, "a2")), rat_from_json(field(j, "a4")),
                          rat_from_json(field(j, "a6")));
}

Json point_to_json(const ECPoint& p) {
  if (p.is_identity()) return Json{{"identity", true}};
  return Json{{"x", rat_to_json(p.x())}, {"y", rat_to_json(p.y())}};
}

ECPoint point_from_json(const Json& j) {
  if (j.is_object() && j.contains("identity") && j.at("identity") == true) {
    return ECPoint::identity();
  }
  return ECPoint(rat_from_json(field(j, "x")), rat_from_json(field(j, "y")));
}

Json quartic_to_json(const QuarticModel& q) {
  return Json{{"c4", rat_to_json(q.c4())},
              {"c3", rat_to_json(q.c3())},
              {"c2", rat_to_json(q.c2())},
              {"c1", rat_to_json(q.c1())},
              {"c0", rat_to_json(q.c0())}};
}

QuarticModel quartic_from_json(const Json& j) {
  return QuarticModel(rat_from_json(field(j, "c4")), rat_from_json(field(j, "c3")),
                      rat_from_json(field(j, "c2")), rat_from_json(field(j, "c1")),
                      rat_from_json(field(j, "c0")));
}

Json solution_to_json(const SolutionTriple& t) {
  return Json{{"A", t.params.A()},
              {"B", t.params.B()},
              {"C", t.params.C()},
              {"n", exponent(t.kind)},
              {"x", rat_to_json(t.x)},
              {"y", rat_to_json(t.y)},
              {"z", rat_to_json(t.z)},
              {"verified", t.verified},
              {"nontrivial", t.nontrivial},
              {"provenance", t.provenance}};
}

SolutionTriple solution_from_json(const Json& j) {
  SolutionTriple t;
  t.params = LaurentParams(integer_field(j, "A"), integer_field(j, "B"), integer_field(j, "C"));
  t.kind = equation_kind(static_cast<int>(integer_field(j, "n")));
  t.x = rat_from_json(field(j, "x"));
  t.y = rat_from_json(field(j, "y"));
  t.z = rat_from_json(field(j, "z"));
  t.verified = j.value("verified", false);
  t.nontrivial = j.value("nontrivial", false);
  t.provenance = j.value("provenance", std::string());
  return t;
}

std::string solution_jsonl(const SolutionTriple& t) { return solution_to_json(t).dump(); }

std::string_view csv_header() { return "A,B,C,n,x,y,z"; }

std::string solution_csv(const SolutionTriple& t) {
  return std::to_string(t.params.A()) + "," + std::to_string(t.params.B()) + "," +
         std::to_string(t.params.C()) + "," + std::to_string(exponent(t.kind)) + "," +
         t.x.to_string() + "," + t.y.to_string() + "," + t.z.to_string();
}

}  // namespace laurent
