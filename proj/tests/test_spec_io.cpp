#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ringlab/catalog.hpp"
#include "ringlab/spec_io.hpp"
#include "support.hpp"

using namespace ringlab;

namespace {

std::string parse_error(const Json& spec) {
  try {
    algebra_from_spec(spec);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) return e.what();
    return std::string("other: ") + e.what();
  }
  return "no error";
}

Json small_spec() {
  return Json::parse(R"({
    "field": {"kind": "Fp", "p": 3},
    "names": ["1", "t"],
    "presentation": {"kind": "structure_constants", "dim": 2, "unit": ["1", "0"],
                     "table": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]]}
  })");
}

}  // namespace

TEST_CASE("structure constants round trip") {
  Algebra a = algebra_from_spec(small_spec());
  CHECK(a.dim() == 2);
  CHECK(a.names() == std::vector<std::string>{"1", "t"});
  CHECK(a.multiply(a.basis(1), a.basis(1)) == a.zero());
  CHECK(algebra_from_spec(structure_constants_spec(a)) == a);

  for (const auto& [name, b] : testing_support::finite_test_algebras()) {
    CAPTURE(name);
    Json spec = structure_constants_spec(b);
    Algebra back = algebra_from_spec(Json::parse(dump_json(spec)));
    CHECK(back == b);
    CHECK(back.names() == b.names());
  }
  Algebra q = paper_algebra(FieldDesc::rationals()).algebra();
  CHECK(algebra_from_spec(structure_constants_spec(q)) == q);
  CHECK(dump_json(Json{{"a", 1}}) == "{\n  \"a\": 1\n}\n");
}

TEST_CASE("matrix basis documents") {
  const FieldDesc f2 = FieldDesc::prime(2);
  PaperBundle pb = paper_algebra(f2);
  Json spec = matrix_basis_spec(f2, 7, pb.matrices.embedding, pb.algebra().names(), false);
  CHECK(spec["presentation"]["kind"] == "matrix_basis");
  CHECK(algebra_from_spec(spec) == pb.algebra());

  // E12 and E23 close up with E13; the repeated 2*E12 is dropped.
  Json gen = Json::parse(R"({
    "field": {"kind": "Q"},
    "presentation": {"kind": "matrix_basis", "size": 3, "autoclose": true,
                     "matrices": [[["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
                                  [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]],
                                  [["0", "2", "0"], ["0", "0", "0"], ["0", "0", "0"]],
                                  [["0", "0", "0"], ["0", "0", "1"], ["0", "0", "0"]]]}
  })");
  Algebra ut = algebra_from_spec(gen);
  CHECK(ut.dim() == 4);
  gen["presentation"]["autoclose"] = false;
  CHECK_THROWS_AS(algebra_from_spec(gen), Error);
}

TEST_CASE("fields") {
  CHECK(field_from_spec(Json{{"kind", "Q"}}) == FieldDesc::rationals());
  CHECK(field_from_spec(Json{{"kind", "Fp"}, {"p", 7}}) == FieldDesc::prime(7));
  CHECK(field_to_spec(FieldDesc::prime(5)) == Json{{"kind", "Fp"}, {"p", 5}});
  CHECK(field_to_spec(FieldDesc::rationals()) == Json{{"kind", "Q"}});
}

TEST_CASE("malformed documents name the offending field") {
  Json s = small_spec();
  s["field"]["p"] = 4;
  CHECK(parse_error(s) == "ParseError: field.p: CompositeModulus: 4 is not prime");

  s = small_spec();
  s["field"]["kind"] = "GF";
  CHECK(parse_error(s).find("field.kind") != std::string::npos);

  s = small_spec();
  s["field"].erase("p");
  CHECK(parse_error(s) == "ParseError: field.p: missing");

  s = small_spec();
  s.erase("presentation");
  CHECK(parse_error(s) == "ParseError: spec.presentation: missing");

  s = small_spec();
  s["presentation"]["unit"] = Json::array({"1"});
  CHECK(parse_error(s) == "ParseError: presentation.unit: expected 2 scalars");

  s = small_spec();
  s["presentation"]["table"][1][0][1] = "x";
  CHECK(parse_error(s).rfind("ParseError: presentation.table[1][0][1]: ", 0) == 0);

  s = small_spec();
  s["presentation"]["table"][0] = Json::array();
  CHECK(parse_error(s) == "ParseError: presentation.table[0]: expected 2 entries");

  s = small_spec();
  s["presentation"]["dim"] = 0;
  CHECK(parse_error(s) == "ParseError: presentation.dim: expected a positive integer");

  s = small_spec();
  s["names"] = Json::array({"1"});
  CHECK(parse_error(s) == "ParseError: names: expected 2 names");

  s = small_spec();
  s["names"][1] = 5;
  CHECK(parse_error(s) == "ParseError: names[1]: expected a string");

  s = small_spec();
  s["presentation"]["kind"] = "words";
  CHECK(parse_error(s).find("presentation.kind") != std::string::npos);

  s = small_spec();
  s["presentation"]["table"][1][1] = Json::array({"1", "0"});  // t^2 = 1 is fine
  CHECK(parse_error(s) == "no error");
  s["presentation"]["unit"] = Json::array({"0", "1"});
  CHECK(parse_error(s).rfind("other: UnitLawFails", 0) == 0);
}

TEST_CASE("files") {
  const std::string path = "spec_io_test.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_WITH_AS(load_algebra_file(path), doctest::Contains("spec_io_test.json"), Error);
  {
    std::ofstream out(path);
    out << dump_json(small_spec());
  }
  CHECK(load_algebra_file(path).dim() == 2);
  std::remove(path.c_str());
  CHECK_THROWS_WITH_AS(load_algebra_file(path), "ParseError: spec_io_test.json: cannot open file", Error);
}
