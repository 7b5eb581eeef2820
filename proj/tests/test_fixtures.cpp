#include "generators.hpp"

#include "conekit/error.hpp"
#include "conekit/fixtures.hpp"
#include "conekit/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace conekit;
using namespace conekit::testing;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("every packaged fixture passes its self-test") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const Fixture f = load_builtin_fixture(name);
    CHECK(f.name == name);
    const auto mismatches = self_test(f);
    for (const auto& m : mismatches) FAIL_CHECK(m);
  }
  CHECK(code_of([] { load_builtin_fixture("del-pezzo-9"); }) == ErrorCode::InvalidFixture);
  CHECK(code_of([] { load_builtin_fixture("nope"); }) == ErrorCode::InvalidFixture);
}

TEST_CASE("Hesse fixture") {
  const Fixture f = fixture_hesse();
  CHECK(signature(f.lattice) == Signature{1, 3});
  REQUIRE(f.group);
  CHECK(f.group->gens.size() == 4);
  for (const auto& g : f.group->gens) {
    const MatrixQ& m = g.matrix();
    CHECK(MatrixQ(m.transpose() * f.lattice.gram() * m) == f.lattice.gram());
    CHECK(is_integral(m));
    CHECK(is_integral(g.inverse_matrix()));
  }
  CHECK(f.lattice.norm(f.lattice.ample()) > 0);
  CHECK(in_positive_cone(f.lattice, f.lattice.ample()));
}

TEST_CASE("Eisenstein transport") {
  // det(g M g^*) = |det g|^2 det(M), so a unit determinant preserves the form; zeta^3 = 1.
  const Eisenstein zeta{0, 1};
  CHECK(zeta * zeta * zeta == Eisenstein{1, 0});
  CHECK((zeta * zeta.conj()) == Eisenstein{1, 0});
  CHECK(Eisenstein{2, 1}.norm() == 3);
  EisensteinMatrix s{{{Eisenstein{0, 0}, Eisenstein{1, 0}}, {Eisenstein{1, 0}, Eisenstein{0, 0}}}};
  const MatrixQ m = hermitian_action(s);
  // Swapping the diagonal entries.
  CHECK(m * vec({1, 0, 0, 0}) == vec({0, 1, 0, 0}));
}

TEST_CASE("JSON roundtrip of fixtures") {
  for (const char* name : {"pell", "hirzebruch-2", "del-pezzo-3", "hesse"}) {
    const Fixture f = load_builtin_fixture(name);
    const Json j = to_json(f);
    const Fixture g = fixture_from_json(Json::parse(j.dump()), "copy");
    CHECK(g.name == f.name);
    CHECK(g.lattice.gram() == f.lattice.gram());
    CHECK(to_json(g).dump() == j.dump());
  }
}

TEST_CASE("surface JSON in the documented shape") {
  const Json j = Json::parse(R"({
    "lattice": {"rank": 2, "gram": [[-2, 1], [1, 0]], "ample": [1, 3]},
    "K": [-2, -4],
    "delta": [{"curve": 0, "coeff": "1/2"}],
    "curves": [{"name": "C", "class": [1, 0], "in_fiber": false},
               {"name": "F", "class": [0, 1], "in_fiber": true}],
    "declares": {"rational_surface": true, "anti_K_effective": true,
                 "fibration": {"P": [0, 1], "a": 1, "b": 1}}
  })");
  const SurfaceData s = surface_from_json(j);
  CHECK(s.curves().size() == 2);
  CHECK(s.delta()[0].coeff == Rational(1, 2));
  CHECK(s.declares().fibration->P == vec({0, 1}));
  CHECK(to_json(s)["curves"][1]["in_fiber"] == true);
}

TEST_CASE("malformed input") {
  CHECK(code_of([] { rational_from_json(Json::parse(R"("1/0")")); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { rational_from_json(Json::parse("1.5")); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { lattice_from_json(Json::parse(R"({"gram": [[1, 0], [0]], "ample": [1, 0]})")); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { lattice_from_json(Json::parse(R"({"rank": 3, "gram": [[1, 0], [0, -1]], "ample": [1, 0]})")); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { lattice_from_json(Json::parse(R"({"gram": [[1, 0], [0, 1]], "ample": [1, 0]})")); }) ==
        ErrorCode::WrongSignature);
}

TEST_CASE("fixture from a file") {
  const std::string path = "conekit_fixture_test.json";
  {
    std::ofstream out(path);
    out << R"({"name": "pell-file", "lattice": {"gram": [[1, 0], [0, -2]], "ample": [1, 0]},
              "generators": [[[3, 4], [2, 3]]], "basepoint": [1, 0],
              "dirichlet": {"cosh_sq_bound": "100", "max_elements": 500}})";
  }
  const Fixture f = load_fixture(path);
  CHECK(f.name == "pell-file");
  CHECK(f.group->gens.size() == 1);
  CHECK(f.dirichlet->max_elements == 500);
  {
    std::ofstream out(path);
    out << R"({"lattice": {"gram": [[1, 0], [0, -2]], "ample": [1, 0]}, "generators": [[[1, 1], [0, 1]]]})";
  }
  CHECK(code_of([&] { load_fixture(path); }) == ErrorCode::FormNotPreserved);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK(code_of([&] { load_fixture(path); }) == ErrorCode::MalformedInput);
  std::remove(path.c_str());
}

TEST_CASE("rational formatting is canonical") {
  CHECK(to_json(Rational(Integer(6), Integer(-4))) == "-3/2");
  CHECK(to_json(Rational(4, 2)) == "2");
  CHECK(rational_from_json(Json::parse(R"("-6/4")")) == Rational(-3, 2));
}
