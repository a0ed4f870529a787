#include "opradius/serialization.hpp"

#include "opradius/ensembles.hpp"
#include "opradius/radius.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace opradius;

TEST_CASE("matrix json: bit-exact round trip on random and extreme values") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ComplexMatrix m =
        draw_matrix({"ginibre", 1 + static_cast<int>(seed % 5), 1, seed, 1.0});
    const Json j = matrix_to_json(m);
    const ComplexMatrix back = matrix_from_json(parse_json(j.dump(), "roundtrip"));
    REQUIRE(back.rows() == m.rows());
    CHECK(back == m);
  }

  ComplexMatrix extremes(2, 2);
  extremes << Complex(1e-308, -1e308), Complex(0.0, -0.0), Complex(1.0 / 3.0, 2.0 / 7.0),
      Complex(5e-324, 1.7976931348623157e308);
  const ComplexMatrix back = matrix_from_json(parse_json(matrix_to_json(extremes).dump(), "x"));
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      CHECK(std::memcmp(&back(i, k), &extremes(i, k), sizeof(Complex)) == 0);
    }
  }
}

TEST_CASE("matrix json: malformed documents are rejected") {
  CHECK_THROWS_AS(parse_json("{not json", "bad"), ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json("{\"dim\": 2}", "x")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json("{\"dim\": 2, \"entries\": [[[0,0]]]}", "x")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(
                      "{\"dim\": 1, \"entries\": [[[1,\"i\"]]]}", "x")),
                  ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(parse_json("{\"dim\": 0, \"entries\": []}", "x")), ParseError);
}

TEST_CASE("tuple json: round trip and dim consistency") {
  const OperatorTuple t = draw_tuple({"tuple", 3, 2, 9, 1.0});
  const OperatorTuple back = tuple_from_json(parse_json(tuple_to_json(t).dump(), "t"));
  REQUIRE(back.size() == 2);
  CHECK(back.operators[0] == t.operators[0]);
  CHECK(back.operators[1] == t.operators[1]);

  CHECK_THROWS_AS(tuple_from_json(parse_json("{\"operators\": []}", "t")), ParseError);
  const std::string mixed =
      R"({"dim": 2, "operators": [{"dim": 1, "entries": [[[1,0]]]}]})";
  CHECK_THROWS_AS(tuple_from_json(parse_json(mixed, "t")), ParseError);
}

TEST_CASE("estimate json: fields and null upper") {
  const OperatorTuple t = draw_tuple({"tuple", 2, 2, 12, 1.0});
  const RadiusEstimate est = wp_radius(t, 2.0);
  const Json j = estimate_to_json(est);
  CHECK(j["value"].get<double>() == est.value);
  CHECK(j["upper"].is_null());
  CHECK(j["witness"].size() == 2);
  CHECK(j["restarts_used"].get<int>() == est.restarts_used);
  CHECK(j.contains("converged"));

  const RadiusEstimate w = numerical_radius(t.operators[0]);
  CHECK(estimate_to_json(w)["upper"].get<double>() == *w.upper);
}

TEST_CASE("ensemble json: round trip") {
  const EnsembleSpec spec{"tuple:hermitian", 4, 3, 77, 2.5};
  const EnsembleSpec back = ensemble_from_json(parse_json(ensemble_to_json(spec).dump(), "e"));
  CHECK(back.kind == spec.kind);
  CHECK(back.dim == spec.dim);
  CHECK(back.length == spec.length);
  CHECK(back.seed == spec.seed);
  CHECK(back.scale == spec.scale);
}

TEST_CASE("json dumps are stable across calls") {
  const ComplexMatrix m = draw_matrix({"ginibre", 3, 1, 5, 1.0});
  CHECK(matrix_to_json(m).dump(2) == matrix_to_json(m).dump(2));
}
