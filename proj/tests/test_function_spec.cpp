#include <doctest.h>

#include <complex>
#include <cstdio>
#include <fstream>

#include "mhb/function_spec.hpp"
#include "testutil.hpp"

using namespace mhb;

namespace {

const char* kValid = R"({
  "n": 2,
  "components": [
    { "p": 1, "q": 1,
      "terms": [ { "alpha": [1, 0], "beta": [0, 1], "re": 1.0, "im": 0.5 } ] },
    { "p": 2, "q": 0,
      "terms": [ { "alpha": [1, 1], "beta": [0, 0], "re": -2.0, "im": 0.0 } ] }
  ]
})";

}  // namespace

TEST_CASE("valid function specs parse into validated functions") {
    const MhFunction f = parse_function_spec(kValid);
    CHECK(f.dim() == 2);
    REQUIRE(f.components().size() == 2);
    CHECK(f.components()[0].p == 1);
    CHECK(f.components()[1].p == 2);
    std::vector<std::complex<double>> z{{0.2, 0.0}, {0.5, 0.0}};
    CHECK(std::abs(evaluate(f, z)) > 0.0);
}

TEST_CASE("strict validation") {
    CHECK_THROWS_AS(parse_function_spec("{"), ValidationError);
    CHECK_THROWS_AS(parse_function_spec(R"({"n": 2})"), ValidationError);
    CHECK_THROWS_AS(parse_function_spec(R"({"n": 0, "components": []})"), ValidationError);
    // the zero function has no meaningful norm report
    CHECK_THROWS_AS(parse_function_spec(R"({"n": 2, "components": []})"), ValidationError);
    // unknown top-level field
    CHECK_THROWS_AS(parse_function_spec(
                        R"({"n": 2, "components": [], "extra": 1})"),
                    ValidationError);
    // unknown term field
    CHECK_THROWS_AS(parse_function_spec(R"({"n": 2, "components": [
        {"p": 1, "q": 0, "terms": [
            {"alpha": [1,0], "beta": [0,0], "re": 1.0, "im": 0.0, "imag": 0.0}]}]})"),
                    ValidationError);
    // wrong exponent-vector length
    CHECK_THROWS_AS(parse_function_spec(R"({"n": 2, "components": [
        {"p": 1, "q": 0, "terms": [
            {"alpha": [1], "beta": [0, 0], "re": 1.0, "im": 0.0}]}]})"),
                    ValidationError);
    // negative exponent
    CHECK_THROWS_AS(parse_function_spec(R"({"n": 2, "components": [
        {"p": 1, "q": 0, "terms": [
            {"alpha": [-1, 2], "beta": [0, 0], "re": 1.0, "im": 0.0}]}]})"),
                    ValidationError);
    // non-integer p
    CHECK_THROWS_AS(parse_function_spec(R"({"n": 2, "components": [
        {"p": 1.5, "q": 0, "terms": [
            {"alpha": [1, 0], "beta": [0, 0], "re": 1.0, "im": 0.0}]}]})"),
                    ValidationError);
    // non-harmonic component is rejected, never projected
    CHECK_THROWS_AS(parse_function_spec(R"({"n": 2, "components": [
        {"p": 1, "q": 1, "terms": [
            {"alpha": [1, 0], "beta": [1, 0], "re": 1.0, "im": 0.0}]}]})"),
                    ValidationError);
    // duplicate (p, q)
    CHECK_THROWS_AS(parse_function_spec(R"({"n": 2, "components": [
        {"p": 1, "q": 0, "terms": [{"alpha": [1,0], "beta": [0,0], "re": 1.0, "im": 0.0}]},
        {"p": 1, "q": 0, "terms": [{"alpha": [0,1], "beta": [0,0], "re": 1.0, "im": 0.0}]}
    ]})"),
                    ValidationError);
}

TEST_CASE("load from file") {
    const std::string path = "test_function_spec_tmp.json";
    {
        std::ofstream out(path);
        out << kValid;
    }
    const MhFunction f = load_function_spec(path);
    CHECK(f.components().size() == 2);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_function_spec("does_not_exist.json"), ValidationError);
}
