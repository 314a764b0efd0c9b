#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "slc/distribution_file.hpp"

using namespace slc;

TEST_CASE("parse the counterexample with index-list keys") {
    const SubsetPoly p = parse_distribution(R"({
        "n": 3,
        "weights": {"": "4/22", "1": "3/22", "2": "3/22", "3": "3/22",
                    "1,2": "3/22", "1,3": "3/22", "2,3": "3/22"}
    })");
    CHECK(p == slc::testing::example_poly());
}

TEST_CASE("mask keys, integers and normalization") {
    const SubsetPoly p = parse_distribution(R"({"n": 3, "weights": {"mask:0": 4, "mask:1": "3", "mask:2": 3,
        "mask:4": 3, "mask:3": "3", "mask:5": 3, "1,2,3": 0, "mask:6": "3.0"}})",
                                            true);
    CHECK(p == slc::testing::example_poly());
    const SubsetPoly raw = parse_distribution(R"({"n": 2, "weights": {"": "1/2", "1,2": "3/2"}})");
    CHECK(raw.coeff(0b11) == Rational(3, 2));
    CHECK(raw.coeff(0b01).is_zero());
}

TEST_CASE("validation errors") {
    const char* bad[] = {
        R"({"n": 3, "weights": {"1": "-1/2"}})",
        R"({"n": 3, "weights": {"2,1": "1"}})",
        R"({"n": 3, "weights": {"1,1": "1"}})",
        R"({"n": 3, "weights": {"4": "1"}})",
        R"({"n": 3, "weights": {"0": "1"}})",
        R"({"n": 3, "weights": {"1,": "1"}})",
        R"({"n": 3, "weights": {"a": "1"}})",
        R"({"n": 3, "weights": {"mask:8": "1"}})",
        R"({"n": 3, "weights": {"mask:x": "1"}})",
        R"({"n": 3, "weights": {"1,2": "1", "mask:3": "1"}})",
        R"({"n": 3, "weights": {"1": 0.5}})",
        R"({"n": 3, "weights": {"1": "1/0"}})",
        R"({"n": 3, "weights": {"1": "abc"}})",
        R"({"n": 17, "weights": {}})",
        R"({"n": 0, "weights": {}})",
        R"({"n": "3", "weights": {}})",
        R"({"weights": {}})",
        R"({"n": 3})",
        R"([1, 2])",
        R"({"n": 3, "weights": )",
    };
    for (const char* doc : bad) {
        CAPTURE(doc);
        CHECK_THROWS_AS(parse_distribution(doc), DistributionFileError);
    }
    CHECK_THROWS_AS(parse_distribution(R"({"n": 2, "weights": {}})", true), DistributionFileError);
    CHECK_THROWS_AS(load_distribution("/nonexistent/file.json"), DistributionFileError);
}

TEST_CASE("subset keys") {
    CHECK(subset_key(0).empty());
    CHECK(subset_key(0b101) == "1,3");
    CHECK(subset_key(var_bit(16)) == "16");
}

TEST_CASE("property: write then parse is coefficient-identical") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 500; ++k) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const SubsetPoly p = slc::testing::random_subset_poly(rng, n, 0.4);
        REQUIRE(parse_distribution(write_distribution(p)) == p);
    }
    const std::string text = write_distribution(slc::testing::example_poly());
    CHECK(text.find("\"3/22\"") != std::string::npos);
    CHECK(text.find("\"2/11\"") != std::string::npos);
    CHECK(text.find("\"1,2\"") != std::string::npos);
}
