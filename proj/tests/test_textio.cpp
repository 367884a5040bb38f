#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fpd/fuzz.hpp"
#include "fpd/generators.hpp"
#include "fpd/reducer.hpp"
#include "fpd/textio.hpp"
#include "helpers.hpp"

using namespace fpd;
using fpdtest::data;
using fpdtest::pt;

TEST_CASE("parse_data basics") {
    CHECK(parse_data("+ 1 2 3\n- 1 2 3\n") == gen_s6(1, 2, 3));
    CHECK(parse_data("# comment\n+ 2 2 1\n+ 2 2 1\n- 2 2 1\n- 2 2 1\n") ==
          data({{'+', 2, 2, 1}, {'+', 2, 2, 1}, {'-', 2, 2, 1}, {'-', 2, 2, 1}}));
    CHECK(parse_data("") == FixedPointData{});
    CHECK(parse_data("\n  \n# only comments\n") == FixedPointData{});
    // windows line endings and stray spaces
    CHECK(parse_data("+ 3  2 1\r\n") == data({{'+', 3, 2, 1}}));
}

TEST_CASE("parse_data failures carry line numbers") {
    CHECK_THROWS_AS(parse_data("+ 0 1 2\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_data("+ 1 2 3\n* 1 2 3\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_data("+ 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_data("+ 1 2 3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_data("+ 1 -2 3\n"), ParseError);
}

TEST_CASE("print_data canonical form") {
    CHECK(print_data(gen_s6(1, 2, 3)) == "+ 3 2 1\n- 3 2 1\n");
    CHECK(print_data(FixedPointData{}) == "");
    CHECK(print_data(gen_cp3(1, 2, 3)) == "+ 3 2 1\n+ 2 1 1\n- 3 2 1\n- 2 1 1\n");
}

TEST_CASE("round-trip: parse after print is the identity") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 120; ++i) {
        std::mt19937_64 it = iteration_rng(12, i);
        const FixedPointData d = random_realizable_data(it, 5, 9);
        CHECK(parse_data(print_data(d)) == d);
        CHECK(print_data(parse_data(print_data(d))) == print_data(d));
        (void)rng;
    }
}

TEST_CASE("arbitrary precision weights survive the text format") {
    const std::string big = "123456789012345678901234567890";
    const FixedPointData d = parse_data("+ " + big + " 2 1\n- " + big + " 2 1\n");
    CHECK(max_weight(d) == Int(big));
    CHECK(print_data(d) == "+ " + big + " 2 1\n- " + big + " 2 1\n");
}

TEST_CASE("parse_int") {
    CHECK(parse_int("0") == 0);
    CHECK(parse_int("-17") == -17);
    CHECK(parse_int("999999999999999999999999") == Int("999999999999999999999999"));
    CHECK_THROWS_AS(parse_int(""), ParseError);
    CHECK_THROWS_AS(parse_int("12x"), ParseError);
}

TEST_CASE("certificate JSON round-trips") {
    const CobordismCertificate cert = reduce_to_empty(gen_z2sum(5, 2));
    const std::string json = certificate_to_json(cert);
    const CobordismCertificate back = certificate_from_json(json);
    CHECK(back == cert);
    CHECK(verify_certificate(back));
}

TEST_CASE("certificate JSON carries the fixed field names") {
    const CobordismCertificate cert = reduce_to_empty(gen_cp3(1, 2, 3));
    const std::string json = certificate_to_json(cert);
    for (const char* field : {"\"version\"", "\"initial\"", "\"divisor\"", "\"steps\"",
                              "\"kind\"", "\"params\"", "\"removed\"", "\"added\"",
                              "\"generator\"", "\"family\"", "\"reversed\""}) {
        CHECK(json.find(field) != std::string::npos);
    }
}

TEST_CASE("certificate JSON rejects malformed input") {
    CHECK_THROWS_AS(certificate_from_json("not json"), ParseError);
    CHECK_THROWS_AS(certificate_from_json("{}"), ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"version": 2, "initial": [], "divisor": "1",
                                             "steps": []})"),
                    ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"version": 1, "initial": [], "divisor": "1"})"),
                    ParseError);
}

TEST_CASE("validation report rendering") {
    const ValidationReport report = validate_all(gen_cp3(1, 2, 3));
    const std::string text = report_to_text(report);
    CHECK(text.find("overall: PASS") != std::string::npos);
    CHECK(text.find("sign_balance") != std::string::npos);

    const std::string json = report_to_json(report);
    CHECK(json.find("\"overall\": true") != std::string::npos);
    CHECK(json.find("\"divisor\": \"1\"") != std::string::npos);

    const std::string bad = report_to_text(validate_all(data({{'+', 1, 2, 3}})));
    CHECK(bad.find("overall: FAIL") != std::string::npos);
}
