#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fpd/generators.hpp"
#include "fpd/validator.hpp"
#include "helpers.hpp"

using namespace fpd;
using fpdtest::data;
using fpdtest::pt;

TEST_CASE("complex_to_real sign and canonical weights") {
    CHECK(complex_to_real({-1, 1, 2}) == pt('-', 2, 1, 1));
    CHECK(complex_to_real({-2, -1, 1}) == pt('+', 2, 1, 1));
    CHECK(complex_to_real({1, 2, 3}) == pt('+', 3, 2, 1));
    CHECK(complex_to_real({-1, -2, -3}) == pt('-', 3, 2, 1));
    CHECK_THROWS_AS(complex_to_real({1, 0, 2}), ZeroWeight);
}

TEST_CASE("gen_s6") {
    CHECK(gen_s6(1, 2, 3) == data({{'+', 3, 2, 1}, {'-', 3, 2, 1}}));
    CHECK(gen_s6(1, 1, 1) == data({{'+', 1, 1, 1}, {'-', 1, 1, 1}}));
    CHECK(gen_s6(2, 2, 5) == data({{'+', 5, 2, 2}, {'-', 5, 2, 2}}));
    CHECK_THROWS_AS(gen_s6(0, 1, 2), NonPositiveWeight);
}

TEST_CASE("gen_cp3") {
    CHECK(gen_cp3(1, 2, 3) ==
          data({{'+', 3, 2, 1}, {'-', 2, 1, 1}, {'+', 2, 1, 1}, {'-', 3, 2, 1}}));
    CHECK(gen_cp3(1, 2, 4) ==
          data({{'+', 4, 2, 1}, {'-', 3, 1, 1}, {'+', 2, 2, 1}, {'-', 4, 3, 2}}));
    CHECK(gen_cp3(2, 3, 7) ==
          data({{'+', 7, 3, 2}, {'-', 5, 2, 1}, {'+', 4, 3, 1}, {'-', 7, 5, 4}}));
    CHECK(max_weight(gen_cp3(2, 3, 7)) == 7);
    CHECK_THROWS_AS(gen_cp3(2, 2, 3), ParameterOrder);
    CHECK_THROWS_AS(gen_cp3(3, 2, 1), ParameterOrder);
    CHECK_THROWS_AS(gen_cp3(0, 1, 2), ParameterOrder);
}

TEST_CASE("gen_zn sample instances") {
    CHECK(gen_zn(1, 3, 2, 1) == data({{'+', 3, 1, 1},
                                      {'-', 2, 1, 1},
                                      {'-', 2, 1, 1},
                                      {'+', 1, 1, 1},
                                      {'+', 3, 2, 1},
                                      {'-', 2, 1, 1}}));
    CHECK(gen_zn(2, 5, 2, 2) == data({{'+', 5, 3, 2},
                                      {'-', 3, 2, 1},
                                      {'-', 3, 2, 2},
                                      {'-', 3, 2, 2},
                                      {'+', 5, 2, 2},
                                      {'+', 2, 2, 1}}));
    CHECK(gen_zn(2, 3, 2, 2) == data({{'+', 3, 2, 1},
                                      {'+', 2, 1, 1},
                                      {'-', 2, 2, 1},
                                      {'-', 2, 2, 1},
                                      {'+', 3, 2, 2},
                                      {'-', 2, 2, 1}}));
}

TEST_CASE("gen_zn degenerate parameters") {
    CHECK_THROWS_AS(gen_zn(1, 2, 2, 5), DegenerateParameters);  // b == a
    CHECK_THROWS_AS(gen_zn(1, 5, 2, 5), DegenerateParameters);  // nc == a
    CHECK_THROWS_AS(gen_zn(1, 3, 2, 2), DegenerateParameters);  // nc == b
    CHECK_THROWS_AS(gen_zn(2, 4, 3, 2), DegenerateParameters);  // nc == a
    CHECK_THROWS_AS(gen_zn(1, 0, 2, 3), DegenerateParameters);
}

// Golden tables: the real-form data of Z_1 in both parameter regimes, three
// numeric instances each.
TEST_CASE("gen_zn golden: Z1 with a > b > c") {
    CHECK(gen_zn(1, 3, 2, 1) == data({{'+', 3, 2, 1}, {'+', 3, 1, 1}, {'+', 1, 1, 1},
                                      {'-', 2, 1, 1}, {'-', 2, 1, 1}, {'-', 2, 1, 1}}));
    CHECK(gen_zn(1, 5, 3, 2) == data({{'+', 5, 3, 2}, {'+', 5, 2, 2}, {'+', 2, 2, 1},
                                      {'-', 3, 2, 2}, {'-', 3, 2, 2}, {'-', 3, 2, 1}}));
    CHECK(gen_zn(1, 7, 4, 2) == data({{'+', 7, 4, 2}, {'+', 7, 3, 2}, {'+', 3, 2, 2},
                                      {'-', 5, 3, 2}, {'-', 5, 2, 2}, {'-', 4, 3, 2}}));
    CHECK(gen_zn(1, 8, 5, 3) == data({{'+', 8, 5, 3}, {'+', 8, 3, 3}, {'+', 3, 3, 2},
                                      {'-', 5, 3, 3}, {'-', 5, 3, 3}, {'-', 5, 3, 2}}));
}

TEST_CASE("gen_zn golden: Z1 with a > c > b") {
    CHECK(gen_zn(1, 3, 1, 2) == data({{'+', 3, 2, 2}, {'+', 3, 2, 1}, {'+', 2, 1, 1},
                                      {'-', 2, 2, 1}, {'-', 2, 2, 1}, {'-', 2, 2, 1}}));
    CHECK(gen_zn(1, 5, 2, 3) == data({{'+', 5, 3, 3}, {'+', 5, 3, 2}, {'+', 3, 2, 1},
                                      {'-', 3, 3, 2}, {'-', 3, 3, 2}, {'-', 3, 3, 1}}));
    CHECK(gen_zn(1, 7, 2, 4) == data({{'+', 7, 5, 4}, {'+', 7, 4, 2}, {'+', 4, 3, 2},
                                      {'-', 5, 4, 3}, {'-', 5, 4, 2}, {'-', 5, 4, 2}}));
    CHECK(gen_zn(1, 8, 3, 5) == data({{'+', 8, 5, 5}, {'+', 8, 5, 3}, {'+', 5, 3, 2},
                                      {'-', 5, 5, 3}, {'-', 5, 5, 3}, {'-', 5, 5, 2}}));
}

TEST_CASE("gen_zn golden: Z2 with 2d < a") {
    CHECK(gen_zn(2, 3, 1, 1) == data({{'+', 3, 2, 1}, {'+', 3, 1, 1}, {'+', 1, 1, 1},
                                      {'-', 2, 1, 1}, {'-', 2, 1, 1}, {'-', 2, 1, 1}}));
    CHECK(gen_zn(2, 5, 2, 2) == data({{'+', 5, 3, 2}, {'+', 5, 2, 2}, {'+', 2, 2, 1},
                                      {'-', 3, 2, 2}, {'-', 3, 2, 2}, {'-', 3, 2, 1}}));
    CHECK(gen_zn(2, 7, 3, 3) == data({{'+', 7, 4, 3}, {'+', 7, 3, 3}, {'+', 3, 3, 1},
                                      {'-', 4, 3, 3}, {'-', 4, 3, 3}, {'-', 4, 3, 1}}));
}

TEST_CASE("gen_zn golden: Z2 with 2d > a") {
    CHECK(gen_zn(2, 3, 2, 2) == data({{'+', 3, 2, 2}, {'+', 3, 2, 1}, {'+', 2, 1, 1},
                                      {'-', 2, 2, 1}, {'-', 2, 2, 1}, {'-', 2, 2, 1}}));
    CHECK(gen_zn(2, 5, 3, 3) == data({{'+', 5, 3, 3}, {'+', 5, 3, 2}, {'+', 3, 2, 1},
                                      {'-', 3, 3, 2}, {'-', 3, 3, 2}, {'-', 3, 3, 1}}));
    CHECK(gen_zn(2, 7, 4, 4) == data({{'+', 7, 4, 4}, {'+', 7, 4, 3}, {'+', 4, 3, 1},
                                      {'-', 4, 4, 3}, {'-', 4, 4, 3}, {'-', 4, 4, 1}}));
}

TEST_CASE("gen_z2sum golden: ten-point tables") {
    CHECK(gen_z2sum(3, 1) ==
          data({{'+', 3, 1, 1}, {'+', 2, 2, 1}, {'+', 2, 2, 1}, {'+', 2, 2, 1}, {'+', 1, 1, 1},
                {'-', 3, 2, 2}, {'-', 2, 1, 1}, {'-', 2, 1, 1}, {'-', 2, 1, 1}, {'-', 2, 1, 1}}));
    CHECK(gen_z2sum(4, 1) ==
          data({{'+', 4, 1, 1}, {'+', 3, 3, 2}, {'+', 3, 3, 1}, {'+', 3, 3, 1}, {'+', 2, 1, 1},
                {'-', 4, 3, 3}, {'-', 3, 2, 1}, {'-', 3, 2, 1}, {'-', 3, 1, 1}, {'-', 3, 1, 1}}));
    CHECK(gen_z2sum(5, 2) ==
          data({{'+', 5, 2, 2}, {'+', 3, 3, 2}, {'+', 3, 3, 2}, {'+', 3, 3, 1}, {'+', 2, 2, 1},
                {'-', 5, 3, 3}, {'-', 3, 2, 2}, {'-', 3, 2, 2}, {'-', 3, 2, 1}, {'-', 3, 2, 1}}));
    CHECK_THROWS_AS(gen_z2sum(4, 2), DegenerateParameters);
    CHECK_THROWS_AS(gen_z2sum(2, 1), DegenerateParameters);
}

TEST_CASE("gen_z2sum equals its manual composition") {
    for (auto [a, e] : {std::pair{3, 1}, {4, 1}, {5, 2}, {7, 3}, {9, 2}}) {
        const FixedPointData first = gen_zn(2, a, e, e);
        const FixedPointData second = reverse_orientation(gen_zn(2, a, a - e, a - e));
        const FixedPoint glue = pt('+', a, a - e, e);
        const FixedPointData manual = connected_sum(first, second, {{glue, glue.opposite_sign()}});
        CHECK(gen_z2sum(a, e) == manual);
    }
}

TEST_CASE("connected_sum examples") {
    const FixedPointData s6 = gen_s6(1, 2, 3);
    CHECK(connected_sum(s6, s6,
                        {{pt('+', 3, 2, 1), pt('-', 3, 2, 1)},
                         {pt('-', 3, 2, 1), pt('+', 3, 2, 1)}}) == FixedPointData{});

    const FixedPointData cp3 = gen_cp3(1, 2, 3);
    std::vector<std::pair<FixedPoint, FixedPoint>> all_pairs;
    for (const FixedPoint& p : cp3) all_pairs.emplace_back(p, p.opposite_sign());
    CHECK(connected_sum(cp3, reverse_orientation(cp3), all_pairs) == FixedPointData{});

    const FixedPointData z = connected_sum(gen_zn(2, 5, 2, 2),
                                           reverse_orientation(gen_zn(2, 5, 3, 3)),
                                           {{pt('+', 5, 3, 2), pt('-', 5, 3, 2)}});
    CHECK(z == gen_z2sum(5, 2));
}

TEST_CASE("connected_sum error cases") {
    const FixedPointData s6 = gen_s6(1, 2, 3);
    CHECK_THROWS_AS(connected_sum(s6, s6, {{pt('+', 3, 2, 1), pt('-', 2, 2, 1)}}),
                    WeightMismatch);
    CHECK_THROWS_AS(connected_sum(s6, s6, {{pt('+', 3, 2, 1), pt('+', 3, 2, 1)}}), SignMismatch);
    CHECK_THROWS_AS(connected_sum(s6, s6, {{pt('+', 4, 2, 1), pt('-', 4, 2, 1)}}),
                    PairNotPresent);
    // multiplicity accounting: the same point cannot be glued twice
    CHECK_THROWS_AS(connected_sum(s6, s6,
                                  {{pt('+', 3, 2, 1), pt('-', 3, 2, 1)},
                                   {pt('+', 3, 2, 1), pt('-', 3, 2, 1)}}),
                    PairNotPresent);
}

TEST_CASE("connected_sum point count and sign balance") {
    const FixedPointData m = gen_s6(5, 2, 2);
    const FixedPointData n = gen_zn(2, 5, 2, 2);
    const FixedPointData sum = connected_sum(m, n, {{pt('-', 5, 2, 2), pt('+', 5, 2, 2)}});
    CHECK(sum.size() == m.size() + n.size() - 2);
    CHECK(check_sign_balance(sum));

    const FixedPointData cp3 = gen_cp3(1, 2, 3);
    const FixedPointData two = connected_sum(
        cp3, reverse_orientation(cp3),
        {{pt('+', 3, 2, 1), pt('-', 3, 2, 1)}, {pt('-', 2, 1, 1), pt('+', 2, 1, 1)}});
    CHECK(two.size() == cp3.size() + cp3.size() - 4);
    CHECK(check_sign_balance(two));
}

TEST_CASE("every generator output validates (parameter sweeps)") {
    for (int a = 1; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            for (int c = b; c <= 6; ++c) CHECK(validate_all(gen_s6(a, b, c)).overall);
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 7; ++b)
            for (int c = b + 1; c <= 8; ++c) CHECK(validate_all(gen_cp3(a, b, c)).overall);
    for (int n = 1; n <= 2; ++n)
        for (int a = 1; a <= 6; ++a)
            for (int b = 1; b <= 6; ++b)
                for (int c = 1; c <= 6; ++c) {
                    if (b == a || n * c == a || n * c == b) continue;
                    CHECK(validate_all(gen_zn(n, a, b, c)).overall);
                }
    for (int a = 3; a <= 10; ++a)
        for (int e = 1; 2 * e < a; ++e) CHECK(validate_all(gen_z2sum(a, e)).overall);
}

TEST_CASE("generator_data realizes labels") {
    CHECK(generator_data({GeneratorFamily::s6, {Int(1), Int(2), Int(3)}, false}) ==
          gen_s6(1, 2, 3));
    CHECK(generator_data({GeneratorFamily::cp3, {Int(1), Int(2), Int(3)}, true}) ==
          reverse_orientation(gen_cp3(1, 2, 3)));
    CHECK(generator_data({GeneratorFamily::z1, {Int(5), Int(3), Int(2)}, false}) ==
          gen_zn(1, 5, 3, 2));
    CHECK(generator_data({GeneratorFamily::z2, {Int(5), Int(2), Int(2)}, false}) ==
          gen_zn(2, 5, 2, 2));
    CHECK(generator_data({GeneratorFamily::z2sum, {Int(5), Int(2)}, false}) == gen_z2sum(5, 2));
    CHECK_THROWS_AS(generator_data({GeneratorFamily::s6, {Int(1)}, false}),
                    DegenerateParameters);
}

TEST_CASE("family names round-trip") {
    for (GeneratorFamily f : {GeneratorFamily::s6, GeneratorFamily::cp3, GeneratorFamily::z1,
                              GeneratorFamily::z2, GeneratorFamily::z2sum}) {
        CHECK(family_from_name(family_name(f)) == f);
    }
    CHECK_THROWS_AS(family_from_name("Q8"), ParseError);
}
