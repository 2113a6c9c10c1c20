#include <doctest.h>

#include <cmath>
#include <random>

#include "mink/illumination.hpp"
#include "support.hpp"

using namespace mink;

namespace {

Vector vec2(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

}  // namespace

TEST_CASE("illuminates_point on the square") {
    auto sq = standard_body("cube", 2);
    CHECK(illuminates_point(vec2(2, 2), vec2(1, 1), sq));
    CHECK_FALSE(illuminates_point(vec2(2, 0), vec2(1, 1), sq));
    CHECK(illuminates_point(vec2(1.5, 0), vec2(1, 0.5), sq));
    CHECK_THROWS_AS(illuminates_point(vec2(2, 2), vec2(0.5, 0), sq), InvariantViolation);
}

TEST_CASE("illuminates_body on the square") {
    auto sq = standard_body("cube", 2);
    CHECK(illuminates_body({vec2(2, 2), vec2(-2, 2), vec2(2, -2), vec2(-2, -2)}, sq));
    CHECK_FALSE(illuminates_body({vec2(2, 2)}, sq));
    CHECK_FALSE(illuminates_body({}, sq));
}

TEST_CASE("illumination numbers") {
    CHECK(illumination_number(standard_body("cube", 2)) == 4);
    CHECK(illumination_number(standard_body("cube", 3)) == 8);
    CHECK(illumination_number(standard_body("hexagon", 2)) == 3);
    // Cross-polytope: must satisfy L <= B = 2d.
    int L = illumination_number(standard_body("crosspolytope", 3));
    CHECK(L <= 6);
    CHECK(L == 6);  // exhaustive cover search: no two vertices share a light
}

TEST_CASE("bezdek parameter reproduces the known exact values") {
    auto check = [](const SymmetricPolytope& K, double expected) {
        auto rep = bezdek_parameter(K);
        CHECK(rep.B_value == doctest::Approx(expected).epsilon(1e-9));
        CHECK(rep.B_value >= rep.L_value - 1e-9);
        CHECK(illuminates_body(rep.B_witness.lights, K));
        // Witness cost is the strictified sum and stays within the 1e-7 scale.
        CHECK(rep.B_witness.cost == doctest::Approx(expected).epsilon(1e-6));
        for (const auto& p : rep.B_witness.lights)
            CHECK(gauge_eval(p, K) > 1.0);
    };
    check(standard_body("hexagon", 2), 6.0);
    check(standard_body("cube", 2), 4.0);
    check(standard_body("cube", 3), 8.0);
    check(standard_body("crosspolytope", 2), 4.0);
    check(standard_body("crosspolytope", 3), 6.0);
}

TEST_CASE("bezdek partition cap") {
    CHECK_THROWS_AS(bezdek_parameter(standard_body("cube", 3), 100), InvariantViolation);
}

TEST_CASE("covering-to-lights conversion") {
    auto sq = standard_body("cube", 2);
    auto cert = cube_halfcover(2);

    SUBCASE("half-cover formula values") {
        auto cfg = convert_covering_to_lights(cert, sq, 1e-3);
        REQUIRE(cfg.lights.size() == 4);
        // p = t / (1 - 1/2 - 1e-3), so each coordinate is 0.5/0.499.
        double expect = 0.5 / 0.499;
        for (const auto& p : cfg.lights)
            CHECK(std::abs(p(0)) == doctest::Approx(expect).epsilon(1e-12));
        CHECK(cfg.cost == doctest::Approx(4 * expect).epsilon(1e-12));
        CHECK(cfg.cost <= 2 * covering_cost(cert));
        CHECK(illuminates_body(cfg.lights, sq));
    }
    SUBCASE("eps out of range") {
        CHECK_THROWS_AS(convert_covering_to_lights(cert, sq, 0.5), InvariantViolation);
        CHECK_THROWS_AS(convert_covering_to_lights(cert, sq, 0.0), InvariantViolation);
    }
    SUBCASE("converter does not validate coverage") {
        CoveringCertificate offCentre;
        offCentre.homothets.push_back({0.99, vec2(0.005, 0.0)});
        auto cfg = convert_covering_to_lights(offCentre, sq, 1e-3);
        CHECK(cfg.lights.size() == 1);
        CHECK_FALSE(illuminates_body(cfg.lights, sq));
    }
}

TEST_CASE("lemma-1 margin examples") {
    auto sq = standard_body("cube", 2);
    CHECK(lemma1_margin(vec2(1, 1), vec2(2, 2), sq, 0.1) == doctest::Approx(0.1));
    CHECK(lemma1_margin(vec2(1, 1), vec2(2, 0), sq, 0.1) == doctest::Approx(-0.1));
    // The trivial case p = 2u.
    CHECK(lemma1_margin(vec2(1, 0), vec2(2, 0), sq, 0.1) == doctest::Approx(0.1));
    CHECK_THROWS_AS(lemma1_margin(vec2(0.5, 0), vec2(2, 0), sq, 0.1), InvariantViolation);
    CHECK_THROWS_AS(lemma1_margin(vec2(1, 0), vec2(2, 0), sq, 0.0), InvariantViolation);
}

TEST_CASE("soundness of witnesses and converted lights on random polygons") {
    std::mt19937_64 rng(29);
    // Converted coverings: the bulk of the randomized soundness trials.
    for (int trial = 0; trial < 800; ++trial) {
        auto K = testing::random_polygon(rng, 4, 8);
        auto cert = testing::build_verified_covering(K);
        auto cfg = convert_covering_to_lights(cert, K);
        CHECK(illuminates_body(cfg.lights, K));
        CHECK(cfg.cost <= 2 * covering_cost(cert) + 1e-3);
    }
    // Bezdek witnesses: 4 facet pairs keep the vertex count at the Bell cap.
    for (int trial = 0; trial < 200; ++trial) {
        auto K = testing::random_polygon(rng, 4, 4);
        auto rep = bezdek_parameter(K);
        CHECK(illuminates_body(rep.B_witness.lights, K));
        CHECK(rep.B_value >= rep.L_value - 1e-9);
    }
}

TEST_CASE("lemma-1 holds for sufficiently small eps on random triples") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        auto K = testing::random_polygon(rng, 3, 8);
        auto vl = enumerate_vertices(K);
        std::uniform_int_distribution<size_t> pick(0, vl.vertices.size() - 1);
        const Vector& u = vl.vertices[pick(rng)].point;
        Vector p = testing::random_illuminating_point(rng, K, u);
        bool positive = false;
        for (int k = 0; k <= 30 && !positive; ++k)
            positive = lemma1_margin(u, p, K, std::pow(2.0, -k)) > 0;
        CHECK(positive);
    }
}

TEST_CASE("facet criterion is monotone under scaling the light") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> mu(1.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        auto K = testing::random_polygon(rng, 3, 8);
        auto vl = enumerate_vertices(K);
        std::uniform_int_distribution<size_t> pick(0, vl.vertices.size() - 1);
        const Vector& u = vl.vertices[pick(rng)].point;
        Vector p = testing::random_illuminating_point(rng, K, u);
        REQUIRE(illuminates_point(p, u, K));
        CHECK(illuminates_point(mu(rng) * p, u, K));
    }
}

TEST_CASE("partition enumeration agrees with the cover-based oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        auto K = testing::random_polygon(rng, 3, 4);  // hexagons and octagons
        double viaPartitions = bezdek_parameter(K).B_value;
        double viaCovers = testing::bezdek_cover_oracle(K);
        CHECK(viaPartitions == doctest::Approx(viaCovers).epsilon(1e-7));
    }
}
