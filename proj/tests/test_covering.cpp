#include <doctest.h>

#include <random>

#include "mink/covering.hpp"
#include "support.hpp"

using namespace mink;

namespace {

Vector vec2(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

bool point_in_some_homothet(const Vector& x, const CoveringCertificate& cert,
                            const SymmetricPolytope& K) {
    for (const auto& h : cert.homothets)
        if (gauge_eval(x - h.t, K) <= h.lambda + 1e-9) return true;
    return false;
}

}  // namespace

TEST_CASE("covering_cost") {
    CoveringCertificate cert;
    for (int i = 0; i < 4; ++i) cert.homothets.push_back({0.5, Vector::Zero(2)});
    CHECK(covering_cost(cert) == doctest::Approx(8.0));

    CoveringCertificate single;
    single.homothets.push_back({0.9, Vector::Zero(2)});
    CHECK(covering_cost(single) == doctest::Approx(10.0));

    std::mt19937_64 rng(3);
    std::shuffle(cert.homothets.begin(), cert.homothets.end(), rng);
    CHECK(covering_cost(cert) == doctest::Approx(8.0));
}

TEST_CASE("certificate ratio validation") {
    CoveringCertificate bad;
    bad.homothets.push_back({1.0, Vector::Zero(2)});
    CHECK_THROWS_AS(validate_certificate(bad, 2), InvariantViolation);
    bad.homothets[0].lambda = 0.0;
    CHECK_THROWS_AS(validate_certificate(bad, 2), InvariantViolation);
}

TEST_CASE("cube half-cover certifies with cost 2^{d+1}") {
    for (int d = 2; d <= 4; ++d) {
        auto cert = cube_halfcover(d);
        CHECK(cert.homothets.size() == (1u << d));
        CHECK(cert.verdict == CoverVerdict::Covered);
        CHECK(covering_cost(cert) == doctest::Approx(std::pow(2.0, d + 1)));
    }
}

TEST_CASE("square half-cover certifies at depth 2") {
    auto sq = standard_body("cube", 2);
    auto cert = cube_halfcover(2);
    auto res = verify_covering(sq, cert, 2);
    CHECK(res.verdict == CoverVerdict::Covered);
}

TEST_CASE("missing quadrant is detected with a witness cell") {
    auto sq = standard_body("cube", 2);
    auto cert = cube_halfcover(2);
    // Remove the homothet at (+1/2, +1/2).
    std::erase_if(cert.homothets,
                  [](const Homothet& h) { return h.t(0) > 0 && h.t(1) > 0; });
    REQUIRE(cert.homothets.size() == 3);
    auto res = verify_covering(sq, cert);
    REQUIRE(res.verdict == CoverVerdict::Undetermined);
    REQUIRE(!res.witnesses.empty());
    bool inMissingQuadrant = false;
    for (const auto& cell : res.witnesses) {
        Vector c = Vector::Zero(2);
        for (const auto& x : cell) c += x / static_cast<double>(cell.size());
        if (c(0) > 0 && c(1) > 0) inMissingQuadrant = true;
    }
    CHECK(inMissingQuadrant);
}

TEST_CASE("undetermined cases") {
    auto sq = standard_body("cube", 2);
    SUBCASE("single central half-square leaves the corners") {
        CoveringCertificate cert;
        cert.homothets.push_back({0.5, Vector::Zero(2)});
        auto res = verify_covering(sq, cert);
        CHECK(res.verdict == CoverVerdict::Undetermined);
        bool nearCorner = false;
        for (const auto& cell : res.witnesses)
            for (const auto& x : cell)
                if (x.lpNorm<Eigen::Infinity>() > 0.5 + 1e-9) nearCorner = true;
        CHECK(nearCorner);
    }
    SUBCASE("a single ratio-0.99 homothet cannot cover the boundary shell") {
        CoveringCertificate cert;
        cert.homothets.push_back({0.99, Vector::Zero(2)});
        CHECK(verify_covering(sq, cert).verdict == CoverVerdict::Undetermined);
    }
    CHECK_THROWS_AS(verify_covering(sq, CoveringCertificate{}, 0), std::invalid_argument);
}

TEST_CASE("covered verdicts are sound against random sampling") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);

    auto soundness = [&](const SymmetricPolytope& K, const CoveringCertificate& cert,
                         int samples) {
        int kept = 0;
        while (kept < samples) {
            Vector x(K.dim);
            for (int c = 0; c < K.dim; ++c) x(c) = unit(rng);
            if (gauge_eval(x, K) > 1.0) continue;
            ++kept;
            if (!point_in_some_homothet(x, cert, K)) return false;
        }
        return true;
    };

    CHECK(soundness(standard_body("cube", 2), cube_halfcover(2), 100000));
    CHECK(soundness(standard_body("cube", 3), cube_halfcover(3), 100000));

    auto K = testing::random_polygon(rng, 4, 8);
    auto cert = testing::build_verified_covering(K);
    REQUIRE(verify_covering(K, cert).verdict == CoverVerdict::Covered);
    CHECK(soundness(K, cert, 100000));
}
