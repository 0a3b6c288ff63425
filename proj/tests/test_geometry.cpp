#include <cmath>
#include <doctest.h>

#include "rpcc/errors.hpp"
#include "rpcc/geometry.hpp"

using namespace rpcc;

namespace {

// Independent oracle: plain left-to-right summation of the ring terms.
double h_sum_naive(int n) {
    double s = 0.0;
    for (int j = 1; j < n; ++j) {
        s += 1.0 / (4.0 * std::sin(M_PI * static_cast<double>(j) / static_cast<double>(n)));
    }
    return s;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("build_points places center, ring, and poles in order") {
    auto pts = build_points({4, 1.0});
    REQUIRE(pts.size() == 7);
    CHECK(pts[0].x == 0.0);
    CHECK(pts[0].y == 0.0);
    CHECK(pts[0].z == 0.0);

    // Ring angles pi/2, pi, 3pi/2, 2pi.
    CHECK(std::abs(pts[1].x - 0.0) < 1e-15);
    CHECK(std::abs(pts[1].y - 1.0) < 1e-15);
    CHECK(std::abs(pts[2].x + 1.0) < 1e-15);
    CHECK(std::abs(pts[2].y - 0.0) < 1e-15);
    CHECK(std::abs(pts[3].x - 0.0) < 1e-15);
    CHECK(std::abs(pts[3].y + 1.0) < 1e-15);
    CHECK(std::abs(pts[4].x - 1.0) < 1e-15);
    CHECK(std::abs(pts[4].y - 0.0) < 1e-15);

    CHECK(pts[5].x == 0.0);
    CHECK(pts[5].y == 0.0);
    CHECK(pts[5].z == 1.0);
    CHECK(pts[6].z == -1.0);
}

TEST_CASE("build_points n=2 alpha=2") {
    auto pts = build_points({2, 2.0});
    REQUIRE(pts.size() == 5);
    CHECK(std::abs(pts[1].x + 1.0) < 1e-15);  // angle pi
    CHECK(std::abs(pts[2].x - 1.0) < 1e-15);  // angle 2pi
    CHECK(pts[3].z == 2.0);
    CHECK(pts[4].z == -2.0);
}

TEST_CASE("ring points sit on the unit circle in the plane") {
    for (int n : {2, 3, 7, 24, 52, 193}) {
        auto pts = build_points({n, 0.7});
        for (int k = 1; k <= n; ++k) {
            CHECK(std::abs(norm(pts[k]) - 1.0) <= 1e-15);
            CHECK(pts[k].z == 0.0);
        }
        CHECK(pts[n + 1].x == 0.0);
        CHECK(pts[n + 1].y == 0.0);
        CHECK(pts[n + 2].x == 0.0);
        CHECK(pts[n + 2].y == 0.0);
    }
}

TEST_CASE("ring points cancel as roots of unity") {
    for (int n : {2, 5, 24, 52, 400}) {
        auto pts = build_points({n, 1.0});
        Vec3 s{0.0, 0.0, 0.0};
        for (int k = 1; k <= n; ++k) s = s + pts[k];
        CHECK(norm(s) <= n * 1e-14);
    }
}

TEST_CASE("build_points rejects invalid configs") {
    CHECK_THROWS_AS(build_points({1, 1.0}), DomainError);
    CHECK_THROWS_AS(build_points({4, 0.0}), DomainError);
    CHECK_THROWS_AS(build_points({4, -1.0}), DomainError);
}

TEST_CASE("h_sum closed forms for small n") {
    CHECK(h_sum(2) == 0.25);  // single term, sin(pi/2) = 1
    CHECK(std::abs(h_sum(3) - 1.0 / std::sqrt(3.0)) <= 2e-16);
    CHECK(std::abs(h_sum(4) - (0.25 + 1.0 / std::sqrt(2.0))) <= 1e-15);
}

TEST_CASE("h_sum matches the naive loop to 1e-13 relative") {
    for (int n : {2, 3, 10, 100, 1000, 10000}) {
        double a = h_sum(n);
        double b = h_sum_naive(n);
        CHECK(std::abs(a - b) <= 1e-13 * b);
    }
}

TEST_CASE("h_sum is strictly increasing on 2..500") {
    double prev = h_sum(2);
    for (int n = 3; n <= 500; ++n) {
        double cur = h_sum(n);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("h_sum pinned values") {
    CHECK(std::abs(h_sum(24) - 12.618245149099619) <= 1e-13);
    CHECK(std::abs(h_sum(52) - 33.740044404510882) <= 1e-13);
    CHECK(std::abs(h_sum(10000) - 14858.663040782160) <= 1e-9);
    CHECK_THROWS_AS(h_sum(1), DomainError);
}

TEST_CASE("mass_vector layout and total") {
    auto mv = mass_vector(2, {1.0, 2.0, 3.0});
    REQUIRE(mv.size() == 5);
    CHECK(mv[0] == 1.0);
    CHECK(mv[1] == 2.0);
    CHECK(mv[2] == 2.0);
    CHECK(mv[3] == 3.0);
    CHECK(mv[4] == 3.0);
    double sum = 0.0;
    for (double m : mv) sum += m;
    CHECK(sum == 11.0);

    auto mv3 = mass_vector(3, {0.0, 1.0, 0.0});
    REQUIRE(mv3.size() == 6);
    CHECK(mv3[0] == 0.0);
    CHECK(mv3[1] == 1.0);
    CHECK(mv3[2] == 1.0);
    CHECK(mv3[3] == 1.0);
    CHECK(mv3[4] == 0.0);
    CHECK(mv3[5] == 0.0);
}

}  // TEST_SUITE
