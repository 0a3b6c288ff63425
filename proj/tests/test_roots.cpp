#include <cmath>
#include <doctest.h>

#include "rpcc/errors.hpp"
#include "rpcc/reduced.hpp"
#include "rpcc/roots.hpp"

using namespace rpcc;

TEST_SUITE("roots") {

TEST_CASE("bracket_scan finds simple crossings") {
    auto linear = [](double x) { return x - 1.0; };
    auto brackets = bracket_scan(linear, 0.0, 2.0, 3);
    REQUIRE(brackets.size() == 1);
    CHECK(brackets[0].lo <= 1.0);
    CHECK(brackets[0].hi >= 1.0);
    CHECK(brackets[0].f_lo * brackets[0].f_hi < 0.0);

    auto constant = [](double) { return 1.0; };
    CHECK(bracket_scan(constant, 0.0, 5.0, 100).empty());
}

TEST_CASE("bracket_scan rejects bad input and non-finite values") {
    auto ok = [](double x) { return x; };
    CHECK_THROWS_AS(bracket_scan(ok, 2.0, 1.0, 10), DomainError);
    CHECK_THROWS_AS(bracket_scan(ok, 0.0, 1.0, 1), DomainError);

    auto blows_up = [](double x) { return 1.0 / (x - 0.5); };
    // Grid with 3 samples on [0,1] hits x = 0.5 exactly.
    try {
        bracket_scan(blows_up, 0.0, 1.0, 3);
        FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
        CHECK(e.abscissa() == 0.5);
    }
}

TEST_CASE("bisect solves classic examples") {
    auto quad = [](double x) { return x * x - 2.0; };
    auto r = bisect(quad, {1.0, 2.0, quad(1.0), quad(2.0)}, 1e-14, 200);
    CHECK(std::abs(r.alpha - std::sqrt(2.0)) <= 1e-14);
    CHECK(r.alpha >= r.bracket.lo);
    CHECK(r.alpha <= r.bracket.hi);

    auto cubic = [](double x) { return x * x * x; };
    auto r2 = bisect(cubic, {-1.0, 2.0, cubic(-1.0), cubic(2.0)}, 1e-13, 200);
    CHECK(std::abs(r2.alpha) <= 1e-5);  // |x^3| <= 1e-15 stops early
    CHECK(std::abs(r2.f_at_root) <= 1e-15);
}

TEST_CASE("bisect errors") {
    auto quad = [](double x) { return x * x - 2.0; };
    CHECK_THROWS_AS(bisect(quad, {1.0, 2.0, 1.0, 1.0}, 1e-14, 100), DomainError);
    CHECK_THROWS_AS(bisect(quad, {2.0, 1.0, -1.0, 2.0}, 1e-14, 100), DomainError);
    try {
        bisect(quad, {1.0, 2.0, quad(1.0), quad(2.0)}, 1e-14, 3);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.iterations() == 3);
        CHECK(e.best_estimate() > 1.0);
        CHECK(e.best_estimate() < 2.0);
    }
}

TEST_CASE("f has exactly two roots for n=24, straddling alpha=1") {
    auto roots = find_alpha_roots(24);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].alpha < 1.0);
    CHECK(roots[1].alpha > 1.0);
    CHECK(std::abs(roots[0].alpha - 0.9224773141121113) <= 1e-11);
    CHECK(std::abs(roots[1].alpha - 1.0840374984858079) <= 1e-11);
    for (const auto& r : roots) {
        CHECK(std::abs(f_of(24, r.alpha)) <= 1e-12);
        CHECK(std::abs(r.f_at_root) <= 1e-12);
        CHECK(r.bracket.f_lo * r.bracket.f_hi < 0.0);
        CHECK(r.alpha >= r.bracket.lo);
        CHECK(r.alpha <= r.bracket.hi);
    }
}

TEST_CASE("root counts across the n range") {
    // No crossing while level(n) > max g; two crossings once it drops below.
    CHECK(find_alpha_roots(2).empty());
    CHECK(find_alpha_roots(23).empty());
    for (int n = 24; n <= 52; ++n) {
        auto roots = find_alpha_roots(n);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].alpha < 1.0);
        CHECK(roots[1].alpha > 1.0);
        CHECK(roots[0].alpha < roots[1].alpha);
        CHECK(std::abs(roots[0].f_at_root) <= 1e-12);
        CHECK(std::abs(roots[1].f_at_root) <= 1e-12);

        // Count confirmed against a 10x-denser scan.
        auto dense = bracket_scan([n](double a) { return f_of(n, a); }, 1e-3, 8.0, 40960);
        CHECK(dense.size() == 2);
    }
}

TEST_CASE("kappa consistency at numerically found roots") {
    for (int n : {24, 30, 40, 52}) {
        for (const auto& r : find_alpha_roots(n)) {
            double k1 = kappa_of(n, r.alpha);
            double k2 = -(7.0 / 4.0) / (radial_factor(r.alpha) - 2.0);
            CHECK(std::abs(k1 - k2) <= 1e-9);
        }
    }
}

TEST_CASE("find_alpha_roots is deterministic") {
    auto a = find_alpha_roots(36);
    auto b = find_alpha_roots(36);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].alpha == b[i].alpha);
        CHECK(a[i].f_at_root == b[i].f_at_root);
        CHECK(a[i].iterations == b[i].iterations);
    }
}

}  // TEST_SUITE
