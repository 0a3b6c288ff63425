#include <cmath>
#include <doctest.h>

#include "rpcc/errors.hpp"
#include "rpcc/ode.hpp"

using namespace rpcc;

namespace {

const OdeRhs kSho = [](double, const std::vector<double>& y, std::vector<double>& dydt) {
    dydt[0] = y[1];
    dydt[1] = -y[0];
};

}  // namespace

TEST_SUITE("ode") {

TEST_CASE("harmonic oscillator over one period") {
    OdeSettings settings;
    double period = 2.0 * M_PI;
    auto sol = integrate_dopri5(kSho, 0.0, {1.0, 0.0}, period, settings);
    REQUIRE(sol.reason() == StopReason::reached_end);
    CHECK(sol.t_final() == period);
    CHECK(std::abs(sol.y_final()[0] - 1.0) <= 1e-9);
    CHECK(std::abs(sol.y_final()[1]) <= 1e-9);
}

TEST_CASE("dense output tracks the closed form between steps") {
    OdeSettings settings;
    auto sol = integrate_dopri5(kSho, 0.0, {1.0, 0.0}, 6.0, settings);
    for (int i = 0; i <= 1000; ++i) {
        double t = 6.0 * i / 1000.0;
        auto y = sol.eval(t);
        CHECK(std::abs(y[0] - std::cos(t)) <= 1e-8);
        CHECK(std::abs(y[1] + std::sin(t)) <= 1e-8);
    }
}

TEST_CASE("exponential decay") {
    auto rhs = [](double, const std::vector<double>& y, std::vector<double>& dydt) {
        dydt[0] = -y[0];
    };
    auto sol = integrate_dopri5(rhs, 0.0, {1.0}, 5.0, OdeSettings{});
    CHECK(std::abs(sol.y_final()[0] - std::exp(-5.0)) <= 1e-10 * std::exp(-5.0) + 1e-15);
}

TEST_CASE("max_step is honored") {
    OdeSettings settings;
    settings.max_step = 0.01;
    auto rhs = [](double, const std::vector<double>&, std::vector<double>& dydt) {
        dydt[0] = 2.0;
    };
    auto sol = integrate_dopri5(rhs, 0.0, {0.0}, 1.0, settings);
    CHECK(std::abs(sol.y_final()[0] - 2.0) <= 1e-12);
    for (std::size_t i = 1; i < sol.times().size(); ++i) {
        CHECK(sol.times()[i] - sol.times()[i - 1] <= 0.01 + 1e-12);
    }
}

TEST_CASE("event stops the integration at the crossing") {
    auto rhs = [](double, const std::vector<double>&, std::vector<double>& dydt) {
        dydt[0] = -1.0;
    };
    auto event = [](double, const std::vector<double>& y) { return y[0]; };
    auto sol = integrate_dopri5(rhs, 0.0, {1.0}, 10.0, OdeSettings{}, event);
    CHECK(sol.reason() == StopReason::collision);
    CHECK(std::abs(sol.t_final() - 1.0) <= 1e-12);
    CHECK(std::abs(sol.y_final()[0]) <= 1e-12);
}

TEST_CASE("event already violated at the start") {
    auto rhs = [](double, const std::vector<double>&, std::vector<double>& dydt) {
        dydt[0] = 1.0;
    };
    auto event = [](double, const std::vector<double>& y) { return y[0] - 2.0; };
    auto sol = integrate_dopri5(rhs, 0.0, {1.0}, 10.0, OdeSettings{}, event);
    CHECK(sol.reason() == StopReason::collision);
    CHECK(sol.t_final() == 0.0);
    CHECK(sol.eval(0.0)[0] == 1.0);
}

TEST_CASE("integration into a singularity flags step underflow") {
    auto rhs = [](double, const std::vector<double>& y, std::vector<double>& dydt) {
        dydt[0] = y[1];
        dydt[1] = -1.0 / (y[0] * y[0]);
    };
    auto sol = integrate_dopri5(rhs, 0.0, {1.0, 0.0}, 2.0, OdeSettings{});
    CHECK(sol.reason() == StopReason::step_underflow);
    // The stall happens at the collapse time of this initial condition.
    CHECK(sol.t_final() > 1.11);
    CHECK(sol.t_final() < 1.1108);
}

TEST_CASE("identical inputs give bit-identical solutions") {
    auto a = integrate_dopri5(kSho, 0.0, {0.3, -0.2}, 7.0, OdeSettings{});
    auto b = integrate_dopri5(kSho, 0.0, {0.3, -0.2}, 7.0, OdeSettings{});
    REQUIRE(a.times().size() == b.times().size());
    for (std::size_t i = 0; i < a.times().size(); ++i) {
        CHECK(a.times()[i] == b.times()[i]);
        CHECK(a.states()[i][0] == b.states()[i][0]);
        CHECK(a.states()[i][1] == b.states()[i][1]);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(integrate_dopri5(kSho, 1.0, {1.0, 0.0}, 0.5, OdeSettings{}), DomainError);
    CHECK_THROWS_AS(integrate_dopri5(kSho, 0.0, {}, 1.0, OdeSettings{}), DomainError);
    OdeSettings bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate_dopri5(kSho, 0.0, {1.0, 0.0}, 1.0, bad), DomainError);
    OdeSettings tiny_budget;
    tiny_budget.max_steps = 3;
    CHECK_THROWS_AS(integrate_dopri5(kSho, 0.0, {1.0, 0.0}, 100.0, tiny_budget),
                    ConvergenceError);
    auto sol = integrate_dopri5(kSho, 0.0, {1.0, 0.0}, 1.0, OdeSettings{});
    CHECK_THROWS_AS(sol.eval(2.0), DomainError);
    CHECK_THROWS_AS(sol.eval(-1.0), DomainError);
}

}  // TEST_SUITE
