#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "linkops/numerics.hpp"

using namespace linkops;
using Catch::Matchers::WithinAbs;

TEST_CASE("log_gamma at reference points") {
    CHECK_THAT(log_gamma(1.0), WithinAbs(0.0, 1e-14));
    // Gamma(1/2) = sqrt(pi), high-precision reference for ln(sqrt(pi))
    CHECK_THAT(log_gamma(0.5), WithinAbs(0.57236494292470008707, 1e-13));
    CHECK_THAT(log_gamma(6.0), WithinAbs(std::log(120.0), 1e-13));
    CHECK_THAT(log_gamma(2.0), WithinAbs(0.0, 1e-14));
}

TEST_CASE("log_gamma matches the C library over a wide range") {
    // std::lgamma is an independent implementation; mixed abs/rel budget 1e-13
    for (double x = 1e-3; x <= 1e7; x *= 1.7) {
        const double ref = std::lgamma(x);
        const double got = log_gamma(x);
        CHECK(std::abs(got - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("log_gamma rejects non-positive arguments") {
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("log_beta values and symmetry") {
    CHECK_THAT(log_beta(1.0, 1.0), WithinAbs(0.0, 1e-14));
    // B(2,3) = Gamma(2)Gamma(3)/Gamma(5) = 2/24 = 1/12
    CHECK_THAT(log_beta(2.0, 3.0), WithinAbs(std::log(1.0 / 12.0), 1e-13));
    for (double x : {0.3, 1.0, 2.5, 7.0})
        for (double y : {0.4, 1.7, 5.0})
            CHECK_THAT(log_beta(x, y), WithinAbs(log_beta(y, x), 1e-13));
    CHECK_THROWS_AS(log_beta(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(log_beta(1.0, -2.0), std::domain_error);
}

TEST_CASE("log_beta equals its beta-prime integral form") {
    // B(x,y) = int_0^inf t^{x-1} (1+t)^{-x-y} dt
    QuadratureConfig quad;
    for (int x = 1; x <= 5; ++x) {
        for (int y = 1; y <= 5; ++y) {
            auto f = [&](double t) {
                return std::pow(t, x - 1.0) * std::pow(1.0 + t, -(double)(x + y));
            };
            const double center = y > 1 ? (double)x / (y - 1) : 2.0 * x;
            const auto r = integrate_semi_infinite(f, center, center + 1.0, quad);
            CHECK_THAT(r.value, WithinAbs(std::exp(log_beta(x, y)), 1e-8));
        }
    }
}

TEST_CASE("semi-infinite quadrature on exponential kernels") {
    QuadratureConfig quad;
    auto exp_decay = [](double t) { return std::exp(-t); };
    auto r1 = integrate_semi_infinite(exp_decay, 1.0, 1.0, quad);
    CHECK_THAT(r1.value, WithinAbs(1.0, quad.abs_tol * 10));

    auto t_exp = [](double t) { return t * std::exp(-t); };
    auto r2 = integrate_semi_infinite(t_exp, 1.0, 1.0, quad);
    CHECK_THAT(r2.value, WithinAbs(1.0, quad.abs_tol * 10));  // Gamma(2) = 1

    auto zero = [](double) { return 0.0; };
    auto r3 = integrate_semi_infinite(zero, 1.0, 1.0, quad);
    CHECK(r3.value == 0.0);
}

TEST_CASE("semi-infinite quadrature normalizes gamma densities") {
    QuadratureConfig quad;
    for (double a : {1.0, 3.0, 10.0, 25.0, 40.0}) {
        for (double rate : {1.0, 7.0, 23.0, 50.0}) {
            auto f = [&](double t) {
                return t <= 0.0 ? (a == 1.0 ? rate : 0.0)
                                : std::exp(a * std::log(rate) + (a - 1.0) * std::log(t) -
                                           rate * t - log_gamma(a));
            };
            const double mean = a / rate;
            const double sd = std::sqrt(a) / rate;
            const auto r = integrate_semi_infinite(f, mean, sd, quad);
            CHECK_THAT(r.value, WithinAbs(1.0, 1e-8));
        }
    }
}

TEST_CASE("semi-infinite quadrature rejects non-integrable tails") {
    QuadratureConfig quad;
    auto slow = [](double t) { return 1.0 / (1.0 + t); };
    CHECK_THROWS_AS(integrate_semi_infinite(slow, 1.0, 1.0, quad), std::runtime_error);
}

TEST_CASE("finite adaptive quadrature") {
    QuadratureConfig quad;
    auto f = [](double t) { return std::sin(t); };
    const auto r = integrate_adaptive(f, 0.0, 3.14159265358979323846, quad);
    CHECK_THAT(r.value, WithinAbs(2.0, 1e-10));
    const auto z = integrate_adaptive(f, 2.0, 2.0, quad);
    CHECK(z.value == 0.0);
}

TEST_CASE("quadrature config validation") {
    QuadratureConfig bad;
    bad.tail_mass_eps = 1e-3;
    CHECK_THROWS_AS(integrate_adaptive([](double) { return 0.0; }, 0.0, 1.0, bad),
                    std::domain_error);
    bad = QuadratureConfig{};
    bad.max_panels = 4;
    CHECK_THROWS_AS(integrate_adaptive([](double) { return 0.0; }, 0.0, 1.0, bad),
                    std::domain_error);
}

TEST_CASE("truncated series of poisson masses") {
    SeriesConfig series;
    // masses of a Poisson(nx) distribution: this is the c = 0 basis at n=1, x=1
    auto pmass = [](int j) {
        return std::exp(-1.0 + j * 0.0 - std::lgamma(j + 1.0));  // e^{-1}/j!
    };
    auto r = truncated_series_sum(pmass, pmass, series);
    CHECK(r.value >= 1.0 - series.mass_eps);
    CHECK(r.value <= 1.0 + 1e-15);

    // all mass at j = 0 stops immediately
    auto delta0 = [](int j) { return j == 0 ? 1.0 : 0.0; };
    auto r0 = truncated_series_sum(delta0, delta0, series);
    CHECK(r0.j_used == 0);
    CHECK(r0.value == 1.0);

    // Poisson(1) mean: sum mass(j) * j = 1
    auto term = [&](int j) { return pmass(j) * j; };
    auto rm = truncated_series_sum(term, pmass, series);
    CHECK_THAT(rm.value, WithinAbs(1.0, 1e-10));
}

TEST_CASE("truncated series reports a cap error when mass stalls") {
    SeriesConfig series;
    series.j_max = 64;
    auto half = [](int) { return 0.0; };
    auto tiny = [](int j) { return j == 0 ? 0.5 : 0.0; };
    CHECK_THROWS_AS(truncated_series_sum(half, tiny, series), std::runtime_error);
}

TEST_CASE("numeric derivative on polynomials") {
    auto e2 = [](double t) { return t * t; };
    CHECK_THAT(numeric_derivative(e2, 3.0, 1), WithinAbs(6.0, 1e-6));
    auto e3 = [](double t) { return t * t * t; };
    CHECK_THAT(numeric_derivative(e3, 1.0, 2), WithinAbs(6.0, 1e-4));
    auto c = [](double) { return 4.25; };
    for (int order = 1; order <= 4; ++order)
        CHECK_THAT(numeric_derivative(c, 0.7, order), WithinAbs(0.0, 1e-8));
}

TEST_CASE("numeric derivative matches exact polynomial derivatives") {
    // p(t) = 2 t^5 - t^3 + 0.5 t^2 - 4, orders 1..3 on [0, 5]
    auto p = [](double t) { return 2 * std::pow(t, 5) - std::pow(t, 3) + 0.5 * t * t - 4.0; };
    auto d1 = [](double t) { return 10 * std::pow(t, 4) - 3 * t * t + t; };
    auto d2 = [](double t) { return 40 * std::pow(t, 3) - 6 * t + 1.0; };
    auto d3 = [](double t) { return 120 * t * t - 6.0; };
    for (double x = 0.0; x <= 5.0; x += 0.5) {
        const double scale1 = std::max(1.0, std::abs(d1(x)));
        CHECK(std::abs(numeric_derivative(p, x, 1) - d1(x)) <= 1e-4 * scale1);
        CHECK(std::abs(numeric_derivative(p, x, 2) - d2(x)) <= 1e-4 * std::max(1.0, std::abs(d2(x))));
        CHECK(std::abs(numeric_derivative(p, x, 3) - d3(x)) <= 1e-4 * std::max(1.0, std::abs(d3(x))));
    }
}

TEST_CASE("numeric derivative argument checks") {
    auto f = [](double t) { return t; };
    CHECK_THROWS_AS(numeric_derivative(f, 1.0, 0, 0.1), std::domain_error);
    CHECK_THROWS_AS(numeric_derivative(f, 1.0, 5, 0.1), std::domain_error);
    CHECK_THROWS_AS(numeric_derivative(f, 1.0, 1, 0.0), std::domain_error);
    // near the boundary the one-sided stencil stays inside [0, inf)
    CHECK_THAT(numeric_derivative(f, 0.0, 1), WithinAbs(1.0, 1e-8));
}

TEST_CASE("uniform grid parsing and layout") {
    UniformGrid g{0.0, 2.0, 0.5};
    g.validate();
    CHECK(g.size() == 5);
    CHECK(g.point(4) == 2.0);
    UniformGrid bad{1.0, 0.0, 0.5};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    UniformGrid bad2{0.0, 1.0, -0.1};
    CHECK_THROWS_AS(bad2.validate(), std::domain_error);
    UniformGrid bad3{0.0, 1.0, 1e-9};
    CHECK_THROWS_AS(bad3.validate(), std::domain_error);
}
