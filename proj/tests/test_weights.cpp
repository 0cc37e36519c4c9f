#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hardykit/grid.hpp"
#include "hardykit/weights.hpp"

using namespace hardykit;

TEST_CASE("power integrals closed form") {
    CHECK_THAT(power_integral(1.0, 0.0, 0.0, 5.0).get(), Catch::Matchers::WithinRel(5.0, 1e-14));
    CHECK_THAT(power_integral(1.0, 3.0, 0.0, 2.0).get(), Catch::Matchers::WithinRel(4.0, 1e-14));
    CHECK(power_integral(1.0, -1.0, 0.0, 1.0).is_inf());
    CHECK(power_integral(1.0, -1.0, 1.0, kInf).is_inf());
    CHECK_THAT(power_integral(1.0, -1.0, 1.0, 4.0).get(),
               Catch::Matchers::WithinRel(std::log(4.0), 1e-14));
    CHECK_THAT(power_integral(2.0, -3.0, 2.0, kInf).get(),
               Catch::Matchers::WithinRel(0.25, 1e-14));
    CHECK(power_integral(0.0, -5.0, 0.0, kInf) == ExtReal(0.0));
    CHECK(power_integral(1.0, 1.0, 0.0, kInf).is_inf());
}

TEST_CASE("piecewise weight evaluation and integrals") {
    // w = s on (0,1), w = s^3 on [1,inf)
    RadialWeight w = RadialWeight::piecewise({{0.0, 1.0, 1.0, 1.0}, {1.0, kInf, 1.0, 3.0}});
    CHECK_THAT(w.value(0.5), Catch::Matchers::WithinRel(0.5, 1e-14));
    CHECK_THAT(w.value(2.0), Catch::Matchers::WithinRel(8.0, 1e-14));

    // ∫_0^2 w = ∫_0^1 s + ∫_1^2 s^3 = 1/2 + 15/4
    CHECK_THAT(w.transformed_integral(1.0, 0.0, 0.0, 2.0).get(),
               Catch::Matchers::WithinRel(0.5 + 15.0 / 4.0, 1e-14));

    // ∫_t^inf w^{-1} = ∫ s^{-3} beyond 1
    CHECK_THAT(w.transformed_integral(-1.0, 0.0, 2.0, kInf).get(),
               Catch::Matchers::WithinRel(1.0 / 8.0, 1e-14));

    CHECK(w.breakpoints() == std::vector<double>{1.0});
}

TEST_CASE("tabulated weights become log-log piecewise power") {
    // samples of w(s) = 4 s^2 reproduce the power exactly
    std::vector<double> r = {0.5, 1.0, 2.0, 4.0};
    std::vector<double> v;
    for (double s : r) v.push_back(4.0 * s * s);
    RadialWeight w = RadialWeight::tabulated(r, v, 2.0, 2.0);
    for (double s : {0.1, 0.7, 1.5, 3.0, 10.0})
        CHECK_THAT(w.value(s), Catch::Matchers::WithinRel(4.0 * s * s, 1e-12));
}

TEST_CASE("ess sup of powers over ranges") {
    RadialWeight w = RadialWeight::power(2.0, 1.0);   // w = 2s
    // sup of w^{-1} over (a,b) is at a
    CHECK_THAT(w.esssup_pow(-1.0, 0.5, 4.0).get(), Catch::Matchers::WithinRel(1.0, 1e-14));
    CHECK(w.esssup_pow(-1.0, 0.0, 1.0).is_inf());
    CHECK(w.esssup_pow(1.0, 1.0, kInf).is_inf());
    CHECK_THAT(w.esssup_pow(1.0, 1.0, 3.0).get(), Catch::Matchers::WithinRel(6.0, 1e-14));
}

TEST_CASE("infinite weight flag") {
    RadialWeight w = RadialWeight::infinite();
    CHECK(w.value(1.0) == kInf);
    CHECK(w.transformed_integral(-1.0, 0.0, 0.0, kInf) == ExtReal(0.0));
    CHECK(w.transformed_integral(1.0, 0.0, 1.0, 2.0).is_inf());
    CHECK(w.esssup_pow(-1.0, 0.0, kInf) == ExtReal(0.0));
}

TEST_CASE("quadrature matches closed forms for power weights") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ce(0.2, 3.0), ae(-0.9, 2.5);
    for (int i = 0; i < 50; ++i) {
        double c = ce(rng), a = ae(rng);
        RadialWeight w = RadialWeight::power(c, a);
        double lo = 0.013, hi = 470.0;
        double quad = gl_integrate_log([&](double s) { return w.value(s); }, lo, hi, 400, 8);
        double exact = w.transformed_integral(1.0, 0.0, lo, hi).get();
        CHECK_THAT(quad, Catch::Matchers::WithinRel(exact, 1e-10));
    }
}

TEST_CASE("malformed weights are rejected") {
    CHECK_THROWS_AS(RadialWeight::power(-1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(RadialWeight::piecewise({{0.5, kInf, 1.0, 0.0}}), std::domain_error);
    CHECK_THROWS_AS(RadialWeight::piecewise({{0.0, 1.0, 1.0, 0.0}, {2.0, kInf, 1.0, 0.0}}),
                    std::domain_error);
    CHECK_THROWS_AS(RadialWeight::tabulated({1.0}, {1.0}, 0, 0), std::domain_error);
    CHECK_THROWS_AS(RadialWeight::tabulated({1.0, 2.0}, {1.0, 0.0}, 0, 0), std::domain_error);
}
