#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hardykit/ext_real.hpp"
#include "hardykit/power_law.hpp"
#include "hardykit/special.hpp"

using namespace hardykit;

TEST_CASE("convention identities") {
    ExtReal zero(0.0), one(1.0), inf = ExtReal::inf();

    CHECK(zero * inf == zero);
    CHECK(inf * zero == zero);
    CHECK(inf / inf == zero);
    CHECK(zero / zero == zero);

    CHECK(one / zero == inf);
    CHECK(inf + one == inf);
    CHECK(max(inf, ExtReal(1e300)) == inf);
    CHECK(zero / inf == zero);
}

TEST_CASE("convention holds under random operands") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(0.0, 10.0);
    for (int i = 0; i < 500; ++i) {
        ExtReal a(d(rng));
        CHECK((a * ExtReal::inf()).is_inf() == !a.is_zero());
        CHECK((ExtReal::inf() / a).is_inf());
        CHECK((a / ExtReal::inf()).is_zero());
        CHECK((a + ExtReal::inf()).is_inf());
    }
}

TEST_CASE("xpow boundary rules") {
    CHECK(xpow(ExtReal(0.0), 0.0) == ExtReal(1.0));
    CHECK(xpow(ExtReal::inf(), 0.0) == ExtReal(1.0));
    CHECK(xpow(ExtReal(0.0), 2.0) == ExtReal(0.0));
    CHECK(xpow(ExtReal(0.0), -1.0).is_inf());
    CHECK(xpow(ExtReal::inf(), -2.0) == ExtReal(0.0));
    CHECK(xpow(ExtReal(4.0), 0.5) == ExtReal(2.0));
}

TEST_CASE("ordering is total with inf absorbing max") {
    CHECK(ExtReal(1.0) < ExtReal::inf());
    CHECK(ExtReal(0.0) <= ExtReal(0.0));
    CHECK(max(ExtReal(3.0), ExtReal(4.0)) == ExtReal(4.0));
}

TEST_CASE("gamma via Lanczos") {
    constexpr double pi = 3.14159265358979323846;
    CHECK_THAT(gamma_fn(0.5), Catch::Matchers::WithinRel(std::sqrt(pi), 1e-12));
    CHECK_THAT(gamma_fn(1.0), Catch::Matchers::WithinRel(1.0, 1e-12));
    CHECK_THAT(gamma_fn(1.5), Catch::Matchers::WithinRel(0.5 * std::sqrt(pi), 1e-12));
    CHECK_THAT(gamma_fn(5.0), Catch::Matchers::WithinRel(24.0, 1e-12));
    CHECK_THAT(gamma_fn(10.25), Catch::Matchers::WithinRel(std::tgamma(10.25), 1e-12));
    CHECK_THAT(gamma_fn(0.1), Catch::Matchers::WithinRel(std::tgamma(0.1), 1e-12));
}

TEST_CASE("sphere surface measures") {
    constexpr double pi = 3.14159265358979323846;
    CHECK_THAT(sphere_surface(1), Catch::Matchers::WithinRel(2.0, 1e-12));
    CHECK_THAT(sphere_surface(2), Catch::Matchers::WithinRel(2.0 * pi, 1e-12));
    CHECK_THAT(sphere_surface(3), Catch::Matchers::WithinRel(4.0 * pi, 1e-12));
}

TEST_CASE("power term tail algebra") {
    PowerTerm a{2.0, 1.0, 0.0};       // 2 t
    PowerTerm b{3.0, -1.0, 0.0};      // 3 / t
    PowerTerm p = a * b;
    CHECK(p.coef == 6.0);
    CHECK(p.expo == 0.0);
    CHECK(tail_limit(p, End::Inf) == ExtReal(6.0));

    CHECK(tail_limit(a, End::Inf).is_inf());
    CHECK(tail_limit(a, End::Zero) == ExtReal(0.0));
    CHECK(tail_limit(b, End::Zero).is_inf());

    // log factors break ties
    PowerTerm lg{1.0, 0.0, 1.0};
    CHECK(tail_limit(lg, End::Inf).is_inf());
    CHECK(tail_limit(lg, End::Zero).is_inf());
    CHECK(tail_limit(PowerTerm{1.0, 0.0, -1.0}, End::Inf) == ExtReal(0.0));

    CHECK(tail_integral_diverges(PowerTerm{1.0, -1.0, 0.0}, End::Inf));
    CHECK(tail_integral_diverges(PowerTerm{1.0, -1.0, 0.0}, End::Zero));
    CHECK_FALSE(tail_integral_diverges(PowerTerm{1.0, -1.5, 0.0}, End::Inf));
    CHECK_FALSE(tail_integral_diverges(PowerTerm{1.0, -0.5, 0.0}, End::Zero));
    CHECK(tail_integral_diverges(PowerTerm{1.0, -2.0, 0.0}, End::Zero));
}
