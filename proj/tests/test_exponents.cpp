#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hardykit/exponents.hpp"

using namespace hardykit;

TEST_CASE("derived exponents") {
    SECTION("r1 from 1/r1 = 1/q - 1/p1") {
        Exponents e = derive_exponents(1, 4.0, 2.0, 2.0, 4.0);
        REQUIRE(e.r1.has_value());
        CHECK_THAT(*e.r1, Catch::Matchers::WithinRel(4.0, 1e-14));
    }
    SECTION("r1 absent at q = p1") {
        Exponents e = derive_exponents(1, 2.0, 2.0, 2.0, 2.0);
        CHECK_FALSE(e.r1.has_value());
    }
    SECTION("rho with infinities follows 1/inf = 0") {
        Exponents e = derive_exponents(2, kInf, 2.0, 1.0, kInf);
        CHECK(e.rho == 1.0);
    }
    SECTION("conjugates") {
        Exponents e = derive_exponents(1, 1.0, 2.0, 2.0, kInf);
        CHECK(e.p1c == kInf);
        CHECK(e.p2c == 2.0);
        CHECK(e.thetac == 1.0);
    }
    SECTION("l defined iff p2 > r1") {
        Exponents e = derive_exponents(1, 4.0, 8.0, 2.0, 2.0);   // r1 = 4 < p2 = 8
        REQUIRE(e.l.has_value());
        CHECK_THAT(*e.l, Catch::Matchers::WithinRel(8.0, 1e-14));
        Exponents f = derive_exponents(1, 4.0, 3.0, 2.0, 2.0);
        CHECK_FALSE(f.l.has_value());
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(derive_exponents(1, 2, 2, 0.0, 2), std::domain_error);
    CHECK_THROWS_AS(derive_exponents(1, 2, 2, -1.0, 2), std::domain_error);
    CHECK_THROWS_AS(derive_exponents(1, 0.5, 2, 2, 2), std::domain_error);
    CHECK_THROWS_AS(derive_exponents(0, 2, 2, 2, 2), std::domain_error);
}

TEST_CASE("classification examples") {
    CHECK(classify_case(derive_exponents(1, 2, 2, 3, 2)) == CaseTag::T52a);
    CHECK(classify_case(derive_exponents(1, 4, 2, 2, 2)) == CaseTag::T53i);
    CHECK(classify_case(derive_exponents(1, kInf, 2, 1, 2)) == CaseTag::T54ii);
}

TEST_CASE("classification is a partition with half-open boundaries") {
    std::mt19937_64 rng(11);
    std::vector<double> vals = {1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 8.0, kInf};
    std::vector<double> qs = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 8.0, kInf};
    int count = 0;
    for (double p1 : vals)
        for (double p2 : vals)
            for (double q : qs) {
                Exponents e = derive_exponents(1, p1, p2, q, 2.0);
                CaseTag t = classify_case(e);
                ++count;
                // dispatch consistency
                if (q == kInf) CHECK((t == CaseTag::T55a || t == CaseTag::T55b || t == CaseTag::T55c));
                else if (p1 == kInf)
                    CHECK((t == CaseTag::T54i || t == CaseTag::T54ii || t == CaseTag::T54iii));
                else if (p1 <= q)
                    CHECK((t == CaseTag::T52a || t == CaseTag::T52b || t == CaseTag::T52c));
                else
                    CHECK((t == CaseTag::T53i || t == CaseTag::T53ii || t == CaseTag::T53iii ||
                           t == CaseTag::T53iv));
            }
    CHECK(count == (int)(vals.size() * vals.size() * qs.size()));

    // boundary p2 = q belongs to the "p2 <= q" clause
    CHECK(classify_case(derive_exponents(1, 2, 3, 3, 2)) == CaseTag::T52a);
    CHECK(classify_case(derive_exponents(1, 4, 2, 2, 2)) == CaseTag::T53i);
    // boundary p2 = r1 belongs to T53ii
    CHECK(classify_case(derive_exponents(1, 4, 4, 2, 2)) == CaseTag::T53ii);
    CHECK(classify_case(derive_exponents(1, 4, 4.01, 2, 2)) == CaseTag::T53iii);
    // p1 = q boundary stays in T52
    CHECK(classify_case(derive_exponents(1, 3, 5, 3, 2)) == CaseTag::T52b);
}

TEST_CASE("p1/p2 swap symmetry of derived exponents") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(1.0, 6.0);
    for (int i = 0; i < 200; ++i) {
        double p1 = d(rng), p2 = d(rng), q = 0.5 * d(rng);
        Exponents a = derive_exponents(2, p1, p2, q, 3.0);
        Exponents b = derive_exponents(2, p2, p1, q, 3.0);
        CHECK(a.r1.has_value() == b.r2.has_value());
        CHECK(a.r2.has_value() == b.r1.has_value());
        if (a.r1) CHECK_THAT(*a.r1, Catch::Matchers::WithinRel(*b.r2, 1e-12));
        if (a.r2) CHECK_THAT(*a.r2, Catch::Matchers::WithinRel(*b.r1, 1e-12));
    }
}
