#include "doctest.h"

#include "../support.hpp"

using namespace phm;
using test::series_from;

TEST_SUITE("extraction") {

TEST_CASE("dft_coefficients examples") {
    const auto s = series_from(1, 3, {{{1}, 1.0}, {{3}, 0.3}});
    const auto t = dft_coefficients(s, 0.5, 16, 3);
    REQUIRE(t.size() == 4);
    CHECK(t[3].alpha == MultiIndex{3});
    CHECK(std::abs(t[3].coeff - 0.3) < 1e-12);
    CHECK(std::abs(t[1].coeff - 1.0) < 1e-12);

    for (const auto& e : dft_coefficients(PolySeries(2, 3), 0.5, 3)) CHECK(e.coeff == cplx{0.0, 0.0});

    const auto h = extremal_sharpness_map(2, 2, 1.0, SharpnessPart::Holomorphic).h();
    const auto u = dft_coefficients(h, 0.7, 8, 2);
    CHECK(u.size() == 6);
    for (const auto& e : u) CHECK(std::abs(e.coeff - h.coeff(e.alpha)) < 1e-10);
    CHECK(std::abs(u[4].coeff - 0.125) < 1e-10);
}

TEST_CASE("dft preconditions") {
    const auto s = identity_part(1, 2);
    CHECK_THROWS_AS(dft_coefficients(s, 0.0, 8, 2), UsageError);
    CHECK_THROWS_AS(dft_coefficients(s, 1.0, 8, 2), UsageError);
    CHECK_THROWS_AS(dft_coefficients(s, 0.5, 2, 2), UsageError);
    CHECK_NOTHROW(dft_coefficients(s, 0.5, 3, 2));
}

TEST_CASE("separable transform agrees with direct summation") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const unsigned D = 2 + static_cast<unsigned>(trial % 2);
        const auto s = test::random_series(n, D, rng);
        const std::size_t N = D + 2;
        const auto got = dft_coefficients(s, 0.6, N, D);
        for (const auto& e : got) {
            const cplx want = test::direct_dft(s, 0.6, N, e.alpha.exponents());
            CHECK(std::abs(e.coeff - want) < 1e-12);
        }
    }
}

TEST_CASE("round trip and radius independence") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const unsigned D = static_cast<unsigned>(trial % 6);
        const auto s = test::random_series(n, D, rng);
        const auto lo = dft_coefficients(s, 0.3, D + 1, D);
        const auto hi = dft_coefficients(s, 0.9, D + 1, D);
        const auto mid = dft_coefficients(s, 0.6, D);
        for (std::size_t i = 0; i < lo.size(); ++i) {
            CHECK(std::abs(lo[i].coeff - s.coeff(lo[i].alpha)) < 1e-9);
            CHECK(std::abs(mid[i].coeff - s.coeff(mid[i].alpha)) < 1e-9);
            CHECK(std::abs(hi[i].coeff - s.coeff(hi[i].alpha)) < 1e-9);
            CHECK(std::abs(lo[i].coeff - hi[i].coeff) < 1e-8);
        }
    }
}

TEST_CASE("orthogonality self-test") {
    const auto a = orthogonality_selftest(2, 0, 4);
    CHECK(a.zero_frequency_average == cplx{1.0, 0.0});
    CHECK(a.frequencies_checked == 1);

    const auto b = orthogonality_selftest(2, 1, 8);
    CHECK(b.passed);
    CHECK(b.max_nonzero_modulus < 1e-15);

    for (std::size_t n = 1; n <= 3; ++n) {
        const auto c = orthogonality_selftest(n, 6, 16);
        CHECK(c.passed);
        CHECK(std::abs(c.zero_frequency_average - 1.0) < 1e-15);
        CHECK(c.max_nonzero_modulus < 1e-12);
    }
    CHECK(orthogonality_selftest(1, 8, 9).passed);
    CHECK_THROWS_AS(orthogonality_selftest(1, 8, 8), UsageError);
}

TEST_CASE("pairwise_sum") {
    std::vector<cplx> v(1000, cplx{0.1, -0.1});
    CHECK(std::abs(pairwise_sum(v) - cplx{100.0, -100.0}) < 1e-12);
    CHECK(pairwise_sum({}) == cplx{0.0, 0.0});
}

TEST_CASE("schwarz_check") {
    const auto id = identity_part(2, 2);
    const auto a = schwarz_check(id, 1.0);
    CHECK(a.holds == Holds::Pass);
    CHECK(a.details.size() == 8);
    for (const auto& row : a.details) CHECK(row.attained == 0.0);

    for (double M : {0.5, 1.0}) {
        const auto phi = series_from(1, 2, {{{1}, 1.0}, {{2}, M / 2}});
        const auto rep = schwarz_check(phi, M);
        CHECK(rep.holds == Holds::Pass);
        for (double r : {0.25, 0.5, 0.75, 0.99}) {
            char label[64];
            std::snprintf(label, sizeof label, "r=%.2f max |omega|/||z||", r);
            REQUIRE(rep.find_row(label));
            CHECK(std::abs(rep.find_row(label)->attained - 1.0) < 1e-12);
        }
    }

    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = test::random_certified_map(2, 4, 1.0, rng, false);
        CHECK(schwarz_check(f.h(), 1.0).holds == Holds::Pass);
    }

    const auto big = series_from(1, 2, {{{1}, 1.0}, {{2}, 0.9}});
    CHECK(schwarz_check(big, 1.0).holds == Holds::Inconclusive);
    CHECK_THROWS_AS(schwarz_check(id, 0.0), UsageError);
}

}
