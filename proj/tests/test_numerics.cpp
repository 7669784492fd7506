#include "doctest.h"

#include <cmath>
#include <random>

#include "k3atlas/numerics.hpp"

using namespace k3atlas;

TEST_CASE("siegel point validation") {
    const Complex i(0.0, 1.0);
    CHECK_NOTHROW(validate_siegel_point(i, {0.0, 0.0}, i));
    CHECK_THROWS_AS(validate_siegel_point(i, i, i), DomainError);
    CHECK_NOTHROW(validate_siegel_point({1.0, 1.0}, {0.1, 0.2}, {0.0, 2.0}));
    CHECK_THROWS_AS(validate_siegel_point({0.0, -1.0}, {0.0, 0.0}, i), DomainError);
    // boundary: equality is rejected (strict inequality)
    CHECK_THROWS_AS(validate_siegel_point(i, {0.0, 1.0}, i), DomainError);
}

TEST_CASE("siegel point eigenvalue matches definiteness") {
    std::mt19937_64 rng(42);
    auto uni = [&](double lo, double hi) {
        const double u = (rng() >> 11) * 0x1p-53;
        return lo + (hi - lo) * u;
    };
    int accepted = 0;
    for (int k = 0; k < 200; ++k) {
        const Complex tau(uni(-0.5, 0.5), uni(0.05, 1.5));
        const Complex z(uni(-0.5, 0.5), uni(-1.0, 1.0));
        const Complex u(uni(-0.5, 0.5), uni(0.05, 1.5));
        const double t2 = tau.imag(), u2 = u.imag(), z2 = z.imag();
        const bool ok = t2 > 0 && t2 * u2 > z2 * z2;
        if (ok) {
            const SiegelPoint p = validate_siegel_point(tau, z, u);
            ++accepted;
            CHECK(p.lambda_min() > 0.0);
            // eigenvalue product equals the determinant of Im(kappa)
            const double lmax = t2 + u2 - p.lambda_min();
            CHECK(std::abs(p.lambda_min() * lmax - p.im_det()) < 1e-12);
        } else {
            CHECK_THROWS_AS(validate_siegel_point(tau, z, u), DomainError);
        }
    }
    CHECK(accepted > 20);
}

TEST_CASE("wp_equal examples") {
    Tolerance tol;
    WeightedPoint p({{1, 0}, {1, 0}, {1, 0}, {1, 0}}, {2, 3, 5, 6});
    WeightedPoint q({{4, 0}, {8, 0}, {32, 0}, {64, 0}}, {2, 3, 5, 6});
    CHECK(wp_equal(p, q, tol));

    WeightedPoint r({{1, 0}, {0, 0}, {0, 0}, {0, 0}}, {2, 3, 5, 6});
    WeightedPoint s({{1, 0}, {0, 0}, {0, 0}, {1, 0}}, {2, 3, 5, 6});
    CHECK_FALSE(wp_equal(r, s, tol));

    WeightedPoint u({{1, 0}, {1, 0}}, {2, 3});
    WeightedPoint v({{1, 0}, {-1, 0}}, {2, 3});
    CHECK(wp_equal(u, v, tol)); // t = -1
}

TEST_CASE("wp_equal scaling property") {
    std::mt19937_64 rng(7);
    auto uni = [&](double lo, double hi) {
        const double u = (rng() >> 11) * 0x1p-53;
        return lo + (hi - lo) * u;
    };
    Tolerance tol;
    const std::vector<int> w{2, 3, 5, 6};
    for (int k = 0; k < 200; ++k) {
        std::vector<Complex> coords;
        for (int i = 0; i < 4; ++i) coords.emplace_back(uni(-2, 2), uni(-2, 2));
        if (std::abs(coords[0]) < 0.05) coords[0] = {1.0, 0.3};
        WeightedPoint p(coords, w);
        const Complex t = std::polar(uni(0.1, 10.0), uni(-3.1, 3.1));
        CHECK(wp_equal(p, wp_scale(p, t), tol));
        CHECK(wp_equal(p, p, tol));
        CHECK(wp_equal(wp_scale(p, t), p, tol)); // symmetry
    }
}

TEST_CASE("wp_normalize") {
    WeightedPoint p({{4, 0}, {8, 0}, {32, 0}, {64, 0}}, {2, 3, 5, 6});
    auto n = wp_normalize(p);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(n.coords[i] - Complex(1, 0)) < 1e-12);

    WeightedPoint q({{0, 0}, {0, 0}, {0, 0}, {5, 0}}, {2, 3, 5, 6});
    auto nq = wp_normalize(q);
    CHECK(nq.coords[3] == Complex(1, 0));
    CHECK(nq.coords[0] == Complex(0, 0));

    // principal branch applied to [2i,0,0,0]
    WeightedPoint r({{0, 2}, {0, 0}, {0, 0}, {0, 0}}, {2, 3, 5, 6});
    auto nr = wp_normalize(r);
    CHECK(nr.coords[0] == Complex(1, 0));

    Tolerance tol;
    std::mt19937_64 rng(11);
    auto uni = [&](double lo, double hi) {
        const double u = (rng() >> 11) * 0x1p-53;
        return lo + (hi - lo) * u;
    };
    for (int k = 0; k < 100; ++k) {
        std::vector<Complex> coords;
        for (int i = 0; i < 4; ++i) coords.emplace_back(uni(-2, 2), uni(-2, 2));
        WeightedPoint p2(coords, {2, 3, 5, 6});
        auto n1 = wp_normalize(p2);
        auto n2 = wp_normalize(n1); // idempotent
        for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(n1.coords[i] - n2.coords[i]) < 1e-9);
        CHECK(wp_equal(p2, n1, tol));
    }
}

TEST_CASE("wp_equal rejects mismatched weights and zero points") {
    Tolerance tol;
    WeightedPoint p({{1, 0}, {1, 0}}, {2, 3});
    WeightedPoint q({{1, 0}, {1, 0}}, {2, 5});
    CHECK_THROWS_AS(wp_equal(p, q, tol), DomainError);
    CHECK_THROWS_AS(WeightedPoint({{0, 0}, {0, 0}}, {2, 3}), DomainError);
}
