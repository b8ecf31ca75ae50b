#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "plateforce/error.hpp"
#include "plateforce/gravity.hpp"

using namespace plateforce;
using doctest::Approx;

namespace {

PlateStack gold_on_glass() { return PlateStack({materials::gold(10e-6), materials::glass(15e-3)}); }

}  // namespace

TEST_CASE("point potential") {
    const PointMassPair unit(1.0, 1.0);
    const PointMassPair p(2.5, 7.0);
    CHECK(point_potential(p, 0.3, YukawaParams(0.0, 1e-3)) == -kCodata2018.G * 2.5 * 7.0 / 0.3);
    CHECK(point_potential(p, 0.3, YukawaParams(0.4, 0.3e6)) ==
          Approx(-kCodata2018.G * 2.5 * 7.0 / 0.3 * 1.4).epsilon(1e-6));
    // frozen from a 40-digit evaluation
    CHECK(point_potential(unit, 1.0, YukawaParams(1.0, 1.0)) == Approx(-9.129227390378206e-11).epsilon(1e-14));
    CHECK(point_potential(unit, 1.0, YukawaParams(0.5, 1.0)) < 0.0);
    CHECK_THROWS_AS(point_potential(unit, 0.0, YukawaParams(1.0, 1.0)), InvalidArgument);
}

TEST_CASE("point force") {
    const PointMassPair p(3.0, 4.0);
    CHECK(point_force(p, 2.0, YukawaParams(0.0, 1.0)) == kCodata2018.G * 12.0 / 4.0);
    CHECK(point_force(PointMassPair(1.0, 1.0), 1.0, YukawaParams(1.0, 1.0)) ==
          Approx(1.1584454780756412e-10).epsilon(1e-14));
    const double d = 0.07;
    CHECK(point_force(p, d, YukawaParams(1.0, d)) ==
          Approx(kCodata2018.G * 12.0 / (d * d) * (1.0 + 2.0 * std::exp(-1.0))).epsilon(1e-14));
    CHECK_THROWS_AS(point_force(p, -1.0, YukawaParams(1.0, 1.0)), InvalidArgument);
}

TEST_CASE("point force is the magnitude of the potential gradient") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> log_mass(std::log(1e-3), std::log(1e3));
    std::uniform_real_distribution<double> log_len(std::log(1e-6), std::log(1.0));
    std::uniform_real_distribution<double> alpha(-0.9, 1e3);
    for (int i = 0; i < 100; ++i) {
        const PointMassPair p(std::exp(log_mass(rng)), std::exp(log_mass(rng)));
        const double d = std::exp(log_len(rng));
        const YukawaParams y(alpha(rng), std::exp(log_len(rng)));
        const double h = 1e-6 * d;
        const double fd = (point_potential(p, d + h, y) - point_potential(p, d - h, y)) / (2 * h);
        CHECK(oracle::relative_error(point_force(p, d, y), fd) < 1e-6);
    }
}

TEST_CASE("Newtonian force between slabs") {
    const double f = plate_newton(3e3, 3e3, 0.012, 0.015, 0.015);
    CHECK(f == Approx(1.0189956833848324e-08).epsilon(1e-14));
    CHECK(f == Approx(10e-9).epsilon(0.05));
    CHECK(plate_newton(3e3, 3e3, 0.012, 1e-9, 0.015) == Approx(f * 1e-9 / 0.015).epsilon(1e-14));
    // exact linearity in every argument
    CHECK(plate_newton(6e3, 3e3, 0.012, 0.015, 0.015) == Approx(2 * f).epsilon(1e-15));
    CHECK(plate_newton(3e3, 3e3, 0.036, 0.015, 0.015) == Approx(3 * f).epsilon(1e-15));
    CHECK(plate_newton(3e3, 3e3, 0.012, 0.015, 0.06) == Approx(4 * f).epsilon(1e-15));
    CHECK_THROWS_AS(plate_newton(3e3, 3e3, 0.012, 0.0, 0.015), InvalidArgument);
}

TEST_CASE("Yukawa force between slabs") {
    const double rho = materials::kGoldDensity;
    CHECK(plate_yukawa(rho, rho, 0.012, 1e-5, 1e-5, 5e-6, YukawaParams(0.0, 1e-5)) == 0.0);
    CHECK(plate_yukawa(rho, rho, 0.012, 1e-5, 1e-5, 5e-6, YukawaParams(1.0, 1e-5)) ==
          Approx(4.542704890947383e-14).epsilon(1e-13));

    SUBCASE("thick-plate limit") {
        const double lambda = 1e-6, tau = 20e-6, d = 3e-6;
        const double thick = 2 * std::numbers::pi * kCodata2018.G * rho * rho * 0.012 * lambda * lambda * 2.0 *
                             std::exp(-d / lambda);
        const double f = plate_yukawa(rho, rho, 0.012, tau, tau, d, YukawaParams(2.0, lambda));
        CHECK(oracle::relative_error(f, thick) < 3 * std::exp(-tau / lambda));
    }

    SUBCASE("long range is free of cancellation") {
        // lambda >> tau: force -> alpha * Newton(tau_a, tau_b) e^(-d/lambda)
        const double f = plate_yukawa(rho, rho, 0.012, 1e-6, 2e-6, 5e-6, YukawaParams(1.0, 1e4));
        const double newton = plate_newton(rho, rho, 0.012, 1e-6, 2e-6);
        CHECK(oracle::relative_error(f, newton) < 1e-9);
        CHECK(yukawa_effective_thickness(1e-6, 1e4) == Approx(1e-6 * (1 - 0.5e-10)).epsilon(1e-15));
        CHECK(yukawa_effective_thickness(1e-6, 1e-6 / 2e-8) ==
              Approx(-(1e-6 / 2e-8) * std::expm1(-2e-8)).epsilon(1e-15));
    }

    SUBCASE("monotonicity") {
        const YukawaParams y(5.0, 4e-6);
        double prev = 0.0;
        for (double tau : {0.1e-6, 0.3e-6, 1e-6, 3e-6, 10e-6, 30e-6}) {
            const double f = plate_yukawa(rho, rho, 0.012, tau, 2e-6, 5e-6, y);
            CHECK(f > prev);
            CHECK(plate_yukawa(rho, rho, 0.012, 2e-6, tau, 5e-6, y) == Approx(f).epsilon(1e-15));
            prev = f;
        }
        prev = INFINITY;
        for (double d : {1e-6, 2e-6, 5e-6, 1e-5, 5e-5}) {
            const double f = plate_yukawa(rho, rho, 0.012, 1e-6, 2e-6, d, y);
            CHECK(f < prev);
            prev = f;
        }
    }
}

TEST_CASE("plate Yukawa agrees with the quadrature oracle") {
    const double rho = materials::kGoldDensity;
    for (double lambda : {1e-7, 3e-7, 2e-6, 1e-5, 7e-5, 1e-3, 1e-2}) {
        for (double tau : {0.3e-6, 1e-6, 3e-6, 10e-6}) {
            for (double d : {1e-6, 5e-6, 10e-6}) {
                const double closed = plate_yukawa(rho, rho, 0.012, tau, tau, d, YukawaParams(1.0, lambda));
                const double quad = oracle::plate_yukawa(rho, rho, 0.012, tau, tau, d, 1.0, lambda, kCodata2018.G);
                CHECK(oracle::relative_error(closed, quad) < 1e-9);
            }
        }
    }
}

TEST_CASE("stacked plates") {
    const PlateGeometry geom(0.10, 0.12);
    const GapConfig gap(5e-6, 300.0);
    const YukawaParams y(1.0, 1e-5);

    SUBCASE("single layer reduces to plate_yukawa") {
        const PlateStack gold({materials::gold(1e-5)});
        const PlatePairConfig cfg{gold, gold, geom, gap};
        const double direct = plate_yukawa(materials::kGoldDensity, materials::kGoldDensity, 0.012, 1e-5, 1e-5, 5e-6, y);
        CHECK(stack_yukawa(cfg, y, StackMode::FullStack) == direct);
        CHECK(stack_yukawa(cfg, y, StackMode::MetalOnly) == direct);
    }

    SUBCASE("gold on glass") {
        const PlatePairConfig cfg{gold_on_glass(), gold_on_glass(), geom, gap};
        const double full = stack_yukawa(cfg, y, StackMode::FullStack);
        const double metal = stack_yukawa(cfg, y, StackMode::MetalOnly);
        CHECK(full > metal);
        CHECK(metal == Approx(4.542704890947383e-14).epsilon(1e-13));
        CHECK(full == Approx(5.401770821759177e-14).epsilon(1e-13));

        // layer-pair sum of the quadrature oracle
        double oracle_sum = 0.0;
        const auto& s = cfg.stack_a;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j)
                oracle_sum += oracle::plate_yukawa(s[i].density, s[j].density, 0.012, s[i].thickness, s[j].thickness,
                                                   5e-6 + s.layer_offset(i) + s.layer_offset(j), 1.0, 1e-5,
                                                   kCodata2018.G);
        CHECK(oracle::relative_error(full, oracle_sum) < 1e-9);
    }

    SUBCASE("swap symmetry") {
        const PlateStack other({{"silver", 10.5e3, 3e-6}, {"titanium", 4.5e3, 50e-9}, materials::glass(5e-3)});
        const PlatePairConfig ab{gold_on_glass(), other, geom, gap};
        const PlatePairConfig ba{other, gold_on_glass(), geom, gap};
        for (double lambda : {1e-7, 1e-6, 1e-5, 1e-3}) {
            const YukawaParams yl(1.0, lambda);
            CHECK(stack_yukawa(ab, yl, StackMode::FullStack) ==
                  Approx(stack_yukawa(ba, yl, StackMode::FullStack)).epsilon(1e-14));
        }
        CHECK(stack_newton(ab) == Approx(stack_newton(ba)).epsilon(1e-14));
    }

    SUBCASE("newton of stacks is the product of areal densities") {
        const PlatePairConfig cfg{gold_on_glass(), gold_on_glass(), geom, gap};
        const double sigma = materials::kGoldDensity * 10e-6 + materials::kGlassDensity * 15e-3;
        CHECK(stack_newton(cfg) == Approx(2 * std::numbers::pi * kCodata2018.G * 0.012 * sigma * sigma).epsilon(1e-14));
    }
}
