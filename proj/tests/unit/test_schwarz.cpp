#include <cmath>

#include "doctest.h"
#include "mero/error.hpp"
#include "mero/explore.hpp"
#include "mero/random.hpp"
#include "mero/schwarz.hpp"
#include "support/oracles.hpp"

using namespace mero;

TEST_CASE("factories validate parameters") {
    CHECK_NOTHROW((void)SchwarzSpec::constant(1.0));
    CHECK_NOTHROW((void)SchwarzSpec::constant(Complex{0.6, 0.8}));
    CHECK_THROWS_AS((void)SchwarzSpec::constant(1.01), Error);
    CHECK_THROWS_AS((void)SchwarzSpec::monomial(Complex{1.0, 1.0}, 2), Error);
    CHECK_THROWS_AS((void)SchwarzSpec::blaschke({1.0}), Error);
    CHECK_THROWS_AS((void)SchwarzSpec::blaschke({0.5}, 0.5), Error);
    CHECK_THROWS_AS((void)SchwarzSpec::mix({0.5, 0.6}, {SchwarzSpec::constant(1.0), SchwarzSpec::constant(0.0)}),
                    Error);
    CHECK_THROWS_AS((void)SchwarzSpec::mix({1.5, -0.5}, {SchwarzSpec::constant(1.0), SchwarzSpec::constant(0.0)}),
                    Error);
    CHECK_THROWS_AS((void)SchwarzSpec::mix({1.0}, {}), Error);
    CHECK(SchwarzSpec::blaschke({0.1}).kind() == "blaschke");
}

TEST_CASE("evaluate_omega examples") {
    CHECK(evaluate_omega(SchwarzSpec::constant(1.0), Complex{0.3, -0.2}) == Complex{1.0});
    CHECK(std::abs(evaluate_omega(SchwarzSpec::monomial(-1.0, 2), 0.5) + 0.25) < 1e-16);
    CHECK(std::abs(evaluate_omega(SchwarzSpec::blaschke({0.5}), 0.5)) < 1e-16);
    CHECK_THROWS_AS((void)evaluate_omega(SchwarzSpec::constant(1.0), 1.0), Error);
    CHECK_THROWS_AS((void)evaluate_omega(SchwarzSpec::constant(1.0), Complex{0.8, 0.7}), Error);
}

TEST_CASE("omega_series examples") {
    const auto mono = omega_series(SchwarzSpec::monomial(Complex{0.0, 0.5}, 3), 8);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(mono[k] == (k == 3 ? Complex{0.0, 0.5} : Complex{}));

    const auto b = SchwarzSpec::blaschke({0.5});
    const auto bs = omega_series(b, 32);
    CHECK(std::abs(bs[0] + 0.5) < 1e-15);
    CHECK(std::abs(bs[1] - 0.75) < 1e-15);
    CHECK(std::abs(bs[2] - 0.375) < 1e-15);
    const auto oracle = coeffs_by_cauchy_dft([&](Complex z) { return evaluate_omega(b, z); }, 0.9, 32);
    CHECK(max_coeff_gap(bs, oracle) < 1e-10);

    const auto cancel = SchwarzSpec::mix({0.5, 0.5}, {SchwarzSpec::constant(1.0), SchwarzSpec::constant(-1.0)});
    CHECK(coefficient_energy(omega_series(cancel, 10)) == 0.0);
}

TEST_CASE("omega_series matches the dft oracle for every family") {
    Rng rng(21);
    const SpecSampler sampler;
    for (int trial = 0; trial < 40; ++trial) {
        const auto omega = sampler.sample_omega(rng);
        const auto series = omega_series(omega, 24);
        const auto oracle = coeffs_by_cauchy_dft([&](Complex z) { return evaluate_omega(omega, z); }, 0.9, 24, 512);
        CHECK(max_coeff_gap(series, oracle) < 1e-9);
    }
}

TEST_CASE("induced_capital_omega examples") {
    const Complex a{0.3, -0.4};
    const auto flat = induced_capital_omega(SchwarzSpec::constant(0.0), a, 16);
    CHECK(std::abs(flat(Complex{0.2, 0.7}) - a) < 1e-15);
    for (std::size_t k = 1; k <= 16; ++k) CHECK(flat.series()[k] == Complex{});

    const auto omega = SchwarzSpec::blaschke({Complex{0.2, 0.1}});
    const auto plain = induced_capital_omega(omega, 0.0, 16);
    const Complex z{0.3, 0.4};
    CHECK(std::abs(plain(z) - z * z * evaluate_omega(omega, z)) < 1e-15);

    const auto half = induced_capital_omega(SchwarzSpec::constant(1.0), 0.5, 64);
    CHECK(std::abs(half.series()[0] - 0.5) < 1e-12);
    CHECK(std::abs(half.series()[1]) < 1e-12);
    double sup = 0.0;
    for (int j = 0; j < 2048; ++j) sup = std::max(sup, std::abs(half(std::polar(0.99, 2.0 * M_PI * j / 2048))));
    CHECK(sup <= 1.0);
    const auto oracle = coeffs_by_cauchy_dft(half.evaluator(), 0.9, 32, 1024);
    CHECK(max_coeff_gap(half.series().truncate(32), oracle) < 1e-10);

    CHECK_THROWS_AS((void)induced_capital_omega(omega, 1.0, 8), Error);
}

TEST_CASE("property: sampled |omega| <= 1") {
    Rng rng(22);
    const SpecSampler sampler;
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto omega = sampler.sample_omega(rng);
        const Complex z = mero::testing::random_disk_point(rng, 0.999999);
        worst = std::max(worst, std::abs(evaluate_omega(omega, z)));
    }
    CHECK(worst <= 1.0 + 1e-12);
}

TEST_CASE("property: induced Omega coefficient tests") {
    Rng rng(23);
    const SpecSampler sampler;
    for (int i = 0; i < 200; ++i) {
        const auto omega = sampler.sample_omega(rng);
        const Complex a = std::polar(0.9 * std::sqrt(rng.uniform()), rng.uniform(0.0, 2.0 * M_PI));
        const auto cap = induced_capital_omega(omega, a, 96);
        const auto& s = cap.series();
        CHECK(std::abs(s[0] - a) <= 1e-12);
        CHECK(std::abs(s[1]) <= 1e-12);
        CHECK(coefficient_energy(s) <= 1.0 + 1e-9);
        double worst = 0.0;
        for (std::size_t k = 1; k <= s.order(); ++k) worst = std::max(worst, std::abs(s[k]));
        CHECK(worst <= 1.0 - std::norm(a) + 1e-9);
    }
}
