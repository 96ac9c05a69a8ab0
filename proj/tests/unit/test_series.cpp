#include <cmath>

#include "doctest.h"
#include "mero/error.hpp"
#include "mero/random.hpp"
#include "mero/series.hpp"
#include "support/oracles.hpp"

using namespace mero;
using mero::testing::random_series;

namespace {

PowerSeries geometric(std::size_t order) {
    return PowerSeries(std::vector<Complex>(order + 1, Complex{1.0, 0.0}));
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("series construction and accessors") {
    const PowerSeries zero(3);
    CHECK(zero.order() == 3);
    CHECK(zero[2] == Complex{});

    const PowerSeries s({1.0, 2.0}, 4);
    CHECK(s.order() == 4);
    CHECK(s.coeff(1) == Complex{2.0});
    CHECK(s.coeff(4) == Complex{});
    CHECK(s.coeff(99) == Complex{});

    CHECK(PowerSeries::monomial(3.0, 2, 4)[2] == Complex{3.0});
    CHECK(PowerSeries::monomial(3.0, 5, 4) == PowerSeries(4));
    CHECK(code_of([] { (void)PowerSeries(std::vector<Complex>{}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { (void)PowerSeries(std::vector<Complex>{{NAN, 0.0}}); }) == ErrorCode::NonFinite);
}

TEST_CASE("add keeps the smaller truncation") {
    const PowerSeries s(std::vector<Complex>{1.0, 2.0, 3.0});
    const PowerSeries t(std::vector<Complex>{-1.0, 1.0});
    const PowerSeries sum = add(s, t);
    CHECK(sum.order() == 1);
    CHECK(sum[0] == Complex{0.0});
    CHECK(sum[1] == Complex{3.0});
    CHECK(sub(s, s) == PowerSeries(2));
}

TEST_CASE("mul of geometric series gives 1/(1-z)^2") {
    const auto g = geometric(20);
    const auto sq = mul(g, g);
    CHECK(sq.order() == 20);
    for (std::size_t k = 0; k <= 20; ++k) CHECK(sq[k] == Complex(static_cast<double>(k + 1)));
}

TEST_CASE("reciprocal") {
    const PowerSeries one_minus_z(std::vector<Complex>{1.0, -1.0, 0.0, 0.0, 0.0, 0.0});
    const auto r = reciprocal(one_minus_z);
    for (std::size_t k = 0; k <= 5; ++k) CHECK(std::abs(r[k] - 1.0) < 1e-15);

    CHECK(code_of([] { (void)reciprocal(PowerSeries(std::vector<Complex>{0.0, 1.0})); }) ==
          ErrorCode::ZeroConstantTerm);
    CHECK(code_of([] { (void)reciprocal(PowerSeries(std::vector<Complex>{1e-14, 1.0})); }) ==
          ErrorCode::ZeroConstantTerm);
}

TEST_CASE("differentiate and integrate") {
    const PowerSeries s(std::vector<Complex>{5.0, 1.0, 1.0, 1.0});
    const auto d = differentiate(s);
    CHECK(d.order() == 2);
    CHECK(d[0] == Complex{1.0});
    CHECK(d[1] == Complex{2.0});
    CHECK(d[2] == Complex{3.0});

    const auto i = integrate(s);
    CHECK(i.order() == 4);
    CHECK(i[0] == Complex{});
    CHECK(i[1] == Complex{5.0});
    CHECK(std::abs(i[4] - 0.25) < 1e-16);
}

TEST_CASE("compose") {
    // 1/(1-w) with w = z^2 gives 1/(1-z^2)
    const auto g = geometric(10);
    const auto sq = PowerSeries::monomial(1.0, 2, 10);
    const auto c = compose(g, sq);
    for (std::size_t k = 0; k <= 10; ++k) CHECK(c[k] == Complex(k % 2 == 0 ? 1.0 : 0.0));

    CHECK(code_of([&] { (void)compose(g, PowerSeries::constant(0.5, 10)); }) ==
          ErrorCode::InnerConstantNonzero);
}

TEST_CASE("log_series of 1 - z") {
    const PowerSeries s(std::vector<Complex>{1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    const auto l = log_series(s);
    CHECK(l[0] == Complex{});
    for (std::size_t k = 1; k <= 7; ++k) CHECK(std::abs(l[k] + 1.0 / static_cast<double>(k)) < 1e-15);
    CHECK(code_of([] { (void)log_series(PowerSeries(std::vector<Complex>{2.0, 1.0})); }) ==
          ErrorCode::ConstantNotOne);
}

TEST_CASE("evaluate") {
    const PowerSeries s(std::vector<Complex>{1.0, 1.0});
    CHECK(evaluate(s, 0.5) == Complex{1.5});
    const PowerSeries t(std::vector<Complex>{{2.0, -1.0}, 3.0, 4.0});
    CHECK(evaluate(t, 0.0) == t[0]);
    // tail of the truncated geometric series at 1/2 is 2^-64
    CHECK(std::abs(evaluate(geometric(64), 0.5) - 2.0) < 1e-12);
}

TEST_CASE("truncate and shifts") {
    const PowerSeries s(std::vector<Complex>{0.0, 0.0, 1.0, 2.0});
    CHECK(s.truncate(2).order() == 2);
    CHECK(code_of([&] { (void)s.truncate(7); }) == ErrorCode::InvalidArgument);
    const auto down = s.shift_down(2);
    CHECK(down.order() == 1);
    CHECK(down[1] == Complex{2.0});
    CHECK(down.shift_up(2) == s);
    CHECK(code_of([&] { (void)s.shift_down(3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cauchy dft examples") {
    const auto sq = coeffs_by_cauchy_dft([](Complex z) { return z * z; }, 0.5, 8);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(std::abs(sq[k] - (k == 2 ? 1.0 : 0.0)) < 1e-10);

    const auto koebe =
        coeffs_by_cauchy_dft([](Complex z) { return z / ((1.0 - z) * (1.0 - z)); }, 0.5, 32, 1024);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(std::abs(koebe[n] - static_cast<double>(n)) < 1e-8);

    // same coefficients from the series pipeline: z * 1/(1-z)^2
    const auto pipeline = mul(geometric(11), geometric(11)).shift_up(1).truncate(10);
    CHECK(max_coeff_gap(pipeline, koebe.truncate(10)) < 1e-8);

    CHECK(code_of([] { (void)coeffs_by_cauchy_dft([](Complex) { return Complex{}; }, 0.5, 8, 16); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([] {
              (void)coeffs_by_cauchy_dft([](Complex) -> Complex { throw std::runtime_error("x"); },
                                         0.5, 8);
          }) == ErrorCode::EvaluatorFailure);
}

TEST_CASE("property: reciprocal residual") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = random_series(rng, 40);
        const auto prod = mul(s, reciprocal(s));
        double worst = std::abs(prod[0] - 1.0);
        for (std::size_t k = 1; k <= prod.order(); ++k) worst = std::max(worst, std::abs(prod[k]));
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("property: integrate and differentiate invert each other") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_series(rng, 30);
        std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
        c[0] = 0.0;
        const PowerSeries z0(std::move(c));
        CHECK(max_coeff_gap(integrate(differentiate(z0)), z0) <= 1e-14);
        CHECK(max_coeff_gap(differentiate(integrate(z0)), z0) <= 1e-14);
    }
}

TEST_CASE("property: dft reproduces polynomials") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t degree = 1 + rng.below(8);
        std::vector<Complex> c(degree + 1);
        for (auto& v : c) v = mero::testing::random_disk_point(rng, 1.0);
        const PowerSeries p(std::move(c));
        const double r = rng.uniform(0.3, 0.9);
        const auto dft = coeffs_by_cauchy_dft([&](Complex z) { return evaluate(p, z); }, r, degree + 2);
        CHECK(max_coeff_gap(dft, p) <= 1e-10);
        CHECK(std::abs(dft[degree + 1]) <= 1e-10);
        CHECK(std::abs(dft[degree + 2]) <= 1e-10);
    }
}

TEST_CASE("property: evaluate is linear") {
    Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = random_series(rng, 24);
        const auto t = random_series(rng, 24);
        const Complex z = mero::testing::random_disk_point(rng, 0.95);
        const Complex lhs = evaluate(add(s, t), z);
        const Complex rhs = evaluate(s, z) + evaluate(t, z);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("property: operations are pure") {
    Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_series(rng, 32);
        const auto t = random_series(rng, 32);
        CHECK(mul(s, t) == mul(s, t));
        CHECK(reciprocal(s) == reciprocal(s));
        const PowerSeries one_plus(std::vector<Complex>(s.coeffs().begin(), s.coeffs().end()));
        CHECK(integrate(one_plus) == integrate(one_plus));
        const auto f = [&](Complex z) { return evaluate(s, z); };
        CHECK(coeffs_by_cauchy_dft(f, 0.5, 16) == coeffs_by_cauchy_dft(f, 0.5, 16));
    }
}
