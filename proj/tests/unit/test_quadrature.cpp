#include <cmath>

#include "doctest.h"
#include "mero/error.hpp"
#include "mero/quadrature.hpp"

using namespace mero;

TEST_CASE("gauss-legendre rule") {
    for (std::size_t n : {1u, 2u, 5u, 16u, 32u}) {
        const auto rule = gauss_legendre(n);
        REQUIRE(rule.nodes.size() == n);
        double wsum = 0.0;
        for (double w : rule.weights) wsum += w;
        CHECK(std::abs(wsum - 2.0) < 1e-14);
        // exact for x^(2n-2)
        double moment = 0.0;
        for (std::size_t i = 0; i < n; ++i) moment += rule.weights[i] * std::pow(rule.nodes[i], 2.0 * n - 2.0);
        CHECK(std::abs(moment - 2.0 / (2.0 * n - 1.0)) < 1e-13);
    }
    const auto two = gauss_legendre(2);
    CHECK(std::abs(std::abs(two.nodes[0]) - 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK_THROWS_AS((void)gauss_legendre(0), Error);
}

TEST_CASE("segment integrals") {
    const auto exp_int = integrate_segment([](Complex t) { return std::exp(t); }, 0.0, Complex{0.3, 0.8});
    CHECK(std::abs(exp_int - (std::exp(Complex{0.3, 0.8}) - 1.0)) < 1e-13);

    // integrand with a nearby pole: 1/(1.001 - t) on [0, 1]
    const auto near_pole = integrate_segment([](Complex t) { return 1.0 / (1.001 - t); }, 0.0, 1.0);
    CHECK(std::abs(near_pole - std::log(1001.0)) < 1e-11);

    CHECK(integrate_segment([](Complex) { return Complex{1.0}; }, 0.5, 0.5) == Complex{});
}

TEST_CASE("quadrature failure paths") {
    CHECK_THROWS_AS((void)integrate_segment([](Complex) { return Complex{NAN, 0.0}; }, 0.0, 1.0), Error);
    QuadratureOptions shallow;
    shallow.max_depth = 1;
    shallow.abs_tol = 1e-15;
    CHECK_THROWS_AS((void)integrate_segment([](Complex t) { return 1.0 / (1.0 + 1e-9 - t); }, 0.0, 1.0,
                                            shallow),
                    Error);
}
