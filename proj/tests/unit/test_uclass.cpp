#include <cmath>

#include "doctest.h"
#include "mero/error.hpp"
#include "mero/explore.hpp"
#include "mero/mapping.hpp"
#include "mero/uclass.hpp"
#include "support/oracles.hpp"

using namespace mero;
using mero::testing::simpson;

namespace {

PowerSeries identity_series(std::size_t n) { return PowerSeries::monomial(1.0, 1, n); }

PowerSeries koebe_series(std::size_t n) {
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = static_cast<double>(k);
    return PowerSeries(std::move(c));
}

// 1 + cz + lambda(1-|a|^2) sum_j conj(a)^j z^{(j+1)k} / ((j+1)k - 1)
std::vector<Complex> fk_recip_oracle(unsigned k, const ClassParams& p, Complex c, std::size_t n) {
    std::vector<Complex> g(n + 1);
    g[0] = 1.0;
    g[1] += c;
    Complex abar_pow = 1.0;
    for (std::size_t m = k; m <= n; m += k) {
        g[m] += p.lambda() * p.a_defect() * abar_pow / static_cast<double>(m - 1);
        abar_pow *= std::conj(p.a());
    }
    return g;
}

// 1 - A z + lambda(1-a^2) sum_j a^j z^{2j+2} / (2j+1)
std::vector<Complex> f0_recip_oracle(const ClassParams& p, double A, std::size_t n) {
    const double a = p.a().real();
    std::vector<Complex> g(n + 1);
    g[0] = 1.0;
    g[1] = -A;
    double apow = 1.0;
    for (std::size_t j = 0; 2 * j + 2 <= n; ++j) {
        g[2 * j + 2] = p.lambda() * (1.0 - a * a) * apow / static_cast<double>(2 * j + 1);
        apow *= a;
    }
    return g;
}

double a2_quadrature(const ClassParams& p, double rho) {
    const double a = p.a().real();
    return 1.0 / rho + p.lambda() * simpson([a](double t) { return (1.0 - a * a) / (1.0 - a * t * t); }, 0.0, rho);
}

} // namespace

TEST_CASE("class params") {
    const auto p = ClassParams::make(0.9, 0.5);
    CHECK(std::abs(p.a() - 5.0 / 9.0) < 1e-16);
    CHECK(std::abs(p.a_defect() - 56.0 / 81.0) < 1e-15);
    CHECK_THROWS_AS((void)ClassParams::make(0.0, 1.0), Error);
    CHECK_THROWS_AS((void)ClassParams::make(0.5, 0.4), Error);
    CHECK_THROWS_AS((void)ClassParams::make(0.5, 0.5), Error);
    CHECK_THROWS_AS((void)ClassParams::make(NAN, 1.0), Error);
}

TEST_CASE("u_operator examples") {
    const auto u_id = u_operator(identity_series(20), 16);
    CHECK(u_id == PowerSeries::constant(1.0, 16));

    const auto u_k = u_operator(koebe_series(40), 30);
    for (std::size_t k = 0; k <= 30; ++k) CHECK(std::abs(u_k[k] - (k == 0 ? 1.0 : k == 2 ? -1.0 : 0.0)) < 1e-12);

    for (Complex c : {Complex{0.5}, Complex{-2.0, 1.0}, Complex{0.0, 3.0}}) {
        std::vector<Complex> f(25);
        Complex pw = 1.0;
        for (std::size_t k = 1; k <= 24; ++k) {
            f[k] = pw;
            pw *= -c;
        }
        const auto u = u_operator(PowerSeries(f), 20);
        CHECK(max_coeff_gap(u, PowerSeries::constant(1.0, 20)) < 1e-6 * std::pow(std::abs(c) + 1.0, 20));
    }

    CHECK_THROWS_AS((void)u_operator(PowerSeries(std::vector<Complex>{0.1, 1.0, 0.0}), 2), Error);
    CHECK_THROWS_AS((void)u_operator(PowerSeries(std::vector<Complex>{0.0, 2.0, 0.0}), 2), Error);
}

TEST_CASE("induced_omega_of examples") {
    const auto p = ClassParams::make(0.7, Complex{0.8, 0.1});
    const auto om = induced_omega_of(identity_series(12), p, 10);
    CHECK(std::abs(om[0] - p.a()) < 1e-15);
    for (std::size_t k = 1; k <= 10; ++k) CHECK(om[k] == Complex{});

    const auto koebe = induced_omega_of(koebe_series(40), ClassParams::make(1.0, 1.0), 30);
    for (std::size_t k = 0; k <= 30; ++k) CHECK(std::abs(koebe[k] - (k == 2 ? -1.0 : 0.0)) < 1e-12);
}

TEST_CASE("construct examples") {
    const auto p = ClassParams::make(0.5, 1.0);
    const Complex c{0.4, -0.3};
    const auto f = construct({p, c, SchwarzSpec::constant(0.0), 24});
    Complex pw = 1.0;
    for (std::size_t k = 1; k <= 24; ++k) {
        CHECK(std::abs(f[k] - pw) < 1e-14);
        pw *= -c;
    }
    CHECK(f[0] == Complex{});

    const auto g = reciprocal_series({ClassParams::make(1.0, 1.0), 0.0, SchwarzSpec::monomial(-1.0, 0), 16});
    for (std::size_t k = 0; k <= 16; ++k) CHECK(std::abs(g[k] - (k == 0 || k == 2 ? 1.0 : 0.0)) < 1e-15);

    CHECK_THROWS_AS((void)construct({p, 0.0, SchwarzSpec::constant(0.0), 3}), Error);
}

TEST_CASE("extremal f_k matches its closed-form expansion") {
    for (const auto& [lambda, mu] : {std::pair{1.0, Complex{1.0}}, std::pair{0.6, Complex{0.8}},
                                     std::pair{0.9, Complex{0.7, 0.2}}}) {
        const auto p = ClassParams::make(lambda, mu);
        for (unsigned k = 2; k <= 7; ++k) {
            const Complex c{0.2, 0.1};
            const auto g = reciprocal_form(extremal_fk(k, p, c, 64));
            const PowerSeries oracle(fk_recip_oracle(k, p, c, 63));
            CHECK(max_coeff_gap(g, oracle) < 1e-11);
        }
    }
    const auto p = ClassParams::make(1.0, 1.0);
    const auto f2 = reciprocal_form(extremal_fk(2, p, 0.0, 16));
    CHECK(max_coeff_gap(f2, PowerSeries(std::vector<Complex>{1.0, 0.0, 1.0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})) <
          1e-15);
    CHECK_THROWS_AS((void)extremal_fk(1, p, 0.0, 16), Error);

    const auto p3 = ClassParams::make(0.6, 0.8);
    const auto b = b_coefficients(extremal_fk(3, p3, 0.0, 32), 31);
    CHECK(std::abs(std::abs(b[2]) - 0.8 / 3.0) < 1e-12);
    for (std::size_t i = 0; i < b.size(); ++i)
        if ((i + 1) % 3 != 0) CHECK(std::abs(b[i]) < 1e-15);
}

TEST_CASE("extremal f_0") {
    const auto p0 = ClassParams::make(0.75, 1.0);
    for (double rho : {0.3, 0.5, 1.0}) {
        const auto g = reciprocal_form(extremal_f0(p0, rho, 16));
        // int_0^rho 1 dt = rho, so the linear coefficient is -(1/rho + lambda rho)
        const PowerSeries oracle(std::vector<Complex>{1.0, -(1.0 / rho + 0.75 * rho), 0.75, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
        CHECK(max_coeff_gap(g, oracle) < 1e-14);
    }
    const auto koebe = reciprocal_form(extremal_f0(ClassParams::make(1.0, 1.0), 1.0, 8));
    CHECK(max_coeff_gap(koebe, PowerSeries(std::vector<Complex>{1.0, -2.0, 1.0, 0, 0, 0, 0, 0})) < 1e-15);

    for (const auto& [lambda, mu, rho] : {std::tuple{0.8, 0.9, 0.7}, std::tuple{0.6, 0.9, 1.0}, std::tuple{0.9, 0.3, 0.4}}) {
        const auto p = ClassParams::make(lambda, mu);
        const double A = a2_quadrature(p, rho);
        const auto g = reciprocal_series(extremal_f0_spec(p, rho, 96));
        CHECK(max_coeff_gap(g, PowerSeries(f0_recip_oracle(p, A, 96))) < 1e-11);
        CHECK(std::abs(extremal_f0(p, rho, 8)[2] - A) < 1e-11);
        const auto map = construction_map(extremal_f0_spec(p, rho, 96));
        CHECK(std::abs(map.recip(rho).value) < 1e-10);
    }

    CHECK_THROWS_AS((void)extremal_f0(ClassParams::make(0.8, Complex{0.9, 0.1}), 0.5, 8), Error);
    CHECK_THROWS_AS((void)extremal_f0(ClassParams::make(0.8, 1.2), 0.5, 8), Error);
    CHECK_THROWS_AS((void)extremal_f0(ClassParams::make(0.8, 0.9), 1.5, 8), Error);
    CHECK_THROWS_AS((void)extremal_f0(ClassParams::make(0.8, 0.9), 0.0, 8), Error);
}

TEST_CASE("omega from the reciprocal form") {
    const auto p = ClassParams::make(0.8, 0.9);
    const ConstructionSpec spec{p, Complex{2.5, 1.0}, SchwarzSpec::blaschke({Complex{0.3, 0.2}}), 64};
    const auto via_g = induced_omega_of_reciprocal(reciprocal_series(spec), p, 64);
    const auto direct = induced_capital_omega(spec.omega, p.a(), 64).series();
    CHECK(max_coeff_gap(via_g, direct) <= 1e-12);
    const auto short_f = construct({p, 0.3, spec.omega, 12});
    CHECK(max_coeff_gap(induced_omega_of(short_f, p, 11), direct.truncate(11)) <= 1e-12);
    CHECK_THROWS_AS((void)induced_omega_of_reciprocal(PowerSeries::constant(2.0, 4), p, 4), Error);
}

TEST_CASE("b coefficients") {
    const auto id = b_coefficients(identity_series(10), 9);
    for (auto b : id) CHECK(b == Complex{});
    const auto k = b_coefficients(koebe_series(12), 11);
    CHECK(std::abs(k[0] + 2.0) < 1e-14);
    CHECK(std::abs(k[1] - 1.0) < 1e-14);
    for (std::size_t i = 2; i < k.size(); ++i) CHECK(std::abs(k[i]) < 1e-12);
    CHECK_THROWS_AS((void)b_coefficients(koebe_series(12), 12), Error);
}

TEST_CASE("bound formulas") {
    CHECK(bk_bound(2, ClassParams::make(1.0, 1.0)) == 1.0);
    for (unsigned k = 2; k <= 9; ++k)
        CHECK(std::abs(bk_bound(k, ClassParams::make(0.35, 1.0)) - 0.35 / (k - 1.0)) < 1e-16);
    CHECK(std::abs(bk_bound(3, ClassParams::make(0.6, 0.8)) - 0.6 * (8.0 / 9.0) / 2.0) < 1e-15);
    CHECK_THROWS_AS((void)bk_bound(1, ClassParams::make(0.6, 0.8)), Error);

    CHECK(l2_bound(ClassParams::make(1.0, 1.0)) == 1.0);
    CHECK(std::abs(l2_bound(ClassParams::make(0.6, 0.8)) - 0.32) < 1e-15);
    // geometric-series form of the same quantity: lambda^2 (1-a^2)^2 sum a^{2j}
    const double a = 1.0 / 3.0;
    CHECK(std::abs(0.36 * (1 - a * a) * (1 - a * a) / (1 - a * a) - 0.32) < 1e-15);
    CHECK(l2_weighted_sum(identity_series(20), 19) == 0.0);

    CHECK(a2_bound(ClassParams::make(1.0, 1.0), 1.0) == 2.0);
    CHECK(std::abs(a2_bound(ClassParams::make(0.75, 1.0), 0.5) - 2.375) < 1e-15);
    for (const auto& [lambda, mu, rho] : {std::tuple{0.8, 0.9, 0.7}, std::tuple{0.6, 0.9, 1.0},
                                          std::tuple{1.0, 0.2, 0.95}, std::tuple{0.5, 0.7, 0.1}}) {
        const auto p = ClassParams::make(lambda, mu);
        CHECK(std::abs(a2_bound(p, rho) - a2_quadrature(p, rho)) < 1e-12);
        CHECK(a2_bound(p, rho) > 1.0 / rho);
    }
    const double tiny = a2_bound(ClassParams::make(0.8, 1.0 - 0.8e-8), 0.9);
    CHECK(std::abs(tiny - a2_bound(ClassParams::make(0.8, 1.0), 0.9)) < 1e-6);
}

TEST_CASE("bound reports") {
    const auto rows = bound_reports(ClassParams::make(1.0, 1.0), {});
    REQUIRE(rows.size() == 7);
    for (unsigned k = 2; k <= 6; ++k) {
        CHECK(rows[k - 2].kind == BoundKind::bk);
        CHECK(std::abs(rows[k - 2].bound_value - 1.0 / (k - 1.0)) < 1e-15);
        CHECK(std::abs(rows[k - 2].gap) <= 1e-9);
    }
    CHECK(rows[5].kind == BoundKind::l2);
    CHECK(rows[6].kind == BoundKind::a2);
    CHECK(rows[6].bound_value == 2.0);
    CHECK(std::abs(rows[6].gap) < 1e-9);

    const auto rows2 = bound_reports(ClassParams::make(0.6, 0.8), {});
    CHECK(std::abs(rows2[5].bound_value - 0.32) < 1e-15);
    CHECK(rows2[5].achieved_value >= 0.32 - 1e-6);
    for (const auto& r : rows2) CHECK(r.gap >= -1e-9);

    const auto complex_rows = bound_reports(ClassParams::make(0.6, Complex{0.8, 0.1}), {});
    CHECK(complex_rows.size() == 6);
}

TEST_CASE("classify examples") {
    const auto g = classify(ClassParams::make(0.4, 1.0));
    CHECK(g.label() == "univalence_guaranteed");
    CHECK(g.locally_univalent_all);

    const auto n = classify(ClassParams::make(0.9, 0.5));
    CHECK(n.label() == "contains_non_locally_univalent");
    CHECK_FALSE(n.locally_univalent_all);
    CHECK_FALSE(n.univalence_guaranteed);

    CHECK(classify(ClassParams::make(0.9, 0.9)).label() == "univalence_guaranteed");
    CHECK(classify(ClassParams::make(0.9, 1.05)).label() == "univalence_guaranteed");
    CHECK(classify(ClassParams::make(0.9, 1.15)).label() == "open_region");
    CHECK(classify(ClassParams::make(0.5, 0.6)).label() == "univalence_guaranteed");
    CHECK_THROWS_AS((void)classify(ClassParams::make(1.2, 1.0)), Error);
}

TEST_CASE("critical point witness") {
    const auto p = ClassParams::make(0.9, 0.5);
    const auto w = critical_point_witness(p);
    const double a = 5.0 / 9.0;
    const double expected = 1.0 / std::sqrt(0.9 * (1.0 - a * a) + a);
    CHECK(std::abs(std::abs(w.z1) - expected) < 1e-14);
    CHECK(std::abs(w.z1.real()) < 1e-15);
    CHECK(w.residual <= 1e-8);
    CHECK(w.modulus > 1.0);
    CHECK(witness_discriminant(p) > 0.0);

    const auto edge = critical_point_witness(ClassParams::make(1.0, 0.999));
    CHECK(std::abs(edge.z1) < 1.0);
    CHECK(std::abs(std::abs(edge.z1) - 1.0 / std::sqrt(1.000999)) < 1e-12);
    CHECK(edge.residual <= 1e-8);

    CHECK_THROWS_AS((void)critical_point_witness(ClassParams::make(0.6, 0.7)), Error);
    CHECK_THROWS_AS((void)critical_point_witness(ClassParams::make(0.6, 0.6)), Error);
}

TEST_CASE("difference quotient margin") {
    const auto p = ClassParams::make(0.8, 0.9);
    const ConstructionSpec flat{p, 0.3, SchwarzSpec::constant(0.0), 16};
    CHECK(difference_quotient_margin(flat, 0.3, Complex{0.0, 0.5}) == 1.0);
    CHECK_THROWS_AS((void)difference_quotient_margin(flat, 0.3, 0.3), Error);
    CHECK_THROWS_AS((void)difference_quotient_margin(flat, 0.3, 1.2), Error);

    const auto witness = ClassParams::make(0.9, 0.5);
    const auto w = critical_point_witness(witness);
    const ConstructionSpec one{witness, 0.0, SchwarzSpec::constant(1.0), 16};
    double lowest = 1.0;
    for (double d : {1e-3, 1e-4, 1e-5}) {
        lowest = std::min(lowest, difference_quotient_margin(one, w.z1 + d, w.z1 - d));
        lowest = std::min(lowest, difference_quotient_margin(one, w.z1 + Complex{0.0, d}, w.z1 - Complex{0.0, d}));
    }
    CHECK(lowest < 1e-3);
}

TEST_CASE("property: margin positive in the guaranteed region") {
    Rng rng(31);
    const SpecSampler sampler;
    int pairs = 0;
    for (int s = 0; s < 20; ++s) {
        const double lambda = rng.uniform(0.1, 1.0);
        const double slack = lambda <= 0.5 ? std::min(lambda, 1.0) : 1.0 - lambda;
        const Complex mu = 1.0 + std::polar(0.999 * slack * std::sqrt(rng.uniform()), rng.uniform(0.0, 2.0 * M_PI));
        const auto params = ClassParams::make(lambda, mu);
        REQUIRE(classify(params).univalence_guaranteed);
        const auto spec = sampler.sample(params, rng);
        for (int i = 0; i < 500; ++i, ++pairs) {
            const Complex z1 = mero::testing::random_disk_point(rng, 0.999);
            const Complex z2 = mero::testing::random_disk_point(rng, 0.999);
            if (std::abs(z1) < 1e-9 || std::abs(z2) < 1e-9 || std::abs(z1 - z2) < 1e-9) continue;
            CHECK(difference_quotient_margin(spec, z1, z2) > 0.0);
        }
    }
    CHECK(pairs == 10000);
}

TEST_CASE("property: membership round trip and coefficient identity") {
    Rng rng(32);
    const SpecSampler sampler;
    for (int s = 0; s < 60; ++s) {
        const auto params = sampler.sample_params(rng);
        const auto spec = sampler.sample(params, rng);
        const auto f = construct(spec);
        CHECK(std::abs(f[2] + spec.c) < 1e-12);
        const auto g = reciprocal_series(spec);
        const auto om = induced_omega_of_reciprocal(g, params, spec.order);
        const auto cap = induced_capital_omega(spec.omega, params.a(), spec.order).series();
        CHECK(max_coeff_gap(om, cap) <= 1e-10);
        CHECK(std::abs(om[0] - params.a()) <= 1e-10);
        CHECK(std::abs(om[1]) <= 1e-10);
        double weighted = 0.0;
        for (std::size_t k = 2; k <= spec.order; ++k) {
            const Complex lhs = g[k] * (1.0 - static_cast<double>(k));
            CHECK(std::abs(lhs - params.lambda() * cap[k]) <= 1e-10);
            CHECK(std::abs(g[k]) <= bk_bound(static_cast<unsigned>(k), params) + 1e-9);
            weighted += std::norm(g[k] * (k - 1.0));
        }
        CHECK(weighted <= l2_bound(params) + 1e-9);
        const auto map = construction_map(spec);
        for (double r : {0.5, 0.9, 0.99}) {
            for (int j = 0; j < 64; ++j) {
                const Complex z = std::polar(r, 2.0 * M_PI * (j + 0.37) / 64);
                CHECK(std::abs((map.u(z) - params.mu()) / params.lambda()) <= 1.0 + 1e-9);
                CHECK(std::abs(map.u(z) - params.mu()) < params.lambda());
            }
        }
    }
}

TEST_CASE("property: sharpness of extremals") {
    for (const auto& [lambda, mu] : {std::pair{1.0, Complex{1.0}}, std::pair{0.6, Complex{0.8}},
                                     std::pair{0.7, Complex{0.9, 0.3}}}) {
        const auto p = ClassParams::make(lambda, mu);
        for (unsigned k = 2; k <= 8; ++k) {
            const auto b = b_coefficients(extremal_fk(k, p, 0.0, 128), 127);
            CHECK(std::abs(std::abs(b[k - 1]) - bk_bound(k, p)) <= 1e-9);
        }
        CHECK(std::abs(l2_weighted_sum(extremal_fk(2, p, 0.0, 201), 200) - l2_bound(p)) <= 1e-6);
    }
}
