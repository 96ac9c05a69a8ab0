#include <cmath>

#include "doctest.h"
#include "mero/error.hpp"
#include "mero/explore.hpp"
#include "mero/mapping.hpp"
#include "mero/verify.hpp"
#include "support/oracles.hpp"

using namespace mero;

namespace {

SamplingGrid grid(std::vector<double> radii, std::size_t angles = 512, std::uint64_t seed = 0) {
    SamplingGrid g;
    g.radii = std::move(radii);
    g.angles_per_ring = angles;
    g.seed = seed;
    return g;
}

} // namespace

TEST_CASE("sampling grid") {
    auto g = grid({0.5, 0.9}, 64, 3);
    g.extra_points = {Complex{0.1, 0.2}};
    CHECK(g.points().size() == 129);
    CHECK(g.points().back() == Complex{0.1, 0.2});
    for (auto z : g.ring(1)) CHECK(std::abs(std::abs(z) - 0.9) < 1e-15);
    CHECK(grid({0.5}, 64, 1).ring(0) != grid({0.5}, 64, 2).ring(0));
    CHECK(grid({0.5}, 64, 1).ring(0) == grid({0.5}, 64, 1).ring(0));
    CHECK_THROWS_AS(grid({0.9, 0.5}).validate(), Error);
    CHECK_THROWS_AS(grid({0.5, 1.0}).validate(), Error);
    CHECK_THROWS_AS(grid({0.5}, 32).validate(), Error);
}

TEST_CASE("membership examples") {
    const auto id = membership(identity_map(), ClassParams::make(0.5, 1.0), SamplingGrid{});
    CHECK(id.sup_estimate == 0.0);
    CHECK(id.verdict == Verdict::supported);

    const auto k = membership(koebe_map(), ClassParams::make(1.0, 1.0), grid({0.5, 0.9, 0.99}));
    CHECK(std::abs(k.sup_estimate - 0.9801) < 1e-9);
    CHECK(k.verdict == Verdict::supported);

    const auto refuted = membership(koebe_map(), ClassParams::make(0.5, 1.0), grid({0.5, 0.9, 0.99}));
    CHECK(refuted.verdict == Verdict::refuted);
    REQUIRE(refuted.witness.has_value());
    const Complex z = refuted.witness->z;
    CHECK(std::abs(1.0 - z * z - 1.0) >= 0.5);
    CHECK(std::abs(refuted.witness->value - (1.0 - z * z)) < 1e-12);

    std::vector<Complex> kc(60);
    for (std::size_t n = 0; n < kc.size(); ++n) kc[n] = static_cast<double>(n);
    const auto series_report = membership(PowerSeries(kc), ClassParams::make(1.0, 1.0), grid({0.3, 0.5}));
    CHECK(std::abs(series_report.sup_estimate - 0.25) < 1e-12);
}

TEST_CASE("property: membership sup is monotone in the outer radius") {
    Rng rng(41);
    const SpecSampler sampler;
    for (int s = 0; s < 10; ++s) {
        const auto params = sampler.sample_params(rng);
        const auto map = construction_map(sampler.sample(params, rng));
        double previous = 0.0;
        std::vector<double> radii;
        for (double r : {0.3, 0.5, 0.7, 0.9, 0.99}) {
            radii.push_back(r);
            const auto report = membership(map, params, grid(radii, 128, 5));
            CHECK(report.sup_estimate >= previous);
            previous = report.sup_estimate;
        }
    }
}

TEST_CASE("local univalence examples") {
    CHECK(local_univalence_check(identity_map(), SamplingGrid{}).min_abs_derivative == doctest::Approx(1.0));

    const auto mob = local_univalence_check(mobius_map(0.5), grid({0.5, 0.9, 0.99}));
    CHECK(std::abs(mob.min_abs_derivative - 1.0 / (1.495 * 1.495)) < 1e-4);
    CHECK(mob.verdict == Verdict::supported);

    const auto params = ClassParams::make(0.9, 0.5);
    const auto w = critical_point_witness(params);
    auto g = grid({0.5, 0.9});
    g.extra_points = {w.z1};
    const auto map = construction_map({params, 0.0, SchwarzSpec::constant(1.0), 16});
    const auto report = local_univalence_check(map, g);
    CHECK(report.min_abs_derivative < 1e-8);
    CHECK(report.verdict == Verdict::refuted);
    CHECK(report.argmin == w.z1);
}

TEST_CASE("winding number") {
    std::vector<Complex> circle;
    for (int j = 0; j < 256; ++j) circle.push_back(std::polar(1.0, 2.0 * M_PI * j / 256));
    CHECK(winding_number(circle, 0.0).count == 1);
    CHECK(winding_number(circle, 2.0).count == 0);
    std::vector<Complex> twice;
    for (int j = 0; j < 512; ++j) twice.push_back(std::polar(1.0, 4.0 * M_PI * j / 512));
    CHECK(winding_number(twice, Complex{0.1, 0.1}).count == 2);
    const std::vector<Complex> coarse{1.0, Complex{0.0, 1.0}, -1.0, Complex{0.0, -1.0}};
    CHECK_FALSE(winding_number(coarse, 0.0).resolved);
}

TEST_CASE("univalence grid examples") {
    CHECK(univalence_grid(identity_map(), grid({0.5, 0.9, 0.99})).verdict == Verdict::supported);
    CHECK(univalence_grid(koebe_map(), grid({0.5, 0.9, 0.99})).verdict == Verdict::supported);

    const auto poly = MeromorphicMap::analytic([](Complex z) { return Jet{z + 2.0 * z * z, 1.0 + 4.0 * z}; });
    const auto report = univalence_grid(poly, grid({0.2, 0.5, 0.9}));
    CHECK(report.verdict == Verdict::refuted);
    REQUIRE(report.witness.has_value());
    const auto& [w1, w2] = *report.witness;
    CHECK(std::abs(w1.z - w2.z) > 1e-6);
    const auto f = [](Complex z) { return z + 2.0 * z * z; };
    CHECK(std::abs(f(w1.z) - f(w2.z)) < 1e-9 * (1.0 + std::abs(f(w1.z))));
}

TEST_CASE("property: mobius maps are never refuted") {
    Rng rng(42);
    for (int i = 0; i < 12; ++i) {
        const Complex c = std::polar((1.0 - 1e-3) * std::sqrt(rng.uniform()), rng.uniform(0.0, 2.0 * M_PI));
        const auto report = univalence_grid(mobius_map(c), grid({0.5, 0.9, 0.99}, 256, i));
        CHECK(report.verdict != Verdict::refuted);
    }
    const auto edge = univalence_grid(mobius_map(0.999), grid({0.5, 0.9, 0.99}, 256, 1));
    CHECK(edge.verdict != Verdict::refuted);
}

TEST_CASE("subordination examples") {
    const std::vector<double> radii{0.3, 0.6, 0.9};
    const auto h = [](Complex z) { return z / ((1.0 - z) * (1.0 - z)); };
    CHECK(subordination_check(h, h, radii).verdict == Verdict::supported);
    CHECK(subordination_check([&](Complex z) { return h(z * z); }, h, radii).verdict == Verdict::supported);
    const auto doubled = subordination_check([&](Complex z) { return 2.0 * h(z); }, h, radii);
    CHECK(doubled.verdict == Verdict::refuted);
    REQUIRE(doubled.witness.has_value());
    CHECK(doubled.witness->r == radii.front());
    CHECK_THROWS_AS((void)subordination_check([&](Complex z) { return 1.0 + h(z); }, h, radii), Error);
}

TEST_CASE("property: subordination through explicit Schwarz factors") {
    Rng rng(43);
    const SpecSampler sampler;
    const std::vector<double> radii{0.5, 0.9};
    for (int i = 0; i < 50; ++i) {
        const double lambda = rng.uniform(0.2, 1.0);
        const auto params = ClassParams::make(lambda, 1.0 - lambda * rng.uniform(0.0, 0.9));
        // z/f_0 at p = 1 in closed form
        const double a = params.a().real();
        const double A = a2_bound(params, 1.0);
        const auto h = [&](Complex z) -> Complex {
            const Complex tail = a > 0.0 ? std::atanh(std::sqrt(a) * z) / std::sqrt(a) : z;
            return 1.0 - A * z + lambda * (1.0 - a * a) * z * tail;
        };
        // phi(z) = z * omega(z) with |omega| <= 1 is a Schwarz function
        const auto omega = sampler.sample_omega(rng);
        const auto g = [&](Complex z) { return h(z * evaluate_omega(omega, z)); };
        const auto report = subordination_check(g, h, radii);
        CHECK(report.verdict == Verdict::supported);
    }
}

TEST_CASE("oracle cross check") {
    const auto p = ClassParams::make(0.7, 0.9);
    CHECK(oracle_cross_check({p, 0.5, SchwarzSpec::constant(0.0), 32}, 0.5, 32, 1024) <= 1e-12);
    CHECK(oracle_cross_check(extremal_fk_spec(4, p, 0.0, 64), 0.6, 64) <= 1e-8);

    Rng rng(44);
    const SpecSampler sampler;
    const auto spec = sampler.sample(sampler.sample_params(rng), rng);
    CHECK(oracle_cross_check(spec, 0.5, 32) <= 1e-8);
    CHECK_THROWS_AS((void)oracle_cross_check(spec, 1.0, 32), Error);
    CHECK_THROWS_AS((void)oracle_cross_check(spec, 0.0, 32), Error);

    std::vector<Complex> kc{1.0, -2.0, 1.0};
    for (int i = 0; i < 30; ++i) kc.push_back(0.0);
    CHECK(oracle_cross_check(koebe_map(), PowerSeries(kc), 0.5) <= 1e-8);
}

TEST_CASE("property: catalog oracle agreement up to r = 0.6, N = 64") {
    std::vector<CatalogRequest> catalog{{"identity", 0.7, 0.9}, {"koebe"}, {"mobius", 1.0, 1.0, Complex{-0.8, 0.5}},
                                        {"slit", 0.8, 0.8}, {"f0", 0.8, 0.9, 0.0, 2, 0.7}};
    for (unsigned k = 2; k <= 6; ++k) catalog.push_back({"fk", 0.9, Complex{0.7, 0.2}, Complex{0.3, 0.0}, k});
    for (const auto& request : catalog) {
        for (const auto& [r, n] : {std::pair{0.3, 16u}, std::pair{0.5, 32u}, std::pair{0.6, 64u}}) {
            // r must stay inside the zero set of z/f_0 at p = 0.7
            if (request.name == "f0" && r > 0.6) continue;
            CHECK(oracle_cross_check(catalog_spec(request, n), r, n) <= 1e-8);
        }
    }
}
