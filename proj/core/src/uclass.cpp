#include "mero/uclass.hpp"

#include <cmath>
#include <string>

#include "mero/error.hpp"
#include "mero/mapping.hpp"
#include "mero/quadrature.hpp"

namespace mero {

ClassParams ClassParams::make(double lambda, Complex mu) {
    if (!std::isfinite(lambda) || !is_finite(mu)) {
        throw Error(ErrorCode::InvalidClassParams, "lambda and mu must be finite");
    }
    if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidClassParams, "lambda must be positive");
    if (!(std::abs(1.0 - mu) < lambda)) {
        throw Error(ErrorCode::InvalidClassParams, "the class is empty unless |1 - mu| < lambda");
    }
    return ClassParams(lambda, mu, (1.0 - mu) / lambda);
}

void ConstructionSpec::validate() const {
    if (order < 4) throw Error(ErrorCode::InvalidArgument, "construction order must be at least 4");
    if (!is_finite(c)) throw Error(ErrorCode::NonFinite, "free constant c must be finite");
}

Complex representation_integrand(const ClassParams& params, const SchwarzSpec& omega,
                                 Complex t) noexcept {
    const Complex w = evaluate_omega_closed(omega, t);
    return params.a_defect() * w / (1.0 + std::conj(params.a()) * t * t * w);
}

namespace {

void require_normalized(const PowerSeries& f) {
    if (f.order() < 2) throw Error(ErrorCode::BadNormalization, "series too short to normalize");
    if (std::abs(f[0]) > kNormalizationTol || std::abs(f[1] - 1.0) > kNormalizationTol) {
        throw Error(ErrorCode::BadNormalization, "expected f(0) = 0 and f'(0) = 1");
    }
}

} // namespace

PowerSeries reciprocal_form(const PowerSeries& f) {
    require_normalized(f);
    std::vector<Complex> q(f.coeffs().begin() + 1, f.coeffs().end());
    return reciprocal(PowerSeries(std::move(q)));
}

PowerSeries u_from_reciprocal(const PowerSeries& g) {
    if (g.order() == 0) return g;
    // z g' is exact to the degree of g
    return sub(g, differentiate(g).shift_up(1));
}

PowerSeries u_operator(const PowerSeries& f, std::size_t order) {
    const PowerSeries u = u_from_reciprocal(reciprocal_form(f));
    return u.truncate(std::min(order, u.order()));
}

PowerSeries induced_omega_of(const PowerSeries& f, const ClassParams& params, std::size_t order) {
    const PowerSeries u = u_operator(f, order);
    return sub(u, PowerSeries::constant(params.mu(), u.order())).scaled(1.0 / params.lambda());
}

PowerSeries induced_omega_of_reciprocal(const PowerSeries& g, const ClassParams& params,
                                        std::size_t order) {
    if (std::abs(g[0] - 1.0) > kNormalizationTol)
        throw Error(ErrorCode::BadNormalization, "z/f must equal 1 at the origin");
    const PowerSeries u = u_from_reciprocal(g);
    return sub(u.truncate(std::min(order, u.order())),
               PowerSeries::constant(params.mu(), std::min(order, u.order())))
        .scaled(1.0 / params.lambda());
}

PowerSeries reciprocal_series(const ConstructionSpec& spec) {
    spec.validate();
    const std::size_t n = spec.order;
    const ClassParams& prm = spec.params;
    const PowerSeries w = omega_series(spec.omega, n);
    const PowerSeries den =
        add(PowerSeries::constant(1.0, n), w.shift_up(2).truncate(n).scaled(std::conj(prm.a())));
    const PowerSeries integrand = mul(w, reciprocal(den)).scaled(prm.a_defect());
    const PowerSeries tail = integrate(integrand).shift_up(1).truncate(n).scaled(prm.lambda());
    return sub(PowerSeries({1.0, spec.c}, n), tail);
}

PowerSeries construct(const ConstructionSpec& spec) {
    const PowerSeries g = reciprocal_series(spec);
    if (std::abs(g[0]) <= kSeriesZeroTol) {
        throw Error(ErrorCode::SeriesSingularity, "denominator vanishes at the origin");
    }
    return reciprocal(g).shift_up(1).truncate(spec.order);
}

ConstructionSpec extremal_fk_spec(unsigned k, const ClassParams& params, Complex c,
                                  std::size_t order) {
    if (k < 2) throw Error(ErrorCode::InvalidArgument, "extremal f_k needs k >= 2");
    return ConstructionSpec{params, c, SchwarzSpec::monomial(-1.0, k - 2), order};
}

PowerSeries extremal_fk(unsigned k, const ClassParams& params, Complex c, std::size_t order) {
    return construct(extremal_fk_spec(k, params, c, order));
}

double require_real_a(const ClassParams& params) {
    const Complex a = params.a();
    if (std::abs(a.imag()) > 1e-14 || a.real() < 0.0 || !(a.real() < 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange,
                    "closed forms need real a = (1 - mu)/lambda in [0, 1)");
    }
    return a.real();
}

namespace {

void require_radius(double p) {
    if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::ParameterOutOfRange, "p must lie in (0, 1]");
}

} // namespace

ConstructionSpec extremal_f0_spec(const ClassParams& params, double p, std::size_t order) {
    return ConstructionSpec{params, -a2_bound(params, p), SchwarzSpec::constant(-1.0), order};
}

PowerSeries extremal_f0(const ClassParams& params, double p, std::size_t order) {
    return construct(extremal_f0_spec(params, p, order));
}

std::vector<Complex> b_coefficients(const PowerSeries& f, std::size_t count) {
    const PowerSeries g = reciprocal_form(f);
    if (count > g.order()) {
        throw Error(ErrorCode::InvalidArgument, "requested b_k beyond the series degree");
    }
    return {g.coeffs().begin() + 1, g.coeffs().begin() + 1 + count};
}

double bk_bound(unsigned k, const ClassParams& params) {
    if (k < 2) throw Error(ErrorCode::InvalidArgument, "b_k bound needs k >= 2");
    return params.lambda() * params.a_defect() / static_cast<double>(k - 1);
}

double l2_bound(const ClassParams& params) noexcept {
    return params.lambda() * params.lambda() * params.a_defect();
}

double l2_weighted_sum(const PowerSeries& f, std::size_t count) {
    const auto b = b_coefficients(f, count);
    double sum = 0.0;
    for (std::size_t k = 2; k <= count; ++k) {
        const double w = static_cast<double>(k - 1);
        sum += std::norm(b[k - 1]) * w * w;
    }
    return sum;
}

double a2_bound(const ClassParams& params, double p) {
    require_radius(p);
    const double a = require_real_a(params);
    if (a == 0.0) return 1.0 / p + params.lambda() * p;
    const double s = std::sqrt(a);
    // log((1 + p s)/(1 - p s)) / 2 = atanh(p s)
    return 1.0 / p + params.lambda() * (1.0 - a * a) * std::atanh(p * s) / s;
}

std::string RegionVerdict::label() const {
    if (contains_non_locally_univalent) return "contains_non_locally_univalent";
    if (univalence_guaranteed) return "univalence_guaranteed";
    return "open_region";
}

RegionVerdict classify(const ClassParams& params) {
    const double lambda = params.lambda();
    if (!(lambda <= 1.0)) {
        throw Error(ErrorCode::InvalidClassParams, "classification covers lambda in (0, 1]");
    }
    RegionVerdict v;
    v.locally_univalent_all = std::abs(params.mu()) >= lambda - kBoundaryTol;
    v.contains_non_locally_univalent = !v.locally_univalent_all;
    v.univalence_guaranteed =
        lambda <= 0.5 || std::abs(1.0 - params.mu()) <= 1.0 - lambda + kBoundaryTol;
    v.open_region = v.locally_univalent_all && !v.univalence_guaranteed;
    return v;
}

double witness_discriminant(const ClassParams& params) noexcept {
    const double m = std::abs(params.mu());
    return params.a_defect() * (params.lambda() - m) * (params.lambda() + m);
}

CriticalPointWitness critical_point_witness(const ClassParams& params) {
    if (std::abs(params.mu()) >= params.lambda() - kBoundaryTol) {
        throw Error(ErrorCode::NoWitness, "|mu| >= lambda: every member is locally univalent");
    }
    const Complex shifted = params.lambda() * params.a_defect() + std::conj(params.a());
    CriticalPointWitness w;
    w.modulus = std::abs(shifted);
    w.z1 = std::sqrt(-1.0 / shifted);
    const Mapping f = construction_map(ConstructionSpec{params, 0.0, SchwarzSpec::constant(1.0), 16});
    w.residual = std::abs(f.derivative(w.z1));
    return w;
}

double difference_quotient_margin(const ConstructionSpec& spec, Complex z1, Complex z2) {
    for (Complex z : {z1, z2}) {
        if (!is_finite(z) || !(std::abs(z) < 1.0)) {
            throw Error(ErrorCode::OutsideDisk, "difference quotient points must lie in the disk");
        }
        if (z == Complex{}) throw Error(ErrorCode::InvalidArgument, "difference quotient points must be nonzero");
    }
    if (std::abs(z1 - z2) == 0.0) throw Error(ErrorCode::CoincidentPoints, "z1 == z2");
    const Complex delta = z1 - z2;
    // int_{z2}^{z1} h dt / (z1 - z2) = int_0^1 h(z2 + s delta) ds
    const auto along = [&](Complex s) {
        return representation_integrand(spec.params, spec.omega, z2 + s.real() * delta);
    };
    const Complex mean = integrate_segment(along, 0.0, 1.0);
    return 1.0 - std::abs(spec.params.lambda() * z1 * z2 * mean);
}

std::string_view to_string(BoundKind kind) noexcept {
    switch (kind) {
    case BoundKind::bk: return "bk";
    case BoundKind::l2: return "l2";
    case BoundKind::a2: return "a2";
    }
    return "unknown";
}

std::vector<BoundReport> bound_reports(const ClassParams& params, const BoundRequest& request) {
    std::vector<BoundReport> rows;
    for (unsigned k : request.ks) {
        const PowerSeries f = extremal_fk(k, params, 0.0, std::max<std::size_t>(request.order, k + 1));
        BoundReport r{BoundKind::bk, k, 0.0, bk_bound(k, params), 0.0, 0.0};
        r.achieved_value = std::abs(b_coefficients(f, k)[k - 1]);
        r.gap = r.bound_value - r.achieved_value;
        rows.push_back(r);
    }
    {
        const std::size_t terms = request.l2_terms;
        const PowerSeries f2 = extremal_fk(2, params, 0.0, std::max(request.order, terms + 1));
        BoundReport r{BoundKind::l2, static_cast<unsigned>(terms), 0.0, l2_bound(params), 0.0, 0.0};
        r.achieved_value = l2_weighted_sum(f2, terms);
        r.gap = r.bound_value - r.achieved_value;
        rows.push_back(r);
    }
    try {
        const double bound = a2_bound(params, request.p);
        const PowerSeries f0 = extremal_f0(params, request.p, request.order);
        BoundReport r{BoundKind::a2, 0, request.p, bound, std::abs(f0[2]), 0.0};
        r.gap = r.bound_value - r.achieved_value;
        rows.push_back(r);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ParameterOutOfRange) throw;
    }
    return rows;
}

} // namespace mero
