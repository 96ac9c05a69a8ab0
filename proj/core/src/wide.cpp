#include "wide.hpp"

#include <cmath>
#include <mutex>
#include <variant>
#include <vector>

#include "mero/error.hpp"
#include "mero/quadrature.hpp"

namespace mero::detail {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct WideRule {
    std::vector<Quad> nodes;
    std::vector<Quad> weights;
};

void legendre(std::size_t n, Quad x, Quad& p1, Quad& p0) {
    p0 = 1;
    p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
        const Quad kd = static_cast<Quad>(k);
        const Quad p2 = ((2 * kd - 1) * x * p1 - (kd - 1) * p0) / kd;
        p0 = p1;
        p1 = p2;
    }
}

// Newton polish in quad precision from the double-precision rule.
WideRule make_rule(std::size_t n) {
    const GaussRule seed = gauss_legendre(n);
    WideRule rule{std::vector<Quad>(n), std::vector<Quad>(n)};
    const Quad nq = static_cast<Quad>(n);
    for (std::size_t i = 0; i < n; ++i) {
        Quad x = seed.nodes[i];
        Quad p1, p0;
        for (int iter = 0; iter < 4; ++iter) {
            legendre(n, x, p1, p0);
            x -= p1 / (nq * (x * p1 - p0) / (x * x - 1));
        }
        legendre(n, x, p1, p0);
        const Quad dp = nq * (x * p1 - p0) / (x * x - 1);
        rule.nodes[i] = x;
        rule.weights[i] = 2 / ((1 - x * x) * dp * dp);
    }
    return rule;
}

const WideRule& rule16() {
    static const WideRule rule = make_rule(16);
    return rule;
}

Wide panel(const ClassParams& params, const SchwarzSpec& omega, const Wide& z, Quad s0, Quad s1) {
    const WideRule& rule = rule16();
    const Quad mid = (s0 + s1) / 2;
    const Quad half = (s1 - s0) / 2;
    Wide acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Quad s = mid + half * rule.nodes[i];
        acc += Wide(rule.weights[i]) * integrand_wide(params, omega, Wide(s) * z);
    }
    return acc * Wide(half);
}

Wide adapt(const ClassParams& params, const SchwarzSpec& omega, const Wide& z, Quad s0, Quad s1,
           const Wide& whole, long double tol, long double length, int depth) {
    const Quad mid = (s0 + s1) / 2;
    const Wide left = panel(params, omega, z, s0, mid);
    const Wide right = panel(params, omega, z, mid, s1);
    const Wide refined = left + right;
    if (magnitude(refined - whole) * length <= tol * static_cast<long double>(s1 - s0)) return refined;
    if (depth <= 0) throw Error(ErrorCode::QuadratureFailure, "quad-precision quadrature did not converge");
    return adapt(params, omega, z, s0, mid, left, tol, length, depth - 1) +
           adapt(params, omega, z, mid, s1, right, tol, length, depth - 1);
}

Wide power(Wide base, std::size_t e) {
    Wide acc(1);
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

} // namespace

long double magnitude(const Wide& z) { return std::sqrt(static_cast<long double>(norm(z))); }

Wide omega_wide(const SchwarzSpec& omega, const Wide& z) {
    return std::visit(Overloaded{
                          [](const ConstantOmega& c) { return Wide(c.u); },
                          [&](const MonomialOmega& m) { return Wide(m.u) * power(z, m.m); },
                          [&](const BlaschkeOmega& b) {
                              Wide p(b.factor);
                              for (const auto& zi : b.zeros) {
                                  const Wide w(zi);
                                  p *= (z - w) / (Wide(1) - conj(w) * z);
                              }
                              return p;
                          },
                          [&](const MixOmega& mx) {
                              Wide s;
                              for (std::size_t i = 0; i < mx.parts.size(); ++i)
                                  s += Wide(static_cast<Quad>(mx.weights[i])) * omega_wide(mx.parts[i], z);
                              return s;
                          },
                      },
                      omega.variant());
}

Wide integrand_wide(const ClassParams& params, const SchwarzSpec& omega, const Wide& t) {
    const Wide a(params.a());
    const Wide w = omega_wide(omega, t);
    const Quad defect = 1 - norm(a);
    return Wide(defect) * w / (Wide(1) + conj(a) * t * t * w);
}

Wide integral_wide(const ClassParams& params, const SchwarzSpec& omega, const Wide& z, long double abs_tol,
                   int max_depth) {
    if (norm(z) == 0) return {};
    const Wide whole = panel(params, omega, z, 0, 1);
    return z * adapt(params, omega, z, 0, 1, whole, abs_tol, magnitude(z), max_depth);
}

PowerSeries cauchy_dft_wide(const std::function<Wide(const Wide&)>& f, double radius, std::size_t order,
                            std::size_t samples) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error(ErrorCode::InvalidArgument, "sampling radius must be positive");
    }
    const std::size_t m = samples == 0 ? 4 * (order + 1) : samples;
    if (m <= 2 * order) throw Error(ErrorCode::InvalidArgument, "sample count must exceed twice the degree");

    // primitive m-th root of unity, Newton on z^m = 1 from the double value
    const double step = 2.0 * M_PI / static_cast<double>(m);
    Wide root(Complex(std::cos(step), std::sin(step)));
    for (int iter = 0; iter < 3; ++iter) {
        const Wide zm1 = power(root, m - 1);
        root -= (zm1 * root - Wide(1)) / (Wide(static_cast<Quad>(m)) * zm1);
    }
    std::vector<Wide> roots(m);
    roots[0] = Wide(1);
    for (std::size_t j = 1; j < m; ++j) roots[j] = roots[j - 1] * root;

    std::vector<Wide> values(m);
    const Wide r(static_cast<Quad>(radius));
    for (std::size_t j = 0; j < m; ++j) {
        try {
            values[j] = f(roots[j] * r);
        } catch (const std::exception& e) {
            throw Error(ErrorCode::EvaluatorFailure, e.what());
        }
        if (!is_finite(values[j].lower())) throw Error(ErrorCode::EvaluatorFailure, "non-finite sample");
    }
    std::vector<Complex> c(order + 1);
    Quad scale = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        Wide acc;
        for (std::size_t j = 0; j < m; ++j) acc += values[j] * conj(roots[(k * j) % m]);
        acc /= Wide(static_cast<Quad>(m) * scale);
        c[k] = acc.lower();
        scale *= static_cast<Quad>(radius);
    }
    return PowerSeries(std::move(c));
}

} // namespace mero::detail
