#include "mero/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "mero/error.hpp"

namespace mero {

namespace {

template <class Real>
void legendre_nodes(std::size_t n, std::vector<Real>& nodes, std::vector<Real>& weights) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "Gauss-Legendre rule needs n >= 1");
    nodes.assign(n, Real(0));
    weights.assign(n, Real(0));
    const Real nr = static_cast<Real>(n);
    const auto eval = [n](Real x, Real& p1, Real& p0) {
        p0 = 1;
        p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const Real kd = static_cast<Real>(k);
            const Real p2 = ((2 * kd - 1) * x * p1 - (kd - 1) * p0) / kd;
            p0 = p1;
            p1 = p2;
        }
    };
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        Real x = std::cos(std::numbers::pi_v<Real> * (static_cast<Real>(i) + Real(0.75)) / (nr + Real(0.5)));
        Real p1, p0;
        for (int iter = 0; iter < 100; ++iter) {
            eval(x, p1, p0);
            const Real dp = nr * (x * p1 - p0) / (x * x - 1);
            const Real dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 4 * std::numeric_limits<Real>::epsilon()) break;
        }
        eval(x, p1, p0);
        const Real dp = nr * (x * p1 - p0) / (x * x - 1);
        const Real w = 2 / ((1 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0;
}

} // namespace

GaussRule gauss_legendre(std::size_t n) {
    GaussRule rule;
    legendre_nodes<double>(n, rule.nodes, rule.weights);
    return rule;
}

namespace {

template <class Rule>
const Rule& cached_rule(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, Rule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        Rule rule;
        legendre_nodes(n, rule.nodes, rule.weights);
        it = cache.emplace(n, std::move(rule)).first;
    }
    return it->second;
}

template <class C>
bool finite(C v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Integral over the parameter range [s0, s1] of f(from + s (to - from)) ds.
template <class C, class Rule, class Real = typename C::value_type>
C panel(const std::function<C(C)>& f, const Rule& rule, C from, C delta, Real s0, Real s1) {
    const Real mid = (s0 + s1) / 2;
    const Real half = (s1 - s0) / 2;
    C acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const C v = f(from + (mid + half * rule.nodes[i]) * delta);
        if (!finite(v)) throw Error(ErrorCode::QuadratureFailure, "non-finite integrand value");
        acc += rule.weights[i] * v;
    }
    return acc * half;
}

template <class C, class Rule, class Real = typename C::value_type>
C adapt(const std::function<C(C)>& f, const Rule& rule, C from, C delta, Real s0, Real s1, C whole,
        Real tol, int depth) {
    const Real mid = (s0 + s1) / 2;
    const C left = panel(f, rule, from, delta, s0, mid);
    const C right = panel(f, rule, from, delta, mid, s1);
    const C refined = left + right;
    if (std::abs(refined - whole) * std::abs(delta) <= tol * (s1 - s0)) return refined;
    if (depth <= 0) throw Error(ErrorCode::QuadratureFailure, "adaptive quadrature did not converge");
    return adapt(f, rule, from, delta, s0, mid, left, tol, depth - 1) +
           adapt(f, rule, from, delta, mid, s1, right, tol, depth - 1);
}

template <class C, class Rule>
C integrate(const std::function<C(C)>& f, C from, C to, const QuadratureOptions& opts) {
    using Real = typename C::value_type;
    const C delta = to - from;
    if (delta == C{}) return {};
    const Rule& rule = cached_rule<Rule>(opts.points);
    const C whole = panel(f, rule, from, delta, Real(0), Real(1));
    return delta * adapt(f, rule, from, delta, Real(0), Real(1), whole, static_cast<Real>(opts.abs_tol),
                         opts.max_depth);
}

} // namespace

Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex from, Complex to,
                          const QuadratureOptions& opts) {
    return integrate<Complex, GaussRule>(f, from, to, opts);
}

} // namespace mero
