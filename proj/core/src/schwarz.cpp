#include "mero/schwarz.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mero/error.hpp"

namespace mero {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(Complex z, const char* what) {
    if (!is_finite(z)) throw Error(ErrorCode::NonFinite, std::string(what) + " is not finite");
}

} // namespace

SchwarzSpec SchwarzSpec::constant(Complex u) {
    require_finite(u, "constant value");
    if (std::abs(u) > 1.0 + kUnitSlack) {
        throw Error(ErrorCode::InvalidSchwarzSpec, "constant omega needs |u| <= 1");
    }
    return SchwarzSpec(ConstantOmega{u});
}

SchwarzSpec SchwarzSpec::monomial(Complex u, unsigned m) {
    require_finite(u, "monomial coefficient");
    if (std::abs(u) > 1.0 + kUnitSlack) {
        throw Error(ErrorCode::InvalidSchwarzSpec, "monomial omega needs |u| <= 1");
    }
    return SchwarzSpec(MonomialOmega{u, m});
}

SchwarzSpec SchwarzSpec::blaschke(std::vector<Complex> zeros, Complex factor) {
    require_finite(factor, "Blaschke factor");
    if (std::abs(std::abs(factor) - 1.0) > kUnitSlack) {
        throw Error(ErrorCode::InvalidSchwarzSpec, "Blaschke unimodular factor needs |factor| = 1");
    }
    for (const auto& z : zeros) {
        require_finite(z, "Blaschke zero");
        if (!(std::abs(z) < 1.0)) {
            throw Error(ErrorCode::InvalidSchwarzSpec, "Blaschke zeros must lie in the open disk");
        }
    }
    return SchwarzSpec(BlaschkeOmega{std::move(zeros), factor});
}

SchwarzSpec SchwarzSpec::mix(std::vector<double> weights, std::vector<SchwarzSpec> parts) {
    if (weights.empty() || weights.size() != parts.size()) {
        throw Error(ErrorCode::InvalidSchwarzSpec, "mix needs one weight per part and at least one part");
    }
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw Error(ErrorCode::InvalidSchwarzSpec, "mix weights must be nonnegative");
        }
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidSchwarzSpec, "mix weights must sum to 1");
    }
    return SchwarzSpec(MixOmega{std::move(weights), std::move(parts)});
}

std::string_view SchwarzSpec::kind() const noexcept {
    return std::visit(Overloaded{
                          [](const ConstantOmega&) { return std::string_view("constant"); },
                          [](const MonomialOmega&) { return std::string_view("monomial"); },
                          [](const BlaschkeOmega&) { return std::string_view("blaschke"); },
                          [](const MixOmega&) { return std::string_view("mix"); },
                      },
                      value_);
}

Complex evaluate_omega_closed(const SchwarzSpec& omega, Complex z) noexcept {
    return std::visit(Overloaded{
                          [](const ConstantOmega& c) { return c.u; },
                          [&](const MonomialOmega& m) {
                              Complex p{1.0, 0.0};
                              for (unsigned i = 0; i < m.m; ++i) p *= z;
                              return m.u * p;
                          },
                          [&](const BlaschkeOmega& b) {
                              Complex p = b.factor;
                              for (const auto& zi : b.zeros) p *= (z - zi) / (1.0 - std::conj(zi) * z);
                              return p;
                          },
                          [&](const MixOmega& mx) {
                              Complex s{};
                              for (std::size_t i = 0; i < mx.parts.size(); ++i) {
                                  s += mx.weights[i] * evaluate_omega_closed(mx.parts[i], z);
                              }
                              return s;
                          },
                      },
                      omega.variant());
}

Complex evaluate_omega(const SchwarzSpec& omega, Complex z) {
    if (!is_finite(z) || !(std::abs(z) < 1.0)) {
        throw Error(ErrorCode::OutsideDisk, "omega is evaluated on the open unit disk only");
    }
    return evaluate_omega_closed(omega, z);
}

PowerSeries omega_series(const SchwarzSpec& omega, std::size_t order) {
    return std::visit(
        Overloaded{
            [&](const ConstantOmega& c) { return PowerSeries::constant(c.u, order); },
            [&](const MonomialOmega& m) { return PowerSeries::monomial(m.u, m.m, order); },
            [&](const BlaschkeOmega& b) {
                PowerSeries acc = PowerSeries::constant(b.factor, order);
                for (const auto& zi : b.zeros) {
                    // (z - zi) * sum_n conj(zi)^n z^n
                    std::vector<Complex> geo(order + 1);
                    Complex p{1.0, 0.0};
                    for (std::size_t n = 0; n <= order; ++n) {
                        geo[n] = p;
                        p *= std::conj(zi);
                    }
                    std::vector<Complex> factor(order + 1);
                    factor[0] = -zi * geo[0];
                    for (std::size_t n = 1; n <= order; ++n) factor[n] = geo[n - 1] - zi * geo[n];
                    acc = mul(acc, PowerSeries(std::move(factor)));
                }
                return acc;
            },
            [&](const MixOmega& mx) {
                PowerSeries acc(order);
                for (std::size_t i = 0; i < mx.parts.size(); ++i) {
                    acc = add(acc, omega_series(mx.parts[i], order).scaled(mx.weights[i]));
                }
                return acc;
            },
        },
        omega.variant());
}

BoundedAnalytic induced_capital_omega(const SchwarzSpec& omega, Complex a, std::size_t order) {
    if (!is_finite(a) || !(std::abs(a) < 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "induced Omega needs |a| < 1");
    }
    // phi = z^2 omega, Omega = (a + phi) / (1 + conj(a) phi)
    const PowerSeries phi = omega_series(omega, order).shift_up(2).truncate(order);
    const PowerSeries num = add(PowerSeries::constant(a, order), phi);
    const PowerSeries den = add(PowerSeries::constant(1.0, order), phi.scaled(std::conj(a)));
    PowerSeries series = mul(num, reciprocal(den));
    auto eval = [omega, a](Complex z) {
        const Complex phi_z = z * z * evaluate_omega(omega, z);
        return (a + phi_z) / (1.0 + std::conj(a) * phi_z);
    };
    return BoundedAnalytic(std::move(eval), std::move(series));
}

double coefficient_energy(const PowerSeries& s) noexcept {
    double e = 0.0;
    for (const auto& c : s.coeffs()) e += std::norm(c);
    return e;
}

} // namespace mero
