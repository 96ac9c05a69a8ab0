#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "mero/series.hpp"

namespace mero {

class SchwarzSpec;

/// omega(z) = u, |u| <= 1.
struct ConstantOmega {
    Complex u;
    friend bool operator==(const ConstantOmega&, const ConstantOmega&) = default;
};

/// omega(z) = u z^m, |u| <= 1.
struct MonomialOmega {
    Complex u;
    unsigned m = 0;
    friend bool operator==(const MonomialOmega&, const MonomialOmega&) = default;
};

/// omega(z) = factor * prod_i (z - z_i) / (1 - conj(z_i) z), |z_i| < 1, |factor| = 1.
struct BlaschkeOmega {
    std::vector<Complex> zeros;
    Complex factor{1.0, 0.0};
    friend bool operator==(const BlaschkeOmega&, const BlaschkeOmega&) = default;
};

/// omega = sum_i weights[i] * parts[i], weights nonnegative and summing to 1.
struct MixOmega {
    std::vector<double> weights;
    std::vector<SchwarzSpec> parts;
    friend bool operator==(const MixOmega& lhs, const MixOmega& rhs);
};

/// A member of the unit ball of H-infinity drawn from four finite-parameter
/// families. Parameters are validated by the factories, so |omega(z)| <= 1
/// holds on the disk for every constructed value.
class SchwarzSpec {
public:
    using Variant = std::variant<ConstantOmega, MonomialOmega, BlaschkeOmega, MixOmega>;

    static SchwarzSpec constant(Complex u);
    static SchwarzSpec monomial(Complex u, unsigned m);
    static SchwarzSpec blaschke(std::vector<Complex> zeros, Complex factor = {1.0, 0.0});
    static SchwarzSpec mix(std::vector<double> weights, std::vector<SchwarzSpec> parts);

    [[nodiscard]] const Variant& variant() const noexcept { return value_; }
    /// "constant", "monomial", "blaschke" or "mix".
    [[nodiscard]] std::string_view kind() const noexcept;

    friend bool operator==(const SchwarzSpec&, const SchwarzSpec&) = default;

private:
    explicit SchwarzSpec(Variant v) : value_(std::move(v)) {}
    Variant value_;
};

inline bool operator==(const MixOmega& lhs, const MixOmega& rhs) {
    return lhs.weights == rhs.weights && lhs.parts == rhs.parts;
}

/// Slack allowed on |u| <= 1 and |factor| = 1 at construction.
inline constexpr double kUnitSlack = 1e-12;

/// omega(z) for |z| < 1; OutsideDisk otherwise.
[[nodiscard]] Complex evaluate_omega(const SchwarzSpec& omega, Complex z);

/// omega(z) on the closed disk. Used on quadrature paths that may end on
/// the unit circle; no domain check.
[[nodiscard]] Complex evaluate_omega_closed(const SchwarzSpec& omega, Complex z) noexcept;

/// Taylor expansion of omega at 0 to degree order.
[[nodiscard]] PowerSeries omega_series(const SchwarzSpec& omega, std::size_t order);

/// A bounded analytic function with both a pointwise and a series view.
class BoundedAnalytic {
public:
    BoundedAnalytic(PointEvaluator evaluator, PowerSeries series)
        : evaluator_(std::move(evaluator)), series_(std::move(series)) {}

    [[nodiscard]] Complex operator()(Complex z) const { return evaluator_(z); }
    [[nodiscard]] const PowerSeries& series() const noexcept { return series_; }
    [[nodiscard]] const PointEvaluator& evaluator() const noexcept { return evaluator_; }

private:
    PointEvaluator evaluator_;
    PowerSeries series_;
};

/// Omega(z) = (a + z^2 omega(z)) / (1 + conj(a) z^2 omega(z)), so that
/// Omega(0) = a and Omega'(0) = 0. Requires |a| < 1 (ParameterOutOfRange).
[[nodiscard]] BoundedAnalytic induced_capital_omega(const SchwarzSpec& omega, Complex a,
                                                    std::size_t order);

/// Sum of |c_k|^2 over the series; at most 1 for members of the unit ball.
[[nodiscard]] double coefficient_energy(const PowerSeries& s) noexcept;

} // namespace mero
