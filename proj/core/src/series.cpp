#include "mero/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mero/error.hpp"

namespace mero {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::ConstantNotOne: return "ConstantNotOne";
    case ErrorCode::InnerConstantNonzero: return "InnerConstantNonzero";
    case ErrorCode::EvaluatorFailure: return "EvaluatorFailure";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::InvalidSchwarzSpec: return "InvalidSchwarzSpec";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::InvalidClassParams: return "InvalidClassParams";
    case ErrorCode::BadNormalization: return "BadNormalization";
    case ErrorCode::SeriesSingularity: return "SeriesSingularity";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CenterMismatch: return "CenterMismatch";
    case ErrorCode::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "power series needs at least one coefficient");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!is_finite(coeffs_[k])) {
            throw Error(ErrorCode::NonFinite, "coefficient " + std::to_string(k) + " is not finite");
        }
    }
}

PowerSeries::PowerSeries(std::initializer_list<Complex> coeffs, std::size_t order)
    : PowerSeries([&] {
          std::vector<Complex> c(order + 1);
          std::copy_n(coeffs.begin(), std::min(coeffs.size(), order + 1), c.begin());
          return c;
      }()) {}

PowerSeries PowerSeries::constant(Complex value, std::size_t order) {
    return PowerSeries({value}, order);
}

PowerSeries PowerSeries::monomial(Complex value, std::size_t power, std::size_t order) {
    std::vector<Complex> c(order + 1);
    if (power <= order) c[power] = value;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncate(std::size_t order) const {
    if (order > this->order()) {
        throw Error(ErrorCode::InvalidArgument, "cannot extend a truncated series from degree " +
                                                    std::to_string(this->order()) + " to " +
                                                    std::to_string(order));
    }
    return PowerSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::shift_up(std::size_t m) const {
    std::vector<Complex> c(coeffs_.size() + m);
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + m);
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::shift_down(std::size_t m) const {
    if (m > order()) {
        throw Error(ErrorCode::InvalidArgument, "shift exceeds truncation degree");
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (std::abs(coeffs_[k]) > kSeriesZeroTol) {
            throw Error(ErrorCode::InvalidArgument,
                        "division by z^m needs vanishing low-order coefficients");
        }
    }
    return PowerSeries(std::vector<Complex>(coeffs_.begin() + m, coeffs_.end()));
}

PowerSeries PowerSeries::operator-() const { return scaled(-1.0); }

PowerSeries PowerSeries::scaled(Complex factor) const {
    std::vector<Complex> c(coeffs_);
    for (auto& x : c) x *= factor;
    return PowerSeries(std::move(c));
}

PowerSeries add(const PowerSeries& s, const PowerSeries& t) {
    const std::size_t n = std::min(s.order(), t.order());
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = s[k] + t[k];
    return PowerSeries(std::move(c));
}

PowerSeries sub(const PowerSeries& s, const PowerSeries& t) {
    const std::size_t n = std::min(s.order(), t.order());
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = s[k] - t[k];
    return PowerSeries(std::move(c));
}

PowerSeries mul(const PowerSeries& s, const PowerSeries& t) {
    const std::size_t n = std::min(s.order(), t.order());
    std::vector<Complex> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (s[i] == Complex{}) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += s[i] * t[j];
    }
    return PowerSeries(std::move(c));
}

PowerSeries reciprocal(const PowerSeries& s) {
    const Complex s0 = s[0];
    if (std::abs(s0) <= kSeriesZeroTol) {
        throw Error(ErrorCode::ZeroConstantTerm, "reciprocal of a series with vanishing constant term");
    }
    const std::size_t n = s.order();
    std::vector<Complex> r(n + 1);
    r[0] = 1.0 / s0;
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc{};
        for (std::size_t j = 1; j <= k; ++j) acc += s[j] * r[k - j];
        r[k] = -acc * r[0];
    }
    return PowerSeries(std::move(r));
}

PowerSeries differentiate(const PowerSeries& s) {
    const std::size_t n = s.order();
    if (n == 0) return PowerSeries(0);
    std::vector<Complex> c(n);
    for (std::size_t k = 1; k <= n; ++k) c[k - 1] = static_cast<double>(k) * s[k];
    return PowerSeries(std::move(c));
}

PowerSeries integrate(const PowerSeries& s) {
    const std::size_t n = s.order();
    std::vector<Complex> c(n + 2);
    for (std::size_t k = 0; k <= n; ++k) c[k + 1] = s[k] / static_cast<double>(k + 1);
    return PowerSeries(std::move(c));
}

PowerSeries compose(const PowerSeries& s, const PowerSeries& t) {
    if (std::abs(t[0]) > kSeriesZeroTol) {
        throw Error(ErrorCode::InnerConstantNonzero, "inner series must vanish at 0");
    }
    const std::size_t n = std::min(s.order(), t.order());
    std::vector<Complex> inner(t.coeffs().begin(), t.coeffs().begin() + n + 1);
    inner[0] = 0.0;
    const PowerSeries u(std::move(inner));
    // Horner in the series ring; s_k z^k terms beyond n cannot reach degree n.
    PowerSeries acc = PowerSeries::constant(s[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = mul(acc, u);
        std::vector<Complex> c(acc.coeffs().begin(), acc.coeffs().end());
        c[0] += s[k];
        acc = PowerSeries(std::move(c));
    }
    return acc;
}

PowerSeries log_series(const PowerSeries& s) {
    if (std::abs(s[0] - 1.0) > kSeriesZeroTol) {
        throw Error(ErrorCode::ConstantNotOne, "logarithm needs constant term 1");
    }
    if (s.order() == 0) return PowerSeries(0);
    // log s = integral of s'/s; s'/s is known to degree N-1.
    const PowerSeries ratio = mul(differentiate(s), reciprocal(s));
    return integrate(ratio);
}

Complex evaluate(const PowerSeries& s, Complex z) noexcept {
    Complex acc{};
    const auto c = s.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

namespace {

// Twiddles and accumulation run in long double whatever the sample type.
template <class Sample>
PowerSeries cauchy_dft(Sample&& sample, double radius, std::size_t order, std::size_t samples) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error(ErrorCode::InvalidArgument, "sampling radius must be positive");
    }
    const std::size_t m = samples == 0 ? 4 * (order + 1) : samples;
    if (m <= 2 * order) {
        throw Error(ErrorCode::InvalidArgument, "sample count must exceed twice the degree");
    }
    std::vector<std::complex<long double>> roots(m);
    for (std::size_t j = 0; j < m; ++j) {
        const long double theta = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) /
                                  static_cast<long double>(m);
        roots[j] = {std::cos(theta), std::sin(theta)};
    }
    std::vector<std::complex<long double>> values(m);
    for (std::size_t j = 0; j < m; ++j) {
        std::complex<long double> v;
        try {
            v = sample(roots[j] * static_cast<long double>(radius));
        } catch (const std::exception& e) {
            throw Error(ErrorCode::EvaluatorFailure, e.what());
        }
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw Error(ErrorCode::EvaluatorFailure, "evaluator returned a non-finite value");
        }
        values[j] = v;
    }
    std::vector<Complex> c(order + 1);
    long double scale = 1.0L;
    for (std::size_t k = 0; k <= order; ++k) {
        std::complex<long double> acc{};
        for (std::size_t j = 0; j < m; ++j) acc += values[j] * std::conj(roots[(k * j) % m]);
        acc /= static_cast<long double>(m) * scale;
        c[k] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
        scale *= radius;
    }
    return PowerSeries(std::move(c));
}

} // namespace

PowerSeries coeffs_by_cauchy_dft(const PointEvaluator& f, double radius, std::size_t order,
                                 std::size_t samples) {
    return cauchy_dft(
        [&](std::complex<long double> z) {
            const Complex v = f(Complex(static_cast<double>(z.real()), static_cast<double>(z.imag())));
            return std::complex<long double>(v.real(), v.imag());
        },
        radius, order, samples);
}

double max_coeff_gap(const PowerSeries& s, const PowerSeries& t) {
    const std::size_t n = std::min(s.order(), t.order());
    double gap = 0.0;
    for (std::size_t k = 0; k <= n; ++k) gap = std::max(gap, std::abs(s[k] - t[k]));
    return gap;
}

} // namespace mero
