#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace mero {

using Complex = std::complex<double>;

/// Coefficient tolerance used by the reciprocal and logarithm preconditions.
inline constexpr double kSeriesZeroTol = 1e-13;

/// Default truncation degree.
inline constexpr std::size_t kDefaultOrder = 128;

/// Truncated Taylor series sum_{k=0}^{N} c_k z^k with complex coefficients.
///
/// The truncation degree N is part of the value: every coefficient up to N
/// is known, nothing beyond it is. Binary operations keep the smaller
/// degree of their operands.
class PowerSeries {
public:
    /// The zero series of the given degree.
    explicit PowerSeries(std::size_t order = 0);
    /// Takes ownership of coeffs; degree is coeffs.size() - 1. Throws
    /// NonFinite on NaN/Inf, InvalidArgument on an empty vector.
    explicit PowerSeries(std::vector<Complex> coeffs);
    PowerSeries(std::initializer_list<Complex> coeffs, std::size_t order);

    static PowerSeries constant(Complex value, std::size_t order);
    /// value * z^power, truncated at order (zero when power > order).
    static PowerSeries monomial(Complex value, std::size_t power, std::size_t order);

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Complex operator[](std::size_t k) const noexcept { return coeffs_[k]; }
    /// Coefficient k, or zero beyond the truncation degree.
    [[nodiscard]] Complex coeff(std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : Complex{};
    }

    /// Keeps the first order+1 coefficients. Raising the degree is rejected.
    [[nodiscard]] PowerSeries truncate(std::size_t order) const;
    /// Multiplication by z^m; exact, so the degree grows by m.
    [[nodiscard]] PowerSeries shift_up(std::size_t m) const;
    /// Division by z^m; requires the first m coefficients to vanish.
    [[nodiscard]] PowerSeries shift_down(std::size_t m) const;

    [[nodiscard]] PowerSeries operator-() const;
    [[nodiscard]] PowerSeries scaled(Complex factor) const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Complex> coeffs_;
};

[[nodiscard]] PowerSeries add(const PowerSeries& s, const PowerSeries& t);
[[nodiscard]] PowerSeries sub(const PowerSeries& s, const PowerSeries& t);
[[nodiscard]] PowerSeries mul(const PowerSeries& s, const PowerSeries& t);

/// 1/s. Throws ZeroConstantTerm when |s_0| <= kSeriesZeroTol.
[[nodiscard]] PowerSeries reciprocal(const PowerSeries& s);

/// Term-wise derivative; the result is known to degree N-1.
[[nodiscard]] PowerSeries differentiate(const PowerSeries& s);
/// Antiderivative vanishing at 0; exact, so the result has degree N+1.
[[nodiscard]] PowerSeries integrate(const PowerSeries& s);

/// s(t(z)). Requires t(0) = 0 (InnerConstantNonzero otherwise).
[[nodiscard]] PowerSeries compose(const PowerSeries& s, const PowerSeries& t);

/// Principal logarithm with log(s)(0) = 0. Requires s(0) = 1 (ConstantNotOne).
[[nodiscard]] PowerSeries log_series(const PowerSeries& s);

/// Horner evaluation of the truncated polynomial.
[[nodiscard]] Complex evaluate(const PowerSeries& s, Complex z) noexcept;

inline PowerSeries operator+(const PowerSeries& s, const PowerSeries& t) { return add(s, t); }
inline PowerSeries operator-(const PowerSeries& s, const PowerSeries& t) { return sub(s, t); }
inline PowerSeries operator*(const PowerSeries& s, const PowerSeries& t) { return mul(s, t); }

using PointEvaluator = std::function<Complex(Complex)>;

/// Taylor coefficients from samples on the circle |z| = r:
///   c_k ~ r^{-k} (1/M) sum_j f(r e^{i theta_j}) e^{-i k theta_j},  theta_j = 2 pi j / M.
/// samples = 0 selects 4(N+1). Exceptions from f are rethrown as
/// EvaluatorFailure.
[[nodiscard]] PowerSeries coeffs_by_cauchy_dft(const PointEvaluator& f, double radius,
                                               std::size_t order, std::size_t samples = 0);

/// Largest coefficient-wise modulus difference over the common degree.
[[nodiscard]] double max_coeff_gap(const PowerSeries& s, const PowerSeries& t);

[[nodiscard]] bool is_finite(Complex z) noexcept;

} // namespace mero
