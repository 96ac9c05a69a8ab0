#pragma once

// Quad-precision (__float128) evaluation of the representation integral,
// used only by the coefficient oracle. Internal to the library.

#include <cstddef>
#include <functional>

#include "mero/schwarz.hpp"
#include "mero/series.hpp"
#include "mero/uclass.hpp"

namespace mero::detail {

__extension__ typedef __float128 Quad;

struct Wide {
    Quad re = 0;
    Quad im = 0;

    Wide() = default;
    Wide(Quad r, Quad i = 0) : re(r), im(i) {}
    explicit Wide(Complex z) : re(z.real()), im(z.imag()) {}

    [[nodiscard]] Complex lower() const { return {static_cast<double>(re), static_cast<double>(im)}; }

    Wide& operator+=(const Wide& o) { re += o.re; im += o.im; return *this; }
    Wide& operator-=(const Wide& o) { re -= o.re; im -= o.im; return *this; }
    Wide& operator*=(const Wide& o) {
        const Quad r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Wide& operator/=(const Wide& o) {
        const Quad n = o.re * o.re + o.im * o.im;
        const Quad r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }
};

inline Wide operator+(Wide a, const Wide& b) { return a += b; }
inline Wide operator-(Wide a, const Wide& b) { return a -= b; }
inline Wide operator*(Wide a, const Wide& b) { return a *= b; }
inline Wide operator/(Wide a, const Wide& b) { return a /= b; }
inline Wide conj(const Wide& z) { return {z.re, -z.im}; }
inline Quad norm(const Wide& z) { return z.re * z.re + z.im * z.im; }
/// Modulus rounded to long double; enough for tolerance tests.
long double magnitude(const Wide& z);

[[nodiscard]] Wide omega_wide(const SchwarzSpec& omega, const Wide& z);
[[nodiscard]] Wide integrand_wide(const ClassParams& params, const SchwarzSpec& omega, const Wide& t);

/// Adaptive 16-point Gauss-Legendre on [0, z] with nodes and arithmetic in
/// quad precision. QuadratureFailure past max_depth.
[[nodiscard]] Wide integral_wide(const ClassParams& params, const SchwarzSpec& omega, const Wide& z,
                                 long double abs_tol = 1e-30L, int max_depth = 40);

/// Cauchy-DFT coefficients from quad-precision samples on |z| = r.
[[nodiscard]] PowerSeries cauchy_dft_wide(const std::function<Wide(const Wide&)>& f, double radius,
                                          std::size_t order, std::size_t samples);

} // namespace mero::detail
