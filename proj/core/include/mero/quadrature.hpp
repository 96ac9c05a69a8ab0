#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "mero/series.hpp"

namespace mero {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, nodes from Newton iteration on P_n.
[[nodiscard]] GaussRule gauss_legendre(std::size_t n);

struct QuadratureOptions {
    double abs_tol = 1e-12;
    std::size_t points = 16;
    int max_depth = 40;
};

/// Adaptive Gauss-Legendre integral of f along the straight segment
/// [from, to]. A panel is accepted once the rule on it and on its two
/// halves agree to within abs_tol scaled by the panel's share of the
/// parameter interval. Throws QuadratureFailure past max_depth or on a
/// non-finite integrand.
[[nodiscard]] Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex from,
                                        Complex to, const QuadratureOptions& opts = {});

} // namespace mero
