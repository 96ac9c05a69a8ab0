#pragma once

#include <functional>
#include <string>

#include "mero/quadrature.hpp"
#include "mero/uclass.hpp"

namespace mero {

/// Value and first derivative at a point.
struct Jet {
    Complex value;
    Complex derivative;
};

/// A normalized meromorphic f described through its reciprocal form
/// g(z) = z/f(z), which is analytic on the disk with g(0) = 1. Poles of f
/// are zeros of g, so every pointwise quantity is computed from g and g'.
class Mapping {
public:
    using JetEvaluator = std::function<Jet(Complex)>;

    Mapping(std::string name, JetEvaluator recip) : name_(std::move(name)), recip_(std::move(recip)) {}

    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    /// g(z) and g'(z).
    [[nodiscard]] Jet recip(Complex z) const { return recip_(z); }
    /// f(z) = z / g(z); infinite at poles.
    [[nodiscard]] Complex value(Complex z) const;
    /// f'(z) = (g - z g') / g^2.
    [[nodiscard]] Complex derivative(Complex z) const;
    /// U_f(z) = g - z g'.
    [[nodiscard]] Complex u(Complex z) const;

private:
    std::string name_;
    JetEvaluator recip_;
};

/// f(z) = z.
[[nodiscard]] Mapping identity_map();
/// f(z) = z / (1 + c z).
[[nodiscard]] Mapping mobius_map(Complex c);
/// f(z) = z / (1 - z)^2.
[[nodiscard]] Mapping koebe_map();
/// Horner evaluation of the series of z/f (degree f.order() - 1).
[[nodiscard]] Mapping series_map(const PowerSeries& f, std::string name = "series");
/// The representation formula evaluated pointwise: the integral runs along
/// the segment [0, z] by adaptive Gauss-Legendre quadrature. Valid on the
/// closed disk.
[[nodiscard]] Mapping construction_map(const ConstructionSpec& spec, QuadratureOptions quad = {});

/// int_0^z of the representation integrand, by quadrature.
[[nodiscard]] Complex representation_integral(const ClassParams& params, const SchwarzSpec& omega,
                                              Complex z, const QuadratureOptions& quad = {});

/// Catalog entry names accepted by catalog_map: identity, mobius, koebe,
/// fk, f0, slit.
struct CatalogRequest {
    std::string name;
    double lambda = 1.0;
    Complex mu{1.0, 0.0};
    Complex c{};
    unsigned k = 2;
    double p = 1.0;
};

/// Builds a named catalog function. "slit" is f_0 in the class
/// (lambda, lambda) for lambda in (1/2, 1]. InvalidArgument on an unknown name.
[[nodiscard]] Mapping catalog_map(const CatalogRequest& request);
/// Representation data of a catalog entry. identity and mobius use omega = 0
/// in the requested class; koebe is the class (1, 1) with c = -2, omega = -1.
[[nodiscard]] ConstructionSpec catalog_spec(const CatalogRequest& request,
                                                           std::size_t order);

} // namespace mero
