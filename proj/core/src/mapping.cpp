#include "mero/mapping.hpp"

#include <cmath>
#include <limits>

#include "mero/error.hpp"

namespace mero {

Complex Mapping::value(Complex z) const {
    const Complex g = recip_(z).value;
    if (g == Complex{}) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};
    }
    return z / g;
}

Complex Mapping::derivative(Complex z) const {
    const Jet j = recip_(z);
    return (j.value - z * j.derivative) / (j.value * j.value);
}

Complex Mapping::u(Complex z) const {
    const Jet j = recip_(z);
    return j.value - z * j.derivative;
}

Mapping identity_map() {
    return Mapping("identity", [](Complex) { return Jet{1.0, 0.0}; });
}

Mapping mobius_map(Complex c) {
    return Mapping("mobius", [c](Complex z) { return Jet{1.0 + c * z, c}; });
}

Mapping koebe_map() {
    return Mapping("koebe", [](Complex z) {
        const Complex w = 1.0 - z;
        return Jet{w * w, -2.0 * w};
    });
}

Mapping series_map(const PowerSeries& f, std::string name) {
    PowerSeries g = reciprocal_form(f);
    PowerSeries dg = differentiate(g);
    return Mapping(std::move(name), [g = std::move(g), dg = std::move(dg)](Complex z) {
        return Jet{evaluate(g, z), evaluate(dg, z)};
    });
}

Complex representation_integral(const ClassParams& params, const SchwarzSpec& omega, Complex z,
                                const QuadratureOptions& quad) {
    return integrate_segment(
        [&](Complex t) { return representation_integrand(params, omega, t); }, 0.0, z, quad);
}

Mapping construction_map(const ConstructionSpec& spec, QuadratureOptions quad) {
    spec.validate();
    return Mapping("construction", [spec, quad](Complex z) {
        const double lambda = spec.params.lambda();
        const Complex integral = representation_integral(spec.params, spec.omega, z, quad);
        const Complex integrand = representation_integrand(spec.params, spec.omega, z);
        const Complex g = 1.0 + spec.c * z - lambda * z * integral;
        const Complex dg = spec.c - lambda * integral - lambda * z * integrand;
        return Jet{g, dg};
    });
}

ConstructionSpec catalog_spec(const CatalogRequest& request, std::size_t order) {
    if (request.name == "fk") {
        return extremal_fk_spec(request.k, ClassParams::make(request.lambda, request.mu), request.c, order);
    }
    if (request.name == "f0") {
        return extremal_f0_spec(ClassParams::make(request.lambda, request.mu), request.p, order);
    }
    if (request.name == "slit") {
        if (!(request.lambda > 0.5 && request.lambda <= 1.0)) {
            throw Error(ErrorCode::ParameterOutOfRange, "slit mappings need lambda in (1/2, 1]");
        }
        return extremal_f0_spec(ClassParams::make(request.lambda, request.lambda), request.p, order);
    }
    if (request.name == "identity") {
        return {ClassParams::make(request.lambda, request.mu), 0.0, SchwarzSpec::constant(0.0), order};
    }
    if (request.name == "mobius") {
        return {ClassParams::make(request.lambda, request.mu), request.c, SchwarzSpec::constant(0.0), order};
    }
    if (request.name == "koebe") {
        // (1 - z)^2 = 1 - 2z + z int_0^z 1 dt
        return {ClassParams::make(1.0, 1.0), -2.0, SchwarzSpec::constant(-1.0), order};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown catalog function '" + request.name + "'");
}

Mapping catalog_map(const CatalogRequest& request) {
    if (request.name == "identity") return identity_map();
    if (request.name == "mobius") return mobius_map(request.c);
    if (request.name == "koebe") return koebe_map();
    Mapping m = construction_map(catalog_spec(request, 16));
    return Mapping(request.name, [m](Complex z) { return m.recip(z); });
}

} // namespace mero
