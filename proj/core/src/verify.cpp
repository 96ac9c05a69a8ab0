#include "mero/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mero/error.hpp"
#include "mero/random.hpp"
#include "wide.hpp"

namespace mero {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex polar_point(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

std::vector<Complex> circle(double r, std::size_t n, double offset = 0.0) {
    std::vector<Complex> pts(n);
    for (std::size_t j = 0; j < n; ++j) {
        pts[j] = polar_point(r, kTwoPi * (static_cast<double>(j) + offset) / static_cast<double>(n));
    }
    return pts;
}

} // namespace

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::supported: return "supported";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

void SamplingGrid::validate() const {
    if (radii.empty()) throw Error(ErrorCode::InvalidArgument, "sampling grid needs at least one radius");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "grid radii must lie in (0, 1)");
        }
        if (i > 0 && !(radii[i] > radii[i - 1])) {
            throw Error(ErrorCode::InvalidArgument, "grid radii must be strictly increasing");
        }
    }
    if (angles_per_ring < 64) throw Error(ErrorCode::InvalidArgument, "grid needs at least 64 angles per ring");
    for (const auto& z : extra_points) {
        if (!is_finite(z) || !(std::abs(z) < 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "extra grid points must lie in the disk");
        }
    }
}

std::vector<Complex> SamplingGrid::ring(std::size_t index) const {
    double offset = 0.0;
    if (jitter) offset = Rng(derive_seed(seed, index)).uniform();
    return circle(radii.at(index), angles_per_ring, offset);
}

std::vector<Complex> SamplingGrid::points() const {
    std::vector<Complex> pts;
    pts.reserve(radii.size() * angles_per_ring + extra_points.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const auto r = ring(i);
        pts.insert(pts.end(), r.begin(), r.end());
    }
    pts.insert(pts.end(), extra_points.begin(), extra_points.end());
    return pts;
}

namespace {

MembershipReport membership_impl(const PointEvaluator& u, const ClassParams& params,
                                 const SamplingGrid& grid, double tol) {
    grid.validate();
    MembershipReport rep;
    rep.grid = grid;
    rep.tolerance = tol;
    double sup = -1.0;
    PointWitness arg{};
    const auto visit = [&](Complex z, double& ring_max) {
        const Complex value = u(z);
        const double d = is_finite(value) ? std::abs(value - params.mu())
                                          : std::numeric_limits<double>::infinity();
        ring_max = std::max(ring_max, d);
        if (d > sup) {
            sup = d;
            arg = {z, value};
        }
    };
    for (std::size_t i = 0; i < grid.radii.size(); ++i) {
        double ring_max = 0.0;
        for (Complex z : grid.ring(i)) visit(z, ring_max);
        rep.ring_sup.push_back(ring_max);
    }
    double extra_max = 0.0;
    for (Complex z : grid.extra_points) visit(z, extra_max);

    rep.sup_estimate = sup;
    rep.margin = params.lambda() - sup;
    rep.witness = arg;
    if (sup >= params.lambda()) {
        rep.verdict = Verdict::refuted;
    } else if (sup < params.lambda() - tol) {
        rep.verdict = Verdict::supported;
    } else {
        rep.verdict = Verdict::inconclusive;
    }
    return rep;
}

} // namespace

MembershipReport membership(const Mapping& f, const ClassParams& params, const SamplingGrid& grid,
                            double tol) {
    return membership_impl([&](Complex z) { return f.u(z); }, params, grid, tol);
}

MembershipReport membership(const PowerSeries& f, const ClassParams& params,
                            const SamplingGrid& grid, double tol) {
    const PowerSeries u = u_operator(f, f.order());
    return membership_impl([&](Complex z) { return evaluate(u, z); }, params, grid, tol);
}

LocalUnivalenceReport local_univalence_check(const Mapping& f, const SamplingGrid& grid, double tol) {
    grid.validate();
    LocalUnivalenceReport rep;
    rep.tolerance = tol;
    rep.min_abs_derivative = std::numeric_limits<double>::infinity();
    for (Complex z : grid.points()) {
        const Jet j = f.recip(z);
        if (j.value == Complex{}) continue;  // pole of f
        const double d = std::abs((j.value - z * j.derivative) / (j.value * j.value));
        if (d < rep.min_abs_derivative) {
            rep.min_abs_derivative = d;
            rep.argmin = z;
        }
    }
    rep.verdict = rep.min_abs_derivative < tol ? Verdict::refuted : Verdict::supported;
    return rep;
}

MeromorphicMap MeromorphicMap::from_mapping(const Mapping& f) {
    return MeromorphicMap([](Complex z) { return Jet{z, 1.0}; },
                          [f](Complex z) { return f.recip(z); });
}

MeromorphicMap MeromorphicMap::analytic(JetEvaluator h) {
    return MeromorphicMap(std::move(h), [](Complex) { return Jet{1.0, 0.0}; });
}

Complex MeromorphicMap::value(Complex z) const {
    const Complex d = den_(z).value;
    if (d == Complex{}) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};
    }
    return num_(z).value / d;
}

WindingResult winding_number(std::span<const Complex> vertices, Complex w) {
    WindingResult res;
    const std::size_t n = vertices.size();
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "winding number needs a polygon");
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const Complex a = vertices[j] - w;
        const Complex b = vertices[(j + 1) % n] - w;
        if (a == Complex{} || b == Complex{}) {
            res.resolved = false;
            continue;
        }
        const double step = std::arg(b / a);
        res.max_step = std::max(res.max_step, std::abs(step));
        total += step;
    }
    res.count = static_cast<int>(std::lround(total / kTwoPi));
    res.resolved = res.resolved && res.max_step < 0.5 * std::numbers::pi;
    return res;
}

namespace {

// Newton on N - w D from the given starts; a root away from `avoid` inside
// radius `limit`, if one is found.
std::optional<Complex> other_preimage(const MeromorphicMap& f, Complex w, Complex avoid, double limit,
                                      std::span<const Complex> starts, double min_separation) {
    for (Complex z : starts) {
        for (int it = 0; it < 60; ++it) {
            const Jet n = f.numerator(z);
            const Jet d = f.denominator(z);
            const Complex h = n.value - w * d.value;
            const Complex dh = n.derivative - w * d.derivative;
            if (dh == Complex{} || !is_finite(h)) break;
            const Complex step = h / dh;
            z -= step;
            if (!(std::abs(z) < 1.0)) break;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
        }
        if (!is_finite(z) || !(std::abs(z) < limit)) continue;
        const Jet n = f.numerator(z);
        const Jet d = f.denominator(z);
        const double residual = std::abs(n.value - w * d.value);
        const double scale = std::abs(n.value) + std::abs(w * d.value) + 1e-300;
        if (residual <= 1e-11 * scale && std::abs(z - avoid) > min_separation) return z;
    }
    return std::nullopt;
}

} // namespace

UnivalenceReport univalence_grid(const MeromorphicMap& f, const SamplingGrid& grid,
                                 const UnivalenceOptions& opts) {
    grid.validate();
    UnivalenceReport rep;

    // (i) pairwise-distinct images
    const std::vector<Complex> pts = grid.points();
    std::vector<Complex> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) img[i] = f.value(pts[i]);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!is_finite(img[i])) continue;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (!is_finite(img[j])) continue;
            if (std::abs(pts[i] - pts[j]) <= opts.min_separation) continue;
            if (std::abs(img[i] - img[j]) < opts.collision_tol * (1.0 + std::abs(img[i]))) {
                rep.verdict = Verdict::refuted;
                rep.method = "collision";
                rep.witness = std::pair{PointWitness{pts[i], img[i]}, PointWitness{pts[j], img[j]}};
                return rep;
            }
        }
    }

    // (ii) one preimage inside the outer ring for each inner target
    const double outer = grid.radii.back();
    const std::vector<Complex> contour = circle(outer, opts.segments);
    std::vector<Jet> num(contour.size());
    std::vector<Jet> den(contour.size());
    for (std::size_t j = 0; j < contour.size(); ++j) {
        num[j] = f.numerator(contour[j]);
        den[j] = f.denominator(contour[j]);
    }
    std::vector<Complex> starts;
    for (std::size_t j = 0; j < pts.size(); j += 4) starts.push_back(pts[j]);

    std::vector<Complex> poly(contour.size());
    bool any_unresolved_refutation = false;
    for (std::size_t ri = 0; ri + 1 < grid.radii.size(); ++ri) {
        const auto ring = grid.ring(ri);
        for (std::size_t j = 0; j < ring.size(); j += std::max<std::size_t>(1, opts.target_stride)) {
            const Complex z_in = ring[j];
            const Complex w = f.value(z_in);
            if (!is_finite(w)) continue;
            for (std::size_t k = 0; k < contour.size(); ++k) poly[k] = num[k].value - w * den[k].value;
            const WindingResult wr = winding_number(poly, 0.0);
            ++rep.targets_tested;
            if (!wr.resolved) {
                ++rep.unresolved;
                continue;
            }
            rep.max_winding_defect = std::max(rep.max_winding_defect, std::abs(wr.count - 1));
            if (wr.count == 1) continue;
            // order starts by closeness of their images to w
            std::vector<Complex> ordered = starts;
            std::sort(ordered.begin(), ordered.end(), [&](Complex a, Complex b) {
                return std::abs(f.value(a) - w) < std::abs(f.value(b) - w);
            });
            if (ordered.size() > 48) ordered.resize(48);
            const auto other = other_preimage(f, w, z_in, outer, ordered, opts.min_separation);
            if (other) {
                rep.verdict = Verdict::refuted;
                rep.method = "winding";
                rep.witness = std::pair{PointWitness{z_in, w}, PointWitness{*other, f.value(*other)}};
                return rep;
            }
            any_unresolved_refutation = true;
        }
    }
    if (any_unresolved_refutation) rep.verdict = Verdict::inconclusive;
    return rep;
}

UnivalenceReport univalence_grid(const Mapping& f, const SamplingGrid& grid,
                                 const UnivalenceOptions& opts) {
    return univalence_grid(MeromorphicMap::from_mapping(f), grid, opts);
}

namespace {

double distance_to_segment(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

} // namespace

namespace {

constexpr std::size_t kBlock = 32;

struct CurveBlock {
    std::size_t first;
    std::size_t last;
    double xmin, xmax, ymin, ymax;
};

std::vector<CurveBlock> curve_blocks(std::span<const Complex> curve) {
    const std::size_t n = curve.size();
    std::vector<CurveBlock> out;
    for (std::size_t s = 0; s < n; s += kBlock) {
        CurveBlock b{s, std::min(s + kBlock, n), curve[s].real(), curve[s].real(), curve[s].imag(),
                     curve[s].imag()};
        for (std::size_t k = s; k <= b.last; ++k) {
            const Complex v = curve[k % n];
            b.xmin = std::min(b.xmin, v.real());
            b.xmax = std::max(b.xmax, v.real());
            b.ymin = std::min(b.ymin, v.imag());
            b.ymax = std::max(b.ymax, v.imag());
        }
        out.push_back(b);
    }
    return out;
}

// Sum of argument increments; a block whose box excludes w contributes its net increment.
int blocked_winding(std::span<const Complex> curve, std::span<const CurveBlock> blocks, Complex w, double tol,
                    bool& on_boundary) {
    const std::size_t n = curve.size();
    double total = 0.0;
    for (const CurveBlock& b : blocks) {
        const bool outside = w.real() < b.xmin - tol || w.real() > b.xmax + tol || w.imag() < b.ymin - tol ||
                             w.imag() > b.ymax + tol;
        if (outside) {
            total += std::arg((curve[b.last % n] - w) / (curve[b.first] - w));
            continue;
        }
        for (std::size_t k = b.first; k < b.last; ++k) {
            const Complex p = curve[k];
            const Complex q = curve[(k + 1) % n];
            if (distance_to_segment(w, p, q) <= tol) {
                on_boundary = true;
                return 0;
            }
            const Complex a = p - w;
            const Complex c = q - w;
            total += std::atan2(a.real() * c.imag() - a.imag() * c.real(), a.real() * c.real() + a.imag() * c.imag());
        }
    }
    return static_cast<int>(std::lround(total / kTwoPi));
}

} // namespace

SubordinationReport subordination_check(const PointEvaluator& g, const PointEvaluator& h,
                                        std::span<const double> radii,
                                        const SubordinationOptions& opts) {
    const Complex g0 = g(0.0);
    const Complex h0 = h(0.0);
    if (std::abs(g0 - h0) > opts.center_tol) {
        throw Error(ErrorCode::CenterMismatch, "subordination needs g(0) = h(0)");
    }
    SubordinationReport rep;
    rep.radii.assign(radii.begin(), radii.end());
    const std::size_t n = opts.segments;
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "radii must lie in (0, 1)");
        const auto pts = circle(r, n);
        std::vector<Complex> curve(n);
        for (std::size_t j = 0; j < n; ++j) curve[j] = h(pts[j]);
        const auto blocks = curve_blocks(curve);
        for (std::size_t j = 0; j < n; ++j) {
            const Complex w = g(pts[j]);
            const double tol = opts.boundary_tol * (1.0 + std::abs(w));
            bool on_boundary = false;
            const int count = blocked_winding(curve, blocks, w, tol, on_boundary);
            if (on_boundary) continue;
            rep.max_winding_defect = std::max(rep.max_winding_defect, std::abs(count - 1));
            if (count != 1 && !rep.witness) {
                rep.verdict = Verdict::refuted;
                rep.witness = SubordinationWitness{r, kTwoPi * static_cast<double>(j) / static_cast<double>(n), w};
            }
        }
    }
    return rep;
}

double oracle_cross_check(const Mapping& f, const PowerSeries& recip_series, double r,
                          std::size_t samples) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::RadiusTooLarge, "oracle radius must lie in (0, 1)");
    const PowerSeries dft = coeffs_by_cauchy_dft([&](Complex z) { return f.recip(z).value; }, r,
                                                 recip_series.order(), samples);
    return max_coeff_gap(recip_series, dft);
}

double oracle_cross_check(const ConstructionSpec& spec, double r, std::size_t order,
                          std::size_t samples) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::RadiusTooLarge, "oracle radius must lie in (0, 1)");
    ConstructionSpec s = spec;
    s.order = order;
    // integral term only, in quad precision; 1 + cz is exact on both sides
    const PowerSeries series_tail = sub(PowerSeries({1.0, s.c}, order), reciprocal_series(s));
    const detail::Wide lambda(static_cast<detail::Quad>(s.params.lambda()));
    const PowerSeries dft = detail::cauchy_dft_wide(
        [&](const detail::Wide& z) { return lambda * z * detail::integral_wide(s.params, s.omega, z); }, r,
        order, samples);
    return max_coeff_gap(series_tail, dft);
}

} // namespace mero
