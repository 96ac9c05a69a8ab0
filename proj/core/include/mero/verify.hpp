#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mero/mapping.hpp"
#include "mero/series.hpp"
#include "mero/uclass.hpp"

namespace mero {

/// Concentric rings of sample points, each ring rotated by a seeded jitter
/// so that symmetric functions do not hide between samples.
struct SamplingGrid {
    std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
    std::size_t angles_per_ring = 512;
    std::uint64_t seed = 0;
    bool jitter = true;
    /// Additional points checked alongside the rings (e.g. a known critical point).
    std::vector<Complex> extra_points;

    /// InvalidArgument unless radii are strictly increasing in (0, 1) and
    /// angles_per_ring >= 64.
    void validate() const;
    [[nodiscard]] std::vector<Complex> ring(std::size_t index) const;
    /// All ring points followed by the extra points.
    [[nodiscard]] std::vector<Complex> points() const;
};

/// Grid methods refute with a witness or support; they never prove.
enum class Verdict { supported, refuted, inconclusive };

[[nodiscard]] std::string_view to_string(Verdict v) noexcept;

struct PointWitness {
    Complex z;
    Complex value;
};

struct MembershipReport {
    double sup_estimate = 0.0;       ///< max over the grid of |U_f - mu|
    double margin = 0.0;             ///< lambda - sup_estimate
    Verdict verdict = Verdict::inconclusive;
    std::optional<PointWitness> witness;  ///< argmax point and U_f there
    std::vector<double> ring_sup;    ///< per-ring maxima, innermost first
    double tolerance = 0.0;
    SamplingGrid grid;
};

/// sup |U_f - mu| over the grid. Supported when sup < lambda - tol, refuted
/// (with the offending point) when sup >= lambda.
[[nodiscard]] MembershipReport membership(const Mapping& f, const ClassParams& params,
                                          const SamplingGrid& grid, double tol = 1e-9);
/// Same test with U_f from the truncated series of f.
[[nodiscard]] MembershipReport membership(const PowerSeries& f, const ClassParams& params,
                                          const SamplingGrid& grid, double tol = 1e-9);

struct LocalUnivalenceReport {
    double min_abs_derivative = 0.0;
    Complex argmin;
    Verdict verdict = Verdict::supported;
    double tolerance = 0.0;
};

/// min |f'| over the grid; refuted at the argmin when it falls below tol.
[[nodiscard]] LocalUnivalenceReport local_univalence_check(const Mapping& f,
                                                           const SamplingGrid& grid,
                                                           double tol = 1e-8);

/// F = N / D with both parts analytic on the closed sampling disk. Preimages
/// of w inside a circle are the zeros of N - w D, counted by winding.
class MeromorphicMap {
public:
    using JetEvaluator = std::function<Jet(Complex)>;

    MeromorphicMap(JetEvaluator numerator, JetEvaluator denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {}

    /// f = z / g for a normalized mapping.
    static MeromorphicMap from_mapping(const Mapping& f);
    /// An analytic function h with derivative.
    static MeromorphicMap analytic(JetEvaluator h);

    [[nodiscard]] Jet numerator(Complex z) const { return num_(z); }
    [[nodiscard]] Jet denominator(Complex z) const { return den_(z); }
    [[nodiscard]] Complex value(Complex z) const;

private:
    JetEvaluator num_;
    JetEvaluator den_;
};

struct WindingResult {
    int count = 0;
    double max_step = 0.0;  ///< largest argument increment along the polygon
    bool resolved = true;   ///< every increment below pi/2
};

/// Winding number of the closed polygon through the given vertices about w.
[[nodiscard]] WindingResult winding_number(std::span<const Complex> vertices, Complex w);

struct UnivalenceOptions {
    std::size_t segments = 2048;
    std::size_t target_stride = 8;   ///< every n-th inner-ring point becomes a target
    double collision_tol = 1e-9;
    double min_separation = 1e-6;
};

struct UnivalenceReport {
    Verdict verdict = Verdict::supported;  ///< supported = consistent with univalence
    std::optional<std::pair<PointWitness, PointWitness>> witness;
    std::string method;                    ///< "collision" or "winding" when refuted
    std::size_t targets_tested = 0;
    std::size_t unresolved = 0;
    int max_winding_defect = 0;
};

/// Necessary-condition univalence test: pairwise-distinct images on the grid
/// and, for targets taken from inner rings, exactly one preimage inside the
/// outermost ring. Refutations carry two distinct points with equal images.
[[nodiscard]] UnivalenceReport univalence_grid(const MeromorphicMap& f, const SamplingGrid& grid,
                                               const UnivalenceOptions& opts = {});
[[nodiscard]] UnivalenceReport univalence_grid(const Mapping& f, const SamplingGrid& grid,
                                               const UnivalenceOptions& opts = {});

struct SubordinationWitness {
    double r = 0.0;
    double theta = 0.0;
    Complex value;
};

struct SubordinationReport {
    Verdict verdict = Verdict::supported;
    std::optional<SubordinationWitness> witness;
    int max_winding_defect = 0;
    std::vector<double> radii;
};

struct SubordinationOptions {
    std::size_t segments = 2048;
    double center_tol = 1e-9;
    double boundary_tol = 1e-9;
};

/// Tests g(D_r) inside h(D_r) on each circle |z| = r for a majorant h that is
/// injective there: every g(r e^{i theta}) must lie on or inside the image
/// curve of h. CenterMismatch when g(0) != h(0).
[[nodiscard]] SubordinationReport subordination_check(const PointEvaluator& g,
                                                      const PointEvaluator& h,
                                                      std::span<const double> radii,
                                                      const SubordinationOptions& opts = {});

/// Default sample count when the oracle samples a double-precision mapping.
inline constexpr std::size_t kCrossCheckSamples = 1u << 15;

/// Max |series coefficient - DFT coefficient| for z/f of the representation
/// data. The DFT samples the quad-precision quadrature value of
/// lambda z int_0^z on |z| = r; the polynomial part 1 + cz enters both sides
/// exactly. samples = 0 selects 4(N+1). RadiusTooLarge unless 0 < r < 1.
[[nodiscard]] double oracle_cross_check(const ConstructionSpec& spec, double r, std::size_t order,
                                        std::size_t samples = 0);
/// Same comparison for any mapping against a given series of z/f, sampling
/// g = z/f in double precision. Rounding of g is amplified by r^{-k}, so the
/// sample count must grow with r^{-2N}.
[[nodiscard]] double oracle_cross_check(const Mapping& f, const PowerSeries& recip_series, double r,
                                        std::size_t samples = kCrossCheckSamples);

} // namespace mero
