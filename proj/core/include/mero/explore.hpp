#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mero/random.hpp"
#include "mero/schwarz.hpp"
#include "mero/uclass.hpp"
#include "mero/verify.hpp"

namespace mero {

/// A finite-parameter slice of the unit ball. Parameters outside the
/// admissible ranges are projected back (disk coordinates onto the closed
/// disk, Blaschke zeros into |z| <= kMaxZeroModulus, mix weights onto the
/// simplex), so every parameter vector decodes to a valid SchwarzSpec.
class FamilyTemplate {
public:
    enum class Kind { fixed, constant, monomial, blaschke, mix };

    static FamilyTemplate fixed(SchwarzSpec omega);
    static FamilyTemplate constant();
    static FamilyTemplate monomial(unsigned m);
    static FamilyTemplate blaschke(unsigned zeros);
    static FamilyTemplate mix(std::vector<FamilyTemplate> parts);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] unsigned power() const noexcept { return count_; }
    [[nodiscard]] unsigned zeros() const noexcept { return count_; }
    [[nodiscard]] const std::vector<FamilyTemplate>& parts() const noexcept { return parts_; }
    [[nodiscard]] const std::optional<SchwarzSpec>& fixed_omega() const noexcept { return fixed_; }

    [[nodiscard]] std::size_t dimension() const;
    [[nodiscard]] SchwarzSpec decode(std::span<const double> x) const;
    /// Sampling box for initial points, one (lo, hi) pair per parameter.
    [[nodiscard]] std::vector<std::pair<double, double>> box() const;

private:
    FamilyTemplate(Kind kind, unsigned count) : kind_(kind), count_(count) {}
    Kind kind_;
    unsigned count_ = 0;
    std::vector<FamilyTemplate> parts_;
    std::optional<SchwarzSpec> fixed_;
};

inline constexpr double kMaxZeroModulus = 0.999;

struct OptimizeConfig {
    FamilyTemplate family = FamilyTemplate::constant();
    unsigned starts = 16;
    unsigned max_iters = 4000;
    double tolerance = 1e-12;
    std::uint64_t seed = 0;
    unsigned jobs = 1;

    void validate() const;
};

/// Best value found by a local search; a lower bound on the true maximum
/// over the whole unit ball.
struct MaxReport {
    double best_value = 0.0;
    SchwarzSpec argmax_omega = SchwarzSpec::constant(0.0);
    Complex argmax_z;
    double p = 0.0;
    std::vector<double> history;   ///< best value per start, in start order
    std::size_t evaluations = 0;

    /// best_value / p, the implied lower bound on the sharp |a_2| estimate.
    [[nodiscard]] double a2_candidate() const noexcept { return best_value / p; }
};

/// |1 - lambda z int_0^z (1-|a|^2) omega / (1 + conj(a) t^2 omega) dt| for |z| = p.
[[nodiscard]] double problem2_objective(const ClassParams& params, double p, const SchwarzSpec& omega,
                                        Complex z);

/// Multistart Nelder-Mead maximization of problem2_objective over the angle
/// of z and the family parameters. Starts come from a Halton sequence with a
/// seeded rotation; the result is a function of (params, p, config) only.
[[nodiscard]] MaxReport problem2_maximize(const ClassParams& params, double p,
                                          const OptimizeConfig& config);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evaluations = 0;
};

/// Minimizes f from x0 with initial simplex edge lengths `step`.
[[nodiscard]] NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                                           std::vector<double> x0, std::span<const double> step,
                                           unsigned max_iters, double tolerance);

/// Random representation data for a class: family kind uniform over the four
/// families, parameters uniform in their ranges, c uniform in |c| <= c_radius.
struct SpecSampler {
    double c_radius = 3.0;
    double zero_radius = 0.95;
    unsigned max_zeros = 3;
    unsigned max_power = 6;
    std::size_t order = 64;

    [[nodiscard]] SchwarzSpec sample_omega(Rng& rng) const;
    [[nodiscard]] ConstructionSpec sample(const ClassParams& params, Rng& rng) const;
    /// Random class with lambda in [lambda_lo, 1] and |a| <= a_radius.
    [[nodiscard]] ClassParams sample_params(Rng& rng, double lambda_lo = 0.1, double a_radius = 0.9) const;
};

enum class SweepQuantity { classify, bounds, a2, problem2, univalence_scan };

struct SweepOptions {
    std::vector<SweepQuantity> quantities{SweepQuantity::classify, SweepQuantity::bounds,
                                          SweepQuantity::a2, SweepQuantity::problem2,
                                          SweepQuantity::univalence_scan};
    double p = 1.0;
    OptimizeConfig optimize{FamilyTemplate::constant(), 4, 1500, 1e-12, 0, 1};
    std::size_t mc_specs = 8;
    SpecSampler sampler;
    SamplingGrid grid{{0.5, 0.9, 0.99}, 128, 0, true, {}};
    UnivalenceOptions univalence{2048, 16, 1e-9, 1e-6};
    std::uint64_t seed = 0;
    unsigned jobs = 1;

    [[nodiscard]] bool wants(SweepQuantity q) const;
};

struct SweepRow {
    double lambda = 0.0;
    Complex mu;
    std::optional<RegionVerdict> verdict;
    std::optional<double> bk2_bound;
    std::optional<double> l2_bound;
    std::optional<double> a2_bound;
    std::optional<double> problem2_lower;
    std::size_t mc_specs = 0;
    std::size_t univalence_refutations = 0;
    std::size_t local_refutations = 0;
    std::size_t inconclusive = 0;
    std::optional<PointWitness> local_witness;
    std::string error;
};

/// One row per (lambda, mu). Invalid pairs and failures are recorded in the
/// row's error field; the sweep always completes. The Monte-Carlo scan
/// always includes the omega = 1, c = 0 member first.
[[nodiscard]] std::vector<SweepRow> sweep(std::span<const std::pair<double, Complex>> param_grid,
                                          const SweepOptions& options);

struct SubordinationSample {
    std::string source;   ///< "f0" or "random"
    std::optional<ConstructionSpec> spec;
    SubordinationReport report;
};

struct SubordinationRow {
    double lambda = 0.0;
    Complex mu;
    bool majorant_injective = false;
    std::size_t supported = 0;
    std::size_t refuted = 0;
    std::size_t inconclusive = 0;
    std::size_t skipped_non_analytic = 0;
    std::vector<SubordinationSample> samples;
    std::string error;
};

struct SubordinationScanOptions {
    std::vector<double> radii{0.5, 0.9, 0.99};
    std::size_t samples = 8;
    SpecSampler sampler;
    SubordinationOptions check;
    std::size_t majorant_angles = 256;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

/// Numerical evidence on z/f subordinate to z/f_0 (p = 1) for sampled members
/// analytic in the disk. Rows need real a in (0, 1); a = 0 is rejected.
[[nodiscard]] std::vector<SubordinationRow> subordination_scan(
    std::span<const std::pair<double, Complex>> param_grid, const SubordinationScanOptions& options);

/// Deterministic parallel loop: body(i) for i in [0, count) on up to `jobs`
/// threads. Exceptions are rethrown on the caller for the lowest index.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

} // namespace mero
