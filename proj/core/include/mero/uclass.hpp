#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mero/schwarz.hpp"
#include "mero/series.hpp"

namespace mero {

/// Tolerance for the normalization f(0) = 0, f'(0) = 1.
inline constexpr double kNormalizationTol = 1e-12;
/// Ties on the region boundaries |1 - mu| = 1 - lambda and |mu| = lambda are
/// resolved within this slack, to the side the inequalities include.
inline constexpr double kBoundaryTol = 1e-12;

/// The pair (lambda, mu) of a class |U_f - mu| < lambda together with
/// a = (1 - mu) / lambda. Construction enforces lambda > 0 and
/// |1 - mu| < lambda, i.e. |a| < 1.
class ClassParams {
public:
    static ClassParams make(double lambda, Complex mu);

    [[nodiscard]] double lambda() const noexcept { return lambda_; }
    [[nodiscard]] Complex mu() const noexcept { return mu_; }
    [[nodiscard]] Complex a() const noexcept { return a_; }
    /// 1 - |a|^2, the factor shared by every sharp bound.
    [[nodiscard]] double a_defect() const noexcept { return 1.0 - std::norm(a_); }

    friend bool operator==(const ClassParams&, const ClassParams&) = default;

private:
    ClassParams(double lambda, Complex mu, Complex a) : lambda_(lambda), mu_(mu), a_(a) {}
    double lambda_;
    Complex mu_;
    Complex a_;
};

/// Data of the representation
///   z/f(z) = 1 + c z - lambda z int_0^z (1-|a|^2) omega(t) / (1 + conj(a) t^2 omega(t)) dt.
struct ConstructionSpec {
    ClassParams params;
    Complex c;
    SchwarzSpec omega;
    std::size_t order = kDefaultOrder;

    /// Throws InvalidArgument when order < 4 or c is not finite.
    void validate() const;

    friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

/// The representation integrand (1-|a|^2) omega(t) / (1 + conj(a) t^2 omega(t)).
[[nodiscard]] Complex representation_integrand(const ClassParams& params, const SchwarzSpec& omega,
                                               Complex t) noexcept;

/// Series of z/f for a normalized f (f_0 = 0, f_1 = 1); degree f.order()-1.
[[nodiscard]] PowerSeries reciprocal_form(const PowerSeries& f);

/// U = g - z g' from the series g = z/f.
[[nodiscard]] PowerSeries u_from_reciprocal(const PowerSeries& g);

/// U_f = (z/f)^2 f' = z/f - z (z/f)', computed through z/f. The result is
/// truncated at min(order, f.order() - 1). BadNormalization unless f(0) = 0
/// and f'(0) = 1.
[[nodiscard]] PowerSeries u_operator(const PowerSeries& f, std::size_t order);

/// Omega = (U_f - mu) / lambda.
[[nodiscard]] PowerSeries induced_omega_of(const PowerSeries& f, const ClassParams& params,
                                           std::size_t order);

/// Omega from the series g = z/f, without passing through f. Stays
/// accurate when f has poles in the disk. BadNormalization unless g(0) = 1.
[[nodiscard]] PowerSeries induced_omega_of_reciprocal(const PowerSeries& g, const ClassParams& params,
                                                      std::size_t order);
/// Series of z/f for the representation data; degree spec.order.
[[nodiscard]] PowerSeries reciprocal_series(const ConstructionSpec& spec);

/// Series of f for the representation data; degree spec.order, a_2 = -c.
[[nodiscard]] PowerSeries construct(const ConstructionSpec& spec);

/// Representation data of f_k: omega = -z^{k-2}. Requires k >= 2.
[[nodiscard]] ConstructionSpec extremal_fk_spec(unsigned k, const ClassParams& params, Complex c,
                                                std::size_t order);
[[nodiscard]] PowerSeries extremal_fk(unsigned k, const ClassParams& params, Complex c,
                                      std::size_t order);

/// Real a in [0, 1), or ParameterOutOfRange.
[[nodiscard]] double require_real_a(const ClassParams& params);

/// Representation data of f_0: omega = -1, c = -A_2(p). The denominator
/// z/f_0 vanishes at z = p. Requires real a in [0, 1) and p in (0, 1].
[[nodiscard]] ConstructionSpec extremal_f0_spec(const ClassParams& params, double p,
                                                std::size_t order);
[[nodiscard]] PowerSeries extremal_f0(const ClassParams& params, double p, std::size_t order);

/// b_1..b_K of z/f = 1 + sum b_k z^k (index 0 of the result is b_1).
[[nodiscard]] std::vector<Complex> b_coefficients(const PowerSeries& f, std::size_t count);

/// lambda (1 - |a|^2) / (k - 1), the sharp bound on |b_k|.
[[nodiscard]] double bk_bound(unsigned k, const ClassParams& params);

/// lambda^2 (1 - |a|^2), the sharp bound on sum_{k>=2} |b_k|^2 (k-1)^2.
[[nodiscard]] double l2_bound(const ClassParams& params) noexcept;

/// sum_{k=2}^{K} |b_k|^2 (k-1)^2 from the series of f.
[[nodiscard]] double l2_weighted_sum(const PowerSeries& f, std::size_t count);

/// A_2 = 1/p + lambda int_0^p (1-a^2)/(1 - a t^2) dt in closed form.
/// Requires real a in [0, 1), p in (0, 1].
[[nodiscard]] double a2_bound(const ClassParams& params, double p);

struct RegionVerdict {
    bool locally_univalent_all = false;
    bool univalence_guaranteed = false;
    bool contains_non_locally_univalent = false;
    bool open_region = false;

    /// The single label that applies: "univalence_guaranteed",
    /// "contains_non_locally_univalent" or "open_region".
    [[nodiscard]] std::string label() const;

    friend bool operator==(const RegionVerdict&, const RegionVerdict&) = default;
};

/// Region of (lambda, mu): local univalence of every member iff |mu| >= lambda;
/// univalence guaranteed when lambda <= 1/2 or |1 - mu| <= 1 - lambda.
/// InvalidClassParams unless lambda is in (0, 1].
[[nodiscard]] RegionVerdict classify(const ClassParams& params);

/// (1 - |a|^2)(lambda^2 - |mu|^2), which equals |lambda(1-|a|^2) + conj(a)|^2 - 1.
/// Positive exactly when the omega = 1 member has a critical point in the disk.
[[nodiscard]] double witness_discriminant(const ClassParams& params) noexcept;

struct CriticalPointWitness {
    Complex z1;           ///< z1^2 = -1 / (lambda(1-|a|^2) + conj(a)), |z1| < 1
    double residual = 0;  ///< |f'(z1)| by quadrature, omega = 1 and c = 0
    double modulus = 0;   ///< |lambda(1-|a|^2) + conj(a)|
};

/// Critical point of the omega = 1 member when |mu| < lambda; NoWitness
/// otherwise.
[[nodiscard]] CriticalPointWitness critical_point_witness(const ClassParams& params);

/// 1 - |lambda z1 z2 / (z1 - z2) int_{z2}^{z1} integrand dt|. Positive values
/// certify f(z1) != f(z2). CoincidentPoints when z1 == z2; OutsideDisk or
/// InvalidArgument for points off the punctured disk.
[[nodiscard]] double difference_quotient_margin(const ConstructionSpec& spec, Complex z1,
                                                Complex z2);

enum class BoundKind { bk, l2, a2 };

[[nodiscard]] std::string_view to_string(BoundKind kind) noexcept;

struct BoundReport {
    BoundKind kind = BoundKind::bk;
    unsigned k = 0;        ///< coefficient index for bk, truncation K for l2
    double p = 0.0;        ///< analyticity radius for a2
    double bound_value = 0.0;
    double achieved_value = 0.0;
    double gap = 0.0;      ///< bound_value - achieved_value
};

struct BoundRequest {
    std::vector<unsigned> ks{2, 3, 4, 5, 6};
    std::size_t l2_terms = 200;
    double p = 1.0;
    std::size_t order = kDefaultOrder;
};

/// Sharp bounds paired with the values reached by the extremal functions
/// (f_k with c = 0 for bk, f_2 for l2, f_0 for a2). The a2 row is omitted
/// when a is not real in [0, 1).
[[nodiscard]] std::vector<BoundReport> bound_reports(const ClassParams& params,
                                                     const BoundRequest& request);

} // namespace mero
