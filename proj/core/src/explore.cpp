#include "mero/explore.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <numeric>
#include <thread>

#include "mero/error.hpp"
#include "mero/mapping.hpp"

namespace mero {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex project_disk(double x, double y, double radius) {
    Complex u{x, y};
    const double m = std::abs(u);
    if (m > radius) u *= radius / m;
    return u;
}

} // namespace

FamilyTemplate FamilyTemplate::fixed(SchwarzSpec omega) {
    FamilyTemplate t(Kind::fixed, 0);
    t.fixed_ = std::move(omega);
    return t;
}

FamilyTemplate FamilyTemplate::constant() { return FamilyTemplate(Kind::constant, 0); }

FamilyTemplate FamilyTemplate::monomial(unsigned m) { return FamilyTemplate(Kind::monomial, m); }

FamilyTemplate FamilyTemplate::blaschke(unsigned zeros) { return FamilyTemplate(Kind::blaschke, zeros); }

FamilyTemplate FamilyTemplate::mix(std::vector<FamilyTemplate> parts) {
    if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "mix family needs at least one part");
    FamilyTemplate t(Kind::mix, static_cast<unsigned>(parts.size()));
    t.parts_ = std::move(parts);
    return t;
}

std::size_t FamilyTemplate::dimension() const {
    switch (kind_) {
    case Kind::fixed: return 0;
    case Kind::constant:
    case Kind::monomial: return 2;
    case Kind::blaschke: return 2 * static_cast<std::size_t>(count_) + 1;
    case Kind::mix: {
        std::size_t d = parts_.size();
        for (const auto& p : parts_) d += p.dimension();
        return d;
    }
    }
    return 0;
}

SchwarzSpec FamilyTemplate::decode(std::span<const double> x) const {
    if (x.size() != dimension()) throw Error(ErrorCode::InvalidArgument, "parameter vector size mismatch");
    switch (kind_) {
    case Kind::fixed: return *fixed_;
    case Kind::constant: return SchwarzSpec::constant(project_disk(x[0], x[1], 1.0));
    case Kind::monomial: return SchwarzSpec::monomial(project_disk(x[0], x[1], 1.0), count_);
    case Kind::blaschke: {
        std::vector<Complex> zeros(count_);
        for (unsigned i = 0; i < count_; ++i) zeros[i] = project_disk(x[2 * i], x[2 * i + 1], kMaxZeroModulus);
        const double phi = x[2 * count_];
        return SchwarzSpec::blaschke(std::move(zeros), {std::cos(phi), std::sin(phi)});
    }
    case Kind::mix: {
        const std::size_t k = parts_.size();
        std::vector<double> w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = std::max(x[i], 0.0);
        double total = std::accumulate(w.begin(), w.end(), 0.0);
        if (!(total > 0.0)) {
            std::fill(w.begin(), w.end(), 1.0);
            total = static_cast<double>(k);
        }
        for (auto& wi : w) wi /= total;
        // absorb rounding so the weights sum to 1 exactly enough
        w.back() = std::max(0.0, 1.0 - std::accumulate(w.begin(), w.end() - 1, 0.0));
        std::vector<SchwarzSpec> specs;
        std::size_t offset = k;
        for (const auto& part : parts_) {
            const std::size_t d = part.dimension();
            specs.push_back(part.decode(x.subspan(offset, d)));
            offset += d;
        }
        return SchwarzSpec::mix(std::move(w), std::move(specs));
    }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family kind");
}

std::vector<std::pair<double, double>> FamilyTemplate::box() const {
    std::vector<std::pair<double, double>> b;
    switch (kind_) {
    case Kind::fixed: break;
    case Kind::constant:
    case Kind::monomial: b = {{-1.0, 1.0}, {-1.0, 1.0}}; break;
    case Kind::blaschke:
        for (unsigned i = 0; i < 2 * count_; ++i) b.emplace_back(-0.9, 0.9);
        b.emplace_back(0.0, kTwoPi);
        break;
    case Kind::mix:
        for (std::size_t i = 0; i < parts_.size(); ++i) b.emplace_back(0.0, 1.0);
        for (const auto& part : parts_) {
            const auto pb = part.box();
            b.insert(b.end(), pb.begin(), pb.end());
        }
        break;
    }
    return b;
}

void OptimizeConfig::validate() const {
    if (starts < 1) throw Error(ErrorCode::InvalidArgument, "optimizer needs at least one start");
    if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "optimizer tolerance must be positive");
    if (max_iters < 1) throw Error(ErrorCode::InvalidArgument, "optimizer needs max_iters >= 1");
}

double problem2_objective(const ClassParams& params, double p, const SchwarzSpec& omega, Complex z) {
    if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::ParameterOutOfRange, "p must lie in (0, 1]");
    if (!is_finite(z) || std::abs(std::abs(z) - p) > 1e-9 * p) {
        throw Error(ErrorCode::InvalidArgument, "objective is evaluated on |z| = p");
    }
    const Complex integral = representation_integral(params, omega, z);
    return std::abs(1.0 - params.lambda() * z * integral);
}

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, std::span<const double> step,
                             unsigned max_iters, double tolerance) {
    const std::size_t n = x0.size();
    NelderMeadResult res;
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step[i];
    std::vector<double> values(n + 1);
    const auto eval = [&](const std::vector<double>& x) {
        ++res.evaluations;
        const double v = f(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };
    for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

    std::vector<std::size_t> idx(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    for (unsigned iter = 0; iter < max_iters; ++iter) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = idx.front();
        const std::size_t worst = idx.back();
        const std::size_t second = idx[n - 1];

        double diameter = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t d = 0; d < n; ++d) diameter = std::max(diameter, std::abs(simplex[i][d] - simplex[best][d]));
        }
        if (values[worst] - values[best] <= tolerance * (1.0 + std::abs(values[best])) && diameter <= 1e-9) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d] / static_cast<double>(n);
        }
        for (std::size_t d = 0; d < n; ++d) trial[d] = centroid[d] + (centroid[d] - simplex[worst][d]);
        const double fr = eval(trial);
        if (fr < values[best]) {
            for (std::size_t d = 0; d < n; ++d) trial2[d] = centroid[d] + 2.0 * (centroid[d] - simplex[worst][d]);
            const double fe = eval(trial2);
            if (fe < fr) {
                simplex[worst] = trial2;
                values[worst] = fe;
            } else {
                simplex[worst] = trial;
                values[worst] = fr;
            }
            continue;
        }
        if (fr < values[second]) {
            simplex[worst] = trial;
            values[worst] = fr;
            continue;
        }
        const bool outside = fr < values[worst];
        for (std::size_t d = 0; d < n; ++d) {
            trial2[d] = outside ? centroid[d] + 0.5 * (trial[d] - centroid[d])
                                : centroid[d] + 0.5 * (simplex[worst][d] - centroid[d]);
        }
        const double fc = eval(trial2);
        if (fc < std::min(fr, values[worst])) {
            simplex[worst] = trial2;
            values[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t d = 0; d < n; ++d) simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
            values[i] = eval(simplex[i]);
        }
    }
    const auto it = std::min_element(values.begin(), values.end());
    res.value = *it;
    res.x = simplex[static_cast<std::size_t>(it - values.begin())];
    return res;
}

namespace {

double radical_inverse(std::uint64_t i, unsigned base) {
    double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

unsigned nth_prime(std::size_t n) {
    static const unsigned primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                      53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
    if (n >= std::size(primes)) throw Error(ErrorCode::InvalidArgument, "family has too many parameters");
    return primes[n];
}

struct StartResult {
    double value = -1.0;
    std::vector<double> x;
    std::size_t evaluations = 0;
};

} // namespace

MaxReport problem2_maximize(const ClassParams& params, double p, const OptimizeConfig& config) {
    config.validate();
    if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::ParameterOutOfRange, "p must lie in (0, 1]");
    const FamilyTemplate& family = config.family;
    const std::size_t fam_dim = family.dimension();
    const std::size_t dim = 1 + fam_dim;

    const auto objective = [&](std::span<const double> x) {
        const Complex z = std::polar(p, x[0]);
        return problem2_objective(params, p, family.decode(x.subspan(1)), z);
    };

    std::vector<std::pair<double, double>> box{{0.0, kTwoPi}};
    const auto fb = family.box();
    box.insert(box.end(), fb.begin(), fb.end());

    Rng rng(config.seed);
    std::vector<double> shift(dim);
    for (auto& s : shift) s = rng.uniform();

    std::vector<double> step(dim);
    for (std::size_t d = 0; d < dim; ++d) step[d] = 0.1 * (box[d].second - box[d].first);

    std::vector<StartResult> results(config.starts);
    parallel_for(config.starts, config.jobs, [&](std::size_t s) {
        StartResult& out = results[s];
        std::vector<double> x0(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            double u = radical_inverse(s + 1, nth_prime(d)) + shift[d];
            u -= std::floor(u);
            x0[d] = box[d].first + u * (box[d].second - box[d].first);
        }
        if (fam_dim == 0) {
            // one free angle: dense scan, then a 1-d simplex polish
            const std::size_t scan = 1024;
            double best = -1.0;
            for (std::size_t j = 0; j < scan; ++j) {
                std::vector<double> x{x0[0] + kTwoPi * static_cast<double>(j) / scan};
                const double v = objective(x);
                ++out.evaluations;
                if (v > best) {
                    best = v;
                    x0 = x;
                }
            }
        }
        const auto neg = [&](std::span<const double> x) { return -objective(x); };
        std::vector<double> cur = x0;
        std::vector<double> cur_step = step;
        double cur_val = -objective(cur);
        for (int round = 0; round < 4; ++round) {
            NelderMeadResult nm = nelder_mead(neg, cur, cur_step, config.max_iters, config.tolerance);
            out.evaluations += nm.evaluations;
            const bool improved = nm.value < cur_val - config.tolerance * (1.0 + std::abs(cur_val));
            if (nm.value <= cur_val) {
                cur = nm.x;
                cur_val = nm.value;
            }
            if (!improved && round > 0) break;
            for (auto& st : cur_step) st *= 0.1;
        }
        out.value = -cur_val;
        out.x = cur;
    });

    MaxReport rep;
    rep.p = p;
    std::size_t best = 0;
    for (std::size_t s = 0; s < results.size(); ++s) {
        rep.history.push_back(results[s].value);
        rep.evaluations += results[s].evaluations;
        if (results[s].value > results[best].value) best = s;
    }
    const auto& bx = results[best].x;
    rep.best_value = results[best].value;
    rep.argmax_z = std::polar(p, bx[0]);
    rep.argmax_omega = family.decode(std::span<const double>(bx).subspan(1));
    return rep;
}

SchwarzSpec SpecSampler::sample_omega(Rng& rng) const {
    const auto disk = [&](double radius) {
        const double r = radius * std::sqrt(rng.uniform());
        const double t = kTwoPi * rng.uniform();
        return std::polar(r, t);
    };
    const auto simple = [&](std::uint64_t kind) -> SchwarzSpec {
        switch (kind) {
        case 0: return SchwarzSpec::constant(disk(1.0));
        case 1: return SchwarzSpec::monomial(disk(1.0), static_cast<unsigned>(rng.below(max_power + 1)));
        default: {
            const auto n = static_cast<std::size_t>(1 + rng.below(std::max(1u, max_zeros)));
            std::vector<Complex> zeros(n);
            for (auto& z : zeros) z = disk(zero_radius);
            return SchwarzSpec::blaschke(std::move(zeros), std::polar(1.0, kTwoPi * rng.uniform()));
        }
        }
    };
    const std::uint64_t kind = rng.below(4);
    if (kind < 3) return simple(kind);
    const auto parts = static_cast<std::size_t>(2 + rng.below(2));
    std::vector<double> w(parts);
    std::vector<SchwarzSpec> specs;
    for (auto& wi : w) wi = rng.uniform() + 1e-3;
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& wi : w) wi /= total;
    w.back() = 1.0 - std::accumulate(w.begin(), w.end() - 1, 0.0);
    for (std::size_t i = 0; i < parts; ++i) specs.push_back(simple(rng.below(3)));
    return SchwarzSpec::mix(std::move(w), std::move(specs));
}

ConstructionSpec SpecSampler::sample(const ClassParams& params, Rng& rng) const {
    SchwarzSpec omega = sample_omega(rng);
    const Complex c = std::polar(c_radius * std::sqrt(rng.uniform()), kTwoPi * rng.uniform());
    return ConstructionSpec{params, c, std::move(omega), order};
}

ClassParams SpecSampler::sample_params(Rng& rng, double lambda_lo, double a_radius) const {
    const double lambda = rng.uniform(lambda_lo, 1.0);
    const Complex a = std::polar(a_radius * std::sqrt(rng.uniform()), kTwoPi * rng.uniform());
    return ClassParams::make(lambda, 1.0 - lambda * a);
}

bool SweepOptions::wants(SweepQuantity q) const {
    return std::find(quantities.begin(), quantities.end(), q) != quantities.end();
}

namespace {

SweepRow sweep_row(double lambda, Complex mu, std::size_t index, const SweepOptions& opt) {
    SweepRow row;
    row.lambda = lambda;
    row.mu = mu;
    try {
        const ClassParams params = ClassParams::make(lambda, mu);
        if (opt.wants(SweepQuantity::classify)) row.verdict = classify(params);
        if (opt.wants(SweepQuantity::bounds)) {
            row.bk2_bound = bk_bound(2, params);
            row.l2_bound = mero::l2_bound(params);
        }
        if (opt.wants(SweepQuantity::a2)) {
            try {
                row.a2_bound = mero::a2_bound(params, opt.p);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ParameterOutOfRange) throw;
            }
        }
        if (opt.wants(SweepQuantity::problem2)) {
            OptimizeConfig cfg = opt.optimize;
            cfg.seed = derive_seed(opt.seed, 2 * index);
            cfg.jobs = 1;
            row.problem2_lower = problem2_maximize(params, opt.p, cfg).best_value;
        }
        if (opt.wants(SweepQuantity::univalence_scan) && opt.mc_specs > 0) {
            Rng rng(derive_seed(opt.seed, 2 * index + 1));
            const bool has_witness = std::abs(params.mu()) < params.lambda() - kBoundaryTol;
            for (std::size_t s = 0; s < opt.mc_specs; ++s) {
                ConstructionSpec spec = s == 0
                    ? ConstructionSpec{params, 0.0, SchwarzSpec::constant(1.0), opt.sampler.order}
                    : opt.sampler.sample(params, rng);
                SamplingGrid grid = opt.grid;
                if (s == 0 && has_witness) grid.extra_points.push_back(critical_point_witness(params).z1);
                const Mapping f = construction_map(spec);
                ++row.mc_specs;
                const auto local = local_univalence_check(f, grid);
                if (local.verdict == Verdict::refuted) {
                    ++row.local_refutations;
                    if (!row.local_witness) row.local_witness = PointWitness{local.argmin, f.derivative(local.argmin)};
                }
                const auto uni = univalence_grid(f, grid, opt.univalence);
                if (uni.verdict == Verdict::refuted) ++row.univalence_refutations;
                if (uni.verdict == Verdict::inconclusive) ++row.inconclusive;
            }
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

} // namespace

std::vector<SweepRow> sweep(std::span<const std::pair<double, Complex>> param_grid,
                            const SweepOptions& options) {
    std::vector<SweepRow> rows(param_grid.size());
    parallel_for(param_grid.size(), options.jobs, [&](std::size_t i) {
        rows[i] = sweep_row(param_grid[i].first, param_grid[i].second, i, options);
    });
    return rows;
}

namespace {

// z/f_0 at p = 1 in closed form:
//   1 - A_2 z + lambda (1 - a^2) z atanh(sqrt(a) z) / sqrt(a).
Jet majorant_jet(const ClassParams& params, double a, double a2, Complex z) {
    const double s = std::sqrt(a);
    const double k = params.lambda() * (1.0 - a * a) / s;
    const Complex at = std::atanh(s * z);
    return Jet{1.0 - a2 * z + k * z * at, -a2 + k * (at + s * z / (1.0 - a * z * z))};
}

SubordinationRow subordination_row(double lambda, Complex mu, std::size_t index,
                                   const SubordinationScanOptions& opt) {
    SubordinationRow row;
    row.lambda = lambda;
    row.mu = mu;
    try {
        const ClassParams params = ClassParams::make(lambda, mu);
        double a = 0.0;
        try {
            a = require_real_a(params);
        } catch (const Error&) {
            throw Error(ErrorCode::ParameterOutOfRange, "subordination scan needs real a in (0, 1)");
        }
        if (a == 0.0) {
            throw Error(ErrorCode::ParameterOutOfRange,
                        "a = 0 (mu = 1) is the already solved case; the scan needs a in (0, 1)");
        }
        const double a2 = a2_bound(params, 1.0);
        const auto h_jet = [params, a, a2](Complex z) { return majorant_jet(params, a, a2, z); };
        const PointEvaluator h = [h_jet](Complex z) { return h_jet(z).value; };

        SamplingGrid hgrid{opt.radii, opt.majorant_angles, 0, false, {}};
        const auto inj = univalence_grid(MeromorphicMap::analytic(h_jet), hgrid);
        row.majorant_injective = inj.verdict == Verdict::supported;

        const double outer = opt.radii.empty() ? 0.0 : opt.radii.back();
        Rng rng(derive_seed(opt.seed, index));
        for (std::size_t s = 0; s < opt.samples; ++s) {
            SubordinationSample sample;
            PointEvaluator g;
            if (s == 0) {
                sample.source = "f0";
                g = h;
            } else {
                sample.source = "random";
                sample.spec = opt.sampler.sample(params, rng);
                const Mapping f = construction_map(*sample.spec);
                // f must be analytic: no zeros of z/f inside the outer circle
                std::vector<Complex> curve(2048);
                for (std::size_t j = 0; j < curve.size(); ++j) {
                    curve[j] = f.recip(std::polar(outer, kTwoPi * static_cast<double>(j) / curve.size())).value;
                }
                if (winding_number(curve, 0.0).count != 0) {
                    ++row.skipped_non_analytic;
                    continue;
                }
                g = [f](Complex z) { return f.recip(z).value; };
            }
            if (!row.majorant_injective) {
                sample.report.verdict = Verdict::inconclusive;
                sample.report.radii = opt.radii;
            } else {
                sample.report = subordination_check(g, h, opt.radii, opt.check);
            }
            switch (sample.report.verdict) {
            case Verdict::supported: ++row.supported; break;
            case Verdict::refuted: ++row.refuted; break;
            case Verdict::inconclusive: ++row.inconclusive; break;
            }
            row.samples.push_back(std::move(sample));
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

} // namespace

std::vector<SubordinationRow> subordination_scan(std::span<const std::pair<double, Complex>> param_grid,
                                                 const SubordinationScanOptions& options) {
    std::vector<SubordinationRow> rows(param_grid.size());
    parallel_for(param_grid.size(), options.jobs, [&](std::size_t i) {
        rows[i] = subordination_row(param_grid[i].first, param_grid[i].second, i, options);
    });
    return rows;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
    std::vector<std::exception_ptr> errors(count);
    const auto run = [&](std::size_t t) {
        for (std::size_t i = t; i < count; i += workers) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace mero
