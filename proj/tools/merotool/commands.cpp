#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mero/error.hpp"
#include "mero/io.hpp"

namespace merotool {

namespace {

using mero::ClassParams;
using mero::PowerSeries;
namespace io = mero::io;

const std::vector<std::string_view> kSubjectKeys{"lambda", "mu", "c", "omega", "extremal", "catalog"};

std::vector<std::string_view> with(std::vector<std::string_view> base, std::initializer_list<std::string_view> more) {
    base.insert(base.end(), more.begin(), more.end());
    return base;
}

[[noreturn]] void reject(std::string_view context, const std::string& what) {
    throw mero::Error(mero::ErrorCode::ConfigError, std::string(context) + ": " + what);
}

double positive(const json& obj, const char* key, double fallback) {
    const double x = get_real(obj, key, fallback);
    if (!(x > 0.0)) reject(key, "must be positive");
    return x;
}

mero::SamplingGrid default_grid(std::uint64_t seed) { return {{0.5, 0.9, 0.99, 0.999}, 512, seed, true, {}}; }

std::vector<double> read_radii(const json& obj, std::vector<double> fallback) {
    auto radii = get_reals(obj, "radii", std::move(fallback));
    if (radii.empty()) reject("radii", "must be nonempty");
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) reject("radii", "each radius must lie in (0, 1)");
    }
    return radii;
}

json subject_json(const Subject& s) {
    json j = io::to_json(s.spec);
    j["source"] = s.source;
    return j;
}

std::optional<double> real_a(const ClassParams& params) {
    try {
        return mero::require_real_a(params);
    } catch (const mero::Error&) {
        return std::nullopt;
    }
}

std::string error_text(const std::exception& e) { return e.what(); }

} // namespace

const std::vector<CommandInfo>& commands() {
    static const std::vector<CommandInfo> table{
        {"construct", "build f from representation data and test membership", cmd_construct, "json"},
        {"verify", "run the verification suite on one function", cmd_verify, "json"},
        {"coeffs", "coefficients of f, z/f, U_f and the induced Omega", cmd_coeffs, "json"},
        {"bounds", "sharp coefficient bounds against the extremal functions", cmd_bounds, "json"},
        {"classify", "region verdicts for (lambda, mu) pairs", cmd_classify, "json"},
        {"extremal", "extremal functions and the values they attain", cmd_extremal, "json"},
        {"maximize", "lower bound for the sharp |a_2| maximum", cmd_maximize, "json"},
        {"subordination", "conjecture scan of z/f against z/f_0", cmd_subordination, "json"},
        {"sweep", "per-(lambda, mu) table of verdicts, bounds and scans", cmd_sweep, "json"},
        {"plotdata", "boundary curves and |U_f - mu| profiles", cmd_plotdata, "csv"},
    };
    return table;
}

Outcome cmd_construct(const Config& cfg) {
    const json& b = cfg.body;
    check_keys(b, with(kSubjectKeys, {"grid", "tolerance"}), "construct");
    const Subject s = read_subject(b, cfg.common.order);
    const ClassParams params = read_params(b);
    const mero::SamplingGrid grid = read_grid(b, "grid", default_grid(cfg.common.seed));
    const double tol = positive(b, "tolerance", 1e-9);

    const PowerSeries g = mero::reciprocal_series(s.spec);
    const PowerSeries f = mero::construct(s.spec);
    const mero::MembershipReport rep = mero::membership(s.mapping(), params, grid, tol);

    Outcome out;
    out.doc["spec"] = subject_json(s);
    out.doc["class"] = io::to_json(params);
    out.doc["recip_coeffs"] = io::to_json(g);
    out.doc["f_coeffs"] = io::to_json(f);
    out.doc["membership"] = io::to_json(rep);

    Table& t = out.table;
    t.note("source", s.source);
    t.note("membership", out.doc["membership"]["verdict"].get<std::string>());
    t.note("sup_estimate", cell(rep.sup_estimate));
    t.note("margin", cell(rep.margin));
    t.columns = {"k", "f_k", "b_k"};
    for (std::size_t k = 0; k <= f.order(); ++k) t.rows.push_back({cell(k), cell(f[k]), cell(g.coeff(k))});
    if (rep.verdict == mero::Verdict::refuted) out.exit_code = kExitRefuted;
    return out;
}

Outcome cmd_verify(const Config& cfg) {
    const json& b = cfg.body;
    check_keys(b, with(kSubjectKeys, {"grid", "tolerance", "oracle_radius", "oracle_order", "univalence"}), "verify");
    const Subject s = read_subject(b, cfg.common.order);
    const ClassParams params = read_params(b);
    const mero::SamplingGrid grid = read_grid(b, "grid", default_grid(cfg.common.seed));
    const double tol = positive(b, "tolerance", 1e-9);
    const double oracle_r = get_real(b, "oracle_radius", 0.5);
    if (!(oracle_r > 0.0 && oracle_r < 1.0)) reject("oracle_radius", "must lie in (0, 1)");
    const std::size_t oracle_n = std::min<std::size_t>(get_uint(b, "oracle_order", 32u), cfg.common.order);
    if (oracle_n < 1) reject("oracle_order", "must be positive");
    const bool univalence = b.contains("univalence") ? as_config("univalence", [&] { return b.at("univalence").get<bool>(); })
                                                     : true;

    const mero::Mapping f = s.mapping();
    const PowerSeries g = mero::reciprocal_series(s.spec);
    const ClassParams& sp = s.spec.params;
    const PowerSeries omega = mero::induced_omega_of_reciprocal(g, sp, g.order());

    double identity_gap = 0.0;
    double bound_excess = -std::numeric_limits<double>::infinity();
    double omega_tail = 0.0;
    for (std::size_t k = 2; k <= g.order(); ++k) {
        identity_gap = std::max(identity_gap,
                                std::abs(g[k] * (1.0 - static_cast<double>(k)) - sp.lambda() * omega[k]));
        bound_excess = std::max(bound_excess, std::abs(g[k]) - mero::bk_bound(static_cast<unsigned>(k), sp));
        omega_tail = std::max(omega_tail, std::abs(omega[k]));
    }

    Outcome out;
    out.doc["spec"] = subject_json(s);
    out.doc["class"] = io::to_json(params);
    const auto mem = mero::membership(f, params, grid, tol);
    out.doc["membership"] = io::to_json(mem);
    const auto loc = mero::local_univalence_check(f, grid);
    out.doc["local_univalence"] = io::to_json(loc);
    if (univalence) {
        out.doc["univalence"] = io::to_json(mero::univalence_grid(f, grid));
    } else {
        out.doc["univalence"] = nullptr;
    }
    const double oracle_gap = mero::oracle_cross_check(s.spec, oracle_r, oracle_n);
    out.doc["oracle"] = json{{"radius", oracle_r}, {"order", oracle_n}, {"max_gap", oracle_gap}};
    out.doc["coefficient_identity"] = json{{"max_gap", identity_gap}, {"k_max", g.order()}};
    out.doc["coefficient_bounds"] = json{{"max_excess", bound_excess}};
    out.doc["induced_omega"] = json{{"c0", io::to_json(omega[0])},
                                    {"a", io::to_json(sp.a())},
                                    {"c1", io::to_json(omega[1])},
                                    {"max_tail", omega_tail},
                                    {"a_defect", sp.a_defect()},
                                    {"energy", mero::coefficient_energy(omega)}};

    Table& t = out.table;
    t.note("source", s.source);
    t.columns = {"check", "value", "verdict"};
    t.rows.push_back({"membership_sup", cell(mem.sup_estimate), out.doc["membership"]["verdict"].get<std::string>()});
    t.rows.push_back({"min_abs_derivative", cell(loc.min_abs_derivative), std::string(mero::to_string(loc.verdict))});
    if (univalence) {
        t.rows.push_back({"univalence_grid", cell(out.doc["univalence"]["max_winding_defect"].get<int>()),
                          out.doc["univalence"]["verdict"].get<std::string>()});
    }
    t.rows.push_back({"oracle_max_gap", cell(oracle_gap), oracle_gap <= 1e-8 ? "agree" : "disagree"});
    t.rows.push_back({"coefficient_identity_gap", cell(identity_gap), identity_gap <= 1e-10 ? "holds" : "violated"});
    t.rows.push_back({"bk_bound_excess", cell(bound_excess), bound_excess <= 1e-9 ? "holds" : "violated"});
    t.rows.push_back({"omega_energy", cell(mero::coefficient_energy(omega)),
                      mero::coefficient_energy(omega) <= 1.0 + 1e-9 ? "holds" : "violated"});
    return out;
}

Outcome cmd_coeffs(const Config& cfg) {
    const json& b = cfg.body;
    check_keys(b, kSubjectKeys, "coeffs");
    const Subject s = read_subject(b, cfg.common.order);
    const ClassParams& sp = s.spec.params;

    const PowerSeries g = mero::reciprocal_series(s.spec);
    const PowerSeries f = mero::construct(s.spec);
    const PowerSeries u = mero::u_from_reciprocal(g);
    const PowerSeries omega = mero::induced_omega_of_reciprocal(g, sp, g.order());

    Outcome out;
    out.doc["spec"] = subject_json(s);
    out.doc["f_coeffs"] = io::to_json(f);
    out.doc["recip_coeffs"] = io::to_json(g);
    out.doc["u_coeffs"] = io::to_json(u);
    out.doc["omega_coeffs"] = io::to_json(omega);
    json bounds = json::array();
    for (std::size_t k = 2; k <= g.order(); ++k) bounds.push_back(mero::bk_bound(static_cast<unsigned>(k), sp));
    out.doc["bk_bounds_from_k2"] = bounds;

    Table& t = out.table;
    t.note("source", s.source);
    t.columns = {"k", "f_k", "b_k", "u_k", "omega_k", "bk_bound"};
    for (std::size_t k = 0; k <= g.order(); ++k) {
        t.rows.push_back({cell(k), cell(f.coeff(k)), cell(g[k]), cell(u.coeff(k)), cell(omega.coeff(k)),
                          k >= 2 ? cell(mero::bk_bound(static_cast<unsigned>(k), sp)) : "n/a"});
    }
    return out;
}

Outcome cmd_bounds(const Config& cfg) {
    const json& b = cfg.body;
    check_keys(b, {"lambda", "mu", "ks", "l2_terms", "p"}, "bounds");
    const ClassParams params = read_params(b);
    mero::BoundRequest req;
    req.order = cfg.common.order;
    if (b.contains("ks")) {
        req.ks.clear();
        for (double k : get_reals(b, "ks")) {
            if (!(k >= 2.0) || k != std::floor(k)) reject("ks", "entries must be integers >= 2");
            req.ks.push_back(static_cast<unsigned>(k));
        }
    }
    req.l2_terms = get_uint(b, "l2_terms", 200u);
    req.p = get_real(b, "p", 1.0);
    if (!(req.p > 0.0 && req.p <= 1.0)) reject("p", "must lie in (0, 1]");
    for (unsigned k : req.ks) {
        if (k > req.order) reject("ks", "entries must not exceed the order");
    }

    const auto reports = mero::bound_reports(params, req);
    const bool has_a2 = std::any_of(reports.begin(), reports.end(),
                                    [](const mero::BoundReport& r) { return r.kind == mero::BoundKind::a2; });

    Outcome out;
    out.doc["class"] = io::to_json(params);
    json rows = json::array();
    Table& t = out.table;
    t.columns = {"kind", "index", "bound", "achieved", "gap"};
    for (const auto& r : reports) {
        rows.push_back(io::to_json(r));
        const std::string index = r.kind == mero::BoundKind::a2 ? cell(r.p) : cell(static_cast<std::size_t>(r.k));
        t.rows.push_back({std::string(mero::to_string(r.kind)), index, cell(r.bound_value), cell(r.achieved_value),
                          cell(r.gap)});
    }
    if (!has_a2) {
        rows.push_back(json{{"kind", "a2"}, {"p", req.p}, {"status", "n/a: a is not real in [0, 1)"}});
        t.rows.push_back({"a2", cell(req.p), "n/a", "n/a", "n/a"});
    }
    out.doc["rows"] = rows;
    return out;
}

Outcome cmd_classify(const Config& cfg) {
    const json& b = cfg.body;
    check_keys(b, {"points", "grid", "witness"}, "classify");
    const auto pts = read_param_points(b);
    const bool want_witness =
        b.contains("witness") ? as_config("witness", [&] { return b.at("witness").get<bool>(); }) : true;

    struct Row {
        std::optional<mero::RegionVerdict> verdict;
        std::optional<mero::CriticalPointWitness> witness;
        std::string error;
    };
    std::vector<Row> rows(pts.size());
    mero::parallel_for(pts.size(), cfg.common.jobs, [&](std::size_t i) {
        try {
            const ClassParams params = ClassParams::make(pts[i].first, pts[i].second);
            rows[i].verdict = mero::classify(params);
            if (want_witness && rows[i].verdict->contains_non_locally_univalent) {
                rows[i].witness = mero::critical_point_witness(params);
            }
        } catch (const std::exception& e) {
            rows[i].error = error_text(e);
        }
    });

    Outcome out;
    json arr = json::array();
    Table& t = out.table;
    t.columns = {"lambda", "mu", "label", "locally_univalent_all", "univalence_guaranteed",
                 "contains_non_locally_univalent", "open_region", "witness_z1", "witness_residual", "error"};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Row& r = rows[i];
        json j{{"lambda", pts[i].first}, {"mu", io::to_json(pts[i].second)}, {"error", r.error}};
        j["verdict"] = r.verdict ? io::to_json(*r.verdict) : json(nullptr);
        j["witness"] = r.witness ? io::to_json(*r.witness) : json(nullptr);
        arr.push_back(j);
        if (r.verdict) {
            const auto& v = *r.verdict;
            t.rows.push_back({cell(pts[i].first), cell(pts[i].second), v.label(), cell(v.locally_univalent_all),
                              cell(v.univalence_guaranteed), cell(v.contains_non_locally_univalent),
                              cell(v.open_region), r.witness ? cell(r.witness->z1) : "",
                              r.witness ? cell(r.witness->residual) : "", r.error});
        } else {
            t.rows.push_back({cell(pts[i].first), cell(pts[i].second), "", "", "", "", "", "", "", r.error});
        }
    }
    out.doc["rows"] = arr;
    return out;
}

Outcome cmd_extremal(const Config& cfg) {
    const json& b = cfg.body;
    check_keys(b, {"lambda", "mu", "kind", "k", "c", "p"}, "extremal");
    const std::string kind = get_string(b, "kind");
    const std::size_t order = cfg.common.order;
    mero::ConstructionSpec spec = as_config("extremal", [&] {
        if (kind == "fk") {
            const unsigned k = get_uint(b, "k");
            if (k > order) reject("k", "must not exceed the order");
            return mero::extremal_fk_spec(k, read_params(b), get_complex(b, "c", Complex{}), order);
        }
        if (kind == "f0") return mero::extremal_f0_spec(read_params(b), get_real(b, "p", 1.0), order);
        if (kind == "slit") {
            const double lambda = get_real(b, "lambda");
            if (b.contains("mu")) reject("mu", "slit mappings fix mu = lambda");
            mero::CatalogRequest req{"slit", lambda, lambda, {}, 2, get_real(b, "p", 1.0)};
            return mero::catalog_spec(req, order);
        }
        reject("kind", "must be fk, f0 or slit");
    });

    const PowerSeries g = mero::reciprocal_series(spec);
    const PowerSeries f = mero::construct(spec);
    const ClassParams& sp = spec.params;

    Outcome out;
    out.doc["spec"] = io::to_json(spec);
    out.doc["kind"] = kind;
    out.doc["f_coeffs"] = io::to_json(f);
    out.doc["recip_coeffs"] = io::to_json(g);
    json summary;
    Table& t = out.table;
    t.note("kind", kind);
    if (kind == "fk") {
        const unsigned k = get_uint(b, "k");
        const double achieved = std::abs(g[k]);
        const double bound = mero::bk_bound(k, sp);
        summary = json{{"k", k}, {"abs_bk", achieved}, {"bk_bound", bound}, {"gap", bound - achieved}};
        t.note("abs_bk", cell(achieved));
        t.note("bk_bound", cell(bound));
    } else {
        const double p = get_real(b, "p", 1.0);
        const double achieved = std::abs(f[2]);
        const double bound = mero::a2_bound(sp, p);
        const Complex at_pole = mero::construction_map(spec).recip(p).value;
        summary = json{{"p", p},
                       {"abs_a2", achieved},
                       {"a2_bound", bound},
                       {"gap", bound - achieved},
                       {"abs_recip_at_p", std::abs(at_pole)}};
        t.note("abs_a2", cell(achieved));
        t.note("a2_bound", cell(bound));
        t.note("abs_recip_at_p", cell(std::abs(at_pole)));
    }
    out.doc["summary"] = summary;
    t.columns = {"k", "f_k", "b_k"};
    for (std::size_t k = 0; k <= f.order(); ++k) t.rows.push_back({cell(k), cell(f[k]), cell(g.coeff(k))});
    return out;
}

Outcome cmd_maximize(const Config& cfg) {
    const json& b = cfg.body;
    check_keys(b, {"lambda", "mu", "p", "family", "starts", "max_iters", "tolerance"}, "maximize");
    const ClassParams params = read_params(b);
    const double p = get_real(b, "p", 1.0);
    if (!(p > 0.0 && p <= 1.0)) reject("p", "must lie in (0, 1]");
    mero::OptimizeConfig oc;
    if (b.contains("family")) oc.family = read_family(b.at("family"));
    oc.starts = get_uint(b, "starts", oc.starts);
    oc.max_iters = get_uint(b, "max_iters", oc.max_iters);
    oc.tolerance = get_real(b, "tolerance", oc.tolerance);
    oc.seed = cfg.common.seed;
    oc.jobs = cfg.common.jobs;
    as_config("maximize", [&] {
        oc.validate();
        return 0;
    });

    const mero::MaxReport rep = mero::problem2_maximize(params, p, oc);
    std::optional<double> bound;
    if (real_a(params)) bound = mero::a2_bound(params, p);

    Outcome out;
    out.doc["class"] = io::to_json(params);
    out.doc["report"] = io::to_json(rep);
    out.doc["a2_bound"] = bound ? json(*bound) : json(nullptr);

    Table& t = out.table;
    t.note("label", "numerical lower bound");
    t.note("best_value", cell(rep.best_value));
    t.note("a2_candidate", cell(rep.a2_candidate()));
    t.note("a2_bound", cell(bound));
    t.note("argmax_z", cell(rep.argmax_z));
    t.columns = {"start", "best_value"};
    for (std::size_t i = 0; i < rep.history.size(); ++i) t.rows.push_back({cell(i), cell(rep.history[i])});
    return out;
}

Outcome cmd_subordination(const Config& cfg) {
    const json& b = cfg.body;
    check_keys(b, {"points", "grid", "radii", "samples", "majorant_angles", "segments"}, "subordination");
    const auto pts = read_param_points(b);
    for (const auto& [lambda, mu] : pts) {
        if (mu == Complex{1.0, 0.0}) {
            reject("subordination", "mu = 1 gives a = 0, the case that has already been solved in the literature; "
                                    "the conjecture scan needs real a in (0, 1)");
        }
    }
    mero::SubordinationScanOptions opt;
    opt.radii = read_radii(b, opt.radii);
    opt.samples = get_uint(b, "samples", static_cast<unsigned>(opt.samples));
    opt.majorant_angles = get_uint(b, "majorant_angles", static_cast<unsigned>(opt.majorant_angles));
    opt.check.segments = get_uint(b, "segments", static_cast<unsigned>(opt.check.segments));
    if (opt.majorant_angles < 64) reject("majorant_angles", "must be at least 64");
    if (opt.check.segments < 16) reject("segments", "must be at least 16");
    if (!std::is_sorted(opt.radii.begin(), opt.radii.end())) reject("radii", "must be increasing");
    opt.sampler.order = cfg.common.order;
    opt.seed = cfg.common.seed;
    opt.jobs = cfg.common.jobs;

    const auto rows = mero::subordination_scan(pts, opt);

    Outcome out;
    out.doc["label"] = "conjecture scan (numerical evidence only)";
    json arr = json::array();
    Table& t = out.table;
    t.note("label", "conjecture scan (numerical evidence only)");
    t.columns = {"lambda", "mu", "majorant_injective", "supported", "refuted", "inconclusive",
                 "skipped_non_analytic", "error"};
    for (const auto& r : rows) {
        arr.push_back(io::to_json(r));
        t.rows.push_back({cell(r.lambda), cell(r.mu), cell(r.majorant_injective), cell(r.supported),
                          cell(r.refuted), cell(r.inconclusive), cell(r.skipped_non_analytic), r.error});
    }
    out.doc["rows"] = arr;
    return out;
}

Outcome cmd_sweep(const Config& cfg) {
    const json& b = cfg.body;
    check_keys(b, {"points", "grid", "quantities", "p", "mc_specs", "starts", "max_iters", "scan_grid"}, "sweep");
    const auto pts = read_param_points(b);
    mero::SweepOptions opt;
    if (b.contains("quantities")) {
        const json& q = b.at("quantities");
        if (!q.is_array()) reject("quantities", "expected an array of names");
        opt.quantities.clear();
        for (const auto& name : q) {
            const std::string s = name.is_string() ? name.get<std::string>() : "";
            if (s == "classify") opt.quantities.push_back(mero::SweepQuantity::classify);
            else if (s == "bounds") opt.quantities.push_back(mero::SweepQuantity::bounds);
            else if (s == "a2") opt.quantities.push_back(mero::SweepQuantity::a2);
            else if (s == "problem2") opt.quantities.push_back(mero::SweepQuantity::problem2);
            else if (s == "univalence_scan") opt.quantities.push_back(mero::SweepQuantity::univalence_scan);
            else reject("quantities", "unknown quantity '" + s + "'");
        }
    }
    opt.p = get_real(b, "p", opt.p);
    if (!(opt.p > 0.0 && opt.p <= 1.0)) reject("p", "must lie in (0, 1]");
    opt.mc_specs = get_uint(b, "mc_specs", static_cast<unsigned>(opt.mc_specs));
    opt.optimize.starts = get_uint(b, "starts", opt.optimize.starts);
    opt.optimize.max_iters = get_uint(b, "max_iters", opt.optimize.max_iters);
    opt.optimize.seed = cfg.common.seed;
    as_config("sweep", [&] {
        opt.optimize.validate();
        return 0;
    });
    opt.grid = read_grid(b, "scan_grid", opt.grid);
    opt.sampler.order = cfg.common.order;
    opt.seed = cfg.common.seed;
    opt.jobs = cfg.common.jobs;

    const auto rows = mero::sweep(pts, opt);

    Outcome out;
    json arr = json::array();
    Table& t = out.table;
    t.note("label", "problem2_lower is a numerical lower bound; refutation counts are evidence");
    t.columns = {"lambda", "mu", "verdict", "bk2_bound", "l2_bound", "a2_bound", "problem2_lower", "mc_specs",
                 "univalence_refutations", "local_refutations", "inconclusive", "local_witness_z", "error"};
    for (const auto& r : rows) {
        arr.push_back(io::to_json(r));
        t.rows.push_back({cell(r.lambda), cell(r.mu), r.verdict ? r.verdict->label() : "", cell(r.bk2_bound),
                          cell(r.l2_bound), cell(r.a2_bound), cell(r.problem2_lower), cell(r.mc_specs),
                          cell(r.univalence_refutations), cell(r.local_refutations), cell(r.inconclusive),
                          r.local_witness ? cell(r.local_witness->z) : "", r.error});
    }
    out.doc["rows"] = arr;
    return out;
}

Outcome cmd_plotdata(const Config& cfg) {
    const json& b = cfg.body;
    check_keys(b, {"lambda", "mu", "catalog", "radii", "angles"}, "plotdata");
    if (!b.contains("catalog")) reject("plotdata", "missing 'catalog'");
    const double lambda = get_real(b, "lambda", 1.0);
    const Complex mu = get_complex(b, "mu", Complex{1.0, 0.0});
    const mero::CatalogRequest req = read_catalog(b.at("catalog"), lambda, mu);
    const auto radii = read_radii(b, {0.5, 0.9, 0.99});
    const unsigned angles = get_uint(b, "angles", 512u);
    if (angles < 8) reject("angles", "must be at least 8");
    const Complex class_mu = as_config("catalog", [&] { return mero::catalog_spec(req, 16).params.mu(); });
    const mero::Mapping m = as_config("catalog", [&] { return mero::catalog_map(req); });

    Outcome out;
    Table& t = out.table;
    t.note("function", req.name);
    t.note("mu", cell(class_mu));
    t.columns = {"r", "theta", "z", "f", "u", "abs_u_minus_mu"};
    json curves = json::array();
    for (double r : radii) {
        json theta = json::array(), zs = json::array(), fs = json::array(), us = json::array(), dev = json::array();
        for (unsigned j = 0; j < angles; ++j) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles);
            const Complex z = std::polar(r, th);
            const Complex fz = m.value(z);
            const Complex uz = m.u(z);
            const double d = std::abs(uz - class_mu);
            theta.push_back(th);
            zs.push_back(io::to_json(z));
            fs.push_back(io::to_json(fz));
            us.push_back(io::to_json(uz));
            dev.push_back(d);
            t.rows.push_back({cell(r), cell(th), cell(z), cell(fz), cell(uz), cell(d)});
        }
        curves.push_back(json{{"r", r}, {"theta", theta}, {"z", zs}, {"f", fs}, {"u", us}, {"abs_u_minus_mu", dev}});
    }
    out.doc["function"] = req.name;
    out.doc["mu"] = io::to_json(class_mu);
    out.doc["curves"] = curves;
    return out;
}

} // namespace merotool
