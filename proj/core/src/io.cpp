#include "mero/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "mero/error.hpp"

namespace mero::io {

namespace {

[[noreturn]] void config_error(std::string_view context, std::string_view what) {
    throw Error(ErrorCode::ConfigError, std::string(context) + ": " + std::string(what));
}

double number(const json& j, std::string_view context) {
    if (!j.is_number()) config_error(context, "expected a number");
    return j.get<double>();
}

const json& field(const json& obj, const char* key, std::string_view context) {
    if (!obj.contains(key)) config_error(context, std::string("missing field '") + key + "'");
    return obj.at(key);
}

json optional_real(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

} // namespace

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view context) {
    if (!obj.is_object()) config_error(context, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            config_error(context, "unknown key '" + key + "'");
        }
    }
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, std::string_view context) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) config_error(context, "expected [re, im]");
    return {number(j[0], context), number(j[1], context)};
}

json to_json(const PowerSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

PowerSeries series_from_json(const json& j) {
    check_keys(j, {"order", "coeffs"}, "series");
    const json& coeffs = field(j, "coeffs", "series");
    if (!coeffs.is_array()) config_error("series", "coeffs must be an array");
    std::vector<Complex> c;
    for (const auto& x : coeffs) c.push_back(complex_from_json(x, "series.coeffs"));
    const auto order = field(j, "order", "series").get<std::size_t>();
    if (c.size() != order + 1) config_error("series", "coeffs length must be order + 1");
    return PowerSeries(std::move(c));
}

json to_json(const SchwarzSpec& omega) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConstantOmega>) {
                return json{{"kind", "constant"}, {"u", to_json(v.u)}};
            } else if constexpr (std::is_same_v<T, MonomialOmega>) {
                return json{{"kind", "monomial"}, {"u", to_json(v.u)}, {"m", v.m}};
            } else if constexpr (std::is_same_v<T, BlaschkeOmega>) {
                json zeros = json::array();
                for (const auto& z : v.zeros) zeros.push_back(to_json(z));
                return json{{"kind", "blaschke"}, {"zeros", zeros}, {"factor", to_json(v.factor)}};
            } else {
                json parts = json::array();
                for (const auto& p : v.parts) parts.push_back(to_json(p));
                return json{{"kind", "mix"}, {"weights", v.weights}, {"parts", parts}};
            }
        },
        omega.variant());
}

SchwarzSpec schwarz_from_json(const json& j) {
    if (!j.is_object()) config_error("omega", "expected an object");
    const json& kind_j = field(j, "kind", "omega");
    if (!kind_j.is_string()) config_error("omega", "kind must be a string");
    const auto kind = kind_j.get<std::string>();
    try {
        if (kind == "constant") {
            check_keys(j, {"kind", "u"}, "omega(constant)");
            return SchwarzSpec::constant(complex_from_json(field(j, "u", "omega"), "omega.u"));
        }
        if (kind == "monomial") {
            check_keys(j, {"kind", "u", "m"}, "omega(monomial)");
            const json& m = field(j, "m", "omega");
            if (!m.is_number_unsigned()) config_error("omega.m", "expected a nonnegative integer");
            return SchwarzSpec::monomial(complex_from_json(field(j, "u", "omega"), "omega.u"), m.get<unsigned>());
        }
        if (kind == "blaschke") {
            check_keys(j, {"kind", "zeros", "factor"}, "omega(blaschke)");
            std::vector<Complex> zeros;
            for (const auto& z : field(j, "zeros", "omega")) zeros.push_back(complex_from_json(z, "omega.zeros"));
            const Complex factor = j.contains("factor") ? complex_from_json(j.at("factor"), "omega.factor")
                                                        : Complex{1.0, 0.0};
            return SchwarzSpec::blaschke(std::move(zeros), factor);
        }
        if (kind == "mix") {
            check_keys(j, {"kind", "weights", "parts"}, "omega(mix)");
            std::vector<double> weights;
            for (const auto& w : field(j, "weights", "omega")) weights.push_back(number(w, "omega.weights"));
            std::vector<SchwarzSpec> parts;
            for (const auto& p : field(j, "parts", "omega")) parts.push_back(schwarz_from_json(p));
            return SchwarzSpec::mix(std::move(weights), std::move(parts));
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) throw;
        config_error("omega", e.what());
    }
    config_error("omega", "unknown kind '" + kind + "'");
}

json to_json(const ClassParams& params) {
    return json{{"lambda", params.lambda()}, {"mu", to_json(params.mu())}, {"a", to_json(params.a())}};
}

json to_json(const ConstructionSpec& spec) {
    return json{{"lambda", spec.params.lambda()},
                {"mu", to_json(spec.params.mu())},
                {"c", to_json(spec.c)},
                {"omega", to_json(spec.omega)},
                {"order", spec.order}};
}

ConstructionSpec construction_from_json(const json& j) {
    check_keys(j, {"lambda", "mu", "c", "omega", "order"}, "construction");
    try {
        const ClassParams params = ClassParams::make(number(field(j, "lambda", "construction"), "lambda"),
                                                     complex_from_json(field(j, "mu", "construction"), "mu"));
        const Complex c = j.contains("c") ? complex_from_json(j.at("c"), "c") : Complex{};
        SchwarzSpec omega = schwarz_from_json(field(j, "omega", "construction"));
        const std::size_t order = j.contains("order") ? j.at("order").get<std::size_t>() : kDefaultOrder;
        ConstructionSpec spec{params, c, std::move(omega), order};
        spec.validate();
        return spec;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) throw;
        config_error("construction", e.what());
    } catch (const json::exception& e) {
        config_error("construction", e.what());
    }
}

json to_json(const SamplingGrid& grid) {
    json extra = json::array();
    for (const auto& z : grid.extra_points) extra.push_back(to_json(z));
    return json{{"radii", grid.radii},
                {"angles_per_ring", grid.angles_per_ring},
                {"seed", grid.seed},
                {"jitter", grid.jitter},
                {"extra_points", extra}};
}

SamplingGrid grid_from_json(const json& j) {
    check_keys(j, {"radii", "angles_per_ring", "seed", "jitter", "extra_points"}, "grid");
    SamplingGrid g;
    try {
        if (j.contains("radii")) g.radii = j.at("radii").get<std::vector<double>>();
        if (j.contains("angles_per_ring")) g.angles_per_ring = j.at("angles_per_ring").get<std::size_t>();
        if (j.contains("seed")) g.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("jitter")) g.jitter = j.at("jitter").get<bool>();
        if (j.contains("extra_points")) {
            for (const auto& z : j.at("extra_points")) g.extra_points.push_back(complex_from_json(z, "grid.extra_points"));
        }
        g.validate();
    } catch (const json::exception& e) {
        config_error("grid", e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) throw;
        config_error("grid", e.what());
    }
    return g;
}

json to_json(const RegionVerdict& v) {
    return json{{"label", v.label()},
                {"locally_univalent_all", v.locally_univalent_all},
                {"univalence_guaranteed", v.univalence_guaranteed},
                {"contains_non_locally_univalent", v.contains_non_locally_univalent},
                {"open_region", v.open_region}};
}

json to_json(const BoundReport& r) {
    json j{{"kind", std::string(to_string(r.kind))},
           {"bound_value", r.bound_value},
           {"achieved_value", r.achieved_value},
           {"gap", r.gap}};
    if (r.kind == BoundKind::a2) {
        j["p"] = r.p;
    } else {
        j["k"] = r.k;
    }
    return j;
}

json to_json(const PointWitness& w) { return json{{"z", to_json(w.z)}, {"value", to_json(w.value)}}; }

json to_json(const MembershipReport& r) {
    json j{{"sup_estimate", r.sup_estimate},
           {"margin", r.margin},
           {"verdict", r.verdict == Verdict::supported ? "member-supported"
                       : r.verdict == Verdict::refuted ? "refuted"
                                                       : "inconclusive"},
           {"ring_sup", r.ring_sup},
           {"tolerance", r.tolerance},
           {"grid", to_json(r.grid)}};
    j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    return j;
}

json to_json(const LocalUnivalenceReport& r) {
    return json{{"min_abs_derivative", r.min_abs_derivative},
                {"argmin", to_json(r.argmin)},
                {"verdict", std::string(to_string(r.verdict))},
                {"tolerance", r.tolerance}};
}

json to_json(const UnivalenceReport& r) {
    json j{{"verdict", r.verdict == Verdict::supported ? "consistent-with-univalence" : std::string(to_string(r.verdict))},
           {"method", r.method},
           {"targets_tested", r.targets_tested},
           {"unresolved", r.unresolved},
           {"max_winding_defect", r.max_winding_defect}};
    j["witness"] = r.witness ? json::array({to_json(r.witness->first), to_json(r.witness->second)}) : json(nullptr);
    return j;
}

json to_json(const SubordinationReport& r) {
    json j{{"verdict", std::string(to_string(r.verdict))},
           {"max_winding_defect", r.max_winding_defect},
           {"radii", r.radii}};
    if (r.witness) {
        j["witness"] = json{{"r", r.witness->r}, {"theta", r.witness->theta}, {"value", to_json(r.witness->value)}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json to_json(const CriticalPointWitness& w) {
    return json{{"z1", to_json(w.z1)}, {"abs_z1", std::abs(w.z1)}, {"residual", w.residual}, {"modulus", w.modulus}};
}

json to_json(const MaxReport& r) {
    return json{{"label", "numerical lower bound"},
                {"best_value", r.best_value},
                {"a2_candidate", r.a2_candidate()},
                {"p", r.p},
                {"argmax_omega", to_json(r.argmax_omega)},
                {"argmax_z", to_json(r.argmax_z)},
                {"history", r.history},
                {"evaluations", r.evaluations}};
}

json to_json(const SweepRow& row) {
    json j{{"lambda", row.lambda},
           {"mu", to_json(row.mu)},
           {"bk2_bound", optional_real(row.bk2_bound)},
           {"l2_bound", optional_real(row.l2_bound)},
           {"a2_bound", optional_real(row.a2_bound)},
           {"problem2_lower", optional_real(row.problem2_lower)},
           {"mc_specs", row.mc_specs},
           {"univalence_refutations", row.univalence_refutations},
           {"local_refutations", row.local_refutations},
           {"inconclusive", row.inconclusive},
           {"error", row.error}};
    j["verdict"] = row.verdict ? json(row.verdict->label()) : json(nullptr);
    j["local_witness"] = row.local_witness ? to_json(*row.local_witness) : json(nullptr);
    return j;
}

json to_json(const SubordinationRow& row) {
    json samples = json::array();
    for (const auto& s : row.samples) {
        json sj{{"source", s.source}, {"report", to_json(s.report)}};
        sj["spec"] = s.spec ? to_json(*s.spec) : json(nullptr);
        samples.push_back(sj);
    }
    return json{{"lambda", row.lambda},
                {"mu", to_json(row.mu)},
                {"majorant_injective", row.majorant_injective},
                {"supported", row.supported},
                {"refuted", row.refuted},
                {"inconclusive", row.inconclusive},
                {"skipped_non_analytic", row.skipped_non_analytic},
                {"samples", samples},
                {"error", row.error}};
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(Complex z) {
    const double im = z.imag();
    std::string s = format_real(z.real());
    if (std::signbit(im)) {
        s += '-';
        s += format_real(-im);
    } else {
        s += '+';
        s += format_real(im);
    }
    s += 'i';
    return s;
}

Complex parse_complex(std::string_view text) {
    const std::string s(text);
    if (s.empty() || s.back() != 'i') throw Error(ErrorCode::ConfigError, "complex value must end in 'i'");
    // the imaginary sign is the last +/- not following an exponent marker
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size() - 1; k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) throw Error(ErrorCode::ConfigError, "malformed complex value '" + s + "'");
    char* end = nullptr;
    const std::string re_s = s.substr(0, split);
    const std::string im_s = s.substr(split, s.size() - split - 1);
    const double re = std::strtod(re_s.c_str(), &end);
    if (end != re_s.c_str() + re_s.size()) throw Error(ErrorCode::ConfigError, "malformed real part '" + re_s + "'");
    const double im = std::strtod(im_s.c_str(), &end);
    if (end != im_s.c_str() + im_s.size()) throw Error(ErrorCode::ConfigError, "malformed imaginary part '" + im_s + "'");
    return {re, im};
}

} // namespace mero::io
