#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mero/error.hpp"
#include "mero/io.hpp"

namespace merotool {

namespace {

using mero::Error;
using mero::ErrorCode;

[[noreturn]] void fail(std::string_view context, const std::string& what) {
    throw Error(ErrorCode::ConfigError, std::string(context) + ": " + what);
}

const std::vector<std::string_view> kShared{"schema_version", "seed", "order", "jobs", "format"};

std::uint64_t read_u64(const json& j, std::string_view context) {
    if (!j.is_number_unsigned()) fail(context, "expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

std::vector<double> linspace(const json& j, std::string_view context) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number_unsigned()) {
        fail(context, "expected [lo, hi, count]");
    }
    const double lo = j[0].get<double>();
    const double hi = j[1].get<double>();
    const auto n = j[2].get<std::size_t>();
    if (n == 0) fail(context, "count must be positive");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

} // namespace

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

void check_keys(const json& obj, const std::vector<std::string_view>& allowed, std::string_view context) {
    if (!obj.is_object()) fail(context, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            fail(context, "unknown key '" + key + "'");
        }
    }
}

Config load_config(const std::string& path, std::string_view command, const Overrides& overrides,
                   std::string_view default_format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("config", "cannot open '" + path + "'");
    std::stringstream text;
    text << in.rdbuf();
    json cfg;
    try {
        cfg = json::parse(text.str());
    } catch (const json::parse_error& e) {
        fail("config", std::string("malformed JSON: ") + e.what());
    }
    if (!cfg.is_object()) fail("config", "top level must be an object");
    if (!cfg.contains("schema_version")) fail("config", "missing schema_version");
    if (!cfg.at("schema_version").is_number_integer() || cfg.at("schema_version").get<long long>() != kSchemaVersion) {
        fail("config", "unsupported schema_version (expected 1)");
    }

    Config out;
    Common& c = out.common;
    if (cfg.contains("seed")) c.seed = read_u64(cfg.at("seed"), "seed");
    if (cfg.contains("order")) c.order = static_cast<std::size_t>(read_u64(cfg.at("order"), "order"));
    if (cfg.contains("jobs")) c.jobs = static_cast<unsigned>(read_u64(cfg.at("jobs"), "jobs"));
    if (cfg.contains("format")) {
        if (!cfg.at("format").is_string()) fail("format", "expected a string");
        c.format = cfg.at("format").get<std::string>();
    }
    if (overrides.seed) c.seed = *overrides.seed;
    if (overrides.order) c.order = *overrides.order;
    if (overrides.jobs) c.jobs = *overrides.jobs;
    if (overrides.format) c.format = *overrides.format;
    if (c.format.empty()) c.format = default_format;
    if (c.format != "json" && c.format != "csv") fail("format", "must be json or csv");
    if (c.order < 4) fail("order", "must be at least 4");
    if (c.jobs == 0) fail("jobs", "must be at least 1");

    out.body = json::object();
    for (const auto& [key, value] : cfg.items()) {
        if (std::find(kShared.begin(), kShared.end(), key) == kShared.end()) out.body[key] = value;
    }
    json effective = out.body;
    effective["schema_version"] = kSchemaVersion;
    effective["seed"] = c.seed;
    effective["order"] = c.order;
    effective["format"] = c.format;
    c.config_hash = fnv1a_hex(std::string(command) + "\n" + effective.dump());
    return out;
}

double get_real(const json& obj, const char* key, std::optional<double> fallback) {
    if (!obj.contains(key)) {
        if (!fallback) fail(key, "missing");
        return *fallback;
    }
    const json& j = obj.at(key);
    if (!j.is_number()) fail(key, "expected a number");
    return j.get<double>();
}

unsigned get_uint(const json& obj, const char* key, std::optional<unsigned> fallback) {
    if (!obj.contains(key)) {
        if (!fallback) fail(key, "missing");
        return *fallback;
    }
    const json& j = obj.at(key);
    if (!j.is_number_unsigned()) fail(key, "expected a nonnegative integer");
    return j.get<unsigned>();
}

Complex get_complex(const json& obj, const char* key, std::optional<Complex> fallback) {
    if (!obj.contains(key)) {
        if (!fallback) fail(key, "missing");
        return *fallback;
    }
    return mero::io::complex_from_json(obj.at(key), key);
}

std::string get_string(const json& obj, const char* key, std::optional<std::string> fallback) {
    if (!obj.contains(key)) {
        if (!fallback) fail(key, "missing");
        return *fallback;
    }
    if (!obj.at(key).is_string()) fail(key, "expected a string");
    return obj.at(key).get<std::string>();
}

std::vector<double> get_reals(const json& obj, const char* key, std::optional<std::vector<double>> fallback) {
    if (!obj.contains(key)) {
        if (!fallback) fail(key, "missing");
        return *fallback;
    }
    const json& j = obj.at(key);
    if (!j.is_array()) fail(key, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& x : j) {
        if (!x.is_number()) fail(key, "expected an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

mero::ClassParams read_params(const json& obj) {
    const double lambda = get_real(obj, "lambda");
    const Complex mu = get_complex(obj, "mu");
    return as_config("class", [&] { return mero::ClassParams::make(lambda, mu); });
}

std::vector<std::pair<double, Complex>> read_param_points(const json& obj) {
    std::vector<std::pair<double, Complex>> out;
    if (obj.contains("points")) {
        const json& pts = obj.at("points");
        if (!pts.is_array()) fail("points", "expected an array");
        for (const auto& p : pts) {
            check_keys(p, {"lambda", "mu"}, "points");
            out.emplace_back(get_real(p, "lambda"), get_complex(p, "mu"));
        }
    }
    if (obj.contains("grid")) {
        const json& g = obj.at("grid");
        check_keys(g, {"lambda", "mu_re", "mu_im"}, "grid");
        if (!g.contains("lambda") || !g.contains("mu_re")) fail("grid", "needs lambda and mu_re");
        const auto lambdas = linspace(g.at("lambda"), "grid.lambda");
        const auto res = linspace(g.at("mu_re"), "grid.mu_re");
        const auto ims = g.contains("mu_im") ? linspace(g.at("mu_im"), "grid.mu_im") : std::vector<double>{0.0};
        for (double l : lambdas) {
            for (double re : res) {
                for (double im : ims) out.emplace_back(l, Complex{re, im});
            }
        }
    }
    if (out.empty()) fail("config", "needs a nonempty 'points' or 'grid'");
    return out;
}

mero::CatalogRequest read_catalog(const json& obj, double lambda, Complex mu) {
    check_keys(obj, {"name", "k", "c", "p"}, "catalog");
    mero::CatalogRequest r;
    r.name = get_string(obj, "name");
    r.lambda = lambda;
    r.mu = mu;
    r.k = get_uint(obj, "k", 2u);
    r.c = get_complex(obj, "c", Complex{});
    r.p = get_real(obj, "p", 1.0);
    static const std::vector<std::string_view> names{"identity", "mobius", "koebe", "fk", "f0", "slit"};
    if (std::find(names.begin(), names.end(), r.name) == names.end()) {
        fail("catalog", "unknown catalog name '" + r.name + "'");
    }
    return r;
}

mero::Mapping Subject::mapping() const {
    if (catalog) return mero::catalog_map(*catalog);
    return mero::construction_map(spec);
}

Subject read_subject(const json& obj, std::size_t order) {
    const int sources = static_cast<int>(obj.contains("omega")) + static_cast<int>(obj.contains("extremal")) +
                        static_cast<int>(obj.contains("catalog"));
    if (sources != 1) fail("config", "needs exactly one of 'omega', 'extremal', 'catalog'");
    const double lambda = get_real(obj, "lambda");
    const Complex mu = get_complex(obj, "mu");
    Subject s{mero::ConstructionSpec{read_params(obj), Complex{}, mero::SchwarzSpec::constant(0.0), order},
              std::nullopt, ""};
    as_config("subject", [&] {
        if (obj.contains("omega")) {
            s.source = "representation";
            s.spec.c = get_complex(obj, "c", Complex{});
            s.spec.omega = mero::io::schwarz_from_json(obj.at("omega"));
        } else if (obj.contains("extremal")) {
            if (obj.contains("c")) fail("c", "belongs inside 'extremal'");
            const json& e = obj.at("extremal");
            check_keys(e, {"kind", "k", "c", "p"}, "extremal");
            const std::string kind = get_string(e, "kind");
            if (kind == "fk") {
                s.source = "extremal fk";
                s.spec = mero::extremal_fk_spec(get_uint(e, "k"), s.spec.params, get_complex(e, "c", Complex{}),
                                                order);
            } else if (kind == "f0") {
                s.source = "extremal f0";
                s.spec = mero::extremal_f0_spec(s.spec.params, get_real(e, "p", 1.0), order);
            } else {
                fail("extremal", "kind must be fk or f0");
            }
        } else {
            if (obj.contains("c")) fail("c", "belongs inside 'catalog'");
            s.catalog = read_catalog(obj.at("catalog"), lambda, mu);
            s.source = "catalog " + s.catalog->name;
            s.spec = mero::catalog_spec(*s.catalog, order);
        }
        s.spec.validate();
        return 0;
    });
    return s;
}

mero::FamilyTemplate read_family(const json& obj) {
    check_keys(obj, {"kind", "m", "zeros", "parts", "omega"}, "family");
    const std::string kind = get_string(obj, "kind");
    return as_config("family", [&] {
        if (kind == "constant") return mero::FamilyTemplate::constant();
        if (kind == "monomial") return mero::FamilyTemplate::monomial(get_uint(obj, "m"));
        if (kind == "blaschke") return mero::FamilyTemplate::blaschke(get_uint(obj, "zeros"));
        if (kind == "fixed") return mero::FamilyTemplate::fixed(mero::io::schwarz_from_json(obj.at("omega")));
        if (kind == "mix") {
            if (!obj.contains("parts") || !obj.at("parts").is_array()) fail("family", "mix needs 'parts'");
            std::vector<mero::FamilyTemplate> parts;
            for (const auto& p : obj.at("parts")) parts.push_back(read_family(p));
            return mero::FamilyTemplate::mix(std::move(parts));
        }
        fail("family", "unknown kind '" + kind + "'");
    });
}

mero::SamplingGrid read_grid(const json& obj, const char* key, mero::SamplingGrid fallback) {
    if (!obj.contains(key)) {
        fallback.validate();
        return fallback;
    }
    return mero::io::grid_from_json(obj.at(key));
}

} // namespace merotool
