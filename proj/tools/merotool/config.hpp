#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mero/error.hpp"
#include "mero/explore.hpp"
#include "mero/mapping.hpp"
#include "mero/uclass.hpp"
#include "mero/verify.hpp"

namespace merotool {

using nlohmann::json;
using mero::Complex;

inline constexpr int kSchemaVersion = 1;

/// Values given on the command line; they replace the config entries.
struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> order;
    std::optional<unsigned> jobs;
    std::optional<std::string> format;
};

struct Common {
    std::uint64_t seed = 0;
    std::size_t order = mero::kDefaultOrder;
    unsigned jobs = 1;
    std::string format;
    std::string config_hash;
};

/// A parsed config: the command-specific body plus the shared entries.
struct Config {
    json body;
    Common common;
};

/// Reads and validates the shared part of a config file. ConfigError on
/// malformed JSON, a missing or wrong schema_version, or bad shared entries.
/// default_format applies when neither the file nor the flags name one.
[[nodiscard]] Config load_config(const std::string& path, std::string_view command, const Overrides& overrides,
                                 std::string_view default_format = "json");

/// Runs f, reporting library and JSON errors as ConfigError.
template <class F>
auto as_config(std::string_view context, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const mero::Error& e) {
        if (e.code() == mero::ErrorCode::ConfigError) throw;
        throw mero::Error(mero::ErrorCode::ConfigError, std::string(context) + ": " + e.what());
    } catch (const json::exception& e) {
        throw mero::Error(mero::ErrorCode::ConfigError, std::string(context) + ": " + e.what());
    }
}

/// FNV-1a 64 of the text, as 16 hex digits.
[[nodiscard]] std::string fnv1a_hex(std::string_view text);

void check_keys(const json& obj, const std::vector<std::string_view>& allowed, std::string_view context);

[[nodiscard]] double get_real(const json& obj, const char* key, std::optional<double> fallback = std::nullopt);
[[nodiscard]] unsigned get_uint(const json& obj, const char* key, std::optional<unsigned> fallback = std::nullopt);
[[nodiscard]] Complex get_complex(const json& obj, const char* key, std::optional<Complex> fallback = std::nullopt);
[[nodiscard]] std::string get_string(const json& obj, const char* key,
                                     std::optional<std::string> fallback = std::nullopt);
[[nodiscard]] std::vector<double> get_reals(const json& obj, const char* key,
                                            std::optional<std::vector<double>> fallback = std::nullopt);

[[nodiscard]] mero::ClassParams read_params(const json& obj);

/// (lambda, mu) pairs from "points" and/or "grid". Pairs are not validated.
[[nodiscard]] std::vector<std::pair<double, Complex>> read_param_points(const json& obj);

/// The function under study: exactly one of "omega", "extremal", "catalog".
struct Subject {
    mero::ConstructionSpec spec;
    std::optional<mero::CatalogRequest> catalog;
    std::string source;

    /// Closed form for catalog entries that have one, quadrature otherwise.
    [[nodiscard]] mero::Mapping mapping() const;
};

[[nodiscard]] Subject read_subject(const json& obj, std::size_t order);
[[nodiscard]] mero::CatalogRequest read_catalog(const json& obj, double lambda, Complex mu);

[[nodiscard]] mero::FamilyTemplate read_family(const json& obj);
[[nodiscard]] mero::SamplingGrid read_grid(const json& obj, const char* key, mero::SamplingGrid fallback);

} // namespace merotool
