#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mero/series.hpp"

namespace merotool {

using nlohmann::json;

struct Provenance {
    std::string tool = "merotool";
    std::string version;
    std::string command;
    std::string config_hash;
    std::uint64_t seed = 0;
};

/// CSV body: scalar notes become "# key: value" lines above the header.
struct Table {
    std::vector<std::pair<std::string, std::string>> notes;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }
};

[[nodiscard]] std::string cell(double x);
[[nodiscard]] std::string cell(mero::Complex z);
[[nodiscard]] std::string cell(const std::optional<double>& x);
[[nodiscard]] std::string cell(std::size_t n);
[[nodiscard]] std::string cell(int n);
[[nodiscard]] std::string cell(bool b);

/// Pretty-printed JSON with every double at 17 significant digits and
/// non-finite values as null.
void write_json(std::ostream& out, const json& doc);
void write_csv(std::ostream& out, const Provenance& prov, const Table& table);

[[nodiscard]] json provenance_json(const Provenance& prov);

} // namespace merotool
