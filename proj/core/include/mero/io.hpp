#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mero/explore.hpp"
#include "mero/schwarz.hpp"
#include "mero/series.hpp"
#include "mero/uclass.hpp"
#include "mero/verify.hpp"

namespace mero::io {

using nlohmann::json;

/// ConfigError unless obj is an object whose keys are all in `allowed`.
void check_keys(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view context);

[[nodiscard]] json to_json(Complex z);
/// [re, im] pair, or a bare number for a real value.
[[nodiscard]] Complex complex_from_json(const json& j, std::string_view context);

/// {"order": N, "coeffs": [[re, im], ...]}
[[nodiscard]] json to_json(const PowerSeries& s);
[[nodiscard]] PowerSeries series_from_json(const json& j);

/// {"kind": "constant"|"monomial"|"blaschke"|"mix", ...}
[[nodiscard]] json to_json(const SchwarzSpec& omega);
[[nodiscard]] SchwarzSpec schwarz_from_json(const json& j);

[[nodiscard]] json to_json(const ClassParams& params);
/// {"lambda": l, "mu": [re, im], "c": [re, im], "omega": {...}, "order": N}
[[nodiscard]] json to_json(const ConstructionSpec& spec);
[[nodiscard]] ConstructionSpec construction_from_json(const json& j);

[[nodiscard]] json to_json(const SamplingGrid& grid);
[[nodiscard]] SamplingGrid grid_from_json(const json& j);

[[nodiscard]] json to_json(const RegionVerdict& v);
[[nodiscard]] json to_json(const BoundReport& r);
[[nodiscard]] json to_json(const PointWitness& w);
[[nodiscard]] json to_json(const MembershipReport& r);
[[nodiscard]] json to_json(const LocalUnivalenceReport& r);
[[nodiscard]] json to_json(const UnivalenceReport& r);
[[nodiscard]] json to_json(const SubordinationReport& r);
[[nodiscard]] json to_json(const CriticalPointWitness& w);
[[nodiscard]] json to_json(const MaxReport& r);
[[nodiscard]] json to_json(const SweepRow& row);
[[nodiscard]] json to_json(const SubordinationRow& row);

/// 17 significant digits.
[[nodiscard]] std::string format_real(double x);
/// "re+imi" / "re-imi" with 17 significant digits on each part.
[[nodiscard]] std::string format_complex(Complex z);
[[nodiscard]] Complex parse_complex(std::string_view text);

} // namespace mero::io
