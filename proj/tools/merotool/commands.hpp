#pragma once

#include <string_view>

#include "config.hpp"
#include "emit.hpp"

namespace merotool {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRefuted = 3;

struct Outcome {
    json doc = json::object();
    Table table;
    int exit_code = kExitOk;
};

using CommandFn = Outcome (*)(const Config&);

struct CommandInfo {
    std::string_view name;
    std::string_view summary;
    CommandFn run;
    std::string_view default_format;
};

[[nodiscard]] const std::vector<CommandInfo>& commands();

Outcome cmd_construct(const Config& cfg);
Outcome cmd_verify(const Config& cfg);
Outcome cmd_coeffs(const Config& cfg);
Outcome cmd_bounds(const Config& cfg);
Outcome cmd_classify(const Config& cfg);
Outcome cmd_extremal(const Config& cfg);
Outcome cmd_maximize(const Config& cfg);
Outcome cmd_subordination(const Config& cfg);
Outcome cmd_sweep(const Config& cfg);
Outcome cmd_plotdata(const Config& cfg);

} // namespace merotool
