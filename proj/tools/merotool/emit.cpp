#include "emit.hpp"

#include <cmath>

#include "mero/io.hpp"

namespace merotool {

namespace {

void indent(std::ostream& out, int depth) {
    for (int i = 0; i < depth; ++i) out << "  ";
}

bool scalar_array(const json& j) {
    for (const auto& x : j) {
        if (x.is_structured()) return false;
    }
    return true;
}

void write_value(std::ostream& out, const json& j, int depth) {
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out << ",\n";
            first = false;
            indent(out, depth + 1);
            out << json(key).dump() << ": ";
            write_value(out, value, depth + 1);
        }
        out << '\n';
        indent(out, depth);
        out << '}';
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out << "[]";
            return;
        }
        if (scalar_array(j)) {
            out << '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out << ", ";
                write_value(out, j[i], depth);
            }
            out << ']';
            return;
        }
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out << ",\n";
            indent(out, depth + 1);
            write_value(out, j[i], depth + 1);
        }
        out << '\n';
        indent(out, depth);
        out << ']';
        return;
    }
    case json::value_t::number_float: {
        const double x = j.get<double>();
        out << (std::isfinite(x) ? mero::io::format_real(x) : "null");
        return;
    }
    default:
        out << j.dump();
    }
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

} // namespace

std::string cell(double x) { return mero::io::format_real(x); }
std::string cell(mero::Complex z) { return mero::io::format_complex(z); }
std::string cell(const std::optional<double>& x) { return x ? cell(*x) : "n/a"; }
std::string cell(std::size_t n) { return std::to_string(n); }
std::string cell(int n) { return std::to_string(n); }
std::string cell(bool b) { return b ? "true" : "false"; }

void write_json(std::ostream& out, const json& doc) {
    write_value(out, doc, 0);
    out << '\n';
}

void write_csv(std::ostream& out, const Provenance& prov, const Table& table) {
    out << "# tool: " << prov.tool << ' ' << prov.version << '\n';
    out << "# command: " << prov.command << '\n';
    out << "# config_hash: " << prov.config_hash << '\n';
    out << "# seed: " << prov.seed << '\n';
    for (const auto& [key, value] : table.notes) out << "# " << key << ": " << value << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(row[i]);
        }
        out << '\n';
    }
}

json provenance_json(const Provenance& prov) {
    return json{{"tool", prov.tool},
                {"version", prov.version},
                {"command", prov.command},
                {"config_hash", prov.config_hash},
                {"seed", prov.seed}};
}

} // namespace merotool
