#include "monolab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "monolab/version.hpp"

namespace monolab {

RunManifest RunManifest::make(std::string command_line, std::uint64_t seed) {
    RunManifest m;
    m.command_line = std::move(command_line);
    m.seed = seed;
    m.version = kVersion;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        const std::time_t t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        m.timestamp = buf;
    } else {
        m.timestamp = "unset";
    }
    return m;
}

std::string manifest_comment_block(const RunManifest& m) {
    std::ostringstream os;
    os << "# command: " << m.command_line << "\n"
       << "# seed: " << m.seed << "\n"
       << "# version: " << m.version << "\n"
       << "# timestamp: " << m.timestamp << "\n";
    return os.str();
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_curve_csv(std::ostream& out, const BoundCurve& curve, const RunManifest& manifest) {
    out << manifest_comment_block(manifest);
    out << "exponent";
    for (const auto& [name, values] : curve.families) out << "," << name;
    out << "\n";
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        out << format_value(curve.grid[i]);
        for (const auto& [name, values] : curve.families) out << "," << format_value(values[i]);
        out << "\n";
    }
}

BoundCurve parse_curve_csv(std::istream& in) {
    BoundCurve curve;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!have_header) {
            if (cells.empty() || cells[0] != "exponent")
                throw std::invalid_argument("curve csv: header must start with `exponent`");
            for (std::size_t c = 1; c < cells.size(); ++c)
                curve.families.emplace_back(cells[c], std::vector<double>{});
            have_header = true;
            continue;
        }
        if (cells.size() != curve.families.size() + 1)
            throw std::invalid_argument("curve csv: row width does not match header");
        curve.grid.push_back(std::stod(cells[0]));
        for (std::size_t c = 1; c < cells.size(); ++c)
            curve.families[c - 1].second.push_back(std::stod(cells[c]));
    }
    if (!have_header) throw std::invalid_argument("curve csv: missing header");
    return curve;
}

void write_curve_json(std::ostream& out, const BoundCurve& curve, const RunManifest& manifest) {
    nlohmann::ordered_json j;
    j["manifest"] = {{"command", manifest.command_line},
                     {"seed", manifest.seed},
                     {"version", manifest.version},
                     {"timestamp", manifest.timestamp}};
    j["exponent"] = curve.grid;
    for (const auto& [name, values] : curve.families) j[name] = values;
    out << j.dump(2) << "\n";
}

}  // namespace monolab
