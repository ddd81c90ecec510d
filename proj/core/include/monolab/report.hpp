#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "monolab/bounds.hpp"

namespace monolab {

/// Provenance header emitted as `#`-prefixed comment lines at the top of
/// every output file. The timestamp honours SOURCE_DATE_EPOCH and reads
/// "unset" otherwise, so identical invocations produce identical bytes.
struct RunManifest {
    std::string command_line;
    std::uint64_t seed = 0;
    std::string version;
    std::string timestamp;

    static RunManifest make(std::string command_line, std::uint64_t seed);
};

std::string manifest_comment_block(const RunManifest& m);

/// 12 significant digits; well above every tolerance, below double noise.
std::string format_value(double v);

/// Header `exponent,<family names...>`, one row per grid point, LF endings.
void write_curve_csv(std::ostream& out, const BoundCurve& curve, const RunManifest& manifest);

/// Inverse of write_curve_csv (comment lines are skipped). Values round-trip
/// losslessly at 12 significant digits.
BoundCurve parse_curve_csv(std::istream& in);

void write_curve_json(std::ostream& out, const BoundCurve& curve, const RunManifest& manifest);

}  // namespace monolab
