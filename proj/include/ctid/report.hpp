#ifndef CTID_REPORT_HPP
#define CTID_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <ctid/identities.hpp>

namespace ctid
{

enum class OutputFormat { text, json, csv };

OutputFormat format_from_string(const std::string &s);

struct EmitOptions {
    // elapsed_ms is wall-clock dependent; without timing it is written as
    // null so that reports are reproducible byte for byte.
    bool timing = false;
};

// Inverse of PiPower::to_string. Throws std::invalid_argument.
PiPower parse_pi_power(const std::string &s);

// Field order: identity, n, a, b, m, k, lhs, rhs, match, method, elapsed_ms.
// Exact values are decimal strings; absent values are null (JSON) or empty
// (CSV).
std::string to_json(const std::vector<VerificationReport> &reports, const EmitOptions &opts = {});
std::string to_csv(const std::vector<VerificationReport> &reports, const EmitOptions &opts = {});
std::string to_text(const std::vector<VerificationReport> &reports, const EmitOptions &opts = {});

std::string emit(OutputFormat fmt, const std::vector<VerificationReport> &reports, const EmitOptions &opts = {});

// Parse reports written by to_json / to_csv. Timing values are kept when
// present. Throws std::invalid_argument on malformed input.
std::vector<VerificationReport> parse_json_report(const std::string &text);
std::vector<VerificationReport> parse_csv_report(const std::string &text);

} // namespace ctid

#endif
