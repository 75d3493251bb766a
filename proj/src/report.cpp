#include <ctid/report.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace ctid
{

namespace
{

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> columns = {"identity", "n", "a", "b", "m", "k", "lhs", "rhs", "match", "method",
                                          "elapsed_ms"};

std::string format_ms(double ms)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

// Cells of one row, empty for absent values.
std::vector<std::string> cells(const VerificationReport &r, const EmitOptions &opts)
{
    const auto opt_long = [](bool present, long v) { return present ? std::to_string(v) : std::string(); };
    return {r.identity,
            std::to_string(r.n),
            opt_long(r.params.has_value(), r.params ? r.params->a : 0),
            opt_long(r.params.has_value(), r.params ? r.params->b : 0),
            opt_long(r.params.has_value(), r.params ? r.params->m : 0),
            opt_long(r.k.has_value(), r.k.value_or(0)),
            r.lhs ? r.lhs->to_string() : "",
            r.rhs ? r.rhs->to_string() : "",
            r.match ? (*r.match ? "true" : "false") : "",
            to_string(r.method),
            opts.timing ? format_ms(r.elapsed_ms) : ""};
}

long parse_long(const std::string &s)
{
    const Integer z = parse_integer(s);
    if (!z.fits_slong_p()) {
        throw std::invalid_argument("integer field out of range: " + s);
    }
    return z.get_si();
}

bool parse_bool(const std::string &s)
{
    if (s == "true") {
        return true;
    }
    if (s == "false") {
        return false;
    }
    throw std::invalid_argument("not a boolean: '" + s + "'");
}

// Rebuilds a report from the cell strings of one row.
VerificationReport from_cells(const std::vector<std::string> &c)
{
    if (c.size() != columns.size()) {
        throw std::invalid_argument("report row has " + std::to_string(c.size()) + " fields, expected "
                                    + std::to_string(columns.size()));
    }
    VerificationReport r;
    r.identity = c[0];
    r.n = parse_long(c[1]);
    const bool has_a = !c[2].empty(), has_b = !c[3].empty(), has_m = !c[4].empty();
    if (has_a != has_b || has_b != has_m) {
        throw std::invalid_argument("report row has a partial parameter set");
    }
    if (has_a) {
        r.params = MorrisParams{parse_long(c[2]), parse_long(c[3]), parse_long(c[4])};
    }
    if (!c[5].empty()) {
        r.k = parse_long(c[5]);
    }
    if (!c[6].empty()) {
        r.lhs = parse_pi_power(c[6]);
    }
    if (!c[7].empty()) {
        r.rhs = parse_pi_power(c[7]);
    }
    if (!c[8].empty()) {
        r.match = parse_bool(c[8]);
    }
    r.method = method_from_string(c[9]);
    if (!c[10].empty()) {
        r.elapsed_ms = std::stod(c[10]);
    }
    return r;
}

std::vector<std::string> split(const std::string &line, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

OutputFormat format_from_string(const std::string &s)
{
    if (s == "text") {
        return OutputFormat::text;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    if (s == "csv") {
        return OutputFormat::csv;
    }
    throw std::invalid_argument("unknown output format '" + s + "'");
}

PiPower parse_pi_power(const std::string &s)
{
    const auto pi_pos = s.find("pi^(");
    if (pi_pos == std::string::npos) {
        return PiPower(parse_rational(s));
    }
    Rational r = 1;
    if (pi_pos > 0) {
        if (pi_pos < 2 || s[pi_pos - 1] != '*') {
            throw std::invalid_argument("malformed pi power '" + s + "'");
        }
        r = parse_rational(s.substr(0, pi_pos - 1));
    }
    const std::string tail = s.substr(pi_pos + 4);
    if (tail.size() < 4 || tail.substr(tail.size() - 3) != "/2)") {
        throw std::invalid_argument("malformed pi power '" + s + "'");
    }
    const long p = parse_long(tail.substr(0, tail.size() - 3));
    if (r == 0 || p == 0) {
        throw std::invalid_argument("non-canonical pi power '" + s + "'");
    }
    return PiPower(r, p);
}

std::string to_json(const std::vector<VerificationReport> &reports, const EmitOptions &opts)
{
    ordered_json arr = ordered_json::array();
    for (const auto &r : reports) {
        const auto c = cells(r, opts);
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const auto &name = columns[i];
            if (c[i].empty()) {
                obj[name] = nullptr;
            } else if (name == "identity" || name == "lhs" || name == "rhs" || name == "method"
                       || name == "elapsed_ms") {
                obj[name] = c[i];
            } else if (name == "match") {
                obj[name] = *r.match;
            } else {
                // n, a, b, m, k are small machine integers.
                obj[name] = parse_long(c[i]);
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<VerificationReport> &reports, const EmitOptions &opts)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        os << (i ? "," : "") << columns[i];
    }
    os << '\n';
    for (const auto &r : reports) {
        const auto c = cells(r, opts);
        for (std::size_t i = 0; i < c.size(); ++i) {
            os << (i ? "," : "") << c[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string to_text(const std::vector<VerificationReport> &reports, const EmitOptions &opts)
{
    std::vector<std::vector<std::string>> rows;
    rows.push_back(columns);
    for (const auto &r : reports) {
        rows.push_back(cells(r, opts));
    }
    std::vector<std::size_t> width(columns.size(), 0);
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].empty() ? std::size_t{1} : row[i].size());
        }
    }
    std::ostringstream os;
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const std::string cell = row[i].empty() ? "-" : row[i];
            os << (i ? "  " : "") << cell << std::string(width[i] - cell.size(), ' ');
        }
        os << '\n';
    }
    std::size_t matched = 0, compared = 0;
    for (const auto &r : reports) {
        if (r.match) {
            ++compared;
            matched += *r.match;
        }
    }
    os << matched << "/" << compared << " cases matched\n";
    return os.str();
}

std::string emit(OutputFormat fmt, const std::vector<VerificationReport> &reports, const EmitOptions &opts)
{
    switch (fmt) {
        case OutputFormat::text:
            return to_text(reports, opts);
        case OutputFormat::json:
            return to_json(reports, opts);
        case OutputFormat::csv:
            return to_csv(reports, opts);
    }
    throw std::logic_error("unknown output format");
}

std::vector<VerificationReport> parse_json_report(const std::string &text)
{
    ordered_json arr;
    try {
        arr = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed JSON report: ") + e.what());
    }
    if (!arr.is_array()) {
        throw std::invalid_argument("JSON report must be an array");
    }
    std::vector<VerificationReport> out;
    for (const auto &obj : arr) {
        if (!obj.is_object()) {
            throw std::invalid_argument("JSON report entries must be objects");
        }
        std::vector<std::string> c;
        for (const auto &name : columns) {
            if (!obj.contains(name)) {
                throw std::invalid_argument("JSON report entry lacks field '" + name + "'");
            }
            const auto &v = obj.at(name);
            if (v.is_null()) {
                c.emplace_back();
            } else if (v.is_string()) {
                c.push_back(v.get<std::string>());
            } else if (v.is_boolean()) {
                c.emplace_back(v.get<bool>() ? "true" : "false");
            } else if (v.is_number_integer()) {
                c.push_back(std::to_string(v.get<long>()));
            } else {
                throw std::invalid_argument("unexpected JSON type for field '" + name + "'");
            }
        }
        out.push_back(from_cells(c));
    }
    return out;
}

std::vector<VerificationReport> parse_csv_report(const std::string &text)
{
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || split(line, ',') != columns) {
        throw std::invalid_argument("CSV report lacks the expected header row");
    }
    std::vector<VerificationReport> out;
    while (std::getline(is, line)) {
        if (!line.empty()) {
            out.push_back(from_cells(split(line, ',')));
        }
    }
    return out;
}

} // namespace ctid
