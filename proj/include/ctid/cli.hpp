#ifndef CTID_CLI_HPP
#define CTID_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <ctid/identities.hpp>
#include <ctid/report.hpp>

namespace ctid
{

enum class Command { verify_cry, verify_morris, verify_conjecture2, ratio_table, duplication_table, ct_eval };

std::string to_string(Command c);
Command command_from_string(const std::string &s);

enum ExitCode : int { exit_verified = 0, exit_mismatch = 1, exit_usage = 2, exit_internal = 3 };

// Invalid command line or configuration.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    Command command = Command::verify_cry;
    // Inclusive range. duplication-table reads it as the range of 2z.
    long n_min = 1;
    long n_max = 1;
    std::optional<MorrisParams> params;
    bool oracle = false;
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> report_path;
    unsigned threads = 1;
    bool timing = false;
    // ct-eval only: a y-space problem file instead of a built Morris problem.
    std::optional<std::string> problem_path;

    // Throws UsageError.
    void validate() const;
};

// Parses argv (argv[0] is the program name). Throws UsageError; returns
// std::nullopt after printing help to out when --help was given.
std::optional<RunConfig> parse_args(int argc, const char *const *argv, std::ostream &out);

// {"num_vars": 2, "target": [0, 1],
//  "factors": [{"base": [1, 1], "multiplicity": 2}, ...]}
CTProblem parse_problem_json(const std::string &text);

// Runs every case of the configured command, using config.threads workers.
// Reports come back in case order regardless of scheduling.
std::vector<VerificationReport> execute(const RunConfig &config);

// exit_verified iff every report that compares two sides matched.
int exit_code(const std::vector<VerificationReport> &reports);

// execute + emit + exit code; all errors are mapped to exit codes and
// described on err.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

// parse_args + run.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace ctid

#endif
