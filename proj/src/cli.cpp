#include <ctid/cli.hpp>

#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace ctid
{

namespace
{

const std::vector<std::pair<Command, std::string>> command_names = {
    {Command::verify_cry, "verify-cry"},
    {Command::verify_morris, "verify-morris"},
    {Command::verify_conjecture2, "verify-conjecture2"},
    {Command::ratio_table, "ratio-table"},
    {Command::duplication_table, "duplication-table"},
    {Command::ct_eval, "ct-eval"},
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

using Case = std::function<std::vector<VerificationReport>()>;

std::vector<Case> build_cases(const RunConfig &cfg)
{
    std::vector<Case> cases;
    const bool oracle = cfg.oracle;
    const MorrisParams params = cfg.params.value_or(cry_params);
    if (cfg.command == Command::ct_eval && cfg.problem_path) {
        const CTProblem problem = parse_problem_json(read_file(*cfg.problem_path));
        cases.push_back([problem, oracle] {
            VerificationReport r;
            r.identity = "ct-eval";
            r.n = static_cast<long>(problem.num_vars);
            r.lhs = PiPower(Rational(eval_ct(problem, oracle)));
            r.method = oracle ? Method::both : Method::kernel;
            return std::vector{r};
        });
        return cases;
    }
    for (long n = cfg.n_min; n <= cfg.n_max; ++n) {
        switch (cfg.command) {
            case Command::verify_cry:
                cases.push_back([n, oracle] { return std::vector{verify_cry(n, oracle)}; });
                break;
            case Command::verify_morris:
                cases.push_back([n, params, oracle] { return std::vector{verify_morris(n, params, oracle)}; });
                break;
            case Command::verify_conjecture2:
                cases.push_back([n, oracle] {
                    auto rows = conjecture2_rows(n, oracle);
                    Integer sum = 0;
                    for (const auto &r : rows) {
                        sum += r.lhs->rational().get_num();
                    }
                    VerificationReport total;
                    total.identity = "conjecture2-sum";
                    total.n = n;
                    total.lhs = PiPower(Rational(sum));
                    total.rhs = PiPower(Rational(catalan_product(n)));
                    total.method = rows.front().method;
                    for (const auto &r : rows) {
                        total.elapsed_ms += r.elapsed_ms;
                    }
                    total.settle();
                    rows.push_back(total);
                    return rows;
                });
                break;
            case Command::ratio_table:
                cases.push_back([n, params] { return std::vector{ratio_row(n, params)}; });
                break;
            case Command::duplication_table:
                cases.push_back([n] { return std::vector{duplication_row(HalfInteger::from_twice(n))}; });
                break;
            case Command::ct_eval:
                cases.push_back([n, params, oracle] {
                    VerificationReport r;
                    r.identity = "ct-eval";
                    r.n = n;
                    r.params = params;
                    r.lhs = PiPower(Rational(eval_ct(build_morris_problem(n, params), oracle)));
                    r.method = oracle ? Method::both : Method::kernel;
                    return std::vector{r};
                });
                break;
        }
    }
    return cases;
}

void write_report_file(const RunConfig &cfg, const std::vector<VerificationReport> &reports)
{
    // A text run still writes a structured file: JSON.
    const OutputFormat fmt = cfg.format == OutputFormat::csv ? OutputFormat::csv : OutputFormat::json;
    std::ofstream out(*cfg.report_path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write report to '" + *cfg.report_path + "'");
    }
    out << emit(fmt, reports, EmitOptions{cfg.timing});
    if (!out) {
        throw std::runtime_error("failed writing report to '" + *cfg.report_path + "'");
    }
}

} // namespace

std::string to_string(Command c)
{
    for (const auto &[cmd, name] : command_names) {
        if (cmd == c) {
            return name;
        }
    }
    throw std::logic_error("unknown command");
}

Command command_from_string(const std::string &s)
{
    for (const auto &[cmd, name] : command_names) {
        if (name == s) {
            return cmd;
        }
    }
    throw UsageError("unknown command '" + s + "'");
}

void RunConfig::validate() const
{
    if (n_min < 1) {
        throw UsageError("n must be >= 1");
    }
    if (n_max < n_min) {
        throw UsageError("empty n range " + std::to_string(n_min) + ".." + std::to_string(n_max));
    }
    if (threads < 1) {
        throw UsageError("thread count must be >= 1");
    }
    const bool needs_params = command == Command::verify_morris;
    const bool takes_params = needs_params || command == Command::ratio_table || command == Command::ct_eval;
    if (needs_params && !params) {
        throw UsageError(to_string(command) + " requires --a, --b and --m");
    }
    if (!takes_params && params) {
        throw UsageError(to_string(command) + " does not take Morris parameters");
    }
    if (params) {
        try {
            params->validate();
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    if (problem_path && command != Command::ct_eval) {
        throw UsageError("--problem applies to ct-eval only");
    }
    if (problem_path && params) {
        throw UsageError("--problem cannot be combined with Morris parameters");
    }
}

std::optional<RunConfig> parse_args(int argc, const char *const *argv, std::ostream &out)
{
    CLI::App app{"Exact verification of constant-term identities", "ctid"};
    app.require_subcommand(1);

    struct Raw {
        long n = 0, n_min = 1, n_max = 0;
        long a = 0, b = 0, m = 0;
        bool oracle = false, timing = false;
        std::string output = "text";
        std::string report;
        unsigned threads = 1;
        std::string problem;
    };
    Raw raw;
    struct Handles {
        CLI::Option *n, *n_min, *n_max, *a, *b, *m, *report, *problem;
    };
    std::vector<std::pair<CLI::App *, Handles>> subs;

    for (const auto &[cmd, name] : command_names) {
        static const std::map<Command, std::string> blurb = {
            {Command::verify_cry, "Catalan-product constant term against catalan_product(n)"},
            {Command::verify_morris, "Morris constant term against the Gamma-product evaluation"},
            {Command::verify_conjecture2, "t-refined family: per-k values and their Catalan-product sum"},
            {Command::ratio_table, "M_n / M_{n-1} next to catalan(n)"},
            {Command::duplication_table, "Legendre duplication at z = n/2"},
            {Command::ct_eval, "Evaluate a constant term (Morris problem or --problem file)"},
        };
        CLI::App *sub = app.add_subcommand(name, blurb.at(cmd));
        Handles h{};
        h.n = sub->add_option("--n", raw.n, "Single n");
        h.n_min = sub->add_option("--n-min", raw.n_min, "First n of a range (default 1)");
        h.n_max = sub->add_option("--n-max", raw.n_max, "Last n of a range");
        h.n->excludes(h.n_min)->excludes(h.n_max);
        h.a = sub->add_option("--a", raw.a, "Exponent of (1 - x_i)");
        h.b = sub->add_option("--b", raw.b, "Exponent of x_i");
        h.m = sub->add_option("--m", raw.m, "Twice the Vandermonde exponent c");
        sub->add_flag("--oracle", raw.oracle, "Cross-check every constant term with the Diophantine oracle");
        sub->add_option("--output", raw.output, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
        h.report = sub->add_option("--report", raw.report, "Write the structured report to this file");
        sub->add_option("--threads", raw.threads, "Worker threads across cases (default 1)");
        sub->add_flag("--timing", raw.timing, "Record elapsed_ms in reports");
        h.problem = sub->add_option("--problem", raw.problem, "ct-eval: JSON problem file");
        subs.emplace_back(sub, h);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    RunConfig cfg;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        const auto &[sub, h] = subs[i];
        if (!sub->parsed()) {
            continue;
        }
        cfg.command = command_names[i].first;
        if (h.n->count()) {
            cfg.n_min = cfg.n_max = raw.n;
        } else if (h.n_max->count()) {
            cfg.n_min = raw.n_min;
            cfg.n_max = raw.n_max;
        } else if (!(cfg.command == Command::ct_eval && h.problem->count())) {
            throw UsageError(to_string(cfg.command) + " needs --n or --n-max");
        }
        const auto given = h.a->count() + h.b->count() + h.m->count();
        if (given == 3) {
            cfg.params = MorrisParams{raw.a, raw.b, raw.m};
        } else if (given != 0) {
            throw UsageError("--a, --b and --m must be given together");
        }
        if (h.report->count()) {
            cfg.report_path = raw.report;
        }
        if (h.problem->count()) {
            cfg.problem_path = raw.problem;
        }
    }
    cfg.oracle = raw.oracle;
    cfg.timing = raw.timing;
    cfg.threads = raw.threads;
    cfg.format = format_from_string(raw.output);
    cfg.validate();
    return cfg;
}

CTProblem parse_problem_json(const std::string &text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        CTProblem p;
        p.num_vars = j.at("num_vars").get<std::size_t>();
        p.target = j.at("target").get<ExponentVector>();
        for (const auto &f : j.at("factors")) {
            p.factors.push_back({f.at("base").get<ExponentVector>(), f.at("multiplicity").get<long>()});
        }
        p.validate();
        return p;
    } catch (const nlohmann::json::exception &e) {
        throw UsageError(std::string("malformed problem file: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("invalid problem: ") + e.what());
    }
}

std::vector<VerificationReport> execute(const RunConfig &config)
{
    config.validate();
    const auto cases = build_cases(config);
    std::vector<std::vector<VerificationReport>> results(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                results[i] = cases[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t nthreads = std::min<std::size_t>(config.threads, cases.size());
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) {
            pool.emplace_back(worker);
        }
    }
    // The first failing case by index decides, independent of scheduling.
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<VerificationReport> reports;
    for (auto &r : results) {
        reports.insert(reports.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    }
    return reports;
}

int exit_code(const std::vector<VerificationReport> &reports)
{
    for (const auto &r : reports) {
        if (r.match && !*r.match) {
            return exit_mismatch;
        }
    }
    return exit_verified;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        const auto reports = execute(config);
        out << emit(config.format, reports, EmitOptions{config.timing});
        if (config.report_path) {
            write_report_file(config, reports);
        }
        const int code = exit_code(reports);
        if (code == exit_mismatch) {
            err << "ctid: identity mismatch\n";
        }
        return code;
    } catch (const UsageError &e) {
        err << "ctid: " << e.what() << '\n';
        return exit_usage;
    } catch (const OracleMismatchError &e) {
        err << "ctid: internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const PiCancellationError &e) {
        err << "ctid: internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::exception &e) {
        err << "ctid: internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    std::optional<RunConfig> cfg;
    try {
        cfg = parse_args(argc, argv, out);
    } catch (const UsageError &e) {
        err << "ctid: " << e.what() << "\nRun with --help for usage.\n";
        return exit_usage;
    }
    if (!cfg) {
        return exit_verified;
    }
    return run(*cfg, out, err);
}

} // namespace ctid
