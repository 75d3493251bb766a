#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <ctid/cli.hpp>

using namespace ctid;

namespace
{

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::initializer_list<const char *> args)
{
    std::vector<const char *> argv{"ctid"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("ctid_test_" + name);
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("verify-cry json")
{
    const auto o = invoke({"verify-cry", "--n-max", "3", "--output", "json"});
    CHECK(o.code == exit_verified);
    const auto reports = parse_json_report(o.out);
    REQUIRE(reports.size() == 3);
    const long expected[] = {1, 2, 10};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(reports[i].n == static_cast<long>(i + 1));
        CHECK(reports[i].lhs == PiPower(expected[i]));
        CHECK(reports[i].rhs == PiPower(expected[i]));
        CHECK(reports[i].match == true);
    }
}

TEST_CASE("verify-morris with oracle")
{
    const auto o = invoke({"verify-morris", "--n", "2", "--a", "2", "--b", "0", "--m", "1", "--oracle", "--output",
                           "csv"});
    CHECK(o.code == exit_verified);
    const auto reports = parse_csv_report(o.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].lhs == PiPower(2));
    CHECK(reports[0].rhs == PiPower(2));
    CHECK(reports[0].method == Method::both);
    CHECK(reports[0].params == MorrisParams{2, 0, 1});
}

TEST_CASE("a corrupted right side is reported as a mismatch")
{
    RunConfig cfg;
    cfg.command = Command::verify_cry;
    cfg.n_max = 1;
    cfg.format = OutputFormat::csv;
    auto reports = execute(cfg);
    REQUIRE(exit_code(reports) == exit_verified);
    reports[0].rhs = PiPower(2);
    reports[0].settle();
    CHECK(exit_code(reports) == exit_mismatch);
    CHECK(parse_csv_report(to_csv(reports))[0].match == false);
}

TEST_CASE("ratio-table mismatches drive exit code 1")
{
    const auto o = invoke({"ratio-table", "--n-max", "3", "--a", "1", "--b", "0", "--m", "1"});
    CHECK(o.code == exit_mismatch);
    CHECK(o.err.find("mismatch") != std::string::npos);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(invoke({}).code == exit_usage);
    CHECK(invoke({"verify-everything"}).code == exit_usage);
    CHECK(invoke({"verify-cry"}).code == exit_usage);
    CHECK(invoke({"verify-cry", "--n", "0"}).code == exit_usage);
    CHECK(invoke({"verify-cry", "--n-min", "4", "--n-max", "2"}).code == exit_usage);
    CHECK(invoke({"verify-cry", "--n", "2", "--n-max", "3"}).code == exit_usage);
    CHECK(invoke({"verify-cry", "--n", "2", "--output", "xml"}).code == exit_usage);
    CHECK(invoke({"verify-cry", "--n", "2", "--a", "1", "--b", "0", "--m", "1"}).code == exit_usage);
    CHECK(invoke({"verify-cry", "--n", "2", "--threads", "0"}).code == exit_usage);
    CHECK(invoke({"verify-morris", "--n", "2"}).code == exit_usage);
    CHECK(invoke({"verify-morris", "--n", "2", "--a", "1"}).code == exit_usage);
    CHECK(invoke({"verify-morris", "--n", "2", "--a", "0", "--b", "0", "--m", "1"}).code == exit_usage);
    CHECK(invoke({"verify-cry", "--n", "2", "--problem", "x.json"}).code == exit_usage);
    CHECK(invoke({"ct-eval", "--problem", scratch("missing.json").c_str()}).code == exit_usage);
}

TEST_CASE("help exits cleanly")
{
    const auto o = invoke({"--help"});
    CHECK(o.code == exit_verified);
    CHECK(o.out.find("verify-cry") != std::string::npos);
}

TEST_CASE("output does not depend on thread count")
{
    const auto one = invoke({"verify-cry", "--n-max", "5", "--output", "json", "--threads", "1"});
    const auto eight = invoke({"verify-cry", "--n-max", "5", "--output", "json", "--threads", "8"});
    CHECK(one.code == exit_verified);
    CHECK(one.out == eight.out);

    const auto c1 = invoke({"verify-conjecture2", "--n-max", "4", "--output", "csv", "--threads", "1"});
    const auto c3 = invoke({"verify-conjecture2", "--n-max", "4", "--output", "csv", "--threads", "3"});
    CHECK(c1.out == c3.out);
}

TEST_CASE("--oracle only adds the cross-check")
{
    const auto plain = parse_json_report(
        invoke({"verify-morris", "--n-max", "3", "--a", "2", "--b", "1", "--m", "2", "--output", "json"}).out);
    const auto checked = parse_json_report(
        invoke({"verify-morris", "--n-max", "3", "--a", "2", "--b", "1", "--m", "2", "--output", "json", "--oracle"})
            .out);
    REQUIRE(plain.size() == checked.size());
    for (std::size_t i = 0; i < plain.size(); ++i) {
        CHECK(plain[i].lhs == checked[i].lhs);
        CHECK(plain[i].rhs == checked[i].rhs);
        CHECK(plain[i].method == Method::kernel);
        CHECK(checked[i].method == Method::both);
    }
}

TEST_CASE("--report writes a structured file next to the text table")
{
    const auto path = scratch("report.json");
    std::filesystem::remove(path);
    const auto o = invoke({"verify-conjecture2", "--n", "3", "--report", path.c_str()});
    CHECK(o.code == exit_verified);
    CHECK(o.out.find("conjecture2-sum") != std::string::npos);
    const auto reports = parse_json_report(slurp(path));
    REQUIRE(reports.size() == 5);
    CHECK(reports.back().identity == "conjecture2-sum");
    CHECK(reports.back().lhs == PiPower(10));
    std::filesystem::remove(path);

    const auto csv_path = scratch("report.csv");
    CHECK(invoke({"duplication-table", "--n-max", "4", "--output", "csv", "--report", csv_path.c_str()}).code
          == exit_verified);
    CHECK(parse_csv_report(slurp(csv_path)).size() == 4);
    std::filesystem::remove(csv_path);
}

TEST_CASE("ct-eval on a problem file")
{
    const auto path = scratch("problem.json");
    {
        std::ofstream f(path);
        f << R"({"num_vars": 2, "target": [0, 1],
                 "factors": [{"base": [1, 1], "multiplicity": 2},
                             {"base": [0, 1], "multiplicity": 2},
                             {"base": [1, 0], "multiplicity": 1}]})";
    }
    const auto o = invoke({"ct-eval", "--problem", path.c_str(), "--oracle", "--output", "json"});
    CHECK(o.code == exit_verified);
    const auto reports = parse_json_report(o.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].lhs == PiPower(2));
    CHECK_FALSE(reports[0].match.has_value());

    {
        std::ofstream f(path);
        f << R"({"num_vars": 2, "target": [0], "factors": []})";
    }
    CHECK(invoke({"ct-eval", "--problem", path.c_str()}).code == exit_usage);
    {
        std::ofstream f(path);
        f << "[1, 2";
    }
    CHECK(invoke({"ct-eval", "--problem", path.c_str()}).code == exit_usage);
    std::filesystem::remove(path);
}

TEST_CASE("ct-eval on built Morris problems")
{
    const auto o = invoke({"ct-eval", "--n-max", "4", "--output", "csv"});
    const auto reports = parse_csv_report(o.out);
    REQUIRE(reports.size() == 4);
    CHECK(reports[3].lhs == PiPower(140));
    CHECK(reports[3].params == cry_params);
}

TEST_CASE("internal failures exit with 3")
{
    // The truncation box of this target cannot be addressed in 64 bits.
    const auto path = scratch("huge.json");
    {
        std::ofstream f(path);
        f << R"({"num_vars": 3, "target": [1, 4611686018427387904, 4611686018427387904],
                 "factors": [{"base": [1, 1, 1], "multiplicity": 1}]})";
    }
    const auto o = invoke({"ct-eval", "--problem", path.c_str()});
    CHECK(o.code == exit_internal);
    CHECK(o.err.find("internal error") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("command names")
{
    for (auto c : {Command::verify_cry, Command::verify_morris, Command::verify_conjecture2, Command::ratio_table,
                   Command::duplication_table, Command::ct_eval}) {
        CHECK(command_from_string(to_string(c)) == c);
    }
    CHECK_THROWS_AS(command_from_string("nope"), UsageError);
}
