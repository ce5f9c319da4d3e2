#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tanglekit/cli.hpp"
#include "tanglekit/kernels.hpp"
#include "tanglekit/monogamy.hpp"

using namespace tanglekit;

namespace {

struct cli_result {
    int code = -1;
    std::string out, err;
};

cli_result run(const std::vector<std::string>& args)
{
    std::ostringstream o, e;
    cli_result r;
    r.code = run_cli(args, o, e);
    r.out = o.str();
    r.err = e.str();
    return r;
}

std::string tmp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("tanglekit_test_" + name)).string();
}

std::string write_file(const std::string& name, const std::string& text)
{
    std::string path = tmp_path(name);
    std::ofstream f(path);
    f << text;
    return path;
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// value column of the first report line whose key starts with `key`
std::string text_value(const std::string& out, const std::string& key)
{
    std::istringstream is(out);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind(key, 0) != 0) continue;
        std::istringstream ls(line);
        std::string tok, last;
        while (ls >> tok) last = tok;
        return last;
    }
    return "<missing:" + key + ">";
}

double text_num(const std::string& out, const std::string& key)
{
    return std::stod(text_value(out, key));
}

const char* ghz4_text = "# four-qubit GHZ\n0000 1 0\n1111 1 0\n";
const char* psi_text = "0000 1 0\n0101 1 0\n1000 1 0\n1110 1 0\n";
const char* ghz3_text = "000 1 0\n111 1 0\n";
const char* w3_text = "100 1 0\n010 1 0\n001 1 0\n";
const char* bell_text = "00 1 0\n11 1 0\n";

} // namespace

TEST_CASE("eval text report on a four-qubit state")
{
    std::string path = write_file("ghz4.txt", ghz4_text);
    cli_result r = run({"eval", "--state", path, "--restarts", "8"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    CHECK(text_num(r.out, "one_tangle") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(text_num(r.out, "tau0") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(text_num(r.out, "genuine_four_tangle") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(text_num(r.out, "delta") == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(text_num(r.out, "delta_lb") == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(text_value(r.out, "delta_lb_applicable") == "yes");
    CHECK(text_value(r.out, "lb_below_delta") == "yes");
    CHECK(text_value(r.out, "roofs_converged") == "yes");
    CHECK(text_num(r.out, "beta_12") == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("eval json report round-trips")
{
    std::string path = write_file("psi.txt", psi_text);
    cli_result r = run({"eval", "--state", path, "--restarts", "8", "--seed", "5", "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "four_qubit_report");
    CHECK(j["focus"] == 1);
    CHECK(j["one_tangle"].get<double>() == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(j["delta"].get<double>() == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(j["delta1"].get<double>() == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(j["delta2"].get<double>() == doctest::Approx(0.375).epsilon(1e-6));
    CHECK(j["three_tangle_roofs"]["123"].get<double>() == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(j["new_two_tangles"]["12"].get<double>() == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(j["verdicts"]["delta_nonneg"] == true);
    CHECK(j["verdicts"]["delta2_nonneg"] == true);

    // serialization is stable under a parse/dump cycle
    CHECK(nlohmann::json::parse(j.dump(2)) == j);
}

TEST_CASE("eval on a product state reports no correlations")
{
    std::string path = write_file("prod4.txt", "0110 2 0\n");
    cli_result r = run({"eval", "--state", path, "--restarts", "4"});
    REQUIRE(r.code == 0);
    CHECK(text_num(r.out, "one_tangle") == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(text_num(r.out, "delta") == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(text_value(r.out, "delta_lb_applicable") == "no");
    CHECK(text_value(r.out, "lb_below_delta") == "yes");
}

TEST_CASE("eval handles three-qubit files")
{
    std::string g3 = write_file("ghz3.txt", ghz3_text);
    cli_result r = run({"eval", "--state", g3, "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "three_qubit_report");
    CHECK(j["one_tangle"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["three_tangle"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));

    std::string w3 = write_file("w3.txt", w3_text);
    cli_result rw = run({"eval", "--state", w3});
    REQUIRE(rw.code == 0);
    CHECK(text_num(rw.out, "one_tangle") == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    CHECK(text_num(rw.out, "three_tangle") == doctest::Approx(0.0).epsilon(1e-12));

    // symmetric state: any focus gives the same numbers
    cli_result rf = run({"eval", "--state", g3, "--focus", "3"});
    REQUIRE(rf.code == 0);
    CHECK(text_num(rf.out, "three_tangle") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eval handles two-qubit files")
{
    std::string path = write_file("bell.txt", bell_text);
    cli_result r = run({"eval", "--state", path, "--json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "two_qubit_report");
    CHECK(j["concurrence"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["one_tangle"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eval error paths map to distinct exit codes")
{
    cli_result missing = run({"eval", "--state", tmp_path("no_such_file.txt")});
    CHECK(missing.code == 4);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    std::string bad = write_file("bad.txt", "0000 1 0\nx100 1 0\n");
    cli_result parse = run({"eval", "--state", bad});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("line 2") != std::string::npos);

    std::string five = write_file("five.txt", "00000 1 0\n");
    CHECK(run({"eval", "--state", five}).code == 3);

    std::string g4 = write_file("ghz4b.txt", ghz4_text);
    CHECK(run({"eval", "--state", g4, "--focus", "5"}).code == 3);
    CHECK(run({"eval", "--state", g4, "--focus", "0"}).code == 3);
}

TEST_CASE("sweep writes a deterministic csv")
{
    std::string csv1 = tmp_path("sweep1.csv");
    cli_result r = run({"sweep", "--family", "g2ia", "--min", "0", "--max", "1", "--steps", "3",
                        "--out", csv1, "--seed", "7", "--restarts", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("wrote 3 rows") != std::string::npos);

    std::string body = slurp(csv1);
    std::istringstream is(body);
    std::string header, row0;
    std::getline(is, header);
    std::getline(is, row0);
    CHECK(header == sweep_csv_header());
    CHECK(row0.substr(0, row0.find(',')) == "0");
    int lines = 2;
    for (std::string l; std::getline(is, l);)
        if (!l.empty()) ++lines;
    CHECK(lines == 4); // header + 3 rows

    // same seed and grid give a byte-identical file
    std::string csv2 = tmp_path("sweep2.csv");
    cli_result r2 = run({"sweep", "--family", "g2ia", "--min", "0", "--max", "1", "--steps", "3",
                         "--out", csv2, "--seed", "7", "--restarts", "4"});
    REQUIRE(r2.code == 0);
    CHECK(slurp(csv2) == body);
}

TEST_CASE("sweep collapses a degenerate range to one row")
{
    std::string csv = tmp_path("sweep_one.csv");
    cli_result r = run({"sweep", "--family", "g2ia", "--min", "1", "--max", "1", "--steps", "5",
                        "--out", csv, "--seed", "7", "--restarts", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("wrote 1 rows") != std::string::npos);

    std::istringstream is(slurp(csv));
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    roof_options opts;
    opts.seed = 7;
    opts.restarts = 4;
    std::vector<sweep_row> expect = sweep_family(1.0, 1.0, 1, 1, opts);
    REQUIRE(expect.size() == 1);
    CHECK(row == sweep_csv_row(expect[0]));
}

TEST_CASE("sweep argument validation")
{
    std::string csv = tmp_path("sweep_err.csv");
    cli_result fam = run({"sweep", "--family", "nope", "--min", "0", "--max", "1", "--steps", "3",
                          "--out", csv});
    CHECK(fam.code == 2);
    CHECK(fam.err.find("unknown family") != std::string::npos);

    CHECK(run({"sweep", "--family", "g2ia", "--min", "0", "--max", "1", "--steps", "1", "--out",
               csv}).code
          == 2);
    CHECK(run({"sweep", "--family", "g2ia", "--min", "-1", "--max", "1", "--steps", "3", "--out",
               csv}).code
          == 2);
    CHECK(run({"sweep", "--family", "g2ia", "--min", "2", "--max", "1", "--steps", "3", "--out",
               csv}).code
          == 2);
    CHECK(run({"sweep", "--family", "g2ia", "--min", "0", "--max", "1", "--steps", "3", "--out",
               "/no_such_dir_zz/x.csv"})
              .code
          == 4);
}

TEST_CASE("check verifies identities on files and random batches")
{
    cli_result rnd = run({"check", "--random", "20", "--seed", "3"});
    REQUIRE(rnd.code == 0);
    CHECK(rnd.out.find("checked 20 random 4-qubit states") != std::string::npos);
    CHECK(rnd.out.find("FAIL") == std::string::npos);
    CHECK(rnd.out.find("one-tangle decomposition") != std::string::npos);

    std::string g4 = write_file("ghz4c.txt", ghz4_text);
    cli_result st4 = run({"check", "--state", g4});
    CHECK(st4.code == 0);
    CHECK(st4.out.find("|I48| relabeling invariance") != std::string::npos);

    std::string g3 = write_file("ghz3c.txt", ghz3_text);
    cli_result st3 = run({"check", "--state", g3});
    CHECK(st3.code == 0);
    CHECK(st3.out.find("two-row discriminant agreement") != std::string::npos);

    std::string b = write_file("bellc.txt", bell_text);
    cli_result st2 = run({"check", "--state", b});
    CHECK(st2.code == 0);
    CHECK(st2.out.find("concurrence") != std::string::npos);

    CHECK(run({"check"}).code == 2);
    // --state and --random are mutually exclusive
    CHECK(run({"check", "--state", g4, "--random", "5"}).code == 2);
}

TEST_CASE("seed resolution prefers the flag, then the environment")
{
    std::string path = write_file("psi_seed.txt", psi_text);
    setenv("TANGLEKIT_SEED", "7", 1);
    cli_result from_env = run({"eval", "--state", path, "--restarts", "4", "--json"});
    cli_result from_flag =
        run({"eval", "--state", path, "--restarts", "4", "--seed", "7", "--json"});
    unsetenv("TANGLEKIT_SEED");
    REQUIRE(from_env.code == 0);
    REQUIRE(from_flag.code == 0);
    CHECK(from_env.out == from_flag.out);

    setenv("TANGLEKIT_SEED", "not_a_number", 1);
    cli_result bad_env = run({"eval", "--state", path, "--restarts", "4", "--json"});
    unsetenv("TANGLEKIT_SEED");
    cli_result zero = run({"eval", "--state", path, "--restarts", "4", "--seed", "0", "--json"});
    CHECK(bad_env.out == zero.out);
}

TEST_CASE("top-level parsing")
{
    cli_result help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("eval") != std::string::npos);
    CHECK(help.out.find("sweep") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    // eval requires --state
    CHECK(run({"eval"}).code == 2);
}
