#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mtsp/bench.hpp"
#include "mtsp/cli.hpp"
#include "mtsp/error.hpp"
#include "mtsp/solution_io.hpp"

using namespace mtsp;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "mtsp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("mtsp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }

    fs::path dir;
};

}  // namespace

TEST_F(CliTest, GenWritesValidInstance) {
    const CliResult r = cli({"gen", "--k", "5", "--n", "20", "--seed", "42", "--region", "0,0,10,10", "--out", path("inst.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const Instance inst = load_instance(path("inst.json"));
    EXPECT_EQ(inst, generate_instance(5, 20, {0, 0, 10, 10}, 42));
}

TEST_F(CliTest, SolveWritesSolutionAndPlots) {
    ASSERT_EQ(cli({"gen", "--k", "5", "--n", "20", "--seed", "42", "--out", path("inst.json")}).code, 0);
    const CliResult r = cli({"solve", "--in", path("inst.json"), "--method", "proposed", "--out", path("sol.json"), "--plots",
                       path("out")});
    ASSERT_EQ(r.code, 0) << r.err;
    const Solution sol = load_solution(path("sol.json"));
    EXPECT_EQ(sol.routes.size(), 5U);
    EXPECT_EQ(sol.assignment.owner.size(), 20U);
    EXPECT_TRUE(fs::exists(dir / "out" / "routes.svg"));
    EXPECT_TRUE(fs::exists(dir / "out" / "convergence.svg"));
}

TEST_F(CliTest, SolveOptionsAndGa) {
    ASSERT_EQ(cli({"gen", "--k", "4", "--n", "16", "--out", path("inst.json")}).code, 0);
    CliResult r = cli({"solve", "--in", path("inst.json"), "--init", "kmeans", "--M", "2", "--allow-empty-clusters",
                 "--shuffle-seed", "5", "--no-timing", "--out", path("a.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    r = cli({"solve", "--in", path("inst.json"), "--method", "ga", "--pop", "20", "--gens", "10", "--mutation", "0.1",
             "--seed", "3", "--no-timing", "--out", path("g.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(slurp(path("g.json")).find("\"method\": \"ga\""), std::string::npos);
    EXPECT_EQ(load_solution(path("g.json")).iterations, 10);
    // stdout when --out is omitted
    r = cli({"solve", "--in", path("inst.json"), "--no-timing"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NO_THROW(solution_from_json(r.out));
}

TEST_F(CliTest, OutputDirectoriesAreCreated) {
    ASSERT_EQ(cli({"gen", "--k", "2", "--n", "6", "--out", path("a/b/inst.json")}).code, 0);
    ASSERT_EQ(cli({"solve", "--in", path("a/b/inst.json"), "--out", path("c/sol.json")}).code, 0);
    EXPECT_TRUE(fs::exists(path("c/sol.json")));
}

TEST_F(CliTest, PlotFromFiles) {
    ASSERT_EQ(cli({"gen", "--k", "3", "--n", "9", "--out", path("inst.json")}).code, 0);
    ASSERT_EQ(cli({"solve", "--in", path("inst.json"), "--out", path("sol.json")}).code, 0);
    const CliResult r = cli({"plot", "--in", path("inst.json"), "--solution", path("sol.json"), "--out", path("figs")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(dir / "figs" / "routes.svg"));
    EXPECT_TRUE(fs::exists(dir / "figs" / "convergence.svg"));
}

TEST_F(CliTest, ErrorsExitNonZero) {
    EXPECT_NE(cli({"gen", "--k", "5", "--n", "20", "--bogus"}).code, 0);
    EXPECT_NE(cli({}).code, 0);
    CliResult r = cli({"solve", "--in", path("missing.json")});
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.err.find("missing.json"), std::string::npos);

    std::ofstream(path("bad.json")) << R"({"depots":[{"x":0,"y":0}],"tasks":[{"x":"abc","y":0}]})";
    r = cli({"solve", "--in", path("bad.json")});
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.err.find("/tasks/0/x"), std::string::npos) << r.err;

    ASSERT_EQ(cli({"gen", "--k", "5", "--n", "3", "--out", path("small.json")}).code, 0);
    r = cli({"solve", "--in", path("small.json")});
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.err.find("n < k"), std::string::npos);
    EXPECT_NE(cli({"gen", "--k", "0", "--n", "3"}).code, 0);
    EXPECT_NE(cli({"gen", "--k", "1", "--n", "3", "--region", "0,0,0,1"}).code, 0);
}

TEST_F(CliTest, BenchWritesFixedHeaderAndRows) {
    const CliResult r = cli({"bench", "--scenarios", "5x20,3x2", "--methods", "proposed,ga", "--seeds", "2", "--gens", "20",
                       "--out", path("r.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(slurp(path("r.csv")));
    ASSERT_EQ(rows.size(), 1U + 2 * 2 * 2);
    EXPECT_EQ(slurp(path("r.csv")).substr(0, std::string(kCsvHeader).size()), kCsvHeader);
    EXPECT_EQ(rows[1], (std::vector<std::string>{rows[1][0], rows[1][1], "0:0:10:10", "1", "proposed", "ok", rows[1][6],
                                                 rows[1][7], rows[1][8], rows[1][9], rows[1][10]}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), 11U);
        if (rows[i][1] == "2") {
            EXPECT_EQ(rows[i][5], "infeasible");
            EXPECT_EQ(rows[i][6], "");
        } else {
            EXPECT_EQ(rows[i][5], "ok");
            EXPECT_FALSE(rows[i][6].empty());
        }
    }
    // order: scenario, method, seed
    EXPECT_EQ(rows[3][4], "ga");
    EXPECT_EQ(rows[3][3], "1");
    EXPECT_EQ(rows[4][3], "2");
}

TEST_F(CliTest, BenchTimeoutsAreDataNotErrors) {
    const CliResult r = cli({"bench", "--scenarios", "10x50", "--methods", "ga", "--seeds", "1", "--budget", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_EQ(rows[1][5], "timeout");
    EXPECT_EQ(rows[1][6], "");
    EXPECT_EQ(rows[1][7], "");
    EXPECT_NE(cli({"bench", "--methods", "tabu"}).code, 0);
    EXPECT_NE(cli({"bench", "--scenarios", "5y20"}).code, 0);
}

TEST(Bench, RowsReproduceAndParallelOrderIsStable) {
    BenchOptions opts;
    opts.scenarios = {{5, 20}, {10, 50}};
    opts.seeds = 2;
    opts.ga_generations = 15;
    const auto serial = run_bench(opts);
    opts.jobs = 3;
    const auto parallel = run_bench(opts);
    ASSERT_EQ(serial.size(), 8U);
    ASSERT_EQ(parallel.size(), serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].method, parallel[i].method);
        EXPECT_EQ(serial[i].seed, parallel[i].seed);
        EXPECT_EQ(serial[i].max_cost, parallel[i].max_cost);
        EXPECT_EQ(serial[i].total_cost, parallel[i].total_cost);
        EXPECT_EQ(serial[i].evaluation_calls, parallel[i].evaluation_calls);
    }
    const BenchmarkRow again = run_cell(serial[5].scenario, serial[5].method, serial[5].seed, opts);
    EXPECT_EQ(again.max_cost, serial[5].max_cost);
}

TEST(Bench, ScenarioParsingAndGaDefaults) {
    EXPECT_EQ(parse_scenarios("5x20,1000x5000"), (std::vector<Scenario>{{5, 20}, {1000, 5000}}));
    EXPECT_THROW(parse_scenarios("5x"), InputError);
    EXPECT_THROW(parse_scenarios("0x4"), InputError);
    EXPECT_EQ(default_scenarios().size(), 4U);
    EXPECT_EQ(ga_defaults_for({5, 20}).population, 80U);
    EXPECT_EQ(ga_defaults_for({5, 20}).generations, 100);
    EXPECT_EQ(ga_defaults_for({10, 50}).generations, 1000);
    EXPECT_EQ(ga_defaults_for({100, 500}).population, 40U);
    EXPECT_EQ(ga_defaults_for({100, 500}).mutation_rate, 0.05);
}
