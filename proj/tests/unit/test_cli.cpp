#include "config.hpp"
#include "scenarios.hpp"

#include "fbns/error.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace fbns::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("fbns_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

int run_tool(const std::string& args) {
    const std::string cmd = std::string(FBNS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const char* small_audit = R"(
[run]
scenario = multiplier-audit
[exponents]
q = 3.19
[audit]
symbols = A^s, B^s, bf:ixB/D
samples = 200
)";

} // namespace

TEST_CASE("config parsing") {
    SUBCASE("defaults are resolved and recorded") {
        const auto cfg = parse_config("[run]\nscenario = divergence-corrector\n[exponents]\nq = 3.19\n");
        CHECK(cfg.resolved.size() == key_table().size());
        CHECK(cfg.resolved.at("grid.n") == "16");
        CHECK(cfg.n == 16);
        CHECK(cfg.exponents.q == 3.19);
        CHECK(cfg.weights.b1 == doctest::Approx(2.0 / 3.19 + 0.375));
        CHECK(cfg.divergence_levels == std::vector<int>{33, 65, 129});
    }
    SUBCASE("comments and explicit values") {
        const auto cfg = parse_config("# c\n[run]\nscenario = linear-decay\n; c\nseed = 7\n[exponents]\nq = 3.1\n"
                                      "[weights]\na1 = 0.25\n");
        CHECK(cfg.seed == 7);
        CHECK(cfg.weights.a1 == 0.25);
    }
    SUBCASE("missing q names the key") {
        try {
            parse_config("[run]\nscenario = linear-decay\n");
            FAIL("no error");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("exponents.q") != std::string::npos);
        }
    }
    SUBCASE("malformed input") {
        CHECK_THROWS_AS(parse_config("[run]\nscenario = nope\n[exponents]\nq = 3\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("[run]\nscenario = linear-decay\n[exponents]\nq = abc\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("[run]\nscenario = linear-decay\n[exponents]\nq = 3\nr = 1\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("[run]\nscenario = linear-decay\n[exponents]\nq = 3\n[grid]\nn = 6\n"),
                        ConfigError);
        CHECK_THROWS_AS(parse_config("[run\nscenario = linear-decay\n"), ConfigError);
        CHECK_THROWS_AS(load_config("/nonexistent/config.ini"), ConfigError);
    }
    SUBCASE("environment overrides") {
        auto cfg = parse_config(small_audit);
        setenv("FBNS_OUTPUT_DIR", "/tmp/elsewhere", 1);
        setenv("FBNS_WORKERS", "3", 1);
        apply_environment(cfg);
        CHECK(cfg.output_dir == "/tmp/elsewhere");
        CHECK(cfg.workers == 3);
        CHECK(cfg.resolved.at("run.workers") == "3");
        setenv("FBNS_WORKERS", "zero", 1);
        CHECK_THROWS_AS(apply_environment(cfg), ConfigError);
        unsetenv("FBNS_OUTPUT_DIR");
        unsetenv("FBNS_WORKERS");
    }
}

TEST_CASE("multiplier audit runs are deterministic") {
    auto cfg = parse_config(small_audit);
    const auto a = scratch("audit_a"), b = scratch("audit_b");
    cfg.output_dir = a.string();
    const auto out = run_scenario(cfg);
    CHECK(out.pass());
    CHECK(out.verdicts.size() == 3);
    cfg.output_dir = b.string();
    cfg.workers = 2;
    run_scenario(cfg);
    const auto csv = slurp(a / "audit.csv");
    CHECK(csv.rfind("symbol_id,s,type", 0) == 0);
    CHECK(csv == slurp(b / "audit.csv"));
    CHECK(slurp(a / "summary.csv") == slurp(b / "summary.csv"));

    const auto meta = nlohmann::json::parse(slurp(a / "metadata.json"));
    CHECK(meta["scenario"] == "multiplier-audit");
    CHECK(meta["config"].size() == key_table().size());
    CHECK(meta["config"]["sector.gamma0"] == "1");
    CHECK(meta["pass"] == true);
}

TEST_CASE("linear decay with zero data") {
    auto cfg = parse_config(
        "[run]\nscenario = linear-decay\n[grid]\nn = 8\nnz = 16\ndepth = 10\n[exponents]\nq = 3.19\n"
        "[time]\nsamples = 3\n[data]\nkind = zero\n");
    const auto dir = scratch("zero");
    cfg.output_dir = dir.string();
    const auto out = run_scenario(cfg);
    CHECK(out.pass());
    std::ifstream in(dir / "timeseries.csv");
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find(",0.0000000000e+00,0.0000000000e+00,0.0000000000e+00") != std::string::npos);
    }
    CHECK(rows == 3);

    const auto text = emit_report(dir.string());
    CHECK(text.find("m(q/2,q)") != std::string::npos);
    CHECK(text.find("n(q/2,q)+1/8") != std::string::npos);
    CHECK(text == emit_report(dir.string()));
    CHECK(slurp(dir / "report.txt") == text);
}

TEST_CASE("divergence corrector scenario") {
    auto cfg = parse_config("[run]\nscenario = divergence-corrector\n[grid]\nn = 8\ndepth = 8\n[exponents]\nq = 3.19\n"
                            "[divergence]\nlevels = 33, 65\n");
    cfg.output_dir = scratch("div").string();
    const auto out = run_scenario(cfg);
    REQUIRE(out.verdicts.size() == 1);
    CHECK(out.verdicts[0].value >= 1.8);
}

TEST_CASE("report errors") {
    const auto empty = scratch("empty");
    fs::create_directories(empty);
    CHECK_THROWS_AS(emit_report(empty.string()), fbns::Error);
    CHECK_THROWS_AS(emit_report((empty / "missing").string()), fbns::Error);
}

TEST_CASE("command line exit codes") {
    const auto dir = scratch("exit");
    fs::create_directories(dir);
    std::ofstream(dir / "noq.ini") << "[run]\nscenario = linear-decay\n";
    std::ofstream(dir / "audit.ini") << small_audit;
    CHECK(run_tool("run " + (dir / "noq.ini").string()) == 2);
    CHECK(run_tool("validate " + (dir / "noq.ini").string()) == 2);
    CHECK(run_tool("frobnicate") == 2);
    CHECK(run_tool("report " + dir.string()) == 2);
    setenv("FBNS_OUTPUT_DIR", (dir / "run").string().c_str(), 1);
    CHECK(run_tool("run " + (dir / "audit.ini").string()) == 0);
    unsetenv("FBNS_OUTPUT_DIR");
    CHECK(fs::exists(dir / "run" / "audit.csv"));
    CHECK(run_tool("report " + (dir / "run").string()) == 0);
    CHECK(run_tool("validate " + std::string(FBNS_CONFIG_DIR) + "/nonlinear-small-data.ini") == 0);
    // a verdict failure: an order no second-order scheme reaches
    std::ofstream(dir / "strict.ini") << "[run]\nscenario = divergence-corrector\noutput_dir = " << (dir / "s").string()
                                      << "\n[grid]\nn = 8\ndepth = 8\n[exponents]\nq = 3.19\n[tolerance]\norder = 3\n"
                                      << "[divergence]\nlevels = 33, 65\n";
    CHECK(run_tool("run " + (dir / "strict.ini").string()) == 1);
}

TEST_CASE("shipped configs parse and the defaults table is documented") {
    int count = 0;
    for (const auto& entry : fs::directory_iterator(FBNS_CONFIG_DIR)) {
        if (entry.path().extension() != ".ini") continue;
        CHECK_NOTHROW(load_config(entry.path().string()));
        ++count;
    }
    CHECK(count >= 6);
    const auto doc = slurp(fs::path(FBNS_DOCS_DIR) / "configuration.md");
    for (const auto& k : key_table()) {
        const std::string row = std::string("| `") + k.key + "` | " +
                                (k.default_value ? std::string("`") + k.default_value + "`" : "required");
        CHECK_MESSAGE(doc.find(row) != std::string::npos, k.key);
    }
}
