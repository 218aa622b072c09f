#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SIMWARING_CLI_PATH
#error "SIMWARING_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(SIMWARING_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / fs::path("simwaring_cli_test")) {
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    std::string file(const std::string& name, const std::string& contents) const {
        const fs::path full = path_ / name;
        std::ofstream out(full);
        out << contents;
        return full.string();
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const char* kExamplePair = "vars 4\nx0*x1^3*x2^4*x3^7\nx0*x1^4*x2^2*x3^5\n";

} // namespace

TEST_CASE("rank subcommand") {
    CHECK(run_cli("rank \"x0*x1*x2*x3^2\"").output == "12\n");
    CHECK(run_cli("rank \"x0^7\"").output == "1\n");
    CHECK(run_cli("rank \"x0*x1^3*x2^4*x3^7\"").output == "160\n");
    CHECK(run_cli("rank \"[1,3,4,7]\" --vars 4").output == "160\n");

    CHECK(run_cli("rank \"x0*\"").exit_code == 1);       // parse error
    CHECK(run_cli("rank \"1\"").exit_code == 2);          // constant: hypothesis failure
    CHECK(run_cli("rank \"x5\" --vars 2").exit_code == 1); // index out of range
    CHECK(run_cli("").exit_code == 1);                     // missing subcommand
}

TEST_CASE("simrank reports the exact pair rank") {
    TempDir dir;
    const auto file = dir.file("pair.txt", kExamplePair);
    const auto out = dir.path("report.json");

    const auto result = run_cli("simrank " + file + " --out " + out);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("exact 178") != std::string::npos);

    const json report = json::parse(slurp(out));
    CHECK(report["command"] == "simrank");
    CHECK(report["verdict"]["kind"] == "exact");
    CHECK(report["verdict"]["value"] == "178");
    CHECK(report["verdict"]["justification"] == "Thm3.2");
    CHECK(report["free"]["free"] == true);
    CHECK(report["free"]["base_variable"] == 0);
    CHECK(report["free"]["c"] == 1);
}

TEST_CASE("simrank explain table lists the subset terms") {
    TempDir dir;
    const auto file = dir.file("pair.txt", kExamplePair);
    const auto out = dir.path("report.json");
    const auto result = run_cli("simrank " + file + " --explain --out " + out);
    CHECK(result.exit_code == 0);
    const json report = json::parse(slurp(out));
    REQUIRE(report.contains("explain"));
    REQUIRE(report["explain"].size() == 3);
    CHECK(report["explain"][0]["rank"] == "160");
    CHECK(report["explain"][1]["rank"] == "90");
    CHECK(report["explain"][2]["rank"] == "72");
    CHECK(report["explain"][2]["sign"] == -1);
}

TEST_CASE("simrank JSON output is byte-identical across runs") {
    TempDir dir;
    const auto file = dir.file("pair.txt", kExamplePair);
    const auto first = dir.path("a.json");
    const auto second = dir.path("b.json");
    REQUIRE(run_cli("simrank " + file + " --out " + first).exit_code == 0);
    REQUIRE(run_cli("simrank " + file + " --out " + second).exit_code == 0);
    CHECK(slurp(first) == slurp(second));

    // The emitted report also round-trips through the schema unchanged.
    const json parsed = json::parse(slurp(first));
    CHECK(json::parse(parsed.dump(2)) == parsed);
}

TEST_CASE("simrank accepts JSON collections") {
    TempDir dir;
    const auto file = dir.file("pair.json",
                               R"({"vars": 4,
                                   "monomials": ["x0*x1^3*x2^4*x3^7", "x0*x1^4*x2^2*x3^5"]})");
    const auto result = run_cli("simrank " + file + " --json --out -");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"value\": \"178\"") != std::string::npos);
}

TEST_CASE("simrank rejects unusable input") {
    TempDir dir;
    const auto no_header = dir.file("bad.txt", "x0*x1\n");
    CHECK(run_cli("simrank " + no_header).exit_code == 1);
    CHECK(run_cli("simrank " + dir.path("missing.txt")).exit_code == 1);
}

TEST_CASE("checkfree exit status tracks freeness") {
    TempDir dir;
    const auto free_file = dir.file("free.txt", kExamplePair);
    const auto free_result = run_cli("checkfree " + free_file);
    CHECK(free_result.exit_code == 0);
    CHECK(free_result.output.find("free: yes") != std::string::npos);

    const auto chain = dir.file("chain.txt", "vars 2\nx0*x1\nx0*x1^2\nx0*x1^3\n");
    const auto chain_result = run_cli("checkfree " + chain);
    CHECK(chain_result.exit_code == 2);
    CHECK(chain_result.output.find("(1,1)-free: no") != std::string::npos);

    const auto squares = dir.file("squares.txt", "vars 2\nx0^2*x1^2\nx0^2*x1^4\n");
    const auto squares_result = run_cli("checkfree " + squares + " --out -");
    CHECK(squares_result.exit_code == 2);
    CHECK(squares_result.output.find("\"one_one_free\": true") != std::string::npos);
    CHECK(squares_result.output.find("\"free\": false") != std::string::npos);
}

TEST_CASE("bounds prints both endpoints") {
    TempDir dir;
    const auto file = dir.file("pair.txt", kExamplePair);
    const auto out = dir.path("bounds.json");
    const auto result = run_cli("bounds " + file + " --out " + out);
    CHECK(result.exit_code == 0);
    const json report = json::parse(slurp(out));
    CHECK(report["lower"] == "178");
    CHECK(report["upper"] == "200");

    const auto singleton = dir.file("single.txt", "vars 2\nx0^2*x1^3\n");
    const auto single_out = dir.path("single.json");
    REQUIRE(run_cli("bounds " + singleton + " --out " + single_out).exit_code == 0);
    const json single_report = json::parse(slurp(single_out));
    CHECK(single_report["lower"] == single_report["upper"]);

    // No common variable: the lower bound fails but the upper still prints.
    const auto disjoint = dir.file("disjoint.txt", "vars 2\nx0^2\nx1^2\n");
    const auto disjoint_result = run_cli("bounds " + disjoint + " --out -");
    CHECK(disjoint_result.exit_code == 2);
    CHECK(disjoint_result.output.find("\"upper\": \"3\"") != std::string::npos);
    CHECK(disjoint_result.output.find("lower_error") != std::string::npos);
}

TEST_CASE("decompose writes a verified decomposition") {
    TempDir dir;
    const auto file = dir.file("single.txt", "vars 2\nx0*x1^2\n");
    const auto out = dir.path("dec.json");
    const auto result = run_cli("decompose " + file + " --out " + out);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("points: 3") != std::string::npos);
    CHECK(result.output.find("minimal: yes") != std::string::npos);

    const json doc = json::parse(slurp(out));
    CHECK(doc["verified"] == true);
    CHECK(doc["claimed_rank"] == "3");
    CHECK(doc["points"].size() == 3);
    CHECK(doc["coefficients"].size() == 1);
    CHECK(doc["residuals"].size() == 1);
}

TEST_CASE("decompose fails verification under an impossible tolerance") {
    TempDir dir;
    const auto file = dir.file("pair.txt", kExamplePair);
    const auto out = dir.path("dec.json");
    const auto result = run_cli("decompose " + file + " --tol 1e-30 --out " + out);
    CHECK(result.exit_code == 3);
    const json doc = json::parse(slurp(out)); // still written, flagged unverified
    CHECK(doc["verified"] == false);
    CHECK(doc["points"].size() == 178);
}

TEST_CASE("decompose rejects non-free collections and tiny caps") {
    TempDir dir;
    const auto chain = dir.file("chain.txt", "vars 2\nx0*x1\nx0*x1^2\nx0*x1^3\n");
    CHECK(run_cli("decompose " + chain).exit_code == 2);

    const auto file = dir.file("pair.txt", kExamplePair);
    CHECK(run_cli("decompose " + file + " --max-points 10").exit_code == 2);
}

TEST_CASE("highrank reports rank, generic value, and excess") {
    const auto result = run_cli("highrank --t 2 --family 1 --out -");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"rank\": \"15\"") != std::string::npos);
    CHECK(result.output.find("\"generic_rank\": \"14\"") != std::string::npos);
    CHECK(result.output.find("\"excess\": \"1\"") != std::string::npos);

    const auto documented = run_cli("highrank --t 1 --family 1 --out -");
    CHECK(documented.output.find("\"excess\": \"0\"") != std::string::npos);
}

TEST_CASE("simrank handles singletons and honest bounds") {
    TempDir dir;
    const auto single = dir.file("single.txt", "vars 2\nx0*x1^5\n");
    const auto single_result = run_cli("simrank " + single + " --out -");
    CHECK(single_result.exit_code == 0);
    CHECK(single_result.output.find("\"value\": \"6\"") != std::string::npos);

    const auto open = dir.file("open.txt", "vars 4\nx0*x1*x2\nx0*x1*x3^2\n");
    const auto open_out = dir.path("open.json");
    REQUIRE(run_cli("simrank " + open + " --out " + open_out).exit_code == 0);
    const json report = json::parse(slurp(open_out));
    CHECK(report["verdict"]["kind"] == "bounds");
    CHECK(report["verdict"]["lower"] == "8");
    CHECK(report["verdict"]["upper"] == "12");
    CHECK(report["verdict"]["justification"] == "BoundsOnly");
}

TEST_CASE("bounds meet on the nested chain") {
    TempDir dir;
    const auto chain = dir.file("chain.txt", "vars 2\nx0*x1\nx0*x1^2\nx0*x1^3\n");
    const auto out = dir.path("chain.json");
    REQUIRE(run_cli("bounds " + chain + " --out " + out).exit_code == 0);
    const json report = json::parse(slurp(out));
    CHECK(report["lower"] == "4");
    CHECK(report["upper"] == "4");
}

TEST_CASE("decompose handles the full pair and the derivative fallback") {
    TempDir dir;
    const auto pair = dir.file("pair.txt", kExamplePair);
    const auto pair_out = dir.path("pair_dec.json");
    const auto pair_result = run_cli("decompose " + pair + " --threads 2 --out " + pair_out);
    CHECK(pair_result.exit_code == 0);
    CHECK(pair_result.output.find("points: 178") != std::string::npos);
    CHECK(pair_result.output.find("minimal: yes") != std::string::npos);
    const json pair_doc = json::parse(slurp(pair_out));
    CHECK(pair_doc["verified"] == true);
    CHECK(pair_doc["justification"] == "Thm3.2");

    const auto derivatives =
        dir.file("derivatives.txt", "vars 3\nx0*x1^2*x2^2\nx0^2*x1*x2^2\nx0^2*x1^2*x2\n");
    const auto dec_out = dir.path("derivatives_dec.json");
    const auto result = run_cli("decompose " + derivatives + " --out " + dec_out);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("points: 9") != std::string::npos);
    CHECK(result.output.find("minimal: yes") != std::string::npos);
    const json doc = json::parse(slurp(dec_out));
    CHECK(doc["verified"] == true);
    CHECK(doc["justification"] == "Prop3.10");
    CHECK(doc["claimed_rank"] == "9");
}

TEST_CASE("highrank family 2 example") {
    const auto result = run_cli("highrank --t 1 --family 2 --out -");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"rank\": \"12\"") != std::string::npos);
    CHECK(result.output.find("\"generic_rank\": \"11\"") != std::string::npos);
    CHECK(result.output.find("\"excess\": \"1\"") != std::string::npos);
}

TEST_CASE("rank infers the variable count from bracket forms") {
    CHECK(run_cli("rank \"[1,3,4,7]\"").output == "160\n");
}

TEST_CASE("the environment variable caps scheme points") {
    TempDir dir;
    const auto file = dir.file("pair.txt", kExamplePair);
    const std::string command = std::string("SIMWARING_MAX_POINTS=10 ") + SIMWARING_CLI_PATH +
                                " decompose " + file + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (std::fread(buffer, 1, sizeof buffer, pipe) > 0) {}
    CHECK(WEXITSTATUS(pclose(pipe)) == 2);
}
