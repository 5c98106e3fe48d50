#include "fbvp/commands.hpp"
#include "fbvp/problem_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fbvp;
using namespace fbvp::cli;

namespace {

const std::string kData = FBVP_DATA_DIR;

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (header) *header = line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run solve(SolveOptions opts) {
    std::ostringstream out, err;
    const int code = run_solve(opts, out, err);
    return {code, out.str(), err.str()};
}

Run verify(VerifyOptions opts) {
    std::ostringstream out, err;
    const int code = run_verify(opts, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("fbvp_test_" + name);
}

}  // namespace

TEST_CASE("solve example 1") {
    SolveOptions opts;
    opts.problem_path = kData + "/ex1.json";
    opts.alphas = std::vector<double>{0, 0.5, 1};
    opts.points = 101;
    const auto run = solve(opts);
    REQUIRE(run.code == kSuccess);
    std::string header;
    const auto rows = parse_csv(run.out, &header);
    CHECK(header == "t,lower_0,upper_0,lower_0.5,upper_0.5,lower_1,upper_1");
    REQUIRE(rows.size() == 101);
    CHECK(rows[0] == std::vector<double>{0, 1.5, 3, 1.75, 2.5, 2, 2});
    CHECK(rows[100][0] == 1);
    CHECK(rows[100][1] == 2);
    CHECK(rows[100][2] == 4);
}

TEST_CASE("solve example 2") {
    SolveOptions opts;
    opts.problem_path = kData + "/ex2.json";
    opts.alphas = std::vector<double>{0, 0.6};
    opts.points = 201;
    const auto run = solve(opts);
    REQUIRE(run.code == kSuccess);
    const auto rows = parse_csv(run.out);
    REQUIRE(rows.size() == 201);
    CHECK(rows[200][0] == 2);
    CHECK(rows[200][1] == 0.5);
    CHECK(rows[200][2] == 1.5);
    CHECK(rows[100][0] == 1);
    CHECK(rows[100][1] == doctest::Approx(1.735057).epsilon(1e-6));
    CHECK(rows[100][2] == doctest::Approx(3.647414).epsilon(1e-6));
}

TEST_CASE("solve output is deterministic and nested") {
    SolveOptions opts;
    opts.problem_path = kData + "/ex2.json";
    opts.alphas = std::vector<double>{1, 0, 0.25, 0.5, 0.75};
    const auto first = solve(opts);
    const auto second = solve(opts);
    REQUIRE(first.code == kSuccess);
    CHECK(first.out == second.out);

    std::string header;
    const auto rows = parse_csv(first.out, &header);
    CHECK(header == "t,lower_0,upper_0,lower_0.25,upper_0.25,lower_0.5,upper_0.5,lower_0.75,upper_0.75,lower_1,upper_1");
    CHECK(rows.size() == 201);
    for (const auto& row : rows) {
        for (std::size_t k = 1; k + 2 < row.size(); k += 2) {
            CHECK(row[k] <= row[k + 2]);
            CHECK(row[k + 3] <= row[k + 1]);
        }
        CHECK(row[row.size() - 2] == row.back());
    }

    opts.format = "json";
    const auto json = solve(opts);
    REQUIRE(json.code == kSuccess);
    const auto j = Json::parse(json.out);
    CHECK(j["alphas"].size() == 5);
    CHECK(j["nodes"].size() == 201);
    CHECK(json.out == solve(opts).out);
}

TEST_CASE("solve errors") {
    SolveOptions opts;
    opts.problem_path = kData + "/resonant.json";
    auto run = solve(opts);
    CHECK(run.code == kNonUniqueCrispSolution);
    CHECK(run.err.find("NonUniqueCrispSolution") != std::string::npos);
    CHECK(run.out.empty());

    opts.problem_path = kData + "/missing.json";
    CHECK(solve(opts).code == kValidationFailure);

    opts.problem_path = kData + "/ex1.json";
    opts.alphas = std::vector<double>{0, 2};
    CHECK(solve(opts).code == kValidationFailure);

    opts.alphas.reset();
    opts.points = 1;
    CHECK(solve(opts).code == kValidationFailure);

    opts.points.reset();
    opts.format = "xml";
    CHECK(solve(opts).code == kValidationFailure);
}

TEST_CASE("solve writes to a file") {
    const auto path = temp_file("band.csv");
    std::filesystem::remove(path);
    SolveOptions opts;
    opts.problem_path = kData + "/ex1.json";
    opts.out_path = path.string();
    const auto run = solve(opts);
    REQUIRE(run.code == kSuccess);
    CHECK(run.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(parse_csv(text.str()).size() == 101);
    std::filesystem::remove(path);
}

TEST_CASE("verify") {
    VerifyOptions opts;
    opts.problem_path = kData + "/ex1.json";
    auto run = verify(opts);
    CHECK(run.code == kSuccess);
    auto report = Json::parse(run.out);
    CHECK(report["max_deviation"].get<double>() <= 1e-4);
    CHECK(report["passed"] == true);

    opts.problem_path = kData + "/ex2.json";
    opts.alpha = 0.6;
    run = verify(opts);
    CHECK(run.code == kSuccess);
    report = Json::parse(run.out);
    CHECK(report["alpha"] == 0.6);

    // An impossible tolerance turns the same comparison into a failure.
    opts.tolerance = 1e-12;
    run = verify(opts);
    CHECK(run.code == kVerificationFailure);
    CHECK(Json::parse(run.out)["passed"] == false);

    opts = VerifyOptions{};
    opts.problem_path = kData + "/order3.json";
    run = verify(opts);
    CHECK(run.code == kValidationFailure);
    CHECK(run.err.find("order-2") != std::string::npos);

    opts.problem_path = kData + "/resonant.json";
    CHECK(verify(opts).code == kNonUniqueCrispSolution);
}

TEST_CASE("example") {
    for (int which : {1, 2}) {
        std::ostringstream out, err;
        CHECK(run_example(which, out, err) == kSuccess);
        std::ifstream in(kData + "/ex" + std::to_string(which) + ".json");
        std::stringstream file;
        file << in.rdbuf();
        CHECK(out.str() == file.str());
    }
    std::ostringstream out, err;
    CHECK(run_example(3, out, err) == kValidationFailure);
    CHECK(out.str().empty());
}
