#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

std::string bin() { return std::getenv("COMAX_BIN"); }
std::string fixtures() { return std::getenv("COMAX_FIXTURES"); }
std::string schema_path() { return std::getenv("COMAX_SCHEMA"); }

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_path = "/tmp/comax_cli_out.txt";
    std::string cmd = bin() + " " + args + " > " + out_path + " 2>&1";
    int raw = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(raw), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("both-mode solve agrees and satisfies the report schema") {
    auto res = run("solve --problem single-spca --mode both --input " + fixtures() +
                   "/single_13.json");
    CHECK(res.exit_code == 0);
    json rep = json::parse(res.out);
    CHECK(rep.at("value").get<double>() == doctest::Approx(13.0).epsilon(1e-9));
    CHECK(rep.at("mode_agreement").get<bool>());
    CHECK(rep.at("support") == json::array({0, 2}));

    json schema = json::parse(slurp(schema_path()));
    for (const auto& key : schema.at("required")) {
        CAPTURE(key.get<std::string>());
        CHECK(rep.contains(key.get<std::string>()));
    }
    // Reports must not carry keys outside the schema.
    for (auto it = rep.begin(); it != rep.end(); ++it)
        CHECK(schema.at("properties").contains(it.key()));
}

TEST_CASE("oracle and framework modes run standalone") {
    auto fw = run("solve --problem single-spca --mode framework --input " + fixtures() +
                  "/single_13.json");
    CHECK(fw.exit_code == 0);
    CHECK(json::parse(fw.out).at("value").get<double>() == doctest::Approx(13.0));

    auto orc = run("solve --problem single-spca --mode oracle --input " + fixtures() +
                   "/single_13.json");
    CHECK(orc.exit_code == 0);
    CHECK(json::parse(orc.out).at("oracle_value").get<double>() == doctest::Approx(13.0));
}

TEST_CASE("csv and pretty formats emit without error") {
    auto csv = run("solve --problem single-spca --mode framework --format csv --input " +
                   fixtures() + "/single_13.json");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("value") != std::string::npos);

    auto pretty = run("solve --problem single-spca --mode framework --format pretty --input " +
                      fixtures() + "/single_13.json");
    CHECK(pretty.exit_code == 0);
    CHECK(pretty.out.find("complexity") != std::string::npos);
}

TEST_CASE("disjoint assignment splits the two columns") {
    auto res = run("solve --problem disjoint-spca --mode both --input " + fixtures() +
                   "/disjoint_small.json");
    CHECK(res.exit_code == 0);
    json rep = json::parse(res.out);
    CHECK(rep.at("value").get<double>() == doctest::Approx(5.0));
    CHECK(rep.at("mode_agreement").get<bool>());
}

TEST_CASE("malformed point set exits 1") {
    auto res = run("check --input " + fixtures() + "/malformed.csv");
    CHECK(res.exit_code == 1);
}

TEST_CASE("oversized disjoint instance exits 2") {
    auto res = run("solve --problem disjoint-spca --mode framework --input " + fixtures() +
                   "/disjoint_big.json");
    CHECK(res.exit_code == 2);
    CHECK(res.out.find("budget") != std::string::npos);
}

TEST_CASE("checker verdicts on the bundled point sets") {
    auto square = run("check --input " + fixtures() + "/square.csv");
    CHECK(square.exit_code == 0);
    CHECK(square.out.find("YES") != std::string::npos);

    auto chain = run("check --input " + fixtures() + "/chain_lattice.csv --output /tmp/chain.json");
    CHECK(chain.exit_code == 0);
    CHECK(chain.out.find("NO") != std::string::npos);
    json rep = json::parse(slurp("/tmp/chain.json"));
    CHECK_FALSE(rep.at("yes").get<bool>());
    CHECK(rep.at("witness_v").size() == 3);

    auto four = run("check --input " + fixtures() + "/four_points.csv");
    CHECK(four.out.find("YES") != std::string::npos);
}

TEST_CASE("generated instances are reproducible bytes") {
    auto a = run("gen --seed 7 --r 2 --n 5 --sparsity 2 --output /tmp/gen_a.json");
    auto b = run("gen --seed 7 --r 2 --n 5 --sparsity 2 --output /tmp/gen_b.json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(slurp("/tmp/gen_a.json") == slurp("/tmp/gen_b.json"));
    CHECK(slurp("/tmp/gen_a.json").size() > 0);

    auto solve_gen = run("solve --problem single-spca --mode both --input /tmp/gen_a.json");
    CHECK(solve_gen.exit_code == 0);
    CHECK(json::parse(solve_gen.out).at("mode_agreement").get<bool>());
}

TEST_CASE("stable reports are byte identical across thread counts") {
    auto one = run("solve --problem single-spca --mode framework --stable-report "
                   "--threads 1 --output /tmp/rep1.json --input " +
                   fixtures() + "/single_13.json");
    auto eight = run("solve --problem single-spca --mode framework --stable-report "
                     "--threads 8 --output /tmp/rep8.json --input " +
                     fixtures() + "/single_13.json");
    CHECK(one.exit_code == 0);
    CHECK(eight.exit_code == 0);
    CHECK(slurp("/tmp/rep1.json") == slurp("/tmp/rep8.json"));
}
