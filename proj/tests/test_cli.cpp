#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "coindet/cli.hpp"

using nlohmann::ordered_json;

namespace {

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = coindet::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string golden(const std::string& name) {
    return read_file(std::string(COINDET_GOLDEN_DIR) + "/" + name);
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

}  // namespace

TEST_CASE("reports byte-match the golden files") {
    struct Case {
        std::vector<std::string> args;
        const char* file;
    };
    const Case cases[] = {
        {{"homology", "A", "--json"}, "homology_A.json"},
        {{"triple", "A", "a0", "a1", "a2", "--json"}, "triple_A.json"},
        {{"triple", "A", "a0", "a1", "a2"}, "triple_A.txt"},
        {{"coindet", "A_prime", "a0", "a1", "a2", "a3", "--json"}, "coindet_A_prime.json"},
        {{"fourfold", "A", "a0", "a1", "a2", "a3", "--enumerate-limit", "0", "--json"},
         "fourfold_A_limit0.json"},
        {{"random-check", "--count", "3", "--seed", "9", "--json"}, "random_check.json"},
    };
    for (const Case& c : cases) {
        CAPTURE(c.file);
        Run r = cli(c.args);
        CHECK(r.exit_code == 0);
        CHECK(r.out == golden(c.file));
    }
}

TEST_CASE("text and JSON renderings carry the same data") {
    Run text = cli({"triple", "A", "a0", "a1", "a2"});
    Run json = cli({"triple", "A", "a0", "a1", "a2", "--json"});
    ordered_json doc = ordered_json::parse(json.out);
    CHECK(doc["status"] == "ok");
    CHECK(text.out.find("contains_zero: true") != std::string::npos);
    CHECK(text.out.find("strictly_zero: false") != std::string::npos);
    for (const auto& entry : doc["indeterminacy"]["basis"])
        CHECK(text.out.find("- " + entry.get<std::string>()) != std::string::npos);
    CHECK(text.out.find(doc["witnesses"]["value"].get<std::string>()) != std::string::npos);
}

TEST_CASE("verify distinguishes parse errors from axiom failures") {
    CHECK(cli({"verify", "A"}).exit_code == 0);
    CHECK(cli({"verify", std::string(COINDET_FIXTURE_DIR) + "/A.dga"}).exit_code == 0);

    std::string broken = write_temp("coindet_cli_broken.dga", "dga B\ntruncate 3\ngen x who\n");
    Run parse = cli({"verify", broken});
    CHECK(parse.exit_code == 1);
    CHECK(parse.out.find("line 3") != std::string::npos);

    std::string unsquared = write_temp(
        "coindet_cli_d2.dga", "dga D2\ntruncate 4\ngen x 1\ngen y 2\ngen z 3\nd x = y\nd y = z\n");
    Run axioms = cli({"verify", unsquared, "--json"});
    CHECK(axioms.exit_code == 2);
    ordered_json doc = ordered_json::parse(axioms.out);
    CHECK(doc["status"] == "refused");
    CHECK(doc["reason"] == "invalid_presentation");
    CHECK(doc["issues"][0]["code"] == "d_squared_nonzero");
    CHECK(doc["issues"][0]["detail"].get<std::string>().find("d(d(x))") != std::string::npos);
}

TEST_CASE("domain refusals exit with code 2 and name the reason") {
    Run non_cycle = cli({"triple", "A", "a01", "a1", "a2", "--json"});
    CHECK(non_cycle.exit_code == 2);
    ordered_json doc = ordered_json::parse(non_cycle.out);
    CHECK(doc["reason"] == "non_cycle");
    CHECK(doc["message"].get<std::string>().find("d(a01) = a0 * a1") != std::string::npos);

    Run undefined = cli({"triple", "A", "a0", "a0", "a0", "--json"});
    CHECK(undefined.exit_code == 2);
    CHECK(ordered_json::parse(undefined.out)["reason"] == "triple_undefined");

    Run out_of_range = cli({"homology", "A", "--max-degree", "9", "--json"});
    CHECK(out_of_range.exit_code == 2);
    CHECK(ordered_json::parse(out_of_range.out)["reason"] == "degree_unavailable");
}

TEST_CASE("usage problems exit with code 1") {
    CHECK(cli({}).exit_code == 1);
    CHECK(cli({"nope"}).exit_code == 1);
    CHECK(cli({"triple", "A", "a0"}).exit_code == 1);

    Run missing = cli({"verify", "no_such_input"});
    CHECK(missing.exit_code == 1);
    CHECK(missing.out.find("no such file or fixture") != std::string::npos);

    Run help = cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("Subcommands") != std::string::npos);
}

TEST_CASE("fourfold enumerates the full value set when allowed") {
    Run r = cli({"fourfold", "A", "a0", "a1", "a2", "a3", "--json"});
    CHECK(r.exit_code == 0);
    ordered_json doc = ordered_json::parse(r.out);
    CHECK(doc["defined"] == true);
    CHECK(doc["coindeterminacy"]["contains_zero"] == true);
    CHECK(doc["bracket"]["kernel_dim"] == 16);
    CHECK(doc["bracket"]["enumeration_truncated"] == false);
    CHECK(doc["bracket"]["value_count"] == 128);
    CHECK(doc["bracket"]["values"].size() == 128);

    Run undefined = cli({"fourfold", "A_prime", "a0", "a1", "a2", "a3", "--json"});
    CHECK(undefined.exit_code == 0);
    ordered_json prime = ordered_json::parse(undefined.out);
    CHECK(prime["defined"] == false);
    CHECK(prime["coindeterminacy"]["coset"]["representative"] == "c");
    CHECK(prime.contains("bracket") == false);
    CHECK(prime["coindeterminacy"].contains("witnesses") == false);
}

TEST_CASE("the coindet command reports witnesses exactly when zero is inside") {
    ordered_json with = ordered_json::parse(cli({"coindet", "A", "a0", "a1", "a2", "a3", "--json"}).out);
    CHECK(with["contains_zero"] == true);
    REQUIRE(with.contains("witnesses"));
    CHECK(!with["witnesses"]["x"].get<std::string>().empty());
    ordered_json without =
        ordered_json::parse(cli({"coindet", "A_prime", "a0", "a1", "a2", "a3", "--json"}).out);
    CHECK(without["contains_zero"] == false);
    CHECK(without.contains("witnesses") == false);
}

TEST_CASE("random-check is deterministic and reports its tally") {
    Run first = cli({"random-check", "--count", "4", "--seed", "11", "--json"});
    Run second = cli({"random-check", "--count", "4", "--seed", "11", "--json"});
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    ordered_json doc = ordered_json::parse(first.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["checks"].get<int>() > 0);
    CHECK(doc["mismatches"].empty());

    Run empty = cli({"random-check", "--count", "0", "--json"});
    CHECK(empty.exit_code == 0);
    CHECK(ordered_json::parse(empty.out)["checks"] == 0);
}
