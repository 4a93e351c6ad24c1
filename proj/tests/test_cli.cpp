#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;
namespace cli = bnloci::cli;

namespace {

const std::string kLedgerPath = BNLOCI_DATA_DIR "/known.json";

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text, const std::string& eol) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto next = text.find(eol, pos);
        if (next == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, next - pos));
        pos = next + eol.size();
    }
    return lines;
}

} // namespace

TEST_CASE("scalar commands") {
    CHECK(run({"rho", "--g", "20", "--r", "3", "--d", "17"}).out == "-4\n");
    CHECK(run({"gamma", "--r", "3", "--d", "17"}).out == "11\n");
    CHECK(run({"rhok", "--g", "20", "--r", "3", "--d", "17", "--k", "6"}).out == "0\n");
    CHECK(run({"dmax", "--g", "20", "--r", "2"}).out == "15\n");
    CHECK(run({"kappa", "--g", "20", "--r", "3", "--d", "17"}).out.rfind("6\n", 0) == 0);
}

TEST_CASE("json output round-trips") {
    const auto o = run({"kappa", "--g", "20", "--r", "4", "--d", "19", "--format", "json"});
    REQUIRE(o.code == cli::kOk);
    const auto j = json::parse(o.out);
    CHECK(j.at("command") == "kappa");
    CHECK(j.at("inputs").at("g") == 20);
    CHECK(j.at("result").at("value") == 5);
    CHECK(j.at("result").at("agree") == true);
    CHECK(j.at("result").at("closed").at("branch") == "closed_second_case");

    const auto m = json::parse(run({"maximal", "--g", "20", "--format", "json"}).out);
    CHECK(m.at("result").at("loci").size() == 4);
    CHECK(m.at("result").at("loci")[2].at("kappa") == 6);
}

TEST_CASE("csv output has a header and CRLF line endings") {
    const auto o = run({"maximal", "--g", "20", "--format", "csv"});
    REQUIRE(o.code == cli::kOk);
    const auto lines = split_lines(o.out, "\r\n");
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "r,d_max,rho,kappa,lower_bound_approx,upper_bound_approx");
    CHECK(lines[3].rfind("3,17,-4,6,", 0) == 0);

    const auto s = run({"rho", "--g", "20", "--r", "3", "--d", "17", "--format", "csv"});
    CHECK(s.out == "value\r\n-4\r\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"nonsense"}).code == cli::kUsage);
    CHECK(run({"rho", "--g", "20"}).code == cli::kUsage);
    CHECK(run({"rho", "--g", "20", "--r", "3", "--d", "17", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"kappa", "--g", "20", "--r", "3", "--d", "17", "--method", "guess"}).code == cli::kUsage);

    const auto dom = run({"kappa", "--g", "20", "--r", "3", "--d", "18"});
    CHECK(dom.code == cli::kDomain);
    CHECK(dom.err.find("rho<0") != std::string::npos);
    CHECK(run({"rho", "--g", "0", "--r", "1", "--d", "1"}).code == cli::kDomain);
    CHECK(run({"check", "--source", "20,3,17", "--target", "21,4,20"}).code == cli::kDomain);
    CHECK(run({"check", "--source", "20,3", "--target", "20,4,19"}).code == cli::kUsage);
    CHECK(run({"report", "--g", "20", "--ledger", "/nonexistent.json"}).code == cli::kUsage);
    CHECK(run({"gtable", "--s-range", "weird"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("report with and without the ledger") {
    const auto v = run({"report", "--g", "20", "--ledger", kLedgerPath});
    REQUIRE(v.code == cli::kOk);
    CHECK(v.out.find("conjecture_status: Verified") != std::string::npos);

    const auto o = run({"report", "--g", "21", "--ledger", kLedgerPath});
    REQUIRE(o.code == cli::kOk);
    CHECK(o.out.find("conjecture_status: OpenPairs: (3,18)⊄?(4,20)") != std::string::npos);

    const auto j = json::parse(run({"report", "--g", "21", "--ledger", kLedgerPath, "--format", "json"}).out);
    CHECK(j.at("result").at("conjecture_status") == "open_pairs");
    CHECK(j.at("result").at("open_pairs") == json::parse("[[[3,18],[4,20]]]"));

    const auto bare = json::parse(run({"report", "--g", "20", "--format", "json"}).out);
    CHECK(bare.at("result").at("conjecture_status") == "open_pairs");
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"report", "--g", "34", "--format", "json"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("check subcommand") {
    const auto j = json::parse(run({"check", "--source", "20,3,17", "--target", "20,4,19", "--format", "json"}).out);
    CHECK(j.at("result").at("status") == "established");
    CHECK(j.at("result").at("certificate").at("rule") == "kappa_gap");
    CHECK(j.at("result").at("certificate").at("witness").at("k") == 6);
    CHECK(j.at("result").at("numeric_type") == "distinct_invariants");

    const auto open = json::parse(run({"check", "--source", "21,3,18", "--target", "21,4,20", "--format", "json"}).out);
    CHECK(open.at("result").at("status") == "open");
    CHECK(open.at("result").at("certificate").is_null());
}

TEST_CASE("gtable and exceptional") {
    const auto g = json::parse(run({"gtable", "--r-min", "2", "--r-max", "4", "--format", "json"}).out);
    CHECK(g.at("result").at("table") == json::parse(R"([{"r":2,"G":28},{"r":3,"G":50},{"r":4,"G":96}])"));
    CHECK(run({"exceptional", "--r", "2", "--s-range", "ceil"}).out == "10 11 12 15 18 19 24 27\n");
    const auto csv = run({"exceptional", "--r", "2", "--s-range", "ceil", "--format", "csv"}).out;
    CHECK(csv.rfind("g\r\n10\r\n11\r\n", 0) == 0);
}

TEST_CASE("figure rows") {
    const auto o = run({"figure", "--g", "96"});
    REQUIRE(o.code == cli::kOk);
    const auto lines = split_lines(o.out, "\r\n");
    REQUIRE(lines.size() == 10);
    CHECK(lines[5].rfind("5,", 0) == 0);
    CHECK(lines[5].find(",18,") != std::string::npos);
    CHECK(lines[6].find(",18,") != std::string::npos);

    CHECK(split_lines(run({"figure", "--g", "479"}).out, "\r\n").size() == 22);
    CHECK(split_lines(run({"figure", "--g", "20"}).out, "\r\n").size() == 5);

    const auto path = std::filesystem::temp_directory_path() / "bnloci_figure_test.csv";
    const auto w = run({"figure", "--g", "20", "--out", path.string()});
    CHECK(w.code == cli::kOk);
    CHECK(w.out == "wrote 4 rows to " + path.string() + "\n");
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == run({"figure", "--g", "20"}).out);
    std::filesystem::remove(path);

    CHECK(run({"figure", "--g", "20", "--out", "/nonexistent-dir/x.csv"}).code == cli::kUsage);
    CHECK(run({"figure", "--g", "2"}).code == cli::kDomain);
}

TEST_CASE("selftest") {
    const auto ok = run({"selftest", "--gmax", "20"});
    CHECK(ok.code == cli::kOk);
    const auto bad = run({"selftest", "--gmax", "20", "--inject-fault", "20,3,17", "--format", "json"});
    CHECK(bad.code == cli::kInternal);
    const auto j = json::parse(bad.out);
    CHECK(j.at("result").at("passed") == false);
    CHECK(run({"selftest", "--gmax", "5"}).code == cli::kUsage);
}
