#include "doctest.h"

#include <fstream>
#include <sstream>

#include "tangles/cli.hpp"
#include "tangles/io.hpp"

using namespace tangles;

namespace {

struct CliRun {
    int exit;
    std::string out, err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* kStandard2 = R"({"n":2,"top":[[1,2],[3,4]],"bottom":[[2,3],[4,1]],"initial":[1,3]})";

} // namespace

TEST_CASE("count command") {
    auto r = run({"count", "3"});
    CHECK(r.exit == 0);
    CHECK(r.out == "2\n");
    CHECK(run({"count", "1"}).exit == 1);
}

TEST_CASE("classify from stdin") {
    auto r = run({"classify"}, kStandard2);
    CHECK(r.exit == 0);
    CHECK(r.out.find("\"arc_decomposition\":[2]") != std::string::npos);
    CHECK(r.out.find("\"kind\":\"O\"") != std::string::npos);
}

TEST_CASE("classify rejects malformed documents with named fields") {
    auto r = run({"classify"}, R"({"n":2,"top":[[1,2],[3,4]],"bottom":[[2,3],[4,1]]})");
    CHECK(r.exit == 1);
    CHECK(r.err.find("\"initial\"") != std::string::npos);

    auto w = run({"classify"},
                 R"({"n":3,"top":[[1,2],[3,4],[5,6]],"bottom":[[2,3],[4,5],[6,1]],)"
                 R"("initial":[1,3,5],"word":[{"index":7,"sign":1}]})");
    CHECK(w.exit == 1);
    CHECK(w.err.find("exceeds 2n") != std::string::npos);
}

TEST_CASE("normalize emits a standard form and witness") {
    auto r = run({"normalize"}, kStandard2);
    CHECK(r.exit == 0);
    CHECK(r.out.find("\"witness\":[]") != std::string::npos);
}

TEST_CASE("order command text and json") {
    auto r = run({"order", "2,2", "3"});
    CHECK(r.exit == 0);
    CHECK(r.out.substr(0, 3) == "yes");
    auto j = run({"--format", "json", "order", "1,2", "2"});
    CHECK(j.exit == 0);
    CHECK(j.out.find("\"verdict\":\"yes\"") != std::string::npos);
    CHECK(j.out.find("\"witness\"") != std::string::npos);
    auto u = run({"order", "2", "3"});
    CHECK(u.out.substr(0, 2) == "no");
}

TEST_CASE("hasse command emits DOT") {
    auto r = run({"hasse", "--n-max", "3"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("digraph") == 0);
    CHECK(r.out.find("\"<1,2>\" -> \"<2>\"") != std::string::npos);
}

TEST_CASE("enumerate respects the guard") {
    auto r = run({"enumerate", "2"});
    CHECK(r.exit == 0);
    // two documents, one per line
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
    CHECK(run({"enumerate", "8"}).exit == 1);
}

TEST_CASE("u-index command") {
    auto r = run({"u-index", "2,2"});
    CHECK(r.exit == 0);
    CHECK(r.out == "3\n");
    CHECK(run({"u-index", "2"}).exit == 1);
}

TEST_CASE("render command") {
    auto r = run({"render", "1,2"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("class <1,2>") != std::string::npos);
    CHECK(r.out.find("1 2 3 4 5 6") != std::string::npos);
}

TEST_CASE("examples suite passes") {
    auto r = run({"examples"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"bogus"}).exit == 2);
    CHECK(run({}).exit == 2);
    CHECK(run({"order", "2,2"}).exit == 2); // missing second class
}

TEST_CASE("equiv compares classes across files") {
    const std::string a = "cli_equiv_a.jsonl";
    const std::string b = "cli_equiv_b.jsonl";
    {
        std::ofstream fa(a);
        fa << R"({"n":3,"top":[[1,2],[3,4],[5,6]],"bottom":[[2,3],[4,5],[6,1]],"initial":[1,3,5]})"
           << "\n";
        std::ofstream fb(b);
        fb << R"({"n":3,"top":[[2,3],[4,5],[6,1]],"bottom":[[3,4],[5,6],[1,2]],"initial":[2,4,6]})"
           << "\n";
    }
    auto r = run({"equiv", a, b});
    CHECK(r.exit == 0);
    CHECK(r.out == "true\n");
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("document round-trip is idempotent on canonical form") {
    auto doc = parse_move_document(kStandard2);
    REQUIRE(doc.ok());
    const auto once = move_to_json(doc.value().move).dump();
    auto again = parse_move_document(once);
    REQUIRE(again.ok());
    CHECK(move_to_json(again.value().move).dump() == once);
    CHECK(again.value().move == doc.value().move);
}
