#include "cli_runner.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace wvlt;
namespace fs = std::filesystem;

namespace {

struct Workspace {
    fs::path dir = fs::temp_directory_path() / "wvlt_cli_test";
    fs::path text = dir / "wavelettree.txt";

    Workspace() {
        fs::remove_all(dir);
        fs::create_directories(dir);
        test::write_bytes(text, test::wavelettree);
    }
    ~Workspace() { fs::remove_all(dir); }

    std::string path(const char* name) const { return (dir / name).string(); }
};

test::RunResult cli(const std::vector<std::string>& args) { return test::run_cli(WVLT_CLI_PATH, args); }

} // namespace

TEST_CASE("build writes the expected header; translated builds are byte-identical") {
    Workspace ws;
    auto r = cli({"build", ws.text.string(), ws.path("t.idx"), "--structure", "tree"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("n=11 sigma=7 sigma_padded=8 height=3") != std::string::npos);

    for (const char* structure : {"tree", "matrix"}) {
        REQUIRE(cli({"build", ws.text.string(), ws.path("a.idx"), "--structure", structure}).status == 0);
        REQUIRE(cli({"build", ws.text.string(), ws.path("b.idx"), "--structure", structure, "--via-translate"})
                    .status == 0);
        CHECK(test::read_bytes(ws.path("a.idx")) == test::read_bytes(ws.path("b.idx")));
    }
}

TEST_CASE("query") {
    Workspace ws;
    for (const char* structure : {"tree", "matrix"}) {
        REQUIRE(cli({"build", ws.text.string(), ws.path("q.idx"), "--structure", structure}).status == 0);
        auto r = cli({"query", ws.path("q.idx"), "access", "0"});
        CHECK(r.status == 0);
        CHECK(r.out == "w\n");
        r = cli({"query", ws.path("q.idx"), "rank", "e", "10"});
        CHECK(r.status == 0);
        CHECK(r.out == "4\n");
        r = cli({"query", ws.path("q.idx"), "select", "e", "2"});
        CHECK(r.status == 0);
        CHECK(r.out == "5\n");
        r = cli({"query", ws.path("q.idx"), "rank", "0x65", "10"});
        CHECK(r.out == "4\n");

        r = cli({"query", ws.path("q.idx"), "access", "11"});
        CHECK(r.status == 1);
        CHECK(r.out.find("[0, 11)") != std::string::npos);
        r = cli({"query", ws.path("q.idx"), "select", "e", "9"});
        CHECK(r.status == 1);
        CHECK(r.out.find("[1, 4]") != std::string::npos);
        r = cli({"query", ws.path("q.idx"), "rank", "ee", "1"});
        CHECK(r.status == 1);
    }
}

TEST_CASE("dump") {
    Workspace ws;
    REQUIRE(cli({"build", ws.text.string(), ws.path("m.idx"), "--structure", "matrix"}).status == 0);
    const auto r = cli({"dump", ws.path("m.idx")});
    CHECK(r.status == 0);
    CHECK(r.out.find("C: 0 1 5 6 7 9 10 11 11") != std::string::npos);
    CHECK(r.out.find("level 0: 10100011000 z=7") != std::string::npos);
    CHECK(r.out.find("level 2: 01111100010 z=5") != std::string::npos);
}

TEST_CASE("translate diagnostics") {
    Workspace ws;
    auto r = cli({"translate", ws.text.string(), "--level", "2", "--pos", "9", "--inverse", "--symbol", "r"});
    CHECK(r.status == 0);
    CHECK(r.out.find("-> tree position 6") != std::string::npos);
    CHECK(r.out.find("u=2 q=8 delta_u=1") != std::string::npos);

    r = cli({"translate", ws.text.string(), "--level", "2", "--pos", "9"});
    CHECK(r.status == 0);
    CHECK(r.out.find("-> matrix position 7") != std::string::npos);
    CHECK(r.out.find("v=2 p=7 delta_v=2") != std::string::npos);

    r = cli({"translate", ws.text.string(), "--level", "0", "--pos", "5"});
    CHECK(r.out.find("-> matrix position 5") != std::string::npos);

    r = cli({"translate", ws.text.string(), "--level", "2", "--pos", "9", "--inverse"});
    CHECK(r.status == 1);
    CHECK(r.out.find("--symbol") != std::string::npos);

    r = cli({"translate", ws.text.string(), "--level", "2", "--pos", "9", "--inverse", "--symbol", "e"});
    CHECK(r.status == 1);
    r = cli({"translate", ws.text.string(), "--level", "3", "--pos", "0"});
    CHECK(r.status == 1);
}

TEST_CASE("verify") {
    Workspace ws;
    auto r = cli({"verify", ws.text.string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    test::write_bytes(ws.dir / "one", {'z'});
    CHECK(cli({"verify", ws.path("one")}).status == 0);
}

TEST_CASE("errors and exit codes") {
    Workspace ws;
    test::write_bytes(ws.dir / "empty", {});
    auto r = cli({"build", ws.path("empty"), ws.path("e.idx")});
    CHECK(r.status == 2);
    CHECK(r.out.find("empty") != std::string::npos);
    CHECK(cli({"verify", ws.path("empty")}).status == 2);
    CHECK(cli({"build", ws.path("missing"), ws.path("e.idx")}).status == 2);
    CHECK(cli({"query", ws.text.string(), "access", "0"}).status == 2);  // not an index file
    CHECK(cli({}).status == 1);
    CHECK(cli({"frobnicate"}).status == 1);
    CHECK(cli({"build", ws.text.string(), ws.path("x.idx"), "--structure", "forest"}).status == 1);
}
