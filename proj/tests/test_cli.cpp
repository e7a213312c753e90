#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lrc/commands.hpp"
#include "lrc/io.hpp"

#ifndef LRCTOOL_PATH
#error "LRCTOOL_PATH must point at the built binary"
#endif

namespace fs = std::filesystem;
using namespace lrc;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(LRCTOOL_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("lrctool-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generate writes verifiable artifacts") {
    TempDir tmp;
    const std::string prefix = tmp.file("q7");
    CHECK(run("generate --q 7 --out " + prefix) == 0);
    CHECK(fs::exists(prefix + ".arc.json"));
    CHECK(fs::exists(prefix + ".H.json"));

    CHECK(run("verify --in " + prefix + ".arc.json") == 0);
    CHECK(run("verify --in " + prefix + ".H.json") == 0);

    // generate -> verify round trip through the library as well
    const auto fla = arc_from_json(Json::parse(slurp(prefix + ".arc.json")));
    CHECK(validate_local_arc(fla).pass());
}

TEST_CASE("output files are byte-identical across runs") {
    TempDir tmp;
    const std::string a = tmp.file("a"), b = tmp.file("b");
    for (const std::string fmt : {"json", "text", "csv"}) {
        CHECK(run("generate --q 9 --modulus 2,2,1 --format " + fmt + " --out " + a) == 0);
        CHECK(run("generate --q 9 --modulus 2,2,1 --format " + fmt + " --out " + b) == 0);
        const std::string ext = fmt == "json" ? ".json" : fmt == "text" ? ".txt" : ".csv";
        CHECK(slurp(a + ".arc" + ext) == slurp(b + ".arc" + ext));
        CHECK(slurp(a + ".H" + ext) == slurp(b + ".H" + ext));
    }
    // the emitted q=9 JSON files verify cleanly
    CHECK(run("verify --in " + a + ".arc.json") == 0);
    CHECK(run("verify --in " + a + ".H.json") == 0);
}

TEST_CASE("unsupported orders exit with usage code") {
    CHECK(run("generate --q 4") == 2);
    CHECK(run("generate --q 5") == 2);
    CHECK(run("generate --q 6") == 2);
    CHECK(run("generate --q 7 --modulus 1,1,1") == 2);    // degree 2 for a degree-1 field
    CHECK(run("generate --q 8 --modulus 1,0,0,1") == 2);  // x^3 + 1 is reducible
    CHECK(run("params --q 10") == 2);
}

TEST_CASE("verification failures exit with code 1") {
    TempDir tmp;
    const std::string prefix = tmp.file("q7");
    REQUIRE(run("generate --q 7 --out " + prefix) == 0);

    // perturb one point of the arc file
    auto j = Json::parse(slurp(prefix + ".arc.json"));
    j["blocks"][0][0] = {1, 2, 2};
    std::ofstream(tmp.file("broken.arc.json")) << j.dump(2);
    CHECK(run("verify --in " + tmp.file("broken.arc.json")) == 1);

    // a matrix that is not in canonical form
    std::ofstream(tmp.file("bad.H.txt"))
        << "q=7 rows=4 cols=4 groups=1\n1 1 1 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n";
    CHECK(run("verify --in " + tmp.file("bad.H.txt")) == 1);

    CHECK(run("verify --in " + tmp.file("missing.json")) == 2);
}

TEST_CASE("text round trip through an explicit modulus") {
    TempDir tmp;
    const std::string prefix = tmp.file("q8");
    REQUIRE(run("generate --q 8 --modulus 1,1,0,1 --format text --out " + prefix) == 0);
    CHECK(run("verify --in " + prefix + ".H.txt --modulus 1,1,0,1") == 0);
    CHECK(run("verify --in " + prefix + ".arc.txt --modulus 1,1,0,1") == 0);
}

TEST_CASE("params and search") {
    CHECK(run("params --q 9") == 0);
    CHECK(run("params --q 13") == 0);
    CHECK(run("search --q 7 --blocks 2") == 0);
    CHECK(run("search --q 7 --blocks 3 --budget 10") == 1);  // inconclusive
    CHECK(run("search --q 7") == 2);                         // --blocks required
}

TEST_CASE("export-matrix") {
    TempDir tmp;
    const std::string prefix = tmp.file("q7");
    REQUIRE(run("generate --q 7 --out " + prefix) == 0);
    CHECK(run("export-matrix --in " + prefix + ".arc.json --format text --out " +
              tmp.file("H.txt")) == 0);
    const auto h = parity_from_text(slurp(tmp.file("H.txt")));
    CHECK(h.col_count() == 12);
    CHECK(run("export-matrix --in " + prefix + ".H.json --out " + tmp.file("x")) == 2);
}

TEST_CASE("verify_code reports trivial codes instead of crashing") {
    ParityCheckMatrix h;
    h.field = Field::make(7, 1);
    h.groups = 1;
    h.lower_rows = 3;
    h.rows = {{1, 1, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};  // full column rank
    const auto rep = verify_code(h, 1);
    CHECK(rep.canonical);
    CHECK_FALSE(rep.pass);
    CHECK(rep.detail.find("trivial") != std::string::npos);
}

TEST_CASE("cmd_params prints the predicted table") {
    RunConfig cfg;
    cfg.q = 13;
    std::ostringstream out, err;
    CHECK(cmd_params(cfg, out, err) == 0);
    CHECK(out.str().find("(20, 12, 6, 3)") != std::string::npos);  // n = 2*13-6
    CHECK(out.str().find("q = 1 mod 4") != std::string::npos);
}
