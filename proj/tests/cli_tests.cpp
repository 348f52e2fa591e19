#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("sts_cli_" + std::to_string(static_cast<long>(::getpid())) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

CliResult run_cli(const TempDir& dir, const std::string& args) {
    const fs::path out = dir.path / "_stdout.txt";
    const fs::path err = dir.path / "_stderr.txt";
    const std::string cmd = "cd '" + dir.path.string() + "' && '" + STS_CLI_PATH + "' " + args +
                            " >'" + out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

int count_lines(const std::string& text) {
    return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.empty() || line[0] != '#') out += line + "\n";
    return out;
}

const std::string kFanoJson =
    "{\"n\":7,\"blocks\":7,\"alpha\":7,\"beta\":7,\"gamma\":0,\"pasch_count\":7,"
    "\"flags\":{\"projective\":true,\"anti_pasch\":false,\"strongly_anti_pasch\":false,"
    "\"enough_pasch\":true},\"bounds_ok\":true,\"degenerate\":false}\n";

}  // namespace

TEST_CASE("construct pg writes a nine-line canonical file") {
    TempDir dir;
    const auto r = run_cli(dir, "construct pg --k 2 -o fano.sts");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("construct pg: k=2, n=7, 7 blocks") != std::string::npos);
    const std::string text = slurp(dir.path / "fano.sts");
    CHECK(count_lines(text) == 9);
    CHECK(text.find("# construction: pg k=2\n7\n0 1 2\n") == 0);
}

TEST_CASE("construct netto --auto-c reports the multiplier set") {
    TempDir dir;
    const auto r = run_cli(dir, "construct netto --q 13 --auto-c -o s13.sts");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("C = {1, 2}") != std::string::npos);
    const std::string text = strip_comments(slurp(dir.path / "s13.sts"));
    CHECK(text.rfind("13\n", 0) == 0);
    CHECK(count_lines(text) == 27);  // order line + 26 blocks
}

TEST_CASE("construct netto rejects inadmissible field sizes") {
    TempDir dir;
    const auto r = run_cli(dir, "construct netto --q 11 --auto-c -o bad.sts");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("BadOrderModSix") != std::string::npos);
    CHECK(!fs::exists(dir.path / "bad.sts"));
}

TEST_CASE("construct netto with an explicit multiplier set") {
    TempDir dir;
    const auto r = run_cli(dir, "construct netto --q 13 --c 1,2 -o s13.sts");
    CHECK(r.exit_code == 0);
    const auto bad = run_cli(dir, "construct netto --q 13 --c 1,4 -o s13b.sts");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("CosetCollision") != std::string::npos);
}

TEST_CASE("invariants emits stable json") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct pg --k 2 -o fano.sts").exit_code == 0);
    const auto r = run_cli(dir, "invariants fano.sts");
    CHECK(r.exit_code == 0);
    CHECK(r.out == kFanoJson);
    // Identical bytes whatever the worker count.
    for (const char* threads : {"--threads 2", "--threads 5", "--threads 0"}) {
        const auto again = run_cli(dir, std::string("invariants fano.sts ") + threads);
        CHECK(again.exit_code == 0);
        CHECK(again.out == kFanoJson);
    }
}

TEST_CASE("invariants renders a table on request") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct ag --m 2 -o s9.sts").exit_code == 0);
    const auto r = run_cli(dir, "invariants s9.sts --table");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("alpha               72\n") != std::string::npos);
    CHECK(r.out.find("strongly_anti_pasch yes\n") != std::string::npos);
}

TEST_CASE("invariants --oracle appends the check suite") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct netto --q 13 --auto-c -o s13.sts").exit_code == 0);
    const auto r = run_cli(dir, "invariants s13.sts --oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ok   oracle_a_set") != std::string::npos);
    CHECK(r.out.find("ok   oracle_pasch_4subsets") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("invariants rejects a truncated file") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct pg --k 2 -o fano.sts").exit_code == 0);
    std::string text = slurp(dir.path / "fano.sts");
    text.pop_back();
    text.erase(text.rfind('\n') + 1);
    std::ofstream(dir.path / "broken.sts", std::ios::binary) << text;
    const auto r = run_cli(dir, "invariants broken.sts");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("WrongBlockCount") != std::string::npos);
}

TEST_CASE("missing input files exit nonzero") {
    TempDir dir;
    const auto r = run_cli(dir, "invariants nowhere.sts");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("FileError") != std::string::npos);
    const auto p = run_cli(dir, "product nowhere.sts nowhere.sts -o out.sts");
    CHECK(p.exit_code == 1);
}

TEST_CASE("product writes the direct product") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct ag --m 1 -o s3.sts").exit_code == 0);
    REQUIRE(run_cli(dir, "construct pg --k 2 -o s7.sts").exit_code == 0);
    const auto r = run_cli(dir, "product s3.sts s7.sts -o p21.sts");
    CHECK(r.exit_code == 0);
    const auto inv = run_cli(dir, "invariants p21.sts");
    CHECK(inv.out.find("{\"n\":21,\"blocks\":70,") == 0);
}

TEST_CASE("product of two one-block systems equals the ag construction") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct ag --m 1 -o s3.sts").exit_code == 0);
    REQUIRE(run_cli(dir, "product s3.sts s3.sts -o p9.sts").exit_code == 0);
    REQUIRE(run_cli(dir, "construct ag --m 2 -o a9.sts").exit_code == 0);
    CHECK(strip_comments(slurp(dir.path / "p9.sts")) ==
          strip_comments(slurp(dir.path / "a9.sts")));
}

TEST_CASE("construct product mirrors the product subcommand") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct ag --m 1 -o s3.sts").exit_code == 0);
    const auto r = run_cli(dir, "construct product --left s3.sts --right s3.sts -o p9.sts");
    CHECK(r.exit_code == 0);
    const auto inv = run_cli(dir, "invariants p9.sts");
    CHECK(inv.out.find("{\"n\":9,\"blocks\":12,") == 0);
}

TEST_CASE("verify-product confirms the closed forms") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct ag --m 1 -o s3.sts").exit_code == 0);
    const auto r = run_cli(dir, "verify-product s3.sts s3.sts");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("predicted alpha=72 beta=84 gamma=12") != std::string::npos);
    CHECK(r.out.find("measured  alpha=72 beta=84 gamma=12") != std::string::npos);
    CHECK(r.out.find("match") != std::string::npos);
}

TEST_CASE("verify-product refuses blown budgets") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct pg --k 2 -o s7.sts").exit_code == 0);
    const auto r = run_cli(dir, "verify-product s7.sts s7.sts --max-triples 100");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("pasch counts and lists configurations") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct pg --k 2 -o fano.sts").exit_code == 0);
    const auto r = run_cli(dir, "pasch fano.sts --list --oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pasch_count 7\n") == 0);
    CHECK(r.out.find("oracle_4subsets 7") != std::string::npos);
    CHECK(count_lines(r.out) == 9);  // count + 7 configs + oracle line
}

TEST_CASE("spectrum scans a directory") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct pg --k 2 -o fano.sts").exit_code == 0);
    REQUIRE(run_cli(dir, "construct ag --m 2 -o sts9.sts").exit_code == 0);
    const auto r = run_cli(dir, "spectrum .");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("fano.sts") != std::string::npos);
    CHECK(r.out.find("sts9.sts") != std::string::npos);
    CHECK(r.out.find("no bound or gamma-gap violations") != std::string::npos);
    // fano row sorts before sts9 (by order).
    CHECK(r.out.find("fano.sts") < r.out.find("sts9.sts"));
}

TEST_CASE("spectrum of an empty directory succeeds") {
    TempDir dir;
    fs::create_directories(dir.path / "empty");
    const auto r = run_cli(dir, "spectrum empty");
    CHECK(r.exit_code == 0);
}

TEST_CASE("spectrum flags unparsable files and keeps going") {
    TempDir dir;
    REQUIRE(run_cli(dir, "construct pg --k 2 -o fano.sts").exit_code == 0);
    std::ofstream(dir.path / "junk.sts") << "not a system\n";
    const auto r = run_cli(dir, "spectrum .");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("ERROR") != std::string::npos);
    CHECK(r.out.find("fano.sts") != std::string::npos);
}

TEST_CASE("gen-all writes representatives and a census") {
    TempDir dir;
    const auto r = run_cli(dir, "gen-all --n 7 -o out");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("order 7: 1 isomorphism class(es), 2 normalized / 30 labeled") !=
          std::string::npos);
    CHECK(fs::exists(dir.path / "out" / "sts7_class1.sts"));
    CHECK(fs::exists(dir.path / "out" / "census7.json"));
    const auto inv = run_cli(dir, "invariants out/sts7_class1.sts");
    CHECK(inv.out == kFanoJson);
}

TEST_CASE("usage errors exit with code 2") {
    TempDir dir;
    CHECK(run_cli(dir, "frobnicate").exit_code == 2);
    CHECK(run_cli(dir, "gen-all --n 8 -o out").exit_code == 2);
    CHECK(run_cli(dir, "construct pg -o missing_k.sts").exit_code == 2);
    CHECK(run_cli(dir, "").exit_code == 2);
    CHECK(run_cli(dir, "--help").exit_code == 0);
}

