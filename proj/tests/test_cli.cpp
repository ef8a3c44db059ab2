#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "spinsym/serialize.hpp"
#include "spinsym/spin_green.hpp"

using namespace spinsym;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SPINSYM_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    return fs::temp_directory_path() / ("spinsym-cli-" + std::to_string(::getpid()) + "-" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("expand") {
    CHECK(run("expand --family G --lambda 3,2 --basis Q --no-cache").out == "Q(3,2) + 2tQ(4,1) + 2t^2Q(5)\n");
    CHECK(run("expand --family Q --lambda 1 --basis p --no-cache").out == "2p(1)\n");
    CHECK(run("expand --family G --lambda 5 --basis Q --no-cache").out == "Q(5)\n");
    const Run j = run("expand --family G --lambda 4,1 --format json --no-cache");
    CHECK(j.status == 0);
    CHECK(json::parse(j.out).size() == 2);
}

TEST_CASE("table commands emit parseable JSON") {
    VertexEngine v;
    QKostkaEngine k(v);
    SpinGreenEngine g(k);
    const Run l = run("lkostka --n 5 --format json --no-cache");
    CHECK(l.status == 0);
    const PolyTable lt = poly_table_from_json(json::parse(l.out));
    CHECK(lt == k.l_table(5));
    CHECK(lt.rows.size() == 3);
    const Run y = run("spin-green --n 6 --format json --no-cache --jobs 3");
    CHECK(y.status == 0);
    CHECK(poly_table_from_json(json::parse(y.out)) == g.y_table(6));
    const Run z = run("spin-char --n 4 --format json --no-cache");
    CHECK(z.status == 0);
    const SpinCharTable zt = spin_char_table_from_json(json::parse(z.out));
    CHECK(zt.entries.size() == 2);
    CHECK(zt.entries[0].size() == 2);
    for (const auto& row : zt.entries) for (const auto& x : row) CHECK(x.get_den() == 1);
}

TEST_CASE("latex layout for n = 3") {
    const Run r = run("spin-green --n 3 --format latex --no-cache");
    CHECK(r.status == 0);
    CHECK(r.out.find("$\\mu\\backslash \\lambda$ & $(3)$ & $(2,1)$") != std::string::npos);
    CHECK(r.out.find("$(3)$ & $1$ & $2t-2$") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    const Run a = run("spin-green --n 7 --format csv --no-cache --jobs 1");
    const Run b = run("spin-green --n 7 --format csv --no-cache --jobs 8");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("--out writes the file") {
    const fs::path out = scratch("table.md");
    const Run r = run("lkostka --n 4 --no-cache --out " + out.string());
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    CHECK(read_file(out) == run("lkostka --n 4 --no-cache").out);
    fs::remove(out);
}

TEST_CASE("cache directory is populated and reused") {
    const fs::path dir = scratch("cache");
    fs::remove_all(dir);
    const Run cold = run("spin-green --n 7 --format json --cache-dir " + dir.string());
    CHECK(cold.status == 0);
    CHECK(fs::exists(dir / "Y.json"));
    CHECK(run("expand --family G --lambda 4,2,1 --cache-dir " + dir.string()).status == 0);
    CHECK(fs::exists(dir / "qhl.json"));
    CHECK(fs::exists(dir / "Y.json"));
    const Run warm = run("spin-green --n 7 --format json --cache-dir " + dir.string());
    CHECK(warm.out == cold.out);
    const Run uncached = run("spin-green --n 7 --format json --cache-dir " + dir.string() + " --no-cache");
    CHECK(uncached.out == cold.out);
    fs::remove_all(dir);
}

TEST_CASE("GAMMA_CACHE_DIR selects the cache") {
    const fs::path dir = scratch("envcache");
    fs::remove_all(dir);
    const std::string cmd = "GAMMA_CACHE_DIR=" + dir.string() + " " + SPINSYM_CLI + " lkostka --n 5 >/dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(dir / "L.json"));
    fs::remove_all(dir);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("spin-green --n 0 --no-cache").status == 2);
    CHECK(run("lkostka --n -3 --no-cache").status == 2);
    CHECK(run("expand --lambda 2,2 --no-cache").status == 2);
    CHECK(run("expand --lambda 2,x --no-cache").status == 2);
    CHECK(run("spin-green --n 3 --format xml --no-cache").status == 2);
    CHECK(run("spin-green --n 3 --no-cache --out /nonexistent-dir/x.json").status == 2);
    CHECK(run("spin-green --no-cache").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("verify --max-n 0 --no-cache").status == 2);
    CHECK(run("verify --suite bogus --no-cache").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("verify reports per-suite summaries") {
    const Run ok = run("verify --suite lkostka --max-n 6 --no-cache");
    CHECK(ok.status == 0);
    CHECK(ok.out.rfind("PASS lkostka: ", 0) == 0);
    const Run tables = run("verify --suite tables --max-n 6 --no-cache");
    CHECK(tables.status == 0);
    CHECK(tables.out.find("PASS tables") != std::string::npos);
    const Run ops = run("verify --suite operators --max-n 3 --no-cache");
    CHECK(ops.status == 0);
    const Run all = run("verify --max-n 4 --no-cache");
    CHECK(all.status == 0);
    for (const char* s : {"identities", "operators", "lkostka", "spingreen", "tables"}) {
        CHECK(all.out.find(std::string("PASS ") + s) != std::string::npos);
    }
}

TEST_CASE("verify exits with 1 when an assertion fails") {
    // The published n = 7 table carries a misprinted cell.
    const Run r = run("verify --suite tables --max-n 7 --no-cache");
    CHECK(r.status == 1);
    CHECK(r.out.find("FAIL tables") != std::string::npos);
    CHECK(r.out.find("(4,3),(3,1,1,1,1)") != std::string::npos);
}

}
