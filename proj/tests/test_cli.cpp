#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    std::string out;
    int status = -1;
};

// Runs the CLI with stderr folded into stdout.
RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + BRIESKORN_CLI_PATH + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    int rc = pclose(f);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

fs::path fresh_dir(const std::string& tag) {
    fs::path p = fs::temp_directory_path() / ("brieskorn_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

const std::string kTrivialAlgebra = "dim 1; unit 1\n0 0 : 1\n";

}  // namespace

TEST_CASE("cli: spectrum rows") {
    auto r = run("spectrum --tuple 2,2,2,18x9 --pmax 19 --format records");
    CHECK(r.status == 0);
    int rows = 0;
    for (char c : r.out) rows += c == '\n';
    CHECK(rows == 9);  // p = 2, 4, ..., 18
    CHECK(r.out.find("p=2 subtuple=2,2,2 dim=3 cz=11 delta=10") != std::string::npos);
    CHECK(r.out.find("p=18 subtuple=2,2,2,18,18,18,18,18,18,18,18,18 dim=21 cz=36 delta=26") != std::string::npos);

    auto small = run("spectrum --tuple 2,2,2 --pmax 4 --format records");
    CHECK(small.out ==
          "p=2 subtuple=2,2,2 dim=3 cz=2 delta=1\n"
          "p=4 subtuple=2,2,2 dim=3 cz=4 delta=3\n");
}

TEST_CASE("cli: input errors exit with 2") {
    CHECK(run("spectrum --tuple 1,2 --pmax 4").status == 2);
    CHECK(run("spectrum --tuple 2,2 --pmax 0").status == 2);
    CHECK(run("spectrum --pmax 4").status == 2);
    CHECK(run("nosuchcommand").status == 2);
    CHECK(run("").status == 2);
}

TEST_CASE("cli: adc verdicts and exit codes") {
    auto pass = run("adc --tuple 2,2,2,18x9");
    CHECK(pass.status == 0);
    CHECK(pass.out.find("PASS") != std::string::npos);
    CHECK(pass.out.find("15/2") != std::string::npos);

    auto fail = run("adc --tuple 2,2,2");
    CHECK(fail.status == 3);
    CHECK(fail.out.find("FAIL") != std::string::npos);
    CHECK(fail.out.find("-3/2") != std::string::npos);

    auto degenerate = run("adc --tuple 5,5");
    CHECK(degenerate.status == 3);
    CHECK(degenerate.out.find("inverse_sum < 1") != std::string::npos);
}

TEST_CASE("cli: sh-bounds on the flagship family") {
    auto r = run("sh-bounds --tuple 2,2,2,18x9 --degree 11 --format records");
    CHECK(r.status == 0);
    CHECK(r.out.find("degree=11 lower=1 upper=2") != std::string::npos);

    auto window = run("sh-bounds --tuple 2,2,2,18x9 --window 10:12 --format records");
    CHECK(window.status == 0);
    CHECK(window.out.find("degree=10 lower=") != std::string::npos);
    CHECK(window.out.find("degree=11 lower=1 upper=2") != std::string::npos);
    CHECK(window.out.find("degree=12 lower=") != std::string::npos);
}

TEST_CASE("cli: catalog gaps exit with 4 and name the sub-tuple") {
    auto r = run("sh-bounds --tuple 2,2,3,3,25 --degree 8");
    CHECK(r.status == 4);
    CHECK(r.out.find("2,2,3,3") != std::string::npos);
    CHECK(r.out.find("--catalog") != std::string::npos);

    auto dir = fresh_dir("catalog");
    write_file(dir / "extra.cat", "2,2,3,3: 1 0 1 1 0 1\n");
    auto fixed = run("sh-bounds --tuple 2,2,3,3,25 --degree 8 --catalog " + (dir / "extra.cat").string());
    CHECK(fixed.status == 0);
    fs::remove_all(dir);
}

TEST_CASE("cli: zero column file feeds the p=0 column") {
    auto dir = fresh_dir("zerocol");
    write_file(dir / "zc.txt", "shift 0\n5 1\n");
    auto r = run("sh-bounds --tuple 2,2,2,18x9 --degree 11 --format records --zero-column " +
                 (dir / "zc.txt").string());
    CHECK(r.status == 0);
    CHECK(r.out.find("degree=11 lower=1 upper=2") != std::string::npos);

    write_file(dir / "bad.txt", "5 -1\n");
    auto bad = run("sh-bounds --tuple 2,2,2,18x9 --degree 11 --zero-column " + (dir / "bad.txt").string());
    CHECK(bad.status == 2);
    fs::remove_all(dir);
}

TEST_CASE("cli: search and minimal-k mode") {
    auto r = run("search --k 9 --bound 18 --format records");
    CHECK(r.status == 0);
    CHECK(r.out == "2,2,2,18,18,18,18,18,18,18,18,18\n");

    auto empty = run("search --k 3 --bound 10000 --format records");
    CHECK(empty.status == 0);
    CHECK(empty.out.empty());

    auto mink = run("search --min-k --bound 200");
    CHECK(mink.status == 0);
    CHECK(mink.out.find("minimal feasible k: 9") != std::string::npos);
}

TEST_CASE("cli: idempotents with powers") {
    auto dir = fresh_dir("algebra");
    write_file(dir / "triv.alg", kTrivialAlgebra);
    auto r = run("idempotents --algebra " + (dir / "triv.alg").string() + " --power 3 --format records");
    CHECK(r.status == 0);
    CHECK(r.out.find("dim=1 I=2 index=1") != std::string::npos);
    CHECK(r.out.find("power=1 I=2 index=1") != std::string::npos);
    CHECK(r.out.find("power=2 I=4 index=2") != std::string::npos);
    CHECK(r.out.find("power=3 I=8 index=4") != std::string::npos);

    write_file(dir / "broken.alg", "dim 1; unit 1\n0 0 bad line\n");
    auto bad = run("idempotents --algebra " + (dir / "broken.alg").string());
    CHECK(bad.status == 2);
    CHECK(bad.out.find(":2:") != std::string::npos);  // line number reported
    fs::remove_all(dir);
}

TEST_CASE("cli: runs are byte-deterministic") {
    std::string args = "sh-bounds --tuple 2,2,2,18x9 --window 9:13 --format tsv";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    auto s1 = run("spectrum --tuple 18x9,2,2,2 --pmax 18 --format tsv");
    auto s2 = run("spectrum --tuple 2,2,2,18x9 --pmax 18 --format tsv");
    CHECK(s1.out == s2.out);  // exponent order is canonicalized
}

TEST_CASE("cli: cache round trips, detects corruption, honors the env var") {
    auto dir = fresh_dir("cache");
    std::string args = "adc --tuple 2,2,2,18x9 --cache " + dir.string();
    auto cold = run(args);
    CHECK(cold.status == 0);

    // exactly one cache entry was written
    int entries = 0;
    fs::path entry;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() == ".cache") {
            ++entries;
            entry = e.path();
        }
    }
    REQUIRE(entries == 1);

    auto warm = run(args);
    CHECK(warm.status == 0);
    CHECK(warm.out == cold.out);

    // corrupt the stored checksum: the entry must be recomputed, not reused
    std::string content;
    {
        std::ifstream in(entry);
        std::ostringstream ss;
        ss << in.rdbuf();
        content = ss.str();
    }
    auto pos = content.find("checksum ");
    REQUIRE(pos != std::string::npos);
    content.replace(pos + 9, 16, "0000000000000000");
    write_file(entry, content);
    auto healed = run(args);
    CHECK(healed.status == 0);
    CHECK(healed.out == cold.out);

    // --no-cache bypasses, env var configures the directory
    auto no_cache = run("adc --tuple 2,2,2,18x9 --no-cache");
    CHECK(no_cache.out == cold.out);
    auto env_dir = fresh_dir("cache_env");
    auto via_env = run("adc --tuple 2,2,2,18x9", "BRIESKORN_CACHE_DIR=" + env_dir.string());
    CHECK(via_env.out == cold.out);
    bool wrote = false;
    for (const auto& e : fs::directory_iterator(env_dir)) wrote = wrote || e.path().extension() == ".cache";
    CHECK(wrote);

    // a FAIL verdict keeps its exit code through the cache
    std::string fail_args = "adc --tuple 2,2,2 --cache " + dir.string();
    CHECK(run(fail_args).status == 3);
    CHECK(run(fail_args).status == 3);

    fs::remove_all(dir);
    fs::remove_all(env_dir);
}
