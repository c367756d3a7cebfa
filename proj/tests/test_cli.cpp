#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "losq/battery.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + "\"" + LOSQ_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& id) { return std::string(LOSQ_FIXTURE_DIR) + "/" + id + ".txt"; }

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("losq-cli-" + std::to_string(std::rand()) + "-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("triangle tables match the published arrays") {
    RunResult L = run_cli("triangle L --rows 6");
    REQUIRE(L.code == 0);
    REQUIRE(L.out ==
            "1 0 0  0 0 0 0\n"
            "1 1 0  0 0 0 0\n"
            "1 1 1  0 0 0 0\n"
            "1 2 2  1 0 0 0\n"
            "1 2 4  2 1 0 0\n"
            "1 3 6  6 3 1 0\n"
            "1 3 9 10 9 3 1\n");

    RunResult e0 = run_cli("triangle e --rows 0");
    REQUIRE(e0.code == 0);
    REQUIRE(e0.out == "1\n");

    RunResult eps = run_cli("triangle epsilon --rows 3 --p 2");
    REQUIRE(eps.code == 0);
    REQUIRE(eps.out ==
            "1    0    0 0\n"
            "1    q    0 0\n"
            "1  1+q    q 0\n"
            "1 1+2q 1+2q 1\n");

    RunResult emod = run_cli("triangle e_mod_p --rows 5 --p 3 --j 0 --format csv");
    REQUIRE(emod.code == 0);
    REQUIRE(emod.out == "1\n1,0\n1,0,1\n1,1,1,1\n1,1,2,2,0\n1,1,4,4,1,1\n");
}

TEST_CASE("triangle argument validation exits with code 2") {
    REQUIRE(run_cli("triangle bogus").code == 2);
    REQUIRE(run_cli("triangle epsilon --rows 3").code == 2);           // missing --p
    REQUIRE(run_cli("triangle epsilon --rows 3 --p 2 --format bfile").code == 2);
    REQUIRE(run_cli("triangle e_mod_p --rows 3 --p 3 --j 5").code == 2);
    REQUIRE(run_cli("triangle L --rows -1").code == 2);
}

TEST_CASE("verify reports one line per check") {
    RunResult one = run_cli("verify 3.14 --max-n 12");
    REQUIRE(one.code == 0);
    REQUIRE(one.out == "3.14\toracle n<=12\tpass\tok\n");

    RunResult bogus = run_cli("verify bogus");
    REQUIRE(bogus.code == 2);
    REQUIRE(bogus.out.find("unknown identity id") != std::string::npos);

    RunResult all = run_cli("verify all --max-n 6 --primes 3");
    REQUIRE(all.code == 0);
    REQUIRE(count_lines(all.out) == losq::battery_ids().size());
    REQUIRE(all.out.find("\tfail\t") == std::string::npos);
}

TEST_CASE("series expansions print one polynomial per order") {
    RunResult s25 = run_cli("series 2.5 --terms 2");
    REQUIRE(s25.code == 0);
    REQUIRE(s25.out == "1\n1\n1+x\n");

    RunResult s311 = run_cli("series 3.11 --terms 4");
    REQUIRE(s311.code == 0);
    REQUIRE(s311.out == "1\n1+x\n1+x+x^2\n1+2x+2x^2+x^3\n1+2x+4x^2+2x^3+x^4\n");

    RunResult s211 = run_cli("series 2.11 --terms 3 --k 0");
    REQUIRE(s211.code == 0);
    REQUIRE(s211.out == "1\n1\n1\n1\n");

    RunResult s429 = run_cli("series 4.29 --terms 5 --p 3");
    REQUIRE(s429.code == 0);
    REQUIRE(s429.out == "1\n1\n1+x^2\n1+x+x^2+x^3\n1+x+2x^2+2x^3\n1+x+4x^2+4x^3+x^4+x^5\n");

    REQUIRE(run_cli("series 4.29 --terms 5").code == 2);  // --p required
    REQUIRE(run_cli("series nope --terms 2").code == 2);
}

TEST_CASE("oeis export prints b-file lines") {
    RunResult e3 = run_cli("oeis export e --rows 3");
    REQUIRE(e3.code == 0);
    REQUIRE(e3.out == "0 1\n1 1\n2 0\n3 1\n4 1\n5 0\n6 1\n7 1\n8 1\n9 1\n");

    RunResult col = run_cli("oeis export L --rows 5 --view column --k 2");
    REQUIRE(col.code == 0);
    REQUIRE(col.out == "0 1\n1 2\n2 4\n3 6\n");

    RunResult f1 = run_cli("oeis export f1 --rows 8");
    REQUIRE(f1.code == 0);
    REQUIRE(f1.out == "0 0\n1 1\n2 1\n3 2\n4 2\n5 4\n6 5\n7 9\n8 12\n");
}

TEST_CASE("oeis compare against reference files") {
    RunResult l = run_cli("oeis compare L A034851 --rows 40 --file \"" + fixture("A034851") + "\"");
    REQUIRE(l.code == 0);
    REQUIRE(l.out == "A034851: match, shift +0, 861 terms compared\n");

    RunResult lbar = run_cli("oeis compare Lbar A034852 --rows 40 --file \"" + fixture("A034852") + "\"");
    REQUIRE(lbar.code == 0);
    REQUIRE(lbar.out == "A034852: match, shift +3, 858 terms compared\n");

    RunResult f1 = run_cli("oeis compare f1 A102526 --rows 58 --file \"" + fixture("A102526") + "\"");
    REQUIRE(f1.code == 0);
    REQUIRE(f1.out == "A102526: match, shift +1, 58 terms compared\n");

    RunResult bad = run_cli("oeis compare L A102526 --rows 10 --file \"" + fixture("A102526") + "\"");
    REQUIRE(bad.code == 1);
    REQUIRE(bad.out.find("mismatch") != std::string::npos);

    REQUIRE(run_cli("oeis compare L A034851 --rows 10 --file /no/such/file.txt").code == 2);
}

TEST_CASE("oeis compare uses the cache when offline") {
    TempDir tmp;
    std::string dir = tmp.path.string();

    RunResult miss = run_cli("oeis compare L A034851 --rows 10 --offline --cache-dir \"" + dir + "\"");
    REQUIRE(miss.code == 2);
    REQUIRE(miss.out.find("not in cache") != std::string::npos);

    std::filesystem::copy_file(fixture("A034851"), tmp.path / "A034851.txt");
    RunResult hit = run_cli("oeis compare L A034851 --rows 10 --offline --cache-dir \"" + dir + "\"");
    REQUIRE(hit.code == 0);
    REQUIRE(hit.out == "A034851: match, shift +0, 66 terms compared\n");

    RunResult env_hit = run_cli("oeis compare L A034851 --rows 10 --offline", "LOSQ_CACHE_DIR=\"" + dir + "\" ");
    REQUIRE(env_hit.code == 0);
    REQUIRE(env_hit.out == hit.out);

    std::ofstream(tmp.path / "A000999.txt") << "garbage here\n";
    RunResult corrupt = run_cli("oeis compare L A000999 --rows 10 --offline --cache-dir \"" + dir + "\"");
    REQUIRE(corrupt.code == 2);
    REQUIRE(corrupt.out.find("malformed") != std::string::npos);
}

TEST_CASE("top-level usage errors") {
    REQUIRE(run_cli("").code == 2);
    REQUIRE(run_cli("frobnicate").code == 2);
    REQUIRE(run_cli("--help").code == 0);
    REQUIRE(run_cli("verify").code == 2);  // id is required
}
