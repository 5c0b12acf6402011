#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "zetashift/fetch.hpp"
#include "zetashift/sha256.hpp"

using namespace zetashift;
namespace fs = std::filesystem;

namespace {

const std::string kCli = ZETASHIFT_CLI_PATH;
const std::string kDataFile = std::string(ZETASHIFT_DATA_DIR) + "/zeros_100k.txt";

int run(const std::string& args) {
    const int rc = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_dir(const std::string& tag) {
    auto p = fs::temp_directory_path() /
             ("zs_cli_" + tag + "_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    // long input crosses several blocks
    std::string big(1000, 'a');
    CHECK(sha256_hex(big) ==
          "41edece42d63e8d9bf515a9ba6932e1c20cbc9f5a5d134645adb5db1b9737ea3");
}

TEST_CASE("checksum gate refuses bad digests and stores good ones") {
    auto dir = temp_dir("fetch");
    const std::string body = "14.134725\n21.022040\n";
    const std::string good = sha256_hex(body);
    const auto out = dir / "table.txt";
    CHECK_THROWS_AS(verify_and_store(body, std::string(64, '0'), out.string()),
                    data_error);
    CHECK(!fs::exists(out));
    verify_and_store(body, good, out.string());
    CHECK(slurp(out) == body);
}

TEST_CASE("zeros-stat and moment run end to end") {
    auto dir = temp_dir("stat");
    CHECK(run("zeros-stat --zeros " + kDataFile + " --t-cap 300 --out " +
              dir.string()) == 0);
    const std::string csv = slurp(dir / "zeros_stat.csv");
    CHECK(csv.find("count,t_max,first,last") == 0);
    CHECK(csv.find("14.134725") != std::string::npos);

    CHECK(run("moment --zeros " + kDataFile + " --t-cap 300 --h 0 --out " +
              dir.string()) == 0);
    const std::string mom = slurp(dir / "moment.csv");
    CHECK((mom.find("\n0,") == mom.find('\n'))); // h = 0 row
    CHECK(mom.find(",0,") != std::string::npos); // zero moment value
}

TEST_CASE("identical invocations produce byte-identical reports") {
    auto d1 = temp_dir("det1");
    auto d2 = temp_dir("det2");
    const std::string args = " --zeros " + kDataFile +
                             " --t-cap 2000 --h 0.5,1 --a-max 4 --pair-mode "
                             "windowed --window 60 --workers 2 --out ";
    CHECK(run("theorem2 " + args + d1.string()) == 0);
    CHECK(run("theorem2 " + args + d2.string()) == 0);
    CHECK(slurp(d1 / "theorem2.csv") == slurp(d2 / "theorem2.csv"));

    CHECK(run("paircorr --zeros " + kDataFile +
              " --t-cap 1500 --h 1 --alpha 0.25,0.5,1.5 --out " + d1.string()) == 0);
    CHECK(run("paircorr --zeros " + kDataFile +
              " --t-cap 1500 --h 1 --alpha 0.25,0.5,1.5 --out " + d2.string()) == 0);
    CHECK(slurp(d1 / "paircorr.csv") == slurp(d2 / "paircorr.csv"));
}

TEST_CASE("exit codes") {
    auto dir = temp_dir("err");
    // missing file -> data error
    CHECK(run("zeros-stat --zeros /nonexistent.txt --out " + dir.string()) == 3);
    // bad pair mode -> validation
    CHECK(run("theorem2 --zeros " + kDataFile +
              " --t-cap 500 --pair-mode sideways --out " + dir.string()) == 2);
    // windowed window below |h| -> validation
    CHECK(run("theorem2 --zeros " + kDataFile +
              " --t-cap 500 --h 2 --pair-mode windowed --window 1 --out " +
              dir.string()) == 2);
    // unknown flag -> CLI parse error
    CHECK(run("zeros-stat --frobnicate") != 0);
    // malformed table -> data error with line info
    auto bad = dir / "bad.txt";
    std::ofstream(bad) << "14.1\nnonsense\n";
    CHECK(run("zeros-stat --zeros " + bad.string() + " --out " + dir.string()) == 3);
}

TEST_CASE("config file supplies defaults that flags override") {
    auto dir = temp_dir("conf");
    auto conf = dir / "run.conf";
    std::ofstream(conf) << "zeros = " << kDataFile << "\n"
                        << "t-cap = 400\n"
                        << "out = " << dir.string() << "\n";
    CHECK(run("zeros-stat --config " + conf.string()) == 0);
    const std::string a = slurp(dir / "zeros_stat.csv");
    CHECK(a.find("t-cap=400") != std::string::npos);
    CHECK(run("zeros-stat --config " + conf.string() + " --t-cap 300") == 0);
    const std::string b = slurp(dir / "zeros_stat.csv");
    CHECK(b.find("t-cap=300") != std::string::npos);
}

TEST_CASE("lemmas subcommand passes its own thresholds") {
    auto dir = temp_dir("lem");
    CHECK(run("lemmas --zeros " + kDataFile + " --t-cap 200 --out " +
              dir.string()) == 0);
    const std::string csv = slurp(dir / "lemmas.csv");
    CHECK(csv.find(",0\n") == std::string::npos); // no failing pass column
    CHECK(csv.find("2.5") != std::string::npos);
    CHECK(csv.find("6.3") != std::string::npos);
}
