#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chasym/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace chasym;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "chasym");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
    const auto d = fs::temp_directory_path() / ("chasym_cli_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("regions") {
    const auto r = cli({"regions", "--t", "80", "--eps", "0.175", "--C", "0.175", "--q0", "0.5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("trans2 = (-20.754, -19.246)") != std::string::npos);
    CHECK(r.out.find("trans1 = (159.246, 160.754)") != std::string::npos);
    CHECK(r.out.find("soliton_i1 = (199.333, 227.333)") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"nonsense"}).code == kExitUsage);
    CHECK(cli({"regions"}).code == kExitUsage);
    CHECK(cli({"regions", "--t", "80", "--q0", "3"}).code == kExitUsage);
    CHECK(cli({"decay", "a.json", "--norm", "max"}).code == kExitUsage);
}

TEST_CASE("simulate with a missing config writes nothing") {
    const auto dir = scratch_dir("missing");
    const auto r = cli({"simulate", "--config", (dir / "missing.cfg").string(), "--out", (dir / "out").string()});
    CHECK(r.code != 0);
    CHECK(r.code == kExitUsage);
    CHECK_FALSE(fs::exists(dir / "out"));
    fs::remove_all(dir);
}

TEST_CASE("wavenumber table") {
    const auto r = cli({"wavenumber", "--n", "16"});
    CHECK(r.code == kExitOk);
    std::istringstream in(r.out);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "alpha_h,re_alpha_prime_h,im_alpha_prime_h");
    CHECK(first == "0,0,0");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 16);
}

TEST_CASE("simulate, compare and decay end to end") {
    const auto dir = scratch_dir("e2e");
    std::ofstream(dir / "run.cfg") << "q0 = 0.5\nx_min = -30\nx_max = 40\nh = 0.1\ndt = 0.05\nt_end = 1\n"
                                      "snapshot_times = 0.5, 1\noutput_dir = "
                                   << (dir / "snaps").string() << "\n";
    const auto sim = cli({"simulate", "--config", (dir / "run.cfg").string()});
    REQUIRE(sim.code == kExitOk);
    CHECK(fs::exists(dir / "snaps" / "ch_t0.500.csv"));
    CHECK(fs::exists(dir / "snaps" / "ch_t1.000.csv"));
    const auto manifest = nlohmann::json::parse(std::ifstream(dir / "snaps" / "manifest.json"));
    CHECK(manifest["completed"] == true);
    CHECK(manifest["snapshots"].size() == 2);

    for (const char* name : {"ch_t0.500.csv", "ch_t1.000.csv"}) {
        const std::string stem = fs::path(name).stem().string();
        const auto cmp = cli({"compare", "--snapshot", (dir / "snaps" / name).string(), "--pii-n", "1001", "--json",
                              (dir / (stem + ".json")).string(), "--csv-dir", (dir / stem).string()});
        INFO(cmp.err);
        REQUIRE(cmp.code == kExitOk);
    }
    const auto rep = nlohmann::json::parse(std::ifstream(dir / "ch_t1.000.json"));
    CHECK(rep["t"] == 1.0);
    CHECK(rep["regions"].size() >= 4);
    CHECK(fs::exists(dir / "ch_t1.000" / "osc1.csv"));

    const auto dec = cli({"decay", (dir / "ch_t0.500.json").string(), (dir / "ch_t1.000.json").string()});
    CHECK(dec.code == kExitOk);
    CHECK(dec.out.rfind("region,kind,T,E,power,roc\n", 0) == 0);
    fs::remove_all(dir);
}

TEST_CASE("compare needs a time") {
    const auto dir = scratch_dir("notime");
    std::ofstream(dir / "snap.csv") << "x,u\n0,0\n0.1,0\n0.2,0\n0.3,0\n0.4,0\n0.5,0\n";
    CHECK(cli({"compare", "--snapshot", (dir / "snap.csv").string()}).code == kExitUsage);
    fs::remove_all(dir);
}

TEST_CASE("painleve dump") {
    const auto r = cli({"painleve", "--family", "hm", "--n", "401"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("s,v,vp\n", 0) == 0);
    CHECK(cli({"painleve", "--family", "xx"}).code == kExitUsage);
}
