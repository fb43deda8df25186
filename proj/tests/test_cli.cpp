#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "widthlab_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const auto out_path = scratch_dir() / ("out" + std::to_string(counter));
    const auto err_path = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd = env_prefix + WIDTHLAB_CLI_PATH " " + args + " >" +
                            out_path.string() + " 2>" + err_path.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

}  // namespace

TEST_CASE("width command evaluates single directions") {
    const auto r = run_cli("width --body cube --dir 1,0,0");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(near(j["width"].get<double>(), 1.0, 1e-15));

    const auto tet = run_cli("width --body tetra --dir 0,0,1");
    REQUIRE(tet.code == 0);
    REQUIRE(near(nlohmann::json::parse(tet.out)["width"].get<double>(),
                 std::sqrt(2.0 / 3.0), 1e-15));
}

TEST_CASE("width command rejects bad directions") {
    REQUIRE(run_cli("width --body cube --dir 0,0,0").code == 2);
    REQUIRE(run_cli("width --body cube --dir 1,0").code == 2);
    REQUIRE(run_cli("width --body cube").code == 2);
    REQUIRE(run_cli("width --dir 1,0,0").code == 2);
    REQUIRE(run_cli("width --body cube --file x.json --dir 1,0,0").code == 2);
    REQUIRE(run_cli("width --body dodecahedron --dir 1,0,0").code == 2);
}

TEST_CASE("moments command emits a JSON estimate") {
    const auto r = run_cli("moments --body cube --k 1 --method quad");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(near_rel(j["value"].get<double>(), 1.5, 5e-6));
    REQUIRE(j["method"].get<std::string>() == "quadrature");
    REQUIRE(!j.contains("seed"));

    const auto mc = run_cli("moments --body tetra --k 2 --method mc --n 1000000 --seed 1");
    REQUIRE(mc.code == 0);
    const auto jm = nlohmann::json::parse(mc.out);
    REQUIRE(near(jm["value"].get<double>(), 0.83541951799105468804,
                 4.0 * jm["error_estimate"].get<double>()));
    REQUIRE(jm["seed"].get<int>() == 1);
}

TEST_CASE("moments runs are byte-identical, file polytopes included") {
    const auto poly = scratch_dir() / "poly.json";
    std::ofstream(poly) << R"({"dimension":2,"vertices":[[0,0],[1,0],[1,1],[0,1]]})";

    const std::string cmd = "moments --file " + poly.string() + " --k 3 --method mc --n 1000 --seed 5";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(!a.out.empty());

    // thread cap must not change the bytes
    const auto t1 = run_cli("moments --body square --k 2 --method mc --n 100000 --seed 9",
                            "WIDTHLAB_THREADS=1 ");
    const auto t4 = run_cli("moments --body square --k 2 --method mc --n 100000 --seed 9",
                            "WIDTHLAB_THREADS=4 ");
    REQUIRE(t1.code == 0);
    REQUIRE(t1.out == t4.out);
}

TEST_CASE("moments surfaces file errors as exit 2") {
    REQUIRE(run_cli("moments --file /nonexistent.json --k 1").code == 2);
    const auto bad = scratch_dir() / "bad.json";
    std::ofstream(bad) << "{ not json";
    REQUIRE(run_cli("moments --file " + bad.string() + " --k 1").code == 2);
}

TEST_CASE("density writes histogram and ecdf CSV files") {
    const auto prefix = (scratch_dir() / "tetra_density").string();
    const auto r = run_cli("density --body tetra --n 20000 --seed 2 --bins 50 --out " + prefix);
    REQUIRE(r.code == 0);

    const std::string hist = slurp(prefix + "_hist.csv");
    REQUIRE(hist.rfind("bin_left,bin_right,mass\n", 0) == 0);
    std::istringstream in(hist);
    std::string line;
    std::getline(in, line);
    double mass_total = 0.0, first_left = 0.0, last_right = 0.0;
    bool first = true;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string left, right, mass;
        std::getline(row, left, ',');
        std::getline(row, right, ',');
        std::getline(row, mass, ',');
        if (first) first_left = std::stod(left);
        first = false;
        last_right = std::stod(right);
        mass_total += std::stod(mass);
    }
    REQUIRE(near(mass_total, 1.0, 1e-12));
    REQUIRE(first_left >= 0.7071067811865475 - 1e-9);
    REQUIRE(last_right <= 1.0 + 1e-9);

    const std::string cdf = slurp(prefix + "_ecdf.csv");
    REQUIRE(cdf.rfind("sorted_width,ecdf\n", 0) == 0);

    const auto rerun = run_cli("density --body tetra --n 20000 --seed 2 --bins 50 --out " + prefix);
    REQUIRE(rerun.code == 0);
    REQUIRE(slurp(prefix + "_hist.csv") == hist);
}

TEST_CASE("density rejects empty samples and unwritable paths") {
    const auto r = run_cli("density --body cube --n 0 --out " + (scratch_dir() / "x").string());
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("empty sample") != std::string::npos);

    REQUIRE(run_cli("density --body cube --n 100 --out /nonexistent_dir/prefix").code == 2);
}

TEST_CASE("extremes command reports min width and diameter") {
    const auto r = run_cli("extremes --body tetra");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(near(j["min_width"].get<double>(), 0.70710678118654752, 1e-5));
    REQUIRE(near(j["diameter"].get<double>(), 1.0, 1e-12));
}

TEST_CASE("analytic-tetra reports the assembled sector integral") {
    const auto r = run_cli("analytic-tetra");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(near(j["assembled_mean_square"].get<double>(), j["reference"].get<double>(), 1e-9));
    REQUIRE(j["symmetry_factor"].get<int>() == 24);
}

TEST_CASE("region-map writes the requested grid") {
    const auto path = (scratch_dir() / "map.csv").string();
    const auto r = run_cli("region-map --n-theta 16 --n-phi 16 --out " + path);
    REQUIRE(r.code == 0);
    std::istringstream in(slurp(path));
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "theta,phi,sqrt_3g_over_8,active_term");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    REQUIRE(rows == 256);

    REQUIRE(run_cli("region-map --n-theta 8 --n-phi 16").code == 2);
}

TEST_CASE("verify suite passes end to end") {
    const auto r = run_cli("verify");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("all checks passed") != std::string::npos);
    REQUIRE(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit 2, help exits 0") {
    REQUIRE(run_cli("--help").code == 0);
    REQUIRE(run_cli("moments --help").code == 0);
    REQUIRE(run_cli("").code == 2);
    REQUIRE(run_cli("frobnicate").code == 2);
    REQUIRE(run_cli("moments --body cube --bogus-flag 1").code == 2);
}
