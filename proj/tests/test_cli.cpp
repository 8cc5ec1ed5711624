#include <doctest.h>

#include "cli.hpp"

#include "thermo/io.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using thermo::cli::dispatch;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = dispatch(args, out, err);
    return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("thermo_cli_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        files[e.path().filename().string()] = thermo::io::read_text_file(e.path().string());
    }
    return files;
}

std::vector<std::vector<double>> read_csv(const fs::path& file) {
    std::istringstream is(thermo::io::read_text_file(file.string()));
    std::string line;
    std::getline(is, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(is, line)) {
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

const std::string kSystem = std::string(THERMO_TEST_DATA) + "/three_level.json";

}  // namespace

TEST_CASE("chord gas prints the closed form and writes figure data") {
    const auto dir = scratch("gas");
    const auto r = run({"chord", "gas", "--t0", "1", "--t1", "5", "--c", "2", "--out", dir.string()});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("P0=0.5 v=2 ") != std::string::npos);
    for (const char* f : {"fig1_curves.csv", "fig1_chord.csv", "fig3_fronts.csv", "fig3_chord.csv", "chords.json", "chords.csv"}) {
        CHECK(fs::exists(dir / f));
    }
    for (const auto& row : read_csv(dir / "fig1_curves.csv")) {
        const double q = row[0];
        CHECK(row[1] == doctest::Approx(1.0 / -q).epsilon(1e-14));
        CHECK(row[2] == doctest::Approx(5.0 / (-q + 2.0)).epsilon(1e-14));
    }
    const auto marker = read_csv(dir / "fig1_chord.csv");
    CHECK(marker[0][0] == -0.5);
    CHECK(marker[0][1] == 2.0);

    const auto fronts = read_csv(dir / "fig3_fronts.csv");
    std::size_t imax = 0;
    for (std::size_t i = 0; i < fronts.size(); ++i) {
        CHECK(fronts[i][1] == 0.0);
        if (fronts[i][2] > fronts[imax][2]) imax = i;
    }
    CHECK(std::abs(fronts[imax][0] + 0.5) < 0.02);

    const auto chords = thermo::io::json::parse(thermo::io::read_text_file((dir / "chords.json").string()));
    REQUIRE(chords.size() == 1);
    CHECK(std::abs(chords[0]["q"].get<double>() + 0.5) < 1e-8);
}

TEST_CASE("chord cw prints Q* and the magnetization") {
    const auto dir = scratch("cw");
    const auto r = run({"chord", "cw", "--t0", "2", "--t1", "3.3333333", "--c", "1", "--b", "1", "--out", dir.string(), "--format", "json"});
    REQUIRE(r.status == 0);
    const auto j = thermo::io::json::parse(r.out);
    CHECK(j["Q*"].get<double>() == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(j["p"].get<double>() == doctest::Approx(std::tanh(0.75)).epsilon(1e-6));
    const auto fronts = read_csv(dir / "fig4_fronts.csv");
    CHECK(std::abs(fronts.front()[2] + 1.0) < 1e-3);
    CHECK(std::abs(fronts.back()[2] - 1.0) < 1e-3);
    const auto leg = read_csv(dir / "cw_initial.csv");
    CHECK(leg.front().size() == 4);
}

TEST_CASE("identical runs give byte-identical files") {
    const auto a = scratch("det_a"), b = scratch("det_b");
    for (const auto& d : {a, b}) {
        REQUIRE(run({"chord", "cw", "--out", d.string()}).status == 0);
        REQUIRE(run({"stirling", "--out", d.string()}).status == 0);
        REQUIRE(run({"isotopy", "--paths", "4", "--out", d.string()}).status == 0);
        REQUIRE(run({"relax", "--system", kSystem, "--q", "0.5", "--out", d.string()}).status == 0);
        REQUIRE(run({"gibbs", "--system", kSystem, "--T", "2", "--out", d.string()}).status == 0);
    }
    const auto sa = snapshot(a), sb = snapshot(b);
    CHECK(sa.size() > 10);
    CHECK(sa == sb);
}

TEST_CASE("exit codes and validation") {
    const auto dir = scratch("errors");
    auto r = run({"frobnicate"});
    CHECK(r.status == 1);
    CHECK(r.err.find("Subcommands") != std::string::npos);
    CHECK(run({}).status == 1);
    CHECK(run({"chord", "gas", "--t0", "1", "--t1", "5", "--c", "4", "--out", dir.string()}).status == 1);
    CHECK(run({"chord", "vdw", "--out", dir.string()}).status == 1);
    CHECK(run({"chord", "gas", "--bogus", "1"}).status == 1);
    CHECK(run({"gibbs", "--out", dir.string()}).status == 1);
    CHECK(run({"stirling", "--tc", "3", "--th", "1", "--out", dir.string()}).status == 1);
    CHECK_FALSE(fs::exists(dir));

    // cooling a ferromagnet through its spinodal is a numerical failure
    r = run({"isotopy", "--model", "cw", "--t0", "0.5", "--t1", "0.5", "--c", "0.6", "--lo", "-0.9", "--hi", "-0.9",
             "--paths", "1", "--out", dir.string()});
    CHECK(r.status == 2);
    CHECK(r.err.find("time node") != std::string::npos);
    CHECK_FALSE(fs::exists(dir));
    CHECK(run({"chord", "--help"}).status == 0);
}

TEST_CASE("config file overrides flags and rejects unknown keys") {
    const auto dir = scratch("config");
    fs::create_directories(dir);
    const auto cfg = (dir / "cfg.json").string();
    thermo::io::write_text_file(cfg, R"({"model":"gas","t0":1,"t1":5,"c":2})");
    auto r = run({"chord", "cw", "--t0", "3", "--config", cfg, "--out", dir.string()});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("P0=0.5 v=2 ") != std::string::npos);

    thermo::io::write_text_file(cfg, R"({"t0":1,"temperature":5})");
    r = run({"chord", "gas", "--config", cfg, "--out", dir.string()});
    CHECK(r.status == 1);
    CHECK(r.err.find("temperature") != std::string::npos);

    thermo::io::write_text_file(cfg, R"({"samples":-3})");
    CHECK(run({"stirling", "--config", cfg, "--out", dir.string()}).status == 1);
    thermo::io::write_text_file(cfg, "{not json");
    CHECK(run({"stirling", "--config", cfg, "--out", dir.string()}).status == 1);
}

TEST_CASE("output directory from the environment") {
    const auto dir = scratch("env");
    setenv("THERMO_OUT_DIR", dir.string().c_str(), 1);
    const auto r = run({"stirling", "--tc", "1", "--th", "5", "--vmin", "1", "--vmax", "2"});
    unsetenv("THERMO_OUT_DIR");
    REQUIRE(r.status == 0);
    CHECK(fs::exists(dir / "stirling_polyline.csv"));
    const auto manifest = thermo::io::json::parse(thermo::io::read_text_file((dir / "stirling.json").string()));
    CHECK(manifest["segments"].size() == 4);
    CHECK(manifest["segments"][3]["chord"]["p"] == 2.0);
}

TEST_CASE("gibbs, relax and reduce") {
    const auto dir = scratch("micro");
    fs::create_directories(dir);
    thermo::io::write_text_file((dir / "rho.csv").string(), "0.2,0.2,0.4\n0.25,0.25,0.25\n");
    auto r = run({"gibbs", "--system", kSystem, "--T", "1", "--q", "0.5", "--densities", (dir / "rho.csv").string(),
                  "--out", dir.string()});
    REQUIRE(r.status == 0);
    const auto rows = read_csv(dir / "gibbs_densities.csv");
    for (const auto& row : rows) CHECK(row[2] >= 0.0);

    r = run({"relax", "--system", kSystem, "--q", "0.5", "--densities", (dir / "rho.csv").string(), "--out", dir.string()});
    REQUIRE(r.status == 0);
    const auto rep = thermo::io::json::parse(thermo::io::read_text_file((dir / "relax.json").string()));
    CHECK(rep["tv_to_gibbs"].get<double>() < 1e-6);
    CHECK(rep["min_form_value"].get<double>() >= -1e-8);

    // straight extended path with T rising and a zeroed pair
    std::string csv = "t,z,S,T,p_1,p_2,q_1,q_2\n";
    for (int i = 0; i <= 20; ++i) {
        const double t = i / 20.0;
        csv += thermo::io::fmt(t) + "," + thermo::io::fmt(2.0 * t) + ",1," + thermo::io::fmt(1.0 + t) + ",0.5,0," +
               thermo::io::fmt(t) + ",3\n";
    }
    thermo::io::write_text_file((dir / "ext.csv").string(), csv);
    r = run({"reduce", "--path", (dir / "ext.csv").string(), "--k", "1", "--zeroed", "1", "--mode", "project",
             "--out", dir.string()});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("reduced=nonnegative") != std::string::npos);
    r = run({"reduce", "--path", (dir / "ext.csv").string(), "--k", "1", "--zeroed", "1", "--reduce-t0", "1",
             "--out", dir.string()});
    CHECK(r.status == 1);
}
