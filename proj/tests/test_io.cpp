#include <doctest.h>

#include "thermo/error.hpp"
#include "thermo/io.hpp"

#include <cmath>
#include <sstream>

using namespace thermo;

TEST_CASE("extended path csv round trip is exact") {
    ExtendedPath path;
    for (int i = 0; i < 5; ++i) {
        const double t = 0.1 * i + 1.0 / 3.0;
        ExtendedPoint pt{std::sin(t), 1.0 + t, 2.0 + t, Vec(2), Vec(2)};
        pt.p << std::exp(t), -1.0 / 7.0;
        pt.q << std::sqrt(2.0) * t, 1e-300;
        path.times.push_back(t);
        path.points.push_back(pt);
    }
    std::stringstream ss;
    io::write_path_csv(ss, path);
    CHECK(ss.str().rfind("t,z,S,T,p_1,p_2,q_1,q_2\n", 0) == 0);
    const auto back = io::read_extended_path_csv(ss);
    REQUIRE(back.size() == path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        CHECK(back.times[i] == path.times[i]);
        CHECK(back.points[i].z == path.points[i].z);
        CHECK(back.points[i].T == path.points[i].T);
        CHECK((back.points[i].p.array() == path.points[i].p.array()).all());
        CHECK((back.points[i].q.array() == path.points[i].q.array()).all());
    }
}

TEST_CASE("reduced path csv and malformed input") {
    std::stringstream ok("t,z,p_1,q_1\n0,1,2,3\n1,2,2,3\n");
    const auto p = io::read_reduced_path_csv(ok);
    CHECK(p.size() == 2);
    CHECK(p.points[1].z == 2.0);

    std::stringstream bad_header("t,z,q_1,p_1\n0,1,2,3\n1,2,2,3\n");
    CHECK_THROWS_AS(io::read_reduced_path_csv(bad_header), DomainError);
    std::stringstream bad_cell("t,z,p_1,q_1\n0,1,x,3\n1,2,2,3\n");
    CHECK_THROWS_WITH_AS(io::read_reduced_path_csv(bad_cell), doctest::Contains("line 2"), DomainError);
    std::stringstream short_row("t,z,p_1,q_1\n0,1,2\n");
    CHECK_THROWS_AS(io::read_reduced_path_csv(short_row), DomainError);
    std::stringstream one("t,z,p_1,q_1\n0,1,2,3\n");
    CHECK_THROWS_AS(io::read_reduced_path_csv(one), DomainError);
}

TEST_CASE("json serializations") {
    const auto j = io::to_json(gas_chord(1.0, 5.0, 2.0));
    CHECK(j.size() == 6);
    CHECK(j["p"] == 2.0);
    CHECK(j["q"] == -0.5);
    CHECK(j["direction"] == 1);

    NonnegReport r;
    r.min_form_value = -0.5;
    r.violating_indices = {3, 4};
    r.verdict = Verdict::violated;
    const auto jr = io::to_json(r);
    CHECK(jr["verdict"] == "violated");
    CHECK(jr["violations"].size() == 2);
    CHECK(jr["min_form_value"] == -0.5);
}

TEST_CASE("system loading") {
    const auto sys = io::load_system(std::string(THERMO_TEST_DATA) + "/three_level.json");
    CHECK(sys.space.size() == 3);
    CHECK(sys.space.labels[2] == "up");
    CHECK(sys.hamiltonian.n() == 1);
    CHECK(sys.hamiltonian.v_bar(0, 2) == -1.0);

    CHECK_THROWS_WITH_AS(io::system_from_json(io::json::parse(R"({"weights":[1],"v_int":[0],"v_bar":[[0]],"mass":1})")),
                         doctest::Contains("unknown key"), DomainError);
    CHECK_THROWS_AS(io::system_from_json(io::json::parse(R"({"weights":[1,1],"v_int":[0],"v_bar":[[0,0]]})")), DomainError);
    CHECK_THROWS_AS(io::system_from_json(io::json::parse(R"({"weights":"x","v_int":[0],"v_bar":[[0]]})")), DomainError);
    CHECK_THROWS_AS(io::load_system("/nonexistent/system.json"), DomainError);
}

TEST_CASE("densities csv") {
    std::stringstream ss("# comment\n0.5,0.25,0.25\n\n1,0,0\n");
    const auto ds = io::read_densities_csv(ss);
    REQUIRE(ds.size() == 2);
    CHECK(ds[0].rho[1] == 0.25);
    std::stringstream out;
    io::write_densities_csv(out, ds);
    CHECK(out.str() == "0.5,0.25,0.25\n1,0,0\n");
}

TEST_CASE("number formatting keeps every bit") {
    for (double x : {0.1, 1.0 / 3.0, std::tanh(0.75), -1e-300, 6.02214076e23}) {
        CHECK(std::stod(io::fmt(x)) == x);
    }
    CHECK(io::fmt(0.5) == "0.5");
    CHECK(io::fmt(2.0) == "2");
}
