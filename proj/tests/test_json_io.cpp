#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lieham/json_io.hpp"

using namespace lieham;
using nlohmann::json;

TEST_CASE("algebra schema round trip") {
    CatalogEntry sl2 = catalog("sl2");
    json j = algebra_to_json(sl2.sc);
    StructureConstants back = algebra_from_json(j);
    CHECK(back == sl2.sc);
}

TEST_CASE("algebra schema: omitted pairs are zero, errors rejected") {
    json j = {{"dim", 3},
              {"brackets", json::array({{{"i", 1}, {"j", 2}, {"coeffs", {"1/2", 0, 0}}}})}};
    StructureConstants sc = algebra_from_json(j);
    CHECK(sc.at(0, 1, 0) == Rational(1, 2));
    CHECK(sc.at(1, 0, 0) == Rational(-1, 2));
    CHECK(sc.at(0, 2, 1) == Rational(0));

    CHECK_THROWS(algebra_from_json(json{{"brackets", json::array()}}));
    CHECK_THROWS(algebra_from_json(
        json{{"dim", 2}, {"brackets", json::array({{{"i", 1}, {"j", 5}, {"coeffs", {0, 0}}}})}}));
    json dup = {{"dim", 2},
                {"brackets", json::array({{{"i", 1}, {"j", 2}, {"coeffs", {1, 0}}},
                                          {{"i", 2}, {"j", 1}, {"coeffs", {1, 0}}}})}};
    CHECK_THROWS(algebra_from_json(dup));
}

TEST_CASE("coefficient specs to and from JSON") {
    CoefficientSpec c = coefficient_from_json(json(2.5));
    CHECK(c(1.0) == 2.5);
    CoefficientSpec p = coefficient_from_json(json{{"kind", "poly"}, {"coeffs", {1.0, 1.0}}});
    CHECK(p(3.0) == doctest::Approx(4.0));
    json tj = {{"kind", "trig"}, {"terms", json::array({{{"a", 1.0}, {"omega", 2.0}}})}};
    CoefficientSpec t = coefficient_from_json(tj);
    CHECK(t(0.0) == doctest::Approx(1.0));
    CHECK(coefficient_to_json(t)["kind"] == "trig");
    CHECK_THROWS(coefficient_from_json(json{{"kind", "mystery"}}));
}

TEST_CASE("catalog JSON contains the Casimir string") {
    json j = catalog_to_json(catalog("sl2"));
    CHECK(j["casimirs"][0].get<std::string>() == "e1*e3 - e2^2");
    CHECK(j["planar_class"]["class"].get<std::string>() == "P2");
}

TEST_CASE("trajectory CSV export") {
    Trajectory tr;
    tr.times = {0.0, 0.5};
    tr.states = {{1.0, 2.0}, {3.0, 0.1234567890123456789}};
    const std::string path = "test_traj_out.csv";
    write_trajectory_csv(tr, path);
    std::ifstream in(path);
    std::string header, row1, row2;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    CHECK(header == "t,x1,x2");
    CHECK(row1 == "0,1,2");
    CHECK(row2.find("0.5,3,0.12345678901234568") == 0);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("format_double round trips") {
    double v = 0.1 + 0.2;
    CHECK(std::stod(format_double(v)) == v);
    CHECK(std::stod(format_double(1e-300)) == 1e-300);
}

TEST_CASE("verification reports are deterministic under a fixed seed") {
    verify::Options opts;
    opts.seed = 7;
    opts.points = 10;
    json a = checks_to_json(verify::run_suite("algebra", opts));
    json b = checks_to_json(verify::run_suite("algebra", opts));
    CHECK(a.dump() == b.dump());
    json k1 = checks_to_json(verify::run_suite("kks", opts));
    json k2 = checks_to_json(verify::run_suite("kks", opts));
    CHECK(k1.dump() == k2.dump());
}
