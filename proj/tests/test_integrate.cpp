#include <doctest.h>

#include <cmath>

#include "lieham/integrate.hpp"
#include "lieham/kks.hpp"
#include "lieham/rng.hpp"

using namespace lieham;

namespace {

TDSystem gstar_system(const std::string& algebra, std::vector<CoefficientSpec> coeffs) {
    KKSBivector kks = kks_bivector(catalog(algebra));
    return make_system(basis_fields(kks), coeffs);
}

}  // namespace

TEST_CASE("coefficient descriptors evaluate") {
    CHECK(CoefficientSpec::constant(2.5)(7.0) == 2.5);
    CHECK(CoefficientSpec::poly({1.0, 2.0, 3.0})(2.0) == doctest::Approx(1 + 4 + 12));
    auto trig = CoefficientSpec::trig({{0.5, -0.25, 2.0}});
    CHECK(trig(0.3) == doctest::Approx(0.5 * std::cos(0.6) - 0.25 * std::sin(0.6)));
}

TEST_CASE("sl2 polynomial closed form (1, t, t^2)") {
    TDSystem sys = gstar_system("sl2", {CoefficientSpec::constant(1.0),
                                        CoefficientSpec::constant(0.0),
                                        CoefficientSpec::constant(0.0)});
    Trajectory tr = integrate(sys, {1.0, 0.0, 0.0}, 0.0, 2.0, 1e-10);
    const auto& xf = tr.states.back();
    CHECK(std::abs(xf[0] - 1.0) <= 1e-8);
    CHECK(std::abs(xf[1] - 2.0) <= 1e-8);
    CHECK(std::abs(xf[2] - 4.0) <= 1e-8);
    // Casimir e1 e3 - e2^2 stays at 0
    double d = drift(tr, catalog("sl2").dual_space, catalog("sl2").casimirs[0]);
    CHECK(d <= 1e-8);
}

TEST_CASE("zero coefficients give a constant trajectory") {
    TDSystem sys = gstar_system("so3", {CoefficientSpec::constant(0.0),
                                        CoefficientSpec::constant(0.0),
                                        CoefficientSpec::constant(0.0)});
    Trajectory tr = integrate(sys, {0.3, -0.2, 0.9}, 0.0, 4.0, 1e-10);
    for (const auto& s : tr.states) {
        CHECK(s[0] == doctest::Approx(0.3));
        CHECK(s[2] == doctest::Approx(0.9));
    }
    CHECK(drift(tr, [](const std::vector<double>& x) { return x[1]; }) == 0.0);
}

TEST_CASE("so3 rotation closed form") {
    // b = (0,0,1): de1/dt = e2, de2/dt = -e1; from (1,0,0) reach (0,-1,0) at t = pi/2
    TDSystem sys = gstar_system("so3", {CoefficientSpec::constant(0.0),
                                        CoefficientSpec::constant(0.0),
                                        CoefficientSpec::constant(1.0)});
    Trajectory tr = integrate(sys, {1.0, 0.0, 0.0}, 0.0, 1.5707963267948966, 1e-10);
    const auto& xf = tr.states.back();
    CHECK(std::abs(xf[0] - 0.0) <= 1e-8);
    CHECK(std::abs(xf[1] + 1.0) <= 1e-8);
    CHECK(std::abs(xf[2] - 0.0) <= 1e-8);
    CHECK(drift(tr, [](const std::vector<double>& x) {
              return x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
          }) <= 1e-8);
}

TEST_CASE("dense output matches direct integration") {
    TDSystem sys = gstar_system("so3", {CoefficientSpec::trig({{0.8, 0.0, 1.3}}),
                                        CoefficientSpec::constant(0.4),
                                        CoefficientSpec::trig({{0.0, 0.5, 0.7}})});
    std::vector<double> x0 = {0.6, -0.1, 0.8};
    IntegrateOptions opts;
    for (int i = 0; i <= 20; ++i) opts.sample_times.push_back(3.0 * i / 20.0);
    Trajectory sampled = integrate(sys, x0, 0.0, 3.0, 1e-10, opts);
    REQUIRE(sampled.times.size() == 21);
    for (std::size_t i = 0; i < sampled.times.size(); ++i) {
        double t = sampled.times[i];
        if (t == 0.0) continue;
        Trajectory direct = integrate(sys, x0, 0.0, t, 1e-12);
        for (int c = 0; c < 3; ++c)
            CHECK(std::abs(sampled.states[i][c] - direct.states.back()[c]) <= 1e-8);
    }
}

TEST_CASE("time reversal returns to the start") {
    TDSystem sys = gstar_system("sl2", {CoefficientSpec::trig({{0.7, 0.1, 0.9}}),
                                        CoefficientSpec::trig({{-0.3, 0.4, 1.7}}),
                                        CoefficientSpec::constant(0.2)});
    std::vector<double> x0 = {1.0, 0.3, -0.4};
    double tol = 1e-10;
    Trajectory fwd = integrate(sys, x0, 0.0, 5.0, tol);
    Trajectory back = integrate(sys, fwd.states.back(), 5.0, 0.0, tol);
    for (int c = 0; c < 3; ++c) CHECK(std::abs(back.states.back()[c] - x0[c]) <= 10.0 * tol);
}

TEST_CASE("casimir drift under random trig coefficients") {
    Rng rng(42);
    for (const std::string name : {"sl2", "so3", "iso2", "iso11"}) {
        CatalogEntry alg = catalog(name);
        KKSBivector kks = kks_bivector(alg);
        std::vector<CoefficientSpec> coeffs;
        for (int a = 0; a < 3; ++a) {
            double amp = rng.uniform(0.2, 1.0), ph = rng.uniform(0.0, 6.28), om = rng.uniform(0.3, 2.5);
            coeffs.push_back(CoefficientSpec::trig({{amp * std::cos(ph), amp * std::sin(ph), om}}));
        }
        TDSystem sys = make_system(basis_fields(kks), coeffs);
        std::vector<double> x0 = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        double tol = 1e-10;
        Trajectory tr = integrate(sys, x0, 0.0, 5.0, tol);
        CHECK(drift(tr, kks.space, alg.casimirs[0]) <= 100.0 * tol);
    }
}

TEST_CASE("fixed-step order study shows 5th order") {
    TDSystem sys = gstar_system("sl2", {CoefficientSpec::constant(0.0),
                                        CoefficientSpec::constant(1.0),
                                        CoefficientSpec::constant(0.0)});
    // b2 = 1: de1/dt = -e1, de3/dt = e3 -> closed form (e^-t, c, e^t)
    std::vector<double> x0 = {1.0, 0.5, 1.0};
    auto err = [&](long long n) {
        Trajectory tr = integrate_fixed(sys, x0, 0.0, 2.0, n);
        const auto& xf = tr.states.back();
        double e = std::exp(-2.0);
        return std::max({std::abs(xf[0] - e), std::abs(xf[1] - 0.5), std::abs(xf[2] - 1.0 / e)});
    };
    double prev = err(8);
    for (long long n : {16, 32, 64}) {
        double cur = err(n);
        double ratio = prev / cur;
        CHECK(ratio >= 16.0);
        CHECK(ratio <= 64.0);
        prev = cur;
    }
}

TEST_CASE("blow-up reports step-size underflow with the time") {
    // dx/dt = x^2 from x = 1 blows up at t = 1
    Space sp = Space::coords({"x"});
    VecField f(sp);
    f.comp[0] = sp.sym(0, 2);
    TDSystem sys = make_system(std::vector<VecField>{f},
                               std::vector<CoefficientSpec>{CoefficientSpec::constant(1.0)});
    try {
        integrate(sys, {1.0}, 0.0, 2.0, 1e-10);
        FAIL("expected IntegrationError");
    } catch (const IntegrationError& e) {
        CHECK(std::abs(e.t - 1.0) <= 0.05);
    }
}

TEST_CASE("input validation") {
    TDSystem sys = gstar_system("sl2", {CoefficientSpec::constant(1.0),
                                        CoefficientSpec::constant(0.0),
                                        CoefficientSpec::constant(0.0)});
    CHECK_THROWS_AS(integrate(sys, {1.0, 0.0, 0.0}, 0.0, 1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate(sys, {1.0, 0.0}, 0.0, 1.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(integrate(sys, {1.0, 0.0, 0.0}, 1.0, 1.0, 1e-8), std::invalid_argument);
}
