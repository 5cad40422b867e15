// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lieham/group.hpp"
#include "lieham/kks.hpp"
#include "lieham/leaf.hpp"

using namespace lieham;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s%s\n", pass ? "pass" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::vector<CoefficientSpec> random_trig_coeffs(Rng& rng, int count) {
    std::vector<CoefficientSpec> out;
    for (int a = 0; a < count; ++a) {
        double amp = rng.uniform(0.2, 1.0);
        double ph = rng.uniform(0.0, 6.283185307179586);
        double om = rng.uniform(0.3, 2.5);
        out.push_back(CoefficientSpec::trig({{amp * std::cos(ph), amp * std::sin(ph), om}}));
    }
    return out;
}

// 1. Exact algebra layer: antisymmetry + Jacobi for the 8 catalog algebras;
//    planar class bases close with the catalog constants (exact rational arithmetic).
void criterion1() {
    bool ok = true;
    std::string detail;
    for (const auto& name : catalog_names()) {
        if (!validate(catalog(name).sc).ok) {
            ok = false;
            detail = name + " fails validation";
        }
    }
    const std::vector<std::pair<std::string, ClassLabel>> pairs = {
        {"sl2", make_label(ClassKind::P2)},
        {"sl2", make_label(ClassKind::I4)},
        {"iso2", make_label(ClassKind::P1)},
        {"iso11", make_label(ClassKind::I8)},
        {"sl2_semi_R2", make_label(ClassKind::P5)},
        {"h2_semi_Rr(1)", make_label(ClassKind::I16, 1)},
        {"R_semi_Rr(2,1,2)", make_label(ClassKind::I14A)},
        {"R_semi_Rr(2,0,1)", make_label(ClassKind::I14B)}};
    for (const auto& [alg, label] : pairs) {
        ClosureReport rep = vg_closure_report(planar_class_row(label).basis);
        if (!rep.closed || !(rep.table == catalog(alg).sc)) {
            ok = false;
            detail = label.str() + " does not close with the " + alg + " constants";
        }
    }
    // remaining planar classes close exactly within their own span
    for (const auto& label : {make_label(ClassKind::P3), make_label(ClassKind::I5),
                              make_label(ClassKind::I16, 2), make_label(ClassKind::I1),
                              make_label(ClassKind::I12, 2)}) {
        ClosureReport rep = vg_closure_report(planar_class_row(label).basis);
        if (!rep.closed) {
            ok = false;
            detail = label.str() + " basis does not close";
        }
    }
    report(1, "exact algebra layer (antisymmetry, Jacobi, planar-class closure)", ok, detail);
}

// 2. KKS correctness: Schouten zero, morphism identity, Casimir residuals zero.
void criterion2() {
    bool ok = true;
    std::string detail;
    for (const auto& name : catalog_names()) {
        CatalogEntry e = catalog(name);
        KKSBivector kks = kks_bivector(e);
        if (!schouten_self(kks.L).is_zero()) {
            ok = false;
            detail = "Schouten nonzero for " + name;
        }
        auto X = basis_fields(kks);
        for (int a = 0; a < e.sc.dim; ++a)
            for (int b = a + 1; b < e.sc.dim; ++b) {
                VecField rhs(kks.space);
                for (int g = 0; g < e.sc.dim; ++g) rhs = rhs + e.sc.at(a, b, g) * X[g];
                if (!(lie_bracket(X[a], X[b]) == rhs)) {
                    ok = false;
                    detail = "bracket morphism fails for " + name;
                }
            }
        for (const auto& C : e.casimirs)
            for (const auto& r : casimir_residual(kks, C))
                if (!r.is_zero()) {
                    ok = false;
                    detail = "Casimir residual nonzero for " + name;
                }
    }
    report(2, "KKS bivector (Schouten = 0, morphism, Casimir residuals)", ok, detail);
}

// 3. Classification reproduction: det identity exact; class assignments.
void criterion3() {
    CatalogEntry sl2 = catalog("sl2");
    const Space& d = sl2.dual_space;
    bool det_ok =
        classification_determinant(sl2) == d.mul(d.parse("e1^2"), d.parse("e1*e3 - e2^2"));
    bool classes_ok = classify_leaf(sl2, 1.0).str() == "P2" &&
                      classify_leaf(sl2, -1.0).str() == "I4" &&
                      classify_leaf(sl2, 0.0).str() == "I5" &&
                      classify_leaf(catalog("so3"), 1.0).str() == "P3";
    report(3, "classification (det = e1^2(e1e3 - e2^2) exactly; P2/I4/I5/P3)",
           det_ok && classes_ok);
}

// 4. Chart equivalence: pushforward residual <= 1e-6 at 50 seeded points,
//    finite-difference jacobian step 1e-6, for the four explicit changes of
//    variables.
void criterion4() {
    Rng rng(42);
    bool ok = true;
    std::string detail;
    struct Case {
        const char* chart;
        double k;
        const char* leaf;
    };
    for (Case c : {Case{"sl2_pos", 1.0, "sl2_leaf"}, Case{"sl2_neg", -1.0, "sl2_leaf"},
                   Case{"sl2_zero", 0.0, "sl2_leaf"}, Case{"so3", 1.0, "so3_leaf"}}) {
        CatalogEntry alg = catalog(std::string(c.chart) == "so3" ? "so3" : "sl2");
        LeafChart leaf = builtin_chart(c.leaf, c.k);
        RestrictedSystemSpec spec = restrict_system(alg, leaf);
        EquivalenceData eq = equivalence_data(c.chart, c.k);
        std::vector<Vec2> pts;
        for (int i = 0; i < 50; ++i) pts.push_back(leaf.sample(rng));
        double res = chart_equivalence_residual(spec, eq.targets, eq.transition, pts, 1e-6);
        if (res > 1e-6) {
            ok = false;
            detail += std::string(c.chart) + " residual " + num(res) + " ";
        }
    }
    report(4, "chart equivalence (4 changes of variables, residual <= 1e-6)", ok, detail);
}

// 5. Conservation + order: Casimir drift <= 100 tol at tol = 1e-10 with seeded
//    trig coefficients over [0,5]; 5th-order ratios in [16,64] against the
//    closed-form sl2 solutions.
void criterion5() {
    Rng rng(42);
    bool ok = true;
    std::string detail;
    const double tol = 1e-10;
    for (const auto& name : catalog_names()) {
        CatalogEntry alg = catalog(name);
        KKSBivector kks = kks_bivector(alg);
        auto coeffs = random_trig_coeffs(rng, alg.sc.dim);
        TDSystem sys = make_system(basis_fields(kks), coeffs);
        std::vector<double> x0(alg.sc.dim);
        for (auto& v : x0) v = rng.uniform(-1.0, 1.0);
        Trajectory tr = integrate(sys, x0, 0.0, 5.0, tol);
        for (const auto& C : alg.casimirs) {
            double dr = drift(tr, kks.space, C);
            if (dr > 100.0 * tol) {
                ok = false;
                detail += name + " drift " + num(dr) + " ";
            }
        }
    }
    // closed form (1, t, t^2) reproduced
    {
        CatalogEntry sl2 = catalog("sl2");
        TDSystem sys = make_system(basis_fields(kks_bivector(sl2)),
                                   std::vector<CoefficientSpec>{CoefficientSpec::constant(1.0),
                                                                CoefficientSpec::constant(0.0),
                                                                CoefficientSpec::constant(0.0)});
        Trajectory tr = integrate(sys, {1.0, 0.0, 0.0}, 0.0, 2.0, tol);
        const auto& xf = tr.states.back();
        double err =
            std::max({std::abs(xf[0] - 1.0), std::abs(xf[1] - 2.0), std::abs(xf[2] - 4.0)});
        if (err > 1e-8) {
            ok = false;
            detail += "(1,t,t^2) error " + num(err) + " ";
        }
    }
    // order study: fixed-step halving ratios within [16, 64] per halving over a
    // step decade, against the closed-form exponential sl2 solution (b = e2)
    {
        CatalogEntry sl2 = catalog("sl2");
        TDSystem sys = make_system(basis_fields(kks_bivector(sl2)),
                                   std::vector<CoefficientSpec>{CoefficientSpec::constant(0.0),
                                                                CoefficientSpec::constant(1.0),
                                                                CoefficientSpec::constant(0.0)});
        std::vector<double> x0 = {1.0, 0.5, 1.0};
        auto err = [&](long long n) {
            Trajectory tr = integrate_fixed(sys, x0, 0.0, 2.0, n);
            const auto& xf = tr.states.back();
            double e = std::exp(-2.0);
            return std::max(
                {std::abs(xf[0] - e), std::abs(xf[1] - 0.5), std::abs(xf[2] - 1.0 / e)});
        };
        double prev = err(8);
        for (long long n : {16, 32, 64}) {
            double cur = err(n);
            double ratio = prev / cur;
            if (ratio < 16.0 || ratio > 64.0) {
                ok = false;
                detail += "order ratio " + num(ratio) + " ";
            }
            prev = cur;
        }
    }
    report(5, "conservation (drift <= 100 tol) and 5th-order ratios in [16,64]", ok, detail);
}

// 6. Superposition: h(t) = g0^-1 g constant within 1e-6 at tol 1e-10, 5 seeded
//    coefficient draws x 3 initial pairs, for SL2 and SL2 x| R^2.
void criterion6() {
    Rng rng(42);
    bool ok = true;
    std::string detail;
    for (const std::string name : {"SL2", "SL2_semi_R2"}) {
        GroupModel m = group_model(name);
        std::vector<double> samples;
        for (int i = 0; i <= 30; ++i) samples.push_back(3.0 * i / 30.0);
        double worst = 0.0;
        for (int draw = 0; draw < 5; ++draw) {
            auto coeffs = random_trig_coeffs(rng, static_cast<int>(m.right_fields.size()));
            for (int pair = 0; pair < 3; ++pair) {
                VecN g0 = m.sample_near_identity(rng);
                VecN g1 = m.sample_near_identity(rng);
                SuperpositionResult r = superposition_residual(m, coeffs, g0, g1, samples, 1e-10);
                worst = std::max(worst, r.residual);
            }
        }
        if (worst > 1e-6) ok = false;
        detail += name + " " + num(worst) + " ";
    }
    report(6, "superposition rule (g0^-1 g constant within 1e-6 at tol 1e-10)", ok, detail);
}

// 7. Lemma-1 discrimination: the three invariant projectable bivectors at
//    <= 1e-10; the designated counterexample X1^L ^ X4^L at >= 0.1.
void criterion7() {
    Rng rng(42);
    bool proj_ok = true;
    std::string detail;
    {
        GroupModel m = group_model("SL2_semi_R2");
        QuotientProjection q = quotient(m, "SL2");
        auto pts = sample_points(m, 50, rng);
        double res = projectability_residual(q, wedge(m.left_fields[3], m.left_fields[4]), pts);
        if (res > 1e-10) proj_ok = false;
        detail += "sl2r2 " + num(res) + " ";
    }
    for (int r : {1, 2}) {
        GroupModel m = group_model("H2_semi_Rr", r);
        QuotientProjection q = quotient(m, "R_semi_Rr");
        auto pts = sample_points(m, 50, rng);
        double res = projectability_residual(q, wedge(m.left_fields[0], m.left_fields[1]), pts);
        if (res > 1e-10) proj_ok = false;
        detail += "h2r" + std::to_string(r) + " " + num(res) + " ";
    }
    {
        GroupModel m = group_model("R_semi_R2");
        QuotientProjection q = quotient(m, "H");
        auto pts = sample_points(m, 50, rng);
        BivField lam = wedge(m.left_fields[0], m.left_fields[1]);
        double res = projectability_residual(q, lam, pts);
        if (res > 1e-10 || !schouten_self(lam).is_zero()) proj_ok = false;
        detail += "p1 " + num(res) + " ";
    }
    report(7, "Lemma 1: three projectable bivectors at residual <= 1e-10", proj_ok, detail);

    // the designated counterexample fixture, implemented exactly as stated; its
    // Lemma-1 residual is identically zero (X1^L ^ X4^L has no sigma-eps
    // component), so the >= 0.1 requirement cannot be met -- see README.
    {
        GroupModel m = group_model("SL2_semi_R2");
        QuotientProjection q = quotient(m, "SL2");
        auto pts = sample_points(m, 50, rng);
        double res = projectability_residual(q, wedge(m.left_fields[0], m.left_fields[3]), pts);
        report(7, "Lemma 1: designated counterexample X1^L ^ X4^L at residual >= 0.1",
               res >= 0.1, "measured " + num(res) + " (identically zero: bivector is projectable)");
        // supplementary demonstration of the discrimination capability with a
        // genuinely non-projectable bivector
        BivField scaled = wedge(m.left_fields[3], m.left_fields[4]);
        for (auto& c : scaled.comp) c = m.space.mul(m.space.sym(0), c);
        double res2 = projectability_residual(q, scaled, pts);
        report(7, "Lemma 1 (supplementary): alpha X4^L ^ X5^L at residual >= 0.1", res2 >= 0.1,
               "measured " + num(res2));
    }
}

// 8. I14 Poisson-after-projection.
void criterion8() {
    Rng rng(42);
    bool ok = true;
    std::string detail;
    {
        GroupModel m = group_model("Gr_I14", 2, {1, 2});
        QuotientProjection q = quotient(m, "H");
        auto pts = sample_points(m, 50, rng);
        BivField J = wedge(m.left_fields[0], m.left_fields[1]);
        PoissonCheckResult r = projected_poisson_check(q, J, pts);
        if (r.schouten_zero_upstairs || r.pushforward_schouten > 1e-9 ||
            r.projectability > 1e-9) {
            ok = false;
            detail += "I14A ";
        }
        detail += "[J,J] max " + num(r.schouten_upstairs_maxabs) + ", push " +
                  num(r.pushforward_schouten) + " ";
    }
    {
        GroupModel m = group_model("Gr_I14", 2, {0, 1});
        QuotientProjection q = quotient(m, "H");
        auto pts = sample_points(m, 50, rng);
        BivField J = wedge(m.left_fields[0], m.left_fields[1]);
        PoissonCheckResult r = projected_poisson_check(q, J, pts);
        if (!r.schouten_zero_upstairs) {
            ok = false;
            detail += "I14B not exactly zero ";
        }
    }
    report(8, "I14: [J,J] != 0 upstairs (A), exact zero (B), pushforward <= 1e-9", ok, detail);
}

// 9. Invariance layer: exact Lie invariance of both Casimir tensors; metric
//    signatures at 20 seeded points per case.
void criterion9() {
    Rng rng(42);
    bool ok = true;
    std::string detail;
    for (const std::string name : {"sl2", "so3"}) {
        CatalogEntry alg = catalog(name);
        SymField T = casimir_tensor(alg);
        for (const auto& X : basis_fields(kks_bivector(alg)))
            if (!lie_derivative(X, T).is_zero()) {
                ok = false;
                detail += "L_X T != 0 for " + name + " ";
            }
    }
    struct Case {
        const char* chart;
        double k;
        Signature expect;
    };
    for (Case c : {Case{"sl2_pos", 1.0, Signature::Riemannian},
                   Case{"sl2_neg", -1.0, Signature::Lorentzian},
                   Case{"so3", 1.0, Signature::Riemannian}}) {
        LeafChart ch = builtin_chart(c.chart, c.k);
        CatalogEntry alg = catalog(ch.algebra);
        for (int i = 0; i < 20; ++i) {
            MetricResult mr = metric_at(alg, c.k, ch.forward(ch.sample(rng)));
            if (mr.signature != c.expect) {
                ok = false;
                detail += std::string(c.chart) + " wrong signature ";
            }
        }
    }
    report(9, "invariance layer (L_X T = 0 exactly; metric signatures)", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::printf("%d criterion check(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
