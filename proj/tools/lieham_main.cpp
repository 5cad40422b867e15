// lieham: Lie-Hamilton systems on the plane via coadjoint leaves and group
// quotients. Subcommands: catalog, integrate, classify, project, verify.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lieham/group.hpp"
#include "lieham/json_io.hpp"
#include "lieham/kks.hpp"
#include "lieham/leaf.hpp"
#include "lieham/verify.hpp"

using nlohmann::json;
using namespace lieham;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int cmd_catalog(const std::string& name, bool as_json, const std::string& validate_file) {
    if (!validate_file.empty()) {
        std::ifstream in(validate_file);
        if (!in) {
            std::cerr << "error: cannot read '" << validate_file << "'\n";
            return kExitUsage;
        }
        json j = json::parse(in);
        StructureConstants sc = algebra_from_json(j);
        ValidationReport rep = validate(sc);
        if (as_json) {
            std::cout << validation_to_json(rep).dump(2) << "\n";
        } else {
            std::cout << (rep.ok ? "ok" : "invalid") << "\n";
            for (const auto& v : rep.violations) std::cout << "  " << v.str() << "\n";
        }
        return rep.ok ? kExitOk : kExitVerifyFail;
    }
    std::vector<std::string> names = name.empty() ? catalog_names() : std::vector<std::string>{name};
    json out = json::array();
    for (const auto& nm : names) {
        CatalogEntry e = catalog(nm);
        if (as_json) {
            out.push_back(catalog_to_json(e));
            continue;
        }
        std::cout << e.name << "  (dim " << e.sc.dim << ")\n";
        auto coords = e.dual_space.names();
        for (int a = 0; a < e.sc.dim; ++a)
            for (int b = a + 1; b < e.sc.dim; ++b) {
                Polynomial bracket(e.sc.dim);
                for (int g = 0; g < e.sc.dim; ++g) {
                    Monomial m(e.sc.dim, 0);
                    m[g] = 1;
                    bracket.add_term(m, e.sc.at(a, b, g));
                }
                if (bracket.is_zero()) continue;
                std::cout << "  [" << coords[a] << "," << coords[b] << "] = " << bracket.str(coords)
                          << "\n";
            }
        if (e.casimirs.empty()) {
            std::cout << "  casimirs: none\n";
        } else {
            for (const auto& C : e.casimirs)
                std::cout << "  casimir: " << C.str(coords) << "\n";
        }
        if (e.planar_label) {
            PlanarClassRow row = planar_class_row(*e.planar_label);
            std::cout << "  planar class " << e.planar_label->str() << " (omega density "
                      << row.omega << "):\n";
            for (const auto& X : row.basis) std::cout << "    " << to_string(X) << "\n";
        }
        if (!e.notes.empty()) std::cout << "  notes: " << e.notes << "\n";
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_integrate(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "error: cannot read '" << config_path << "'\n";
        return kExitUsage;
    }
    json cfg = json::parse(in);

    const json& sysj = cfg.at("system");
    const std::string type = sysj.value("type", "g_star");
    std::vector<CoefficientSpec> coeffs;
    for (const auto& c : cfg.at("coefficients")) coeffs.push_back(coefficient_from_json(c));
    std::vector<double> x0 = cfg.at("initial_state").get<std::vector<double>>();
    std::vector<double> span = cfg.at("t_span").get<std::vector<double>>();
    double tol = cfg.value("tol", 1e-10);
    int samples = cfg.value("samples", 0);
    if (span.size() != 2) {
        std::cerr << "error: t_span must be [t0, t1]\n";
        return kExitUsage;
    }

    TDSystem sys;
    Space obs_space;
    std::vector<std::pair<std::string, Polynomial>> observables;
    if (type == "custom") {
        // coords + fields given as arrays of polynomial strings
        std::vector<std::string> coords = sysj.at("coords").get<std::vector<std::string>>();
        Space sp(coords);
        std::vector<VecField> fields;
        for (const auto& fj : sysj.at("fields")) {
            VecField X(sp);
            auto comps = fj.get<std::vector<std::string>>();
            if (comps.size() != coords.size()) {
                std::cerr << "error: field arity mismatch\n";
                return kExitUsage;
            }
            for (std::size_t i = 0; i < comps.size(); ++i) X.comp[i] = sp.parse(comps[i]);
            fields.push_back(X);
        }
        sys = make_system(fields, coeffs);
    } else if (type == "leaf") {
        CatalogEntry e = catalog(sysj.at("algebra").get<std::string>());
        LeafChart ch = builtin_chart(sysj.at("chart").get<std::string>(),
                                     sysj.value("k", 0.0), sysj.value("branch", 1));
        RestrictedSystemSpec spec = restrict_system(e, ch);
        sys.dim = 2;
        for (const auto& f : spec.restricted_fields)
            sys.fields.push_back([f](const std::vector<double>& x) {
                Vec2 v = f({x[0], x[1]});
                return std::vector<double>{v[0], v[1]};
            });
        sys.coeffs = to_fns(coeffs);
    } else if (type == "g_star") {
        CatalogEntry e = sysj.contains("algebra_file")
                             ? CatalogEntry{}
                             : catalog(sysj.at("algebra").get<std::string>());
        if (sysj.contains("algebra_file")) {
            // relative algebra paths resolve against the config file's directory
            std::filesystem::path ap = sysj["algebra_file"].get<std::string>();
            if (ap.is_relative()) ap = std::filesystem::path(config_path).parent_path() / ap;
            std::ifstream af(ap);
            if (!af) {
                std::cerr << "error: cannot read algebra file '" << ap.string() << "'\n";
                return kExitUsage;
            }
            e.name = "user";
            e.sc = algebra_from_json(json::parse(af));
            std::vector<std::string> names;
            for (int i = 1; i <= e.sc.dim; ++i) names.push_back("e" + std::to_string(i));
            e.dual_space = Space(names);
        }
        KKSBivector kks = kks_bivector(e);
        sys = make_system(basis_fields(kks), coeffs);
        obs_space = kks.space;
        for (std::size_t i = 0; i < e.casimirs.size(); ++i)
            observables.emplace_back("casimir_" + std::to_string(i + 1), e.casimirs[i]);
    } else if (type == "group_automorphic") {
        GroupModel m = group_model(sysj.at("group").get<std::string>(), sysj.value("r", 0),
                                   sysj.value("lambda", std::vector<int>{}));
        sys = automorphic_system(m, coeffs);
    } else {
        std::cerr << "error: unknown system type '" << type << "'\n";
        return kExitUsage;
    }

    IntegrateOptions opts;
    if (samples > 1) {
        for (int i = 0; i < samples; ++i)
            opts.sample_times.push_back(span[0] + (span[1] - span[0]) * i / (samples - 1));
    }
    Trajectory traj = integrate(sys, x0, span[0], span[1], tol, opts);

    json stats = trajectory_stats_json(traj);
    json drifts = json::object();
    for (const auto& [nm, poly] : observables) drifts[nm] = drift(traj, obs_space, poly);
    stats["drift"] = drifts;
    stats["final_state"] = traj.states.back();

    if (cfg.contains("output")) {
        const json& outj = cfg["output"];
        if (outj.contains("csv")) write_trajectory_csv(traj, outj["csv"].get<std::string>());
        if (outj.contains("json")) {
            std::ofstream js(outj["json"].get<std::string>());
            js << stats.dump(2) << "\n";
        }
    }
    std::cout << stats.dump(2) << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& algebra, double k, bool as_json,
                 const std::string& report_path, std::uint64_t seed) {
    CatalogEntry e = catalog(algebra);
    ClassLabel label = classify_leaf(e, k);
    json j = {{"algebra", algebra}, {"k", k}, {"class", label.str()}};
    if (algebra == "sl2" || algebra == "so3") {
        Polynomial det = classification_determinant(e);
        // on-leaf factored form, backed by the exact identity checked in the
        // verify suite: det = e1^2 (e1 e3 - e2^2) resp. e3^2 (e1^2+e2^2+e3^2)
        j["determinant"] = algebra == "sl2" ? "e1^2*k" : "e3^2*k^2";
        j["determinant_polynomial"] = det.str(e.dual_space.names());
        // sampled numeric check of the determinant sign on the leaf
        Rng rng(seed);
        std::string chart_name = algebra == "so3" ? "so3"
                                : k > 0           ? "sl2_pos"
                                : k < 0           ? "sl2_neg"
                                                  : "sl2_zero";
        LeafChart ch = builtin_chart(chart_name, k);
        json pts = json::array(), dets = json::array();
        double max_resid = 0.0;
        for (int i = 0; i < 5; ++i) {
            Vec2 p = ch.sample(rng);
            VecN amb = ch.forward(p);
            double dv = e.dual_space.eval(det, amb);
            double expect = algebra == "sl2" ? amb[0] * amb[0] * k
                                             : amb[2] * amb[2] * k * k;
            max_resid = std::max(max_resid, std::abs(dv - expect));
            pts.push_back(amb);
            dets.push_back(dv);
        }
        j["sampled_points"] = pts;
        j["sampled_determinants"] = dets;
        if (report_path.size()) {
            json rep = {{"chart", ch.name}, {"k", k}, {"points", pts},
                        {"residuals", {{"determinant", max_resid}}}};
            std::ofstream rf(report_path);
            rf << rep.dump(2) << "\n";
        }
    }
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << algebra << " leaf k=" << k << " -> " << label.str()
                  << (j.contains("determinant")
                          ? "  (det = " + j["determinant"].get<std::string>() + ")"
                          : "")
                  << "\n";
    return kExitOk;
}

int cmd_project(const std::string& group, const std::string& sub, bool as_json,
                std::uint64_t seed, int npoints) {
    GroupModel m = group_model(group);
    QuotientProjection q = quotient(m, sub);
    Rng rng(seed);
    auto pts = sample_points(m, npoints, rng);

    json checks = json::array();
    auto add_check = [&](const std::string& id, double residual, double tol_check) {
        checks.push_back({{"model", m.name},
                          {"check", id},
                          {"points", npoints},
                          {"max_residual", residual},
                          {"pass", residual <= tol_check}});
    };
    // intertwining Dpi X^R = X^pi o pi
    double inter = 0.0;
    for (const auto& g : pts) {
        Vec2 p = q.projection(g);
        for (std::size_t a = 0; a < m.right_fields.size(); ++a) {
            auto v = evaluate(m.right_fields[a], g);
            Vec2 pv{0.0, 0.0};
            for (int row = 0; row < 2; ++row)
                for (int i = 0; i < m.dim(); ++i) pv[row] += q.dproj[row][i] * v[i];
            auto w = evaluate(q.projected_fields[a], {p[0], p[1]});
            inter = std::max(inter, std::max(std::abs(pv[0] - w[0]), std::abs(pv[1] - w[1])));
        }
    }
    add_check("projection_intertwine", inter, 1e-8);
    // invariant bivector projectability (the invariant Lambda for this model)
    BivField lam = m.name == "SL2_semi_R2" ? wedge(m.left_fields[3], m.left_fields[4])
                                           : wedge(m.left_fields[0], m.left_fields[1]);
    add_check("lemma1_invariant_bivector", projectability_residual(q, lam, pts), 1e-10);

    json out = {{"model", m.name}, {"quotient", q.name}, {"seed", seed}, {"checks", checks}};
    json basis = json::array();
    for (const auto& X : q.projected_fields) basis.push_back(to_string(X));
    out["projected_basis"] = basis;
    bool pass = true;
    for (const auto& c : checks)
        if (!c["pass"].get<bool>()) pass = false;
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else {
        std::cout << m.name << " / " << q.name << "\n";
        for (const auto& X : q.projected_fields) std::cout << "  " << to_string(X) << "\n";
        for (const auto& c : checks)
            std::cout << "  " << c["check"].get<std::string>() << ": max residual "
                      << c["max_residual"].get<double>() << (c["pass"].get<bool>() ? "  ok" : "  FAIL")
                      << "\n";
    }
    return pass ? kExitOk : kExitVerifyFail;
}

int cmd_verify(const std::string& suite, bool as_json, const verify::Options& opts) {
    auto results = verify::run_suite(suite, opts);
    if (as_json) {
        std::cout << checks_to_json(results).dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.id;
            if (r.residual != 0.0) std::cout << "  (max residual " << r.residual << ")";
            if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
            std::cout << "\n";
        }
    }
    if (!verify::all_pass(results)) {
        for (const auto& r : results)
            if (!r.pass) {
                std::cerr << "verification failed: " << r.id << "\n";
                break;
            }
        return kExitVerifyFail;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie-Hamilton systems on the plane: coadjoint-leaf restriction and "
                 "group-quotient models"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string catalog_name, validate_file;
    auto* cat = app.add_subcommand("catalog", "list algebras, constants, Casimirs, planar bases");
    cat->add_option("name", catalog_name, "catalog entry (all when omitted)");
    cat->add_option("--validate-file", validate_file, "validate a user algebra JSON file");

    std::string config_path;
    auto* integ = app.add_subcommand("integrate", "integrate a configured system");
    integ->add_option("-c,--config", config_path, "config JSON")->required();

    std::string cls_algebra, cls_report;
    double cls_k = 0.0;
    std::uint64_t seed = 42;
    auto* cls = app.add_subcommand("classify", "planar class of a symplectic leaf");
    cls->add_option("algebra", cls_algebra)->required();
    cls->add_option("k", cls_k)->required();
    cls->add_option("--chart-report", cls_report, "write a chart sample report JSON");

    std::string prj_group, prj_sub;
    int prj_points = 50;
    auto* prj = app.add_subcommand("project", "project a group model onto its quotient");
    prj->add_option("group", prj_group)->required();
    prj->add_option("quotient", prj_sub)->required();
    prj->add_option("--points", prj_points, "sample points");

    std::string suite, inject;
    double tol = 1e-10;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "algebra | kks | leaf | group | all")->required();
    ver->add_option("--tol", tol, "integration tolerance for the numeric checks");
    ver->add_option("--inject", inject, "fault-injection fixture (so3-jacobi)");

    app.add_option("--seed", seed, "RNG seed for sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cat->parsed()) return cmd_catalog(catalog_name, as_json, validate_file);
        if (integ->parsed()) return cmd_integrate(config_path);
        if (cls->parsed()) return cmd_classify(cls_algebra, cls_k, as_json, cls_report, seed);
        if (prj->parsed()) return cmd_project(prj_group, prj_sub, as_json, seed, prj_points);
        if (ver->parsed()) {
            verify::Options opts;
            opts.seed = seed;
            opts.tol = tol;
            opts.inject = inject;
            return cmd_verify(suite, as_json, opts);
        }
    } catch (const IntegrationError& e) {
        std::cerr << "numeric failure at t = " << e.t << ": " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
