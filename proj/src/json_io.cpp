#include "lieham/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace lieham {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& v) {
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw std::invalid_argument("rational entries must be integers or \"p/q\" strings");
}

}  // namespace

StructureConstants algebra_from_json(const json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("algebra JSON: missing integer \"dim\"");
    int r = j["dim"].get<int>();
    if (r < 1) throw std::invalid_argument("algebra JSON: dim must be >= 1");
    StructureConstants sc(r);
    std::vector<bool> seen(static_cast<std::size_t>(r) * r, false);
    for (const auto& b : j.value("brackets", json::array())) {
        int a = b.at("i").get<int>() - 1;
        int bb = b.at("j").get<int>() - 1;
        if (a < 0 || a >= r || bb < 0 || bb >= r || a == bb)
            throw std::invalid_argument("algebra JSON: bracket indices out of range");
        std::size_t key = static_cast<std::size_t>(std::min(a, bb)) * r + std::max(a, bb);
        if (seen[key]) throw std::invalid_argument("algebra JSON: duplicate bracket pair");
        seen[key] = true;
        const auto& coeffs = b.at("coeffs");
        if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != r)
            throw std::invalid_argument("algebra JSON: coeffs must have dim entries");
        std::vector<Rational> c;
        for (const auto& v : coeffs) c.push_back(rational_from_json(v));
        sc.set_bracket(a, bb, c);
    }
    return sc;
}

json algebra_to_json(const StructureConstants& sc) {
    json brackets = json::array();
    for (int a = 0; a < sc.dim; ++a)
        for (int b = a + 1; b < sc.dim; ++b) {
            bool nonzero = false;
            json coeffs = json::array();
            for (int g = 0; g < sc.dim; ++g) {
                if (!sc.at(a, b, g).is_zero()) nonzero = true;
                coeffs.push_back(sc.at(a, b, g).str());
            }
            if (nonzero) brackets.push_back({{"i", a + 1}, {"j", b + 1}, {"coeffs", coeffs}});
        }
    return {{"dim", sc.dim}, {"brackets", brackets}};
}

json catalog_to_json(const CatalogEntry& entry) {
    json casimirs = json::array();
    for (const auto& C : entry.casimirs) casimirs.push_back(C.str(entry.dual_space.names()));
    json j = {{"name", entry.name},
              {"algebra", algebra_to_json(entry.sc)},
              {"casimirs", casimirs},
              {"notes", entry.notes}};
    if (entry.planar_label) {
        const PlanarClassRow row = planar_class_row(*entry.planar_label);
        json basis = json::array();
        for (const auto& X : row.basis) basis.push_back(to_string(X));
        j["planar_class"] = {{"class", entry.planar_label->str()},
                       {"basis", basis},
                       {"omega_density", row.omega}};
    }
    return j;
}

CoefficientSpec coefficient_from_json(const json& j) {
    if (j.is_number()) return CoefficientSpec::constant(j.get<double>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") return CoefficientSpec::constant(j.at("value").get<double>());
    if (kind == "poly") {
        std::vector<double> c = j.at("coeffs").get<std::vector<double>>();
        return CoefficientSpec::poly(std::move(c));
    }
    if (kind == "trig") {
        std::vector<CoefficientSpec::TrigSum::Term> terms;
        for (const auto& t : j.at("terms"))
            terms.push_back({t.value("a", 0.0), t.value("b", 0.0), t.value("omega", 1.0)});
        return CoefficientSpec::trig(std::move(terms));
    }
    throw std::invalid_argument("unknown coefficient kind '" + kind + "'");
}

json coefficient_to_json(const CoefficientSpec& spec) {
    if (const auto* c = std::get_if<CoefficientSpec::Constant>(&spec.desc))
        return {{"kind", "constant"}, {"value", c->value}};
    if (const auto* p = std::get_if<CoefficientSpec::PolyInT>(&spec.desc))
        return {{"kind", "poly"}, {"coeffs", p->coeffs}};
    const auto& ts = std::get<CoefficientSpec::TrigSum>(spec.desc);
    json terms = json::array();
    for (const auto& t : ts.terms)
        terms.push_back({{"a", t.a}, {"b", t.b}, {"omega", t.omega}});
    return {{"kind", "trig"}, {"terms", terms}};
}

json validation_to_json(const ValidationReport& rep) {
    json v = json::array();
    for (const auto& viol : rep.violations) v.push_back(viol.str());
    return {{"ok", rep.ok}, {"violations", v}};
}

json checks_to_json(const std::vector<verify::CheckResult>& results) {
    json checks = json::array();
    for (const auto& r : results) {
        json c = {{"id", r.id}, {"pass", r.pass}, {"max_residual", r.residual}};
        if (!r.detail.empty()) c["detail"] = r.detail;
        checks.push_back(c);
    }
    return {{"pass", verify::all_pass(results)}, {"checks", checks}};
}

json trajectory_stats_json(const Trajectory& traj) {
    return {{"steps", traj.stats.steps},
            {"rejected_steps", traj.stats.rejected},
            {"max_error_estimate", traj.stats.max_error_estimate},
            {"samples", traj.times.size()},
            {"t_first", traj.times.empty() ? 0.0 : traj.times.front()},
            {"t_last", traj.times.empty() ? 0.0 : traj.times.back()}};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
    out << "t";
    for (std::size_t i = 1; i <= n; ++i) out << ",x" << i;
    out << "\n";
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        out << format_double(traj.times[s]);
        for (double v : traj.states[s]) out << "," << format_double(v);
        out << "\n";
    }
}

}  // namespace lieham
