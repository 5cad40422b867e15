#include "lieham/leaf.hpp"

#include <cmath>
#include <stdexcept>

namespace lieham {

namespace {

constexpr double kPi = 3.14159265358979323846;

LeafChart sl2_pos_chart(double k) {
    if (!(k > 0)) throw std::invalid_argument("sl2_pos requires k > 0");
    LeafChart ch;
    ch.name = "sl2_pos";
    ch.algebra = "sl2";
    ch.k = k;
    ch.casimir_value = k;
    double sk = std::sqrt(k);
    ch.forward = [k, sk](Vec2 p) -> VecN {
        double e1 = sk / p[1];
        double e2 = p[0] * sk / p[1];
        return {e1, e2, (k + e2 * e2) / e1};
    };
    ch.inverse = [sk](const VecN& e) -> std::optional<Vec2> {
        if (e[0] <= 0) return std::nullopt;
        return Vec2{e[1] / e[0], sk / e[0]};
    };
    ch.jacobian = [sk](Vec2 p) -> Mat2xN {
        double e1 = sk / p[1];
        double e2 = p[0] * sk / p[1];
        return {std::vector<double>{-e2 / (e1 * e1), 1.0 / e1, 0.0},
                std::vector<double>{-sk / (e1 * e1), 0.0, 0.0}};
    };
    ch.domain = [](Vec2 p) { return p[1] > 0; };
    ch.sample = [](Rng& rng) { return Vec2{rng.uniform(-2.0, 2.0), rng.uniform(0.3, 2.5)}; };
    return ch;
}

LeafChart sl2_neg_chart(double k) {
    if (!(k < 0)) throw std::invalid_argument("sl2_neg requires k < 0");
    LeafChart ch;
    ch.name = "sl2_neg";
    ch.algebra = "sl2";
    ch.k = k;
    ch.casimir_value = k;
    double m = std::sqrt(-k);
    ch.forward = [k, m](Vec2 p) -> VecN {
        double e1 = 2.0 * m / (p[1] - p[0]);
        double e2 = (p[0] + p[1]) * m / (p[1] - p[0]);
        return {e1, e2, (k + e2 * e2) / e1};
    };
    ch.inverse = [m](const VecN& e) -> std::optional<Vec2> {
        if (e[0] <= 0) return std::nullopt;
        return Vec2{(e[1] - m) / e[0], (e[1] + m) / e[0]};
    };
    ch.jacobian = [m](Vec2 p) -> Mat2xN {
        double e1 = 2.0 * m / (p[1] - p[0]);
        double e2 = (p[0] + p[1]) * m / (p[1] - p[0]);
        return {std::vector<double>{-(e2 - m) / (e1 * e1), 1.0 / e1, 0.0},
                std::vector<double>{-(e2 + m) / (e1 * e1), 1.0 / e1, 0.0}};
    };
    ch.domain = [](Vec2 p) { return p[1] > p[0]; };
    ch.sample = [](Rng& rng) {
        double x = rng.uniform(-2.0, 2.0);
        return Vec2{x, x + rng.uniform(0.3, 2.5)};
    };
    return ch;
}

LeafChart sl2_zero_chart(int branch) {
    LeafChart ch;
    ch.name = "sl2_zero";
    ch.algebra = "sl2";
    ch.k = 0.0;
    ch.casimir_value = 0.0;
    double s = branch >= 0 ? 1.0 : -1.0;
    ch.forward = [s](Vec2 p) -> VecN {
        double e1 = s / (p[1] * p[1]);
        return {e1, p[0] * e1, p[0] * p[0] * e1};
    };
    ch.inverse = [s](const VecN& e) -> std::optional<Vec2> {
        if (e[0] * s <= 0) return std::nullopt;
        return Vec2{e[1] / e[0], 1.0 / std::sqrt(std::abs(e[0]))};
    };
    ch.jacobian = [s](Vec2 p) -> Mat2xN {
        double e1 = s / (p[1] * p[1]);
        double e2 = p[0] * e1;
        double a = std::abs(e1);
        return {std::vector<double>{-e2 / (e1 * e1), 1.0 / e1, 0.0},
                std::vector<double>{-0.5 * s / (a * a * std::sqrt(1.0 / a)) , 0.0, 0.0}};
    };
    ch.domain = [](Vec2 p) { return p[1] > 0; };
    ch.sample = [](Rng& rng) { return Vec2{rng.uniform(-2.0, 2.0), rng.uniform(0.4, 2.0)}; };
    return ch;
}

LeafChart sl2_leaf_chart(double k) {
    LeafChart ch;
    ch.name = "sl2_leaf";
    ch.algebra = "sl2";
    ch.k = k;
    ch.casimir_value = k;
    ch.forward = [k](Vec2 p) -> VecN { return {p[0], p[1], (k + p[1] * p[1]) / p[0]}; };
    ch.inverse = [](const VecN& e) -> std::optional<Vec2> {
        if (e[0] <= 0) return std::nullopt;
        return Vec2{e[0], e[1]};
    };
    ch.jacobian = [](Vec2) -> Mat2xN {
        return {std::vector<double>{1.0, 0.0, 0.0}, std::vector<double>{0.0, 1.0, 0.0}};
    };
    ch.domain = [](Vec2 p) { return p[0] > 0; };
    ch.sample = [](Rng& rng) { return Vec2{rng.uniform(0.3, 2.5), rng.uniform(-2.0, 2.0)}; };
    return ch;
}

LeafChart so3_leaf_chart(double k) {
    if (!(k > 0)) throw std::invalid_argument("so3_leaf requires k > 0");
    LeafChart ch;
    ch.name = "so3_leaf";
    ch.algebra = "so3";
    ch.k = k;
    ch.casimir_value = k * k;
    ch.forward = [k](Vec2 p) -> VecN {
        double r = p[0], phi = p[1];
        return {r * std::cos(phi), r * std::sin(phi), std::sqrt(k * k - r * r)};
    };
    ch.inverse = [k](const VecN& e) -> std::optional<Vec2> {
        double r = std::hypot(e[0], e[1]);
        if (r <= 0 || r >= k || e[2] < 0) return std::nullopt;
        return Vec2{r, std::atan2(e[1], e[0])};
    };
    ch.jacobian = [k](Vec2 p) -> Mat2xN {
        double r = p[0], phi = p[1];
        double e1 = r * std::cos(phi), e2 = r * std::sin(phi);
        return {std::vector<double>{e1 / r, e2 / r, 0.0},
                std::vector<double>{-e2 / (r * r), e1 / (r * r), 0.0}};
    };
    ch.domain = [k](Vec2 p) { return p[0] > 0 && p[0] < k && std::abs(p[1]) < kPi; };
    ch.sample = [k](Rng& rng) {
        return Vec2{rng.uniform(0.2 * k, 0.9 * k), rng.uniform(-2.5, 2.5)};
    };
    return ch;
}

LeafChart so3_chart(double k, int branch) {
    if (!(k > 0)) throw std::invalid_argument("so3 requires k > 0");
    LeafChart ch;
    ch.name = "so3";
    ch.algebra = "so3";
    ch.k = k;
    ch.casimir_value = k * k;
    double s = branch >= 0 ? 1.0 : -1.0;  // hemisphere: sign of e3
    ch.forward = [k, s](Vec2 p) -> VecN {
        double a2 = p[0] * p[0] + p[1] * p[1];
        return {2.0 * k * p[1] / (1.0 + a2), -2.0 * k * p[0] / (1.0 + a2),
                s * k * (a2 - 1.0) / (1.0 + a2)};
    };
    ch.inverse = [k, s](const VecN& e) -> std::optional<Vec2> {
        double r2 = e[0] * e[0] + e[1] * e[1];
        if (r2 <= 0 || s * e[2] <= 0) return std::nullopt;
        double f = (s * e[2] + k) / r2;
        return Vec2{-e[1] * f, e[0] * f};
    };
    ch.jacobian = [k, s](Vec2 p) -> Mat2xN {
        double a2 = p[0] * p[0] + p[1] * p[1];
        double e1 = 2.0 * k * p[1] / (1.0 + a2);
        double e2 = -2.0 * k * p[0] / (1.0 + a2);
        double e3 = s * k * (a2 - 1.0) / (1.0 + a2);
        double r2 = e1 * e1 + e2 * e2;
        double f = s * e3 + k;
        return {std::vector<double>{2.0 * e1 * e2 * f / (r2 * r2),
                                    f * (e2 * e2 - e1 * e1) / (r2 * r2), -s * e2 / r2},
                std::vector<double>{f * (e2 * e2 - e1 * e1) / (r2 * r2),
                                    -2.0 * e1 * e2 * f / (r2 * r2), s * e1 / r2}};
    };
    ch.domain = [](Vec2 p) { return p[0] * p[0] + p[1] * p[1] > 1.0; };
    ch.sample = [](Rng& rng) {
        double ang = rng.uniform(-kPi, kPi);
        double rad = rng.uniform(1.2, 3.0);
        return Vec2{rad * std::cos(ang), rad * std::sin(ang)};
    };
    return ch;
}

LeafChart iso2_chart(double k) {
    if (!(k > 0)) throw std::invalid_argument("iso2 requires k > 0");
    LeafChart ch;
    ch.name = "iso2";
    ch.algebra = "iso2";
    ch.k = k;
    ch.casimir_value = k;
    double r = std::sqrt(k);
    ch.forward = [r](Vec2 p) -> VecN { return {r * std::cos(p[0]), r * std::sin(p[0]), p[1]}; };
    ch.inverse = [](const VecN& e) -> std::optional<Vec2> {
        if (e[0] == 0 && e[1] == 0) return std::nullopt;
        return Vec2{std::atan2(e[1], e[0]), e[2]};
    };
    ch.jacobian = [k, r](Vec2 p) -> Mat2xN {
        double e1 = r * std::cos(p[0]), e2 = r * std::sin(p[0]);
        return {std::vector<double>{-e2 / k, e1 / k, 0.0}, std::vector<double>{0.0, 0.0, 1.0}};
    };
    ch.domain = [](Vec2 p) { return std::abs(p[0]) < kPi; };
    ch.sample = [](Rng& rng) { return Vec2{rng.uniform(-2.5, 2.5), rng.uniform(-3.0, 3.0)}; };
    return ch;
}

LeafChart iso11_chart(double k) {
    if (k == 0) throw std::invalid_argument("iso11 requires k != 0");
    LeafChart ch;
    ch.name = "iso11";
    ch.algebra = "iso11";
    ch.k = k;
    ch.casimir_value = k;
    ch.forward = [k](Vec2 p) -> VecN { return {std::exp(p[0]), k * std::exp(-p[0]), p[1]}; };
    ch.inverse = [](const VecN& e) -> std::optional<Vec2> {
        if (e[0] <= 0) return std::nullopt;
        return Vec2{std::log(e[0]), e[2]};
    };
    ch.jacobian = [](Vec2 p) -> Mat2xN {
        return {std::vector<double>{std::exp(-p[0]), 0.0, 0.0},
                std::vector<double>{0.0, 0.0, 1.0}};
    };
    ch.domain = [](Vec2) { return true; };
    ch.sample = [](Rng& rng) { return Vec2{rng.uniform(-1.5, 1.5), rng.uniform(-3.0, 3.0)}; };
    return ch;
}

}  // namespace

LeafChart builtin_chart(const std::string& name, double k, int branch) {
    if (name == "sl2_pos") return sl2_pos_chart(k);
    if (name == "sl2_neg") return sl2_neg_chart(k);
    if (name == "sl2_zero") {
        if (k != 0) throw std::invalid_argument("sl2_zero requires k = 0");
        return sl2_zero_chart(branch);
    }
    if (name == "sl2_leaf") return sl2_leaf_chart(k);
    if (name == "so3") return so3_chart(k, branch);
    if (name == "so3_leaf") return so3_leaf_chart(k);
    if (name == "iso2") return iso2_chart(k);
    if (name == "iso11") return iso11_chart(k);
    throw std::invalid_argument("unknown chart '" + name + "'");
}

RestrictedSystemSpec restrict_system(const CatalogEntry& algebra, const LeafChart& chart) {
    if (chart.algebra != algebra.name)
        throw std::invalid_argument("chart '" + chart.name + "' does not belong to algebra '" +
                                    algebra.name + "'");
    if (chart.ambient_dim != algebra.sc.dim)
        throw std::invalid_argument("chart/algebra dimension mismatch");
    RestrictedSystemSpec spec;
    spec.algebra = algebra;
    spec.chart = chart;
    KKSBivector kks = kks_bivector(algebra);
    auto fields = basis_fields(kks);
    for (const auto& X : fields) {
        auto fwd = chart.forward;
        auto jac = chart.jacobian;
        spec.restricted_fields.push_back([X, fwd, jac](Vec2 p) -> Vec2 {
            VecN e = fwd(p);
            std::vector<double> v = evaluate(X, e);
            Mat2xN J = jac(p);
            Vec2 out{0.0, 0.0};
            for (int rrow = 0; rrow < 2; ++rrow)
                for (std::size_t i = 0; i < v.size(); ++i) out[rrow] += J[rrow][i] * v[i];
            return out;
        });
    }
    return spec;
}

SymField casimir_tensor(const CatalogEntry& algebra) {
    KKSBivector kks = kks_bivector(algebra);
    auto X = basis_fields(kks);
    if (algebra.name == "sl2") {
        SymField T = sym_product(X[0], X[2]);
        SymField m = sym_product(X[1], X[1]);
        for (std::size_t i = 0; i < T.comp.size(); ++i) T.comp[i] = T.comp[i] - m.comp[i];
        return T;
    }
    if (algebra.name == "so3") {
        SymField T = sym_product(X[0], X[0]);
        for (int a = 1; a < 3; ++a) {
            SymField m = sym_product(X[a], X[a]);
            for (std::size_t i = 0; i < T.comp.size(); ++i) T.comp[i] = T.comp[i] + m.comp[i];
        }
        return T;
    }
    throw std::invalid_argument("casimir_tensor: unsupported algebra '" + algebra.name + "'");
}

ClassLabel classify_leaf(const CatalogEntry& algebra, double k) {
    if (algebra.name == "sl2") {
        if (k > 0) return make_label(ClassKind::P2);
        if (k < 0) return make_label(ClassKind::I4);
        return make_label(ClassKind::I5);
    }
    if (algebra.name == "so3") {
        if (!(k > 0)) throw std::invalid_argument("so3 leaves require k > 0");
        return make_label(ClassKind::P3);
    }
    if (algebra.name == "iso2") {
        if (!(k > 0)) throw std::invalid_argument("iso2 leaves require k > 0");
        return make_label(ClassKind::I14A, 2);
    }
    if (algebra.name == "iso11") {
        if (k != 0) return make_label(ClassKind::I14A, 2);
        return make_label(ClassKind::I14A, 1, {1});
    }
    throw std::invalid_argument("classify_leaf: unsupported algebra '" + algebra.name + "'");
}

Polynomial classification_determinant(const CatalogEntry& algebra) {
    SymField T = casimir_tensor(algebra);
    const Space& sp = T.sp;
    return sp.mul(T.at(0, 0), T.at(1, 1)) - sp.mul(T.at(0, 1), T.at(0, 1));
}

std::vector<VecField> canonical_fields(const ClassLabel& label) { return planar_class_row(label).basis; }

std::string canonical_omega(const ClassLabel& label) { return planar_class_row(label).omega; }

namespace {

std::array<std::array<double, 2>, 2> fd_jacobian(const std::function<Vec2(Vec2)>& f, Vec2 p,
                                                 double h) {
    std::array<std::array<double, 2>, 2> J{};
    for (int c = 0; c < 2; ++c) {
        Vec2 pp = p, pm = p;
        pp[c] += h;
        pm[c] -= h;
        Vec2 fp = f(pp), fm = f(pm);
        for (int r = 0; r < 2; ++r) J[r][c] = (fp[r] - fm[r]) / (2.0 * h);
    }
    return J;
}

}  // namespace

double chart_equivalence_residual(const std::vector<std::function<Vec2(Vec2)>>& fields,
                                  const std::vector<VecField>& targets,
                                  const Transition& transition,
                                  const std::vector<Vec2>& points, double fd_step) {
    if (fields.size() != targets.size())
        throw std::invalid_argument("chart_equivalence_residual: field/target count mismatch");
    double worst = 0.0;
    for (const Vec2& p : points) {
        auto J = transition.jacobian ? transition.jacobian(p) : fd_jacobian(transition.map, p, fd_step);
        Vec2 q = transition.map(p);
        for (std::size_t a = 0; a < fields.size(); ++a) {
            Vec2 v = fields[a](p);
            std::vector<double> w = evaluate(targets[a], {q[0], q[1]});
            for (int r = 0; r < 2; ++r) {
                double push = J[r][0] * v[0] + J[r][1] * v[1];
                worst = std::max(worst, std::abs(push - w[r]));
            }
        }
    }
    return worst;
}

double chart_equivalence_residual(const RestrictedSystemSpec& spec,
                                  const std::vector<VecField>& targets,
                                  const Transition& transition,
                                  const std::vector<Vec2>& points, double fd_step) {
    for (const Vec2& p : points)
        if (!spec.chart.domain(p))
            throw std::domain_error("chart_equivalence_residual: point outside chart domain");
    return chart_equivalence_residual(spec.restricted_fields, targets, transition, points, fd_step);
}

EquivalenceData equivalence_data(const std::string& chart_name, double k) {
    EquivalenceData eq;
    if (chart_name == "sl2_pos") {
        if (!(k > 0)) throw std::invalid_argument("sl2_pos equivalence requires k > 0");
        double sk = std::sqrt(k);
        eq.targets = canonical_fields(make_label(ClassKind::P2));
        eq.transition.map = [sk](Vec2 e) { return Vec2{e[1] / e[0], sk / e[0]}; };
        return eq;
    }
    if (chart_name == "sl2_neg") {
        if (!(k < 0)) throw std::invalid_argument("sl2_neg equivalence requires k < 0");
        double m = std::sqrt(-k);
        eq.targets = canonical_fields(make_label(ClassKind::I4));
        eq.transition.map = [m](Vec2 e) { return Vec2{(e[1] - m) / e[0], (e[1] + m) / e[0]}; };
        return eq;
    }
    if (chart_name == "sl2_zero") {
        // displayed mapped system: b1 d_x + b2 (x d_x + y/2 d_y) + b3 (x^2 d_x + x y d_y)
        Space sp = Space::coords({"x", "y"});
        VecField t1(sp), t2(sp), t3(sp);
        t1.comp[0] = sp.one();
        t2.comp[0] = sp.parse("x");
        t2.comp[1] = sp.parse("1/2*y");
        t3.comp[0] = sp.parse("x^2");
        t3.comp[1] = sp.parse("x*y");
        eq.targets = {t1, t2, t3};
        eq.transition.map = [](Vec2 e) { return Vec2{e[1] / e[0], 1.0 / std::sqrt(std::abs(e[0]))}; };
        return eq;
    }
    if (chart_name == "so3") {
        if (!(k > 0)) throw std::invalid_argument("so3 equivalence requires k > 0");
        // pairing: b1 -> (1+x^2-y^2)/2 d_x + xy d_y, b2 -> xy d_x + (1+y^2-x^2)/2 d_y,
        //          b3 -> y d_x - x d_y
        Space sp = Space::coords({"x", "y"});
        VecField t1(sp), t2(sp), t3(sp);
        t1.comp[0] = sp.parse("1/2*(1 + x^2 - y^2)");
        t1.comp[1] = sp.parse("x*y");
        t2.comp[0] = sp.parse("x*y");
        t2.comp[1] = sp.parse("1/2*(1 + y^2 - x^2)");
        t3.comp[0] = sp.parse("y");
        t3.comp[1] = sp.parse("-x");
        eq.targets = {t1, t2, t3};
        eq.transition.map = [k](Vec2 p) {
            double r = p[0], phi = p[1];
            double A = (std::sqrt(k * k - r * r) + k) / r;
            return Vec2{-A * std::sin(phi), A * std::cos(phi)};
        };
        return eq;
    }
    throw std::invalid_argument("no equivalence data for chart '" + chart_name + "'");
}

MetricResult metric_at(const CatalogEntry& algebra, double k, const VecN& point) {
    if (algebra.name == "sl2" && k == 0)
        throw std::domain_error("metric_at: sl2 tensor is degenerate on the k = 0 leaf");
    SymField T = casimir_tensor(algebra);
    auto m = evaluate(T, point);
    MetricResult res;
    res.tensor = {std::array<double, 2>{m[0][0], m[0][1]}, std::array<double, 2>{m[1][0], m[1][1]}};
    res.det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (std::abs(res.det) < 1e-12)
        throw std::domain_error("metric_at: degenerate tensor at this point");
    res.metric = {std::array<double, 2>{m[1][1] / res.det, -m[0][1] / res.det},
                  std::array<double, 2>{-m[1][0] / res.det, m[0][0] / res.det}};
    res.signature = res.det > 0 ? Signature::Riemannian : Signature::Lorentzian;
    return res;
}

}  // namespace lieham
