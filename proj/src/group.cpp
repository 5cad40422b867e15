#include "lieham/group.hpp"

#include <cmath>
#include <stdexcept>

namespace lieham {

namespace {

VecField parse_field(const Space& sp, const std::vector<std::string>& comps) {
    VecField X(sp);
    for (int i = 0; i < sp.ncoords(); ++i) X.comp[i] = sp.parse(comps[i]);
    return X;
}

RatMatrix identity_frame(int n) {
    RatMatrix F(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) F[i][i] = Rational(1);
    return F;
}

RatMatrix permutation_frame(const std::vector<int>& model_to_catalog) {
    // catalog_e_{p} = model_e_{a} when model_to_catalog[a] == p
    const int n = static_cast<int>(model_to_catalog.size());
    RatMatrix F(n, std::vector<Rational>(n, Rational(0)));
    for (int a = 0; a < n; ++a) F[model_to_catalog[a]][a] = Rational(1);
    return F;
}

RatMatrix invert_exact(const RatMatrix& M) {
    const int n = static_cast<int>(M.size());
    RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (int col = 0; col < n; ++col) {
        std::vector<Rational> b(n, Rational(0));
        b[col] = Rational(1);
        std::vector<Rational> x;
        if (!solve_exact(M, b, x)) throw std::logic_error("frame matrix is singular");
        for (int row = 0; row < n; ++row) inv[row][col] = x[row];
    }
    return inv;
}

StructureConstants right_closure(const std::vector<VecField>& right_fields, const char* what) {
    ClosureReport rep = vg_closure_report(right_fields);
    if (!rep.closed) throw std::logic_error(std::string(what) + ": right fields do not close");
    return rep.table;
}

GroupModel make_sl2() {
    GroupModel m;
    m.name = "SL2";
    m.catalog_name = "sl2";
    m.catalog_frame = identity_frame(3);
    m.space = Space::coords({"al", "be", "ga"});
    m.identity = {1.0, 0.0, 0.0};
    const Space& sp = m.space;
    // matrix basis v1 = -e, v2 = h/2, v3 = f; delta = (1 + be*ga)/al
    m.left_fields = {
        parse_field(sp, {"0", "-al", "0"}),
        parse_field(sp, {"1/2*al", "-1/2*be", "1/2*ga"}),
        parse_field(sp, {"be", "0", "(1 + be*ga)*al^-1"}),
    };
    m.right_fields = {
        parse_field(sp, {"-ga", "-(1 + be*ga)*al^-1", "0"}),
        parse_field(sp, {"1/2*al", "1/2*be", "-1/2*ga"}),
        parse_field(sp, {"0", "0", "al"}),
    };
    m.sc = right_closure(m.right_fields, "SL2");
    m.multiply = [](const VecN& g, const VecN& h) -> VecN {
        double gd = (1.0 + g[1] * g[2]) / g[0];
        double hd = (1.0 + h[1] * h[2]) / h[0];
        return {g[0] * h[0] + g[1] * h[2], g[0] * h[1] + g[1] * hd, g[2] * h[0] + gd * h[2]};
    };
    m.inverse = [](const VecN& g) -> VecN {
        double gd = (1.0 + g[1] * g[2]) / g[0];
        return {gd, -g[1], -g[2]};
    };
    m.domain = [](const VecN& g) { return std::abs(g[0]) > 1e-9; };
    m.chart_coord = 0;
    m.sample_near_identity = [](Rng& rng) -> VecN {
        return {1.0 + rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
    };
    return m;
}

GroupModel make_sl2_semi_r2() {
    GroupModel m;
    m.name = "SL2_semi_R2";
    m.catalog_name = "sl2_semi_R2";
    // e1=(h,0), e2=(e,0), e3=(f,0), e4=(0,(1,0)), e5=(0,(0,1)) against the
    // planar-class P5 ordering (translations first)
    m.catalog_frame = permutation_frame({2, 3, 4, 0, 1});
    m.space = Space::coords({"al", "be", "ga", "si", "ep"});
    m.identity = {1.0, 0.0, 0.0, 0.0, 0.0};
    const Space& sp = m.space;
    const std::string delta = "(1 + be*ga)*al^-1";
    m.left_fields = {
        parse_field(sp, {"al", "-be", "ga", "0", "0"}),
        parse_field(sp, {"0", "al", "0", "0", "0"}),
        parse_field(sp, {"be", "0", delta, "0", "0"}),
        parse_field(sp, {"0", "0", "0", "al", "ga"}),
        parse_field(sp, {"0", "0", "0", "be", delta}),
    };
    m.right_fields = {
        parse_field(sp, {"al", "be", "-ga", "si", "-ep"}),
        parse_field(sp, {"ga", delta, "0", "ep", "0"}),
        parse_field(sp, {"0", "0", "al", "0", "si"}),
        parse_field(sp, {"0", "0", "0", "1", "0"}),
        parse_field(sp, {"0", "0", "0", "0", "1"}),
    };
    m.sc = right_closure(m.right_fields, "SL2_semi_R2");
    m.multiply = [](const VecN& g, const VecN& h) -> VecN {
        double gd = (1.0 + g[1] * g[2]) / g[0];
        double hd = (1.0 + h[1] * h[2]) / h[0];
        return {g[0] * h[0] + g[1] * h[2], g[0] * h[1] + g[1] * hd,
                g[2] * h[0] + gd * h[2],
                g[0] * h[3] + g[1] * h[4] + g[3], g[2] * h[3] + gd * h[4] + g[4]};
    };
    m.inverse = [](const VecN& g) -> VecN {
        double gd = (1.0 + g[1] * g[2]) / g[0];
        double s = -(gd * g[3] - g[1] * g[4]);
        double e = -(-g[2] * g[3] + g[0] * g[4]);
        return {gd, -g[1], -g[2], s, e};
    };
    m.domain = [](const VecN& g) { return std::abs(g[0]) > 1e-9; };
    m.chart_coord = 0;
    m.sample_near_identity = [](Rng& rng) -> VecN {
        return {1.0 + rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3),
                rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
    };
    return m;
}

GroupModel make_r_semi_r2() {
    GroupModel m;
    m.name = "R_semi_R2";
    m.catalog_name = "iso2";
    m.catalog_frame = identity_frame(3);
    Space sp = Space::coords({"th", "w1", "w2"});
    sp.add_trig(0, "cth", "sth");
    m.space = sp;
    m.identity = {0.0, 0.0, 0.0};
    m.left_fields = {
        parse_field(sp, {"0", "cth", "-sth"}),
        parse_field(sp, {"0", "sth", "cth"}),
        parse_field(sp, {"1", "0", "0"}),
    };
    m.right_fields = {
        parse_field(sp, {"0", "1", "0"}),
        parse_field(sp, {"0", "0", "1"}),
        parse_field(sp, {"1", "w2", "-w1"}),
    };
    m.sc = right_closure(m.right_fields, "R_semi_R2");
    auto rot = [](double th, double x, double y) -> std::pair<double, double> {
        // R(th) = [[cos, sin], [-sin, cos]]
        return {std::cos(th) * x + std::sin(th) * y, -std::sin(th) * x + std::cos(th) * y};
    };
    m.multiply = [rot](const VecN& g, const VecN& h) -> VecN {
        auto [x, y] = rot(g[0], h[1], h[2]);
        return {g[0] + h[0], x + g[1], y + g[2]};
    };
    m.inverse = [rot](const VecN& g) -> VecN {
        auto [x, y] = rot(-g[0], g[1], g[2]);
        return {-g[0], -x, -y};
    };
    m.domain = [](const VecN&) { return true; };
    m.sample_near_identity = [](Rng& rng) -> VecN {
        return {rng.uniform(-0.6, 0.6), rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)};
    };
    return m;
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

GroupModel make_h2_semi_rr(int r) {
    if (r < 1) throw std::invalid_argument("H2_semi_Rr requires r >= 1");
    GroupModel m;
    m.name = "H2_semi_Rr(" + std::to_string(r) + ")";
    m.catalog_name = "h2_semi_Rr(" + std::to_string(r) + ")";
    m.catalog_frame = identity_frame(r + 3);
    std::vector<std::string> names = {"c", "a"};
    for (int j = 0; j <= r; ++j) names.push_back("y" + std::to_string(j));
    Space sp{names};
    int u = sp.add_exp(0, "lam");  // lam = e^c
    m.space = sp;
    m.identity.assign(r + 3, 0.0);

    auto yvar = [&](int j) { return 2 + j; };
    // left fields
    {
        VecField X1(sp);  // e1: x-translation
        X1.comp[1] = sp.sym(u);
        for (int j = 0; j < r; ++j) X1.comp[yvar(j)] = Rational(j + 1) * sp.sym(yvar(j + 1));
        VecField X2(sp);  // e2: y-translation
        X2.comp[yvar(0)] = sp.sym(u, -1);
        VecField X3(sp);  // e3: scaling
        X3.comp[0] = sp.one();
        for (int j = 1; j <= r; ++j) X3.comp[yvar(j)] = Rational(j) * sp.sym(yvar(j));
        m.left_fields = {X1, X2, X3};
        for (int i = 1; i <= r; ++i) {
            VecField Xi(sp);
            Xi.comp[yvar(i)] = sp.sym(u, -1);
            m.left_fields.push_back(Xi);
        }
    }
    // right fields
    {
        VecField X1(sp);
        X1.comp[1] = sp.one();
        VecField X2(sp);
        X2.comp[yvar(0)] = sp.one();
        VecField X3(sp);
        X3.comp[0] = sp.one();
        X3.comp[1] = sp.sym(1);
        for (int j = 0; j <= r; ++j) X3.comp[yvar(j)] = Rational(-1) * sp.sym(yvar(j));
        m.right_fields = {X1, X2, X3};
        for (int i = 1; i <= r; ++i) {
            VecField Xi(sp);
            for (int j = 0; j <= i; ++j) {
                // C(i,j) * lam^j * a^(i-j) d/dy_j
                Polynomial t = sp.constant(Rational(binom(i, j)));
                if (j != 0) t = sp.mul(t, sp.sym(u, j));
                if (i - j != 0) t = sp.mul(t, sp.sym(1, i - j));
                Xi.comp[yvar(j)] = t;
            }
            m.right_fields.push_back(Xi);
        }
    }
    m.sc = right_closure(m.right_fields, "H2_semi_Rr");

    m.multiply = [r](const VecN& g, const VecN& h) -> VecN {
        double lam_g = std::exp(g[0]);
        VecN out(r + 3, 0.0);
        out[0] = g[0] + h[0];
        out[1] = lam_g * h[1] + g[1];
        for (int j = 0; j <= r; ++j) {
            double acc = h[2 + j] / lam_g;
            for (int i = j; i <= r; ++i)
                acc += g[2 + i] * static_cast<double>(binom(i, j)) * std::pow(std::exp(h[0]), j) *
                       std::pow(h[1], i - j);
            out[2 + j] = acc;
        }
        return out;
    };
    m.inverse = [r](const VecN& g) -> VecN {
        double lam = std::exp(g[0]);
        VecN out(r + 3, 0.0);
        out[0] = -g[0];
        out[1] = -g[1] / lam;
        // q'(x) = -lam * q((x - a)/lam)
        for (int j = 0; j <= r; ++j) {
            double acc = 0.0;
            for (int i = j; i <= r; ++i)
                acc += g[2 + i] * static_cast<double>(binom(i, j)) * std::pow(1.0 / lam, i) *
                       std::pow(-g[1], i - j);
            out[2 + j] = -lam * acc;
        }
        return out;
    };
    m.domain = [](const VecN&) { return true; };
    m.sample_near_identity = [r](Rng& rng) -> VecN {
        VecN g(r + 3);
        for (int i = 0; i < r + 3; ++i) g[i] = rng.uniform(-0.5, 0.5);
        return g;
    };
    return m;
}

GroupModel make_gr_i14(int r, std::vector<int> lambda) {
    if (r < 2) throw std::invalid_argument("Gr_I14 requires r >= 2");
    if (static_cast<int>(lambda.size()) != r)
        throw std::invalid_argument("Gr_I14 requires r exponents");
    bool is_b = false;
    for (int v : lambda)
        if (v == 0) is_b = true;
    if (is_b && lambda[0] != 0)
        throw std::invalid_argument("Gr_I14: the zero exponent must come first (I14B frame)");

    GroupModel m;
    {
        std::string nm = "Gr_I14(" + std::to_string(r);
        for (int v : lambda) nm += "," + std::to_string(v);
        nm += ")";
        m.name = nm;
        std::string cat = "R_semi_Rr(" + std::to_string(r);
        for (int v : lambda) cat += "," + std::to_string(v);
        cat += ")";
        m.catalog_name = cat;
    }
    std::vector<std::string> names = {"a"};
    for (int j = 1; j <= r; ++j) names.push_back("c" + std::to_string(j));
    Space sp{names};
    int u = sp.add_exp(0, "u");
    m.space = sp;
    m.identity.assign(r + 1, 0.0);

    // base-point-adapted frame: rows of B give the translation basis in the
    // pure-exponential frame. I14A: row 1 = mean of the eta's; I14B: row 1 =
    // the constant eta. Rows 2..r vanish at the base point.
    RatMatrix B(r, std::vector<Rational>(r, Rational(0)));
    if (is_b) {
        B[0][0] = Rational(1);
    } else {
        for (int j = 0; j < r; ++j) B[0][j] = Rational(1, r);
    }
    for (int i = 1; i < r; ++i) {
        B[i][0] = Rational(-1);
        B[i][i] = Rational(1);
    }
    {
        // pure-exponential catalog frame: catalog_e_{1+j} = sum_i Binv[j][i] model_e_{1+i}
        RatMatrix Binv = invert_exact(B);
        m.catalog_frame = identity_frame(r + 1);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) m.catalog_frame[1 + j][1 + i] = Binv[j][i];
    }

    {
        VecField X1(sp);
        X1.comp[0] = sp.one();
        for (int j = 0; j < r; ++j)
            X1.comp[1 + j] = Rational(lambda[j]) * sp.sym(1 + j);
        m.left_fields = {X1};
        for (int i = 0; i < r; ++i) {
            VecField Xi(sp);
            for (int j = 0; j < r; ++j)
                if (!B[i][j].is_zero()) Xi.comp[1 + j] = B[i][j] * sp.one();
            m.left_fields.push_back(Xi);
        }
    }
    {
        VecField X1(sp);
        X1.comp[0] = sp.one();
        m.right_fields = {X1};
        for (int i = 0; i < r; ++i) {
            VecField Xi(sp);
            for (int j = 0; j < r; ++j)
                if (!B[i][j].is_zero())
                    Xi.comp[1 + j] = lambda[j] == 0 ? B[i][j] * sp.one()
                                                    : B[i][j] * sp.sym(u, lambda[j]);
            m.right_fields.push_back(Xi);
        }
    }
    m.sc = right_closure(m.right_fields, "Gr_I14");

    std::vector<int> lam = lambda;
    m.multiply = [r, lam](const VecN& g, const VecN& h) -> VecN {
        VecN out(r + 1, 0.0);
        out[0] = g[0] + h[0];
        for (int i = 0; i < r; ++i) out[1 + i] = h[1 + i] + g[1 + i] * std::exp(lam[i] * h[0]);
        return out;
    };
    m.inverse = [r, lam](const VecN& g) -> VecN {
        VecN out(r + 1, 0.0);
        out[0] = -g[0];
        for (int i = 0; i < r; ++i) out[1 + i] = -g[1 + i] * std::exp(-lam[i] * g[0]);
        return out;
    };
    m.domain = [](const VecN&) { return true; };
    m.sample_near_identity = [r](Rng& rng) -> VecN {
        VecN g(r + 1);
        for (int i = 0; i <= r; ++i) g[i] = rng.uniform(-0.5, 0.5);
        return g;
    };
    return m;
}

}  // namespace

GroupModel group_model(const std::string& name, int r, std::vector<int> lambda) {
    if (name == "SL2") return make_sl2();
    if (name == "SL2_semi_R2") return make_sl2_semi_r2();
    if (name == "R_semi_R2") return make_r_semi_r2();
    if (name == "H2_semi_Rr") return make_h2_semi_rr(r == 0 ? 1 : r);
    if (name == "Gr_I14") {
        if (lambda.empty()) { r = 2; lambda = {1, 2}; }
        if (r == 0) r = static_cast<int>(lambda.size());
        return make_gr_i14(r, std::move(lambda));
    }
    throw std::invalid_argument("unknown group model '" + name + "'");
}

namespace {

/// Remap a group-space polynomial onto the planar quotient space through a
/// symbol dictionary; throws when a symbol outside the dictionary occurs.
Polynomial remap_poly(const Polynomial& p, const Space& from, const Space& to,
                      const std::vector<int>& sym_map) {
    Polynomial out(to.nsyms());
    for (const auto& [mono, c] : p.terms()) {
        Monomial m(to.nsyms(), 0);
        for (int i = 0; i < from.nsyms(); ++i) {
            if (mono[i] == 0) continue;
            if (sym_map[i] < 0)
                throw std::logic_error("projected component depends on a fibre symbol");
            m[sym_map[i]] += mono[i];
        }
        out.add_term(m, c);
    }
    return out;
}

QuotientProjection build_linear_quotient(const GroupModel& model, const std::string& qname,
                                         std::vector<std::vector<double>> dproj,
                                         std::vector<VecField> generators,
                                         const Space& qspace, std::vector<int> sym_map,
                                         std::function<VecN(Rng&)> sample_subgroup) {
    QuotientProjection q;
    q.model = model;
    q.name = qname;
    q.subgroup_generators = std::move(generators);
    q.dproj = std::move(dproj);
    q.quotient_space = qspace;
    q.sample_subgroup = std::move(sample_subgroup);
    auto dp = q.dproj;
    q.projection = [dp](const VecN& g) -> Vec2 {
        Vec2 out{0.0, 0.0};
        for (int rrow = 0; rrow < 2; ++rrow)
            for (std::size_t i = 0; i < g.size(); ++i) out[rrow] += dp[rrow][i] * g[i];
        return out;
    };
    for (const auto& XR : model.right_fields) {
        VecField P(qspace);
        for (int rrow = 0; rrow < 2; ++rrow) {
            Polynomial acc = model.space.zero();
            for (int i = 0; i < model.dim(); ++i) {
                if (q.dproj[rrow][i] == 0.0) continue;
                if (q.dproj[rrow][i] != 1.0)
                    throw std::logic_error("linear quotient: only 0/1 differentials supported");
                acc += XR.comp[i];
            }
            P.comp[rrow] = remap_poly(acc, model.space, qspace, sym_map);
        }
        q.projected_fields.push_back(P);
    }
    return q;
}

}  // namespace

QuotientProjection quotient(const GroupModel& model, const std::string& spec_name) {
    const int n = model.dim();
    if (model.name == "SL2_semi_R2") {
        if (spec_name != "SL2")
            throw std::invalid_argument("SL2_semi_R2 quotient must be by SL2");
        std::vector<std::vector<double>> dp(2, std::vector<double>(n, 0.0));
        dp[0][3] = 1.0;  // sigma
        dp[1][4] = 1.0;  // eps
        Space qs = Space::coords({"x", "y"});
        // symbol map: si -> x, ep -> y; al,be,ga are fibre symbols
        std::vector<int> sym_map(model.space.nsyms(), -1);
        sym_map[3] = 0;
        sym_map[4] = 1;
        auto gens = std::vector<VecField>{model.left_fields[0], model.left_fields[1],
                                          model.left_fields[2]};
        auto sample_sub = [](Rng& rng) -> VecN {
            return {1.0 + rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3),
                    0.0, 0.0};
        };
        return build_linear_quotient(model, spec_name, dp, gens, qs, sym_map, sample_sub);
    }
    if (model.name == "R_semi_R2") {
        if (spec_name != "H" && spec_name != "SO2")
            throw std::invalid_argument("R_semi_R2 quotient must be by the rotation subgroup");
        std::vector<std::vector<double>> dp(2, std::vector<double>(n, 0.0));
        dp[0][1] = 1.0;
        dp[1][2] = 1.0;
        Space qs = Space::coords({"x", "y"});
        std::vector<int> sym_map(model.space.nsyms(), -1);
        sym_map[1] = 0;
        sym_map[2] = 1;
        auto gens = std::vector<VecField>{model.left_fields[2]};
        auto sample_sub = [](Rng& rng) -> VecN { return {rng.uniform(-1.5, 1.5), 0.0, 0.0}; };
        return build_linear_quotient(model, spec_name, dp, gens, qs, sym_map, sample_sub);
    }
    if (model.name.rfind("H2_semi_Rr", 0) == 0) {
        if (spec_name != "R_semi_Rr")
            throw std::invalid_argument("H2_semi_Rr quotient must be by R_semi_Rr");
        const int r = n - 3;
        std::vector<std::vector<double>> dp(2, std::vector<double>(n, 0.0));
        dp[0][1] = 1.0;  // a
        dp[1][2] = 1.0;  // y0
        Space qs = Space::coords({"x", "y"});
        std::vector<int> sym_map(model.space.nsyms(), -1);
        sym_map[1] = 0;
        sym_map[2] = 1;
        std::vector<VecField> gens;
        gens.push_back(model.left_fields[2]);                               // scaling
        for (int i = 1; i <= r; ++i) gens.push_back(model.left_fields[2 + i]);  // x^i d_y
        auto sample_sub = [n](Rng& rng) -> VecN {
            VecN g(n, 0.0);
            g[0] = rng.uniform(-0.5, 0.5);  // c
            for (int j = 3; j < n; ++j) g[j] = rng.uniform(-0.5, 0.5);  // y1..yr
            return g;
        };
        return build_linear_quotient(model, spec_name, dp, gens, qs, sym_map, sample_sub);
    }
    if (model.name.rfind("Gr_I14", 0) == 0) {
        if (spec_name != "H") throw std::invalid_argument("Gr_I14 quotient must be by H");
        const int r = n - 1;
        std::vector<std::vector<double>> dp(2, std::vector<double>(n, 0.0));
        dp[0][0] = 1.0;
        for (int i = 1; i <= r; ++i) dp[1][i] = 1.0;  // y = sum c_i
        Space qs = Space::coords({"x", "y"});
        qs.add_exp(0, "u");
        std::vector<int> sym_map(model.space.nsyms(), -1);
        sym_map[0] = 0;  // a -> x; the c_i are fibre directions and never
                         // appear in right-field components
        sym_map[model.space.index_of("u")] = 2;
        std::vector<VecField> gens(model.left_fields.begin() + 2, model.left_fields.end());
        auto sample_sub = [n, r](Rng& rng) -> VecN {
            // isotropy: a = 0 and sum c_i = 0
            VecN g(n, 0.0);
            double acc = 0.0;
            for (int i = 1; i < r; ++i) {
                double v = rng.uniform(-0.5, 0.5);
                g[i] = v;
                acc += v;
            }
            g[r] = -acc;
            return g;
        };
        return build_linear_quotient(model, spec_name, dp, gens, qs, sym_map, sample_sub);
    }
    throw std::invalid_argument("no quotient '" + spec_name + "' for model '" + model.name + "'");
}

TDSystem automorphic_system(const GroupModel& model, const std::vector<CoefficientSpec>& coeffs) {
    if (coeffs.size() != model.right_fields.size())
        throw std::invalid_argument("automorphic_system: coefficient count mismatch");
    std::vector<CoeffFn> fns;
    for (const auto& c : coeffs) fns.push_back([c](double t) { return -c(t); });
    return make_system(model.right_fields, std::move(fns));
}

SuperpositionResult superposition_residual(const GroupModel& model,
                                           const std::vector<CoefficientSpec>& coeffs,
                                           const VecN& g0_init, const VecN& g_init,
                                           const std::vector<double>& t_samples, double tol) {
    if (t_samples.size() < 2) throw std::invalid_argument("need at least two sample times");
    if (!model.domain(g0_init) || !model.domain(g_init))
        throw std::invalid_argument("initial point outside chart domain");
    TDSystem sys = automorphic_system(model, coeffs);
    IntegrateOptions opts;
    opts.sample_times = t_samples;
    Trajectory tr0 = integrate(sys, g0_init, t_samples.front(), t_samples.back(), tol, opts);
    Trajectory tr1 = integrate(sys, g_init, t_samples.front(), t_samples.back(), tol, opts);
    for (std::size_t i = 0; i < tr0.states.size(); ++i) {
        bool exited = !model.domain(tr0.states[i]) || !model.domain(tr1.states[i]);
        if (!exited && model.chart_coord >= 0) {
            // a sign change of the chart coordinate means the solution crossed
            // the singular locus between samples
            double a0 = tr0.states[i][model.chart_coord] * g0_init[model.chart_coord];
            double a1 = tr1.states[i][model.chart_coord] * g_init[model.chart_coord];
            exited = a0 <= 0 || a1 <= 0;
        }
        if (exited) throw IntegrationError("solution left the chart domain", tr0.times[i]);
    }
    VecN h0 = model.multiply(model.inverse(tr0.states.front()), tr1.states.front());
    double worst = 0.0;
    SuperpositionResult res{};
    for (std::size_t i = 1; i < tr0.states.size(); ++i) {
        VecN h = model.multiply(model.inverse(tr0.states[i]), tr1.states[i]);
        for (std::size_t j = 0; j < h.size(); ++j)
            worst = std::max(worst, std::abs(h[j] - h0[j]));
    }
    res.residual = worst;
    res.stats_g0 = tr0.stats;
    res.stats_g = tr1.stats;
    return res;
}

double pushforward_bivector(const QuotientProjection& q, const BivField& V, const VecN& point) {
    auto vals = q.model.space.symbol_values(point);
    const int n = q.model.dim();
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double w = V.at(i, j).eval(vals);
            if (w == 0.0) continue;
            acc += w * (q.dproj[0][i] * q.dproj[1][j] - q.dproj[0][j] * q.dproj[1][i]);
        }
    return acc;
}

double projectability_residual(const QuotientProjection& q, const BivField& V,
                               const std::vector<VecN>& points) {
    double worst = 0.0;
    for (const auto& XH : q.subgroup_generators) {
        BivField L = lie_derivative(XH, V);
        for (const auto& g : points) {
            if (!q.model.domain(g)) throw std::domain_error("point outside chart domain");
            worst = std::max(worst, std::abs(pushforward_bivector(q, L, g)));
        }
    }
    return worst;
}

namespace {

double pushforward_trivector(const QuotientProjection&, const TriField&, const VecN&) {
    // a 3-vector pushed onto a 2-dimensional chart has no components: the
    // antisymmetrized Dpi products need three distinct target indices
    return 0.0;
}

}  // namespace

PoissonCheckResult projected_poisson_check(const QuotientProjection& q, const BivField& J,
                                           const std::vector<VecN>& points) {
    PoissonCheckResult res{};
    TriField S = schouten_self(J);
    res.schouten_zero_upstairs = S.is_zero();
    double amax = 0.0;
    for (const auto& g : points) {
        auto vals = q.model.space.symbol_values(g);
        for (const auto& comp : S.comp) amax = std::max(amax, std::abs(comp.eval(vals)));
    }
    res.schouten_upstairs_maxabs = amax;
    res.projectability = projectability_residual(q, J, points);
    double push = 0.0;
    for (const auto& g : points) push = std::max(push, pushforward_trivector(q, S, g));
    res.pushforward_schouten = push;
    return res;
}

std::vector<VecN> sample_points(const GroupModel& model, int count, Rng& rng) {
    std::vector<VecN> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) pts.push_back(model.sample_near_identity(rng));
    return pts;
}

}  // namespace lieham
