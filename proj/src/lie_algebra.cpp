#include "lieham/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace lieham {

void StructureConstants::set_bracket(int a, int b, const std::vector<Rational>& coeffs) {
    if (static_cast<int>(coeffs.size()) != dim) throw std::invalid_argument("bracket arity mismatch");
    for (int g = 0; g < dim; ++g) {
        at(a, b, g) = coeffs[g];
        at(b, a, g) = -coeffs[g];
    }
}

std::string Violation::str() const {
    std::ostringstream os;
    if (kind == Kind::Antisymmetry)
        os << "antisymmetry violated at (" << a + 1 << "," << b + 1 << "," << g + 1 << ")";
    else
        os << "Jacobi violated at (" << a + 1 << "," << b + 1 << "," << g + 1 << ") -> e" << nu + 1;
    return os.str();
}

ValidationReport validate(const StructureConstants& sc) {
    ValidationReport rep;
    const int r = sc.dim;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int g = 0; g < r; ++g)
                if (sc.at(a, b, g) != -sc.at(b, a, g)) {
                    rep.ok = false;
                    rep.violations.push_back({Violation::Kind::Antisymmetry, a, b, g, 0});
                }
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int g = b + 1; g < r; ++g)
                for (int nu = 0; nu < r; ++nu) {
                    Rational s(0);
                    for (int mu = 0; mu < r; ++mu) {
                        s += sc.at(a, b, mu) * sc.at(mu, g, nu);
                        s += sc.at(b, g, mu) * sc.at(mu, a, nu);
                        s += sc.at(g, a, mu) * sc.at(mu, b, nu);
                    }
                    if (!s.is_zero()) {
                        rep.ok = false;
                        rep.violations.push_back({Violation::Kind::Jacobi, a, b, g, nu});
                    }
                }
    return rep;
}

RatMatrix adjoint_matrix(const StructureConstants& sc, int a) {
    if (a < 0 || a >= sc.dim) throw std::out_of_range("adjoint index out of range");
    RatMatrix m(sc.dim, std::vector<Rational>(sc.dim, Rational(0)));
    for (int g = 0; g < sc.dim; ++g)
        for (int b = 0; b < sc.dim; ++b)
            m[g][b] = sc.at(a, b, g);
    return m;
}

ClosureReport vg_closure_report(const std::vector<VecField>& fields) {
    ClosureReport rep;
    const int r = static_cast<int>(fields.size());
    rep.table = StructureConstants(r);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            VecField br = lie_bracket(fields[a], fields[b]);
            SpanResult sr = span_membership(fields, br);
            if (!sr.in_span) {
                rep.closed = false;
                rep.fail_a = a;
                rep.fail_b = b;
                rep.fail_cert = sr;
                return rep;
            }
            rep.table.set_bracket(a, b, sr.coeffs);
        }
    return rep;
}

namespace {

Space dual_space_for(int r) {
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back("e" + std::to_string(i));
    return Space(names);
}

StructureConstants from_planar_basis(const std::vector<VecField>& basis, const char* what) {
    ClosureReport rep = vg_closure_report(basis);
    if (!rep.closed)
        throw std::logic_error(std::string("basis of ") + what + " does not close");
    return rep.table;
}

CatalogEntry finish(CatalogEntry e) {
    e.dual_space = dual_space_for(e.sc.dim);
    return e;
}

CatalogEntry make_sl2() {
    CatalogEntry e;
    e.name = "sl2";
    e.sc = StructureConstants(3);
    e.sc.set_bracket(0, 1, {Rational(1), Rational(0), Rational(0)});  // [e1,e2]=e1
    e.sc.set_bracket(0, 2, {Rational(0), Rational(2), Rational(0)});  // [e1,e3]=2e2
    e.sc.set_bracket(1, 2, {Rational(0), Rational(0), Rational(1)});  // [e2,e3]=e3
    Space d = dual_space_for(3);
    e.casimirs = {d.parse("e1*e3 - e2^2")};
    e.notes = "simple; leaves classify as P2/I4/I5 by the sign of the Casimir";
    e.planar_label = make_label(ClassKind::P2);
    return finish(e);
}

CatalogEntry make_so3() {
    CatalogEntry e;
    e.name = "so3";
    e.sc = StructureConstants(3);
    e.sc.set_bracket(0, 1, {Rational(0), Rational(0), Rational(1)});   // [e1,e2]=e3
    e.sc.set_bracket(1, 2, {Rational(1), Rational(0), Rational(0)});   // [e2,e3]=e1
    e.sc.set_bracket(2, 0, {Rational(0), Rational(1), Rational(0)});   // [e3,e1]=e2
    Space d = dual_space_for(3);
    e.casimirs = {d.parse("e1^2 + e2^2 + e3^2")};
    e.notes = "simple compact; spherical leaves, class P3";
    e.planar_label = make_label(ClassKind::P3);
    return finish(e);
}

CatalogEntry make_iso2() {
    CatalogEntry e;
    e.name = "iso2";
    e.sc = StructureConstants(3);
    e.sc.set_bracket(0, 2, {Rational(0), Rational(-1), Rational(0)});  // [e1,e3]=-e2
    e.sc.set_bracket(1, 2, {Rational(1), Rational(0), Rational(0)});   // [e2,e3]=e1
    Space d = dual_space_for(3);
    e.casimirs = {d.parse("e1^2 + e2^2")};
    e.notes = "Euclidean algebra; cylinder leaves, class I14A (r=2); planar realization P1";
    e.planar_label = make_label(ClassKind::P1);
    return finish(e);
}

CatalogEntry make_iso11() {
    CatalogEntry e;
    e.name = "iso11";
    e.sc = StructureConstants(3);
    e.sc.set_bracket(0, 2, {Rational(1), Rational(0), Rational(0)});    // [e1,e3]=e1
    e.sc.set_bracket(1, 2, {Rational(0), Rational(-1), Rational(0)});   // [e2,e3]=-e2
    Space d = dual_space_for(3);
    e.casimirs = {d.parse("e1*e2")};
    e.notes = "Poincare algebra of the line; hyperbolic leaves, class I14A (r=2); planar realization I8";
    e.planar_label = make_label(ClassKind::I8);
    return finish(e);
}

CatalogEntry make_sl2_semi_r2() {
    CatalogEntry e;
    e.name = "sl2_semi_R2";
    e.sc = from_planar_basis(planar_class_row(make_label(ClassKind::P5)).basis, "P5");
    e.notes = "constants derived from the P5 planar basis by exact bracket; no Casimir shipped";
    e.planar_label = make_label(ClassKind::P5);
    return finish(e);
}

CatalogEntry make_h2_semi_rr(int r) {
    if (r < 1) throw std::invalid_argument("h2_semi_Rr: r must be >= 1");
    CatalogEntry e;
    e.name = "h2_semi_Rr(" + std::to_string(r) + ")";
    e.sc = from_planar_basis(planar_class_row(make_label(ClassKind::I16, r)).basis, "I16");
    e.notes = r == 1 ? "constants derived from the I16 planar basis; has no Casimir function"
                     : "constants derived from the I16 planar basis; no Casimir shipped";
    e.planar_label = make_label(ClassKind::I16, r);
    return finish(e);
}

CatalogEntry make_r_semi_rr(int r, const std::vector<int>& lambda) {
    if (r < 1) throw std::invalid_argument("R_semi_Rr: r must be >= 1");
    if (static_cast<int>(lambda.size()) != r)
        throw std::invalid_argument("R_semi_Rr: need exactly r exponents");
    bool has_one = false;
    for (int v : lambda)
        if (v == 0) has_one = true;
    ClassLabel label = has_one ? make_label(ClassKind::I14B, r, lambda)
                               : make_label(ClassKind::I14A, r, lambda);
    CatalogEntry e;
    std::ostringstream nm;
    nm << "R_semi_Rr(" << r;
    for (int v : lambda) nm << "," << v;
    nm << ")";
    e.name = nm.str();
    e.sc = from_planar_basis(planar_class_row(label).basis, "I14");
    e.notes = "constants derived from the I14 planar basis (eta_i = exp(lambda_i x)); no Casimir shipped";
    e.planar_label = label;
    return finish(e);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::atoi(tok.c_str()));
    return out;
}

}  // namespace

CatalogEntry catalog(const std::string& name) {
    if (name == "sl2") return make_sl2();
    if (name == "so3") return make_so3();
    if (name == "iso2") return make_iso2();
    if (name == "iso11") return make_iso11();
    if (name == "sl2_semi_R2") return make_sl2_semi_r2();
    if (name == "i16" || name == "h2_semi_Rr") return make_h2_semi_rr(1);
    if (name == "i14a") return make_r_semi_rr(2, {1, 2});
    if (name == "i14b") return make_r_semi_rr(2, {0, 1});
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
        std::string base = name.substr(0, paren);
        std::vector<int> args = parse_int_list(name.substr(paren + 1, name.size() - paren - 2));
        if (base == "h2_semi_Rr" && args.size() == 1) return make_h2_semi_rr(args[0]);
        if (base == "R_semi_Rr" && args.size() >= 2)
            return make_r_semi_rr(args[0], std::vector<int>(args.begin() + 1, args.end()));
    }
    throw std::invalid_argument("unknown catalog algebra '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"sl2", "so3", "iso2", "iso11", "sl2_semi_R2", "h2_semi_Rr(1)",
            "R_semi_Rr(2,1,2)", "R_semi_Rr(2,0,1)"};
}

}  // namespace lieham
