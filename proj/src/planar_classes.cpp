#include "lieham/planar_classes.hpp"

#include <sstream>
#include <stdexcept>

namespace lieham {

std::string ClassLabel::str() const {
    switch (kind) {
        case ClassKind::P1: return "P1";
        case ClassKind::P2: return "P2";
        case ClassKind::P3: return "P3";
        case ClassKind::P5: return "P5";
        case ClassKind::I1: return "I1";
        case ClassKind::I4: return "I4";
        case ClassKind::I5: return "I5";
        case ClassKind::I8: return "I8";
        case ClassKind::I12: return "I12(r=" + std::to_string(r) + ")";
        case ClassKind::I14A:
        case ClassKind::I14B: {
            std::ostringstream os;
            os << (kind == ClassKind::I14A ? "I14A" : "I14B") << "(r=" << r;
            if (!lambda.empty()) {
                os << ", lambda=";
                for (std::size_t i = 0; i < lambda.size(); ++i)
                    os << (i ? "," : "(") << lambda[i];
                os << ")";
            }
            os << ")";
            return os.str();
        }
        case ClassKind::I16: return "I16(r=" + std::to_string(r) + ")";
    }
    return "?";
}

ClassLabel make_label(ClassKind kind, int r, std::vector<int> lambda) {
    ClassLabel l{kind, r, std::move(lambda)};
    if (kind == ClassKind::I14A || kind == ClassKind::I14B) {
        if (l.r <= 0) l.r = 2;
        if (l.lambda.empty()) l.lambda = (kind == ClassKind::I14A) ? std::vector<int>{1, 2}
                                                                   : std::vector<int>{0, 1};
        if (static_cast<int>(l.lambda.size()) != l.r)
            throw std::invalid_argument("I14 label: exponent count must equal r");
        if (kind == ClassKind::I14A) {
            for (int v : l.lambda)
                if (v == 0) throw std::invalid_argument("I14A requires all eta_i != 1 (lambda_i != 0)");
        } else if (l.lambda[0] != 0) {
            throw std::invalid_argument("I14B requires eta_1 = 1 (lambda_1 = 0)");
        }
    }
    if ((kind == ClassKind::I12 || kind == ClassKind::I16) && l.r <= 0) l.r = 1;
    return l;
}

ClassLabel parse_label(const std::string& text) {
    auto base = text.substr(0, text.find('('));
    auto get_r = [&]() -> int {
        auto p = text.find("r=");
        if (p == std::string::npos) return 0;
        return std::atoi(text.c_str() + p + 2);
    };
    if (base == "P1") return make_label(ClassKind::P1);
    if (base == "P2") return make_label(ClassKind::P2);
    if (base == "P3") return make_label(ClassKind::P3);
    if (base == "P5") return make_label(ClassKind::P5);
    if (base == "I1") return make_label(ClassKind::I1);
    if (base == "I4") return make_label(ClassKind::I4);
    if (base == "I5") return make_label(ClassKind::I5);
    if (base == "I8") return make_label(ClassKind::I8);
    if (base == "I12") return make_label(ClassKind::I12, get_r());
    if (base == "I14A") return make_label(ClassKind::I14A, get_r());
    if (base == "I14B") return make_label(ClassKind::I14B, get_r());
    if (base == "I16") return make_label(ClassKind::I16, get_r());
    throw std::invalid_argument("unknown class label '" + text + "'");
}

namespace {

Space plane() { return Space::coords({"x", "y"}); }

Space plane_exp() {
    Space sp = plane();
    sp.add_exp(0, "u");
    return sp;
}

VecField fld(const Space& sp, const std::string& cx, const std::string& cy) {
    VecField X(sp);
    X.comp[0] = sp.parse(cx);
    X.comp[1] = sp.parse(cy);
    return X;
}

}  // namespace

PlanarClassRow planar_class_row(const ClassLabel& label) {
    PlanarClassRow row;
    row.label = label;
    Space sp = plane();
    switch (label.kind) {
        case ClassKind::P1:
            row.algebra = "iso2 ~ R x| R^2";
            row.basis = {fld(sp, "1", "0"), fld(sp, "0", "1"), fld(sp, "y", "-x")};
            row.omega = "1";
            return row;
        case ClassKind::P2:
            row.algebra = "sl2 (type I)";
            row.basis = {fld(sp, "1", "0"), fld(sp, "x", "y"), fld(sp, "x^2 - y^2", "2*x*y")};
            row.omega = "1/y^2";
            return row;
        case ClassKind::P3:
            row.algebra = "so3";
            row.basis = {fld(sp, "y", "-x"), fld(sp, "1 + x^2 - y^2", "2*x*y"),
                         fld(sp, "2*x*y", "1 + y^2 - x^2")};
            row.omega = "1/(1+x^2+y^2)";
            return row;
        case ClassKind::P5:
            row.algebra = "sl2 x| R^2";
            row.basis = {fld(sp, "1", "0"), fld(sp, "0", "1"), fld(sp, "x", "-y"),
                         fld(sp, "y", "0"), fld(sp, "0", "x")};
            row.omega = "1";
            return row;
        case ClassKind::I1:
            row.algebra = "R";
            row.basis = {fld(sp, "1", "0")};
            row.omega = "f(y)";
            return row;
        case ClassKind::I4:
            row.algebra = "sl2 (type II)";
            row.basis = {fld(sp, "1", "1"), fld(sp, "x", "y"), fld(sp, "x^2", "y^2")};
            row.omega = "1/(x-y)^2";
            return row;
        case ClassKind::I5:
            row.algebra = "sl2 (type III)";
            row.basis = {fld(sp, "1", "0"), fld(sp, "2*x", "y"), fld(sp, "x^2", "x*y")};
            row.omega = "1/y^3";
            return row;
        case ClassKind::I8:
            row.algebra = "iso11 ~ R x| R^2";
            row.basis = {fld(sp, "1", "0"), fld(sp, "0", "1"), fld(sp, "x", "-y")};
            row.omega = "1";
            return row;
        case ClassKind::I12: {
            row.algebra = "R^(r+1)";
            row.basis.push_back(fld(sp, "0", "1"));
            for (int i = 1; i <= label.r; ++i) {
                VecField X(sp);
                X.comp[1] = sp.sym(0, i);  // xi_i(x) = x^i, the shipped default
                row.basis.push_back(X);
            }
            row.omega = "f(x)";
            return row;
        }
        case ClassKind::I14A:
        case ClassKind::I14B: {
            Space esp = plane_exp();
            row.algebra = "R x| R^r";
            row.basis.push_back(fld(esp, "1", "0"));
            for (int v : label.lambda) {
                VecField X(esp);
                X.comp[1] = v == 0 ? esp.one() : esp.sym(2, v);  // u^lambda_i
                row.basis.push_back(X);
            }
            row.omega = "1";
            return row;
        }
        case ClassKind::I16: {
            row.algebra = "h2 x| R^(r+1)";
            row.basis = {fld(sp, "1", "0"), fld(sp, "0", "1"), fld(sp, "x", "-y")};
            for (int i = 1; i <= label.r; ++i) {
                VecField X(sp);
                X.comp[1] = sp.sym(0, i);
                row.basis.push_back(X);
            }
            row.omega = "1";
            return row;
        }
    }
    throw std::invalid_argument("unhandled class label");
}

}  // namespace lieham
