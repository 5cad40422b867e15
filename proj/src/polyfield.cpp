#include "lieham/polyfield.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace lieham {

namespace {
void require_same_space(const Space& a, const Space& b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": space mismatch");
}
}  // namespace

bool VecField::is_zero() const {
    for (const auto& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

BivField::BivField(const Space& s) : sp(s), comp(s.ncoords() * (s.ncoords() - 1) / 2, s.zero()) {}

int BivField::flat(int i, int j, int n) {
    // index of (i,j), i<j, in row-major upper triangle
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Polynomial BivField::entry(int i, int j) const {
    if (i == j) return sp.zero();
    if (i < j) return at(i, j);
    return -at(j, i);
}

bool BivField::is_zero() const {
    for (const auto& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

SymField::SymField(const Space& s) : sp(s), comp(s.ncoords() * (s.ncoords() + 1) / 2, s.zero()) {}

int SymField::flat(int i, int j, int n) {
    return i * n - i * (i - 1) / 2 + (j - i);
}

bool SymField::is_zero() const {
    for (const auto& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

TriField::TriField(const Space& s)
    : sp(s), comp(s.ncoords() * (s.ncoords() - 1) * (s.ncoords() - 2) / 6, s.zero()) {}

int TriField::flat(int i, int j, int k, int n) {
    auto c3 = [](int m) { return m * (m - 1) * (m - 2) / 6; };
    auto c2 = [](int m) { return m * (m - 1) / 2; };
    // combinatorial rank of {i<j<k} among 3-subsets of {0..n-1}
    return c3(n) - c3(n - i) + c2(n - i - 1) - c2(n - j) + (k - j - 1);
}

bool TriField::is_zero() const {
    for (const auto& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

VecField operator+(const VecField& a, const VecField& b) {
    require_same_space(a.sp, b.sp, "vecfield add");
    VecField r(a.sp);
    for (int i = 0; i < a.sp.ncoords(); ++i) r.comp[i] = a.comp[i] + b.comp[i];
    return r;
}

VecField operator-(const VecField& a, const VecField& b) {
    require_same_space(a.sp, b.sp, "vecfield sub");
    VecField r(a.sp);
    for (int i = 0; i < a.sp.ncoords(); ++i) r.comp[i] = a.comp[i] - b.comp[i];
    return r;
}

VecField operator-(const VecField& a) {
    VecField r(a.sp);
    for (int i = 0; i < a.sp.ncoords(); ++i) r.comp[i] = -a.comp[i];
    return r;
}

VecField operator*(const Rational& c, const VecField& a) {
    VecField r(a.sp);
    for (int i = 0; i < a.sp.ncoords(); ++i) r.comp[i] = c * a.comp[i];
    return r;
}

BivField operator+(const BivField& a, const BivField& b) {
    require_same_space(a.sp, b.sp, "bivector add");
    BivField r(a.sp);
    for (std::size_t i = 0; i < a.comp.size(); ++i) r.comp[i] = a.comp[i] + b.comp[i];
    return r;
}

BivField operator-(const BivField& a, const BivField& b) {
    require_same_space(a.sp, b.sp, "bivector sub");
    BivField r(a.sp);
    for (std::size_t i = 0; i < a.comp.size(); ++i) r.comp[i] = a.comp[i] - b.comp[i];
    return r;
}

BivField operator*(const Rational& c, const BivField& a) {
    BivField r(a.sp);
    for (std::size_t i = 0; i < a.comp.size(); ++i) r.comp[i] = c * a.comp[i];
    return r;
}

VecField lie_bracket(const VecField& X, const VecField& Y) {
    require_same_space(X.sp, Y.sp, "lie_bracket");
    const Space& sp = X.sp;
    const int n = sp.ncoords();
    VecField r(sp);
    for (int i = 0; i < n; ++i) {
        Polynomial acc = sp.zero();
        for (int j = 0; j < n; ++j) {
            acc += sp.mul(X.comp[j], sp.d_coord(Y.comp[i], j));
            acc -= sp.mul(Y.comp[j], sp.d_coord(X.comp[i], j));
        }
        r.comp[i] = sp.reduce(acc);
    }
    return r;
}

BivField wedge(const VecField& X, const VecField& Y) {
    require_same_space(X.sp, Y.sp, "wedge");
    const Space& sp = X.sp;
    BivField r(sp);
    for (int i = 0; i < sp.ncoords(); ++i)
        for (int j = i + 1; j < sp.ncoords(); ++j)
            r.at(i, j) = sp.mul(X.comp[i], Y.comp[j]) - sp.mul(X.comp[j], Y.comp[i]);
    return r;
}

TriField wedge3(const VecField& X, const VecField& Y, const VecField& Z) {
    require_same_space(X.sp, Y.sp, "wedge3");
    require_same_space(X.sp, Z.sp, "wedge3");
    const Space& sp = X.sp;
    TriField r(sp);
    const int n = sp.ncoords();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                // det of the 3x3 matrix of components (i,j,k) x (X,Y,Z)
                Polynomial det =
                    sp.mul(X.comp[i], sp.mul(Y.comp[j], Z.comp[k]) - sp.mul(Y.comp[k], Z.comp[j])) -
                    sp.mul(X.comp[j], sp.mul(Y.comp[i], Z.comp[k]) - sp.mul(Y.comp[k], Z.comp[i])) +
                    sp.mul(X.comp[k], sp.mul(Y.comp[i], Z.comp[j]) - sp.mul(Y.comp[j], Z.comp[i]));
                r.at(i, j, k) = sp.reduce(det);
            }
    return r;
}

SymField sym_product(const VecField& X, const VecField& Y) {
    require_same_space(X.sp, Y.sp, "sym_product");
    const Space& sp = X.sp;
    SymField r(sp);
    const Rational half(1, 2);
    for (int i = 0; i < sp.ncoords(); ++i)
        for (int j = i; j < sp.ncoords(); ++j)
            r.at(i, j) = half * (sp.mul(X.comp[i], Y.comp[j]) + sp.mul(X.comp[j], Y.comp[i]));
    return r;
}

BivField lie_derivative(const VecField& X, const BivField& T) {
    require_same_space(X.sp, T.sp, "lie_derivative");
    const Space& sp = X.sp;
    const int n = sp.ncoords();
    BivField r(sp);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Polynomial acc = sp.zero();
            for (int k = 0; k < n; ++k) {
                acc += sp.mul(X.comp[k], sp.d_coord(T.entry(i, j), k));
                acc -= sp.mul(T.entry(k, j), sp.d_coord(X.comp[i], k));
                acc -= sp.mul(T.entry(i, k), sp.d_coord(X.comp[j], k));
            }
            r.at(i, j) = sp.reduce(acc);
        }
    return r;
}

SymField lie_derivative(const VecField& X, const SymField& T) {
    require_same_space(X.sp, T.sp, "lie_derivative");
    const Space& sp = X.sp;
    const int n = sp.ncoords();
    SymField r(sp);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Polynomial acc = sp.zero();
            for (int k = 0; k < n; ++k) {
                acc += sp.mul(X.comp[k], sp.d_coord(T.entry(i, j), k));
                acc -= sp.mul(T.entry(k, j), sp.d_coord(X.comp[i], k));
                acc -= sp.mul(T.entry(i, k), sp.d_coord(X.comp[j], k));
            }
            r.at(i, j) = sp.reduce(acc);
        }
    return r;
}

TriField schouten_self(const BivField& L) {
    const Space& sp = L.sp;
    const int n = sp.ncoords();
    TriField r(sp);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Polynomial acc = sp.zero();
                for (int a = 0; a < n; ++a) {
                    acc += sp.mul(L.entry(a, k), sp.d_coord(L.entry(i, j), a));
                    acc += sp.mul(L.entry(a, i), sp.d_coord(L.entry(j, k), a));
                    acc += sp.mul(L.entry(a, j), sp.d_coord(L.entry(k, i), a));
                }
                r.at(i, j, k) = Rational(2) * sp.reduce(acc);
            }
    return r;
}

std::vector<double> evaluate(const VecField& X, const std::vector<double>& point) {
    auto vals = X.sp.symbol_values(point);
    std::vector<double> out(X.sp.ncoords());
    for (int i = 0; i < X.sp.ncoords(); ++i) out[i] = X.comp[i].eval(vals);
    return out;
}

std::vector<std::vector<double>> evaluate(const BivField& L, const std::vector<double>& point) {
    auto vals = L.sp.symbol_values(point);
    const int n = L.n();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = L.at(i, j).eval(vals);
            m[i][j] = v;
            m[j][i] = -v;
        }
    return m;
}

std::vector<std::vector<double>> evaluate(const SymField& T, const std::vector<double>& point) {
    auto vals = T.sp.symbol_values(point);
    const int n = T.n();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = T.at(i, j).eval(vals);
            m[i][j] = v;
            m[j][i] = v;
        }
    return m;
}

std::vector<double> evaluate(const TriField& T, const std::vector<double>& point) {
    auto vals = T.sp.symbol_values(point);
    std::vector<double> out(T.comp.size());
    for (std::size_t c = 0; c < T.comp.size(); ++c) out[c] = T.comp[c].eval(vals);
    return out;
}

SpanResult span_membership(const std::vector<VecField>& fields, const VecField& candidate) {
    if (fields.empty()) throw std::invalid_argument("span_membership: empty field list");
    for (const auto& f : fields) require_same_space(f.sp, candidate.sp, "span_membership");
    const int n = candidate.sp.ncoords();
    const std::size_t m = fields.size();

    // collect all (component, monomial) rows
    std::map<std::pair<int, Monomial>, std::size_t> row_of;
    auto note = [&](int comp, const Polynomial& p) {
        for (const auto& [mono, c] : p.terms()) {
            auto key = std::make_pair(comp, mono);
            if (!row_of.count(key)) row_of.emplace(key, row_of.size());
        }
    };
    for (const auto& f : fields)
        for (int i = 0; i < n; ++i) note(i, f.comp[i]);
    for (int i = 0; i < n; ++i) note(i, candidate.comp[i]);

    RatMatrix A(row_of.size(), std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> b(row_of.size(), Rational(0));
    std::vector<std::pair<int, Monomial>> row_key(row_of.size());
    for (const auto& [key, idx] : row_of) row_key[idx] = key;
    for (std::size_t a = 0; a < m; ++a)
        for (int i = 0; i < n; ++i)
            for (const auto& [mono, c] : fields[a].comp[i].terms())
                A[row_of.at({i, mono})][a] = c;
    for (int i = 0; i < n; ++i)
        for (const auto& [mono, c] : candidate.comp[i].terms())
            b[row_of.at({i, mono})] = c;

    SpanResult res;
    std::size_t bad = 0;
    std::vector<Rational> x;
    if (!solve_exact(A, b, x, &bad)) {
        res.in_span = false;
        res.cert_component = row_key[bad].first;
        res.cert_monomial = row_key[bad].second;
        return res;
    }
    res.in_span = true;
    res.coeffs = std::move(x);
    return res;
}

std::string to_string(const VecField& X) {
    std::ostringstream os;
    auto names = X.sp.names();
    bool first = true;
    for (int i = 0; i < X.sp.ncoords(); ++i) {
        if (X.comp[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << X.comp[i].str(names) << ")*d/d" << names[i];
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace lieham
