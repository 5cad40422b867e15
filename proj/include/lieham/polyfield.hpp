#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieham/space.hpp"

namespace lieham {

/// Polynomial-coefficient vector field: component i is the coefficient of
/// d/dx_i. Components are polynomials over the space's full symbol table.
struct VecField {
    Space sp;
    std::vector<Polynomial> comp;  // size sp.ncoords()

    VecField() = default;
    explicit VecField(const Space& s) : sp(s), comp(s.ncoords(), s.zero()) {}
    bool is_zero() const;
    friend bool operator==(const VecField& a, const VecField& b) {
        return a.sp == b.sp && a.comp == b.comp;
    }
};

/// Antisymmetric 2-contravariant tensor field; stores upper-triangle
/// components L^{ij} for i < j.
struct BivField {
    Space sp;
    std::vector<Polynomial> comp;  // size n*(n-1)/2

    BivField() = default;
    explicit BivField(const Space& s);
    int n() const { return sp.ncoords(); }
    static int flat(int i, int j, int n);  // requires i < j
    const Polynomial& at(int i, int j) const { return comp[flat(i, j, n())]; }
    Polynomial& at(int i, int j) { return comp[flat(i, j, n())]; }
    /// Signed lookup: entry(i,j) = -entry(j,i); zero on the diagonal.
    Polynomial entry(int i, int j) const;
    bool is_zero() const;
};

/// Symmetric 2-contravariant tensor field; stores T^{ij} for i <= j.
struct SymField {
    Space sp;
    std::vector<Polynomial> comp;  // size n*(n+1)/2

    SymField() = default;
    explicit SymField(const Space& s);
    int n() const { return sp.ncoords(); }
    static int flat(int i, int j, int n);  // requires i <= j
    const Polynomial& at(int i, int j) const { return comp[flat(i, j, n())]; }
    Polynomial& at(int i, int j) { return comp[flat(i, j, n())]; }
    Polynomial entry(int i, int j) const { return i <= j ? at(i, j) : at(j, i); }
    bool is_zero() const;
};

/// Totally antisymmetric 3-contravariant tensor field; components for i<j<k.
struct TriField {
    Space sp;
    std::vector<Polynomial> comp;

    TriField() = default;
    explicit TriField(const Space& s);
    int n() const { return sp.ncoords(); }
    static int flat(int i, int j, int k, int n);  // requires i < j < k
    const Polynomial& at(int i, int j, int k) const { return comp[flat(i, j, k, n())]; }
    Polynomial& at(int i, int j, int k) { return comp[flat(i, j, k, n())]; }
    bool is_zero() const;
};

VecField operator+(const VecField& a, const VecField& b);
VecField operator-(const VecField& a, const VecField& b);
VecField operator-(const VecField& a);
VecField operator*(const Rational& c, const VecField& a);
BivField operator+(const BivField& a, const BivField& b);
BivField operator-(const BivField& a, const BivField& b);
BivField operator*(const Rational& c, const BivField& a);

/// [X,Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i), exact.
VecField lie_bracket(const VecField& X, const VecField& Y);

/// (X ^ Y)^{ij} = X^i Y^j - X^j Y^i.
BivField wedge(const VecField& X, const VecField& Y);

/// X ^ Y ^ Z as a trivector (component determinant).
TriField wedge3(const VecField& X, const VecField& Y, const VecField& Z);

/// Symmetric product (X (x) Y + Y (x) X)/2 contribution helper:
/// sym_product(X, Y)^{ij} = (X^i Y^j + X^j Y^i)/2.
SymField sym_product(const VecField& X, const VecField& Y);

/// Lie derivative of a 2-contravariant tensor along X:
/// (L_X T)^{ij} = sum_k (X^k d_k T^{ij} - T^{kj} d_k X^i - T^{ik} d_k X^j).
BivField lie_derivative(const VecField& X, const BivField& T);
SymField lie_derivative(const VecField& X, const SymField& T);

/// Schouten-Nijenhuis self-bracket of a bivector, with the sign convention
/// fixed by [X^Y, X^Y] = -2 [X,Y]^X^Y:
/// [L,L]^{ijk} = 2 sum_a (L^{ak} d_a L^{ij} + L^{ai} d_a L^{jk} + L^{aj} d_a L^{ki}).
TriField schouten_self(const BivField& L);

std::vector<double> evaluate(const VecField& X, const std::vector<double>& point);
/// Full n x n antisymmetric component matrix at a point.
std::vector<std::vector<double>> evaluate(const BivField& L, const std::vector<double>& point);
std::vector<std::vector<double>> evaluate(const SymField& T, const std::vector<double>& point);
/// Independent components T^{ijk}, i<j<k, in TriField::flat order.
std::vector<double> evaluate(const TriField& T, const std::vector<double>& point);

struct SpanResult {
    bool in_span = false;
    std::vector<Rational> coeffs;  // candidate = sum coeffs[a] * fields[a]
    // certificate when not in span: a component/monomial pair that cannot be matched
    int cert_component = -1;
    Monomial cert_monomial;
};

/// Exact decomposition of `candidate` in the constant-coefficient span of
/// `fields` (linear solve over the monomial coefficient space).
SpanResult span_membership(const std::vector<VecField>& fields, const VecField& candidate);

std::string to_string(const VecField& X);

}  // namespace lieham
