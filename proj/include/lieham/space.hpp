#pragma once

#include <string>
#include <vector>

#include "lieham/polynomial.hpp"

namespace lieham {

/// Kinds of polynomial symbols. The first `ncoords` symbols of a Space are
/// always the manifold coordinates themselves; extension symbols stand for
/// non-polynomial coefficient functions of one coordinate and carry their own
/// differentiation rules:
///   Exp : u = exp(x_base),  d u / d x_base = u        (Laurent powers allowed)
///   Cos : C = cos(x_base),  d C / d x_base = -S
///   Sin : S = sin(x_base),  d S / d x_base =  C       (reduced by S^2 = 1 - C^2)
enum class SymbolKind { Coord, Exp, Cos, Sin };

struct Symbol {
    std::string name;
    SymbolKind kind = SymbolKind::Coord;
    int base = -1;  // coordinate index for Exp/Cos/Sin
};

/// Coordinate chart with a symbol table for exact coefficient arithmetic.
/// Polynomials over a Space have nsyms() variables; field components are
/// indexed by the first ncoords of them.
class Space {
public:
    Space() = default;
    explicit Space(std::vector<std::string> coord_names, int degree_cap = 16);

    static Space coords(std::initializer_list<const char*> names);

    int ncoords() const { return ncoords_; }
    int nsyms() const { return static_cast<int>(syms_.size()); }
    int degree_cap() const { return degree_cap_; }
    const std::vector<Symbol>& symbols() const { return syms_; }
    std::vector<std::string> names() const;

    int add_exp(int base_coord, const std::string& name);
    /// Adds the cos symbol and the sin symbol for base_coord; returns the cos index.
    int add_trig(int base_coord, const std::string& cos_name, const std::string& sin_name);

    int index_of(const std::string& name) const;  // -1 when absent

    Polynomial zero() const { return Polynomial(nsyms()); }
    Polynomial one() const { return Polynomial::constant(nsyms(), Rational(1)); }
    Polynomial constant(const Rational& c) const { return Polynomial::constant(nsyms(), c); }
    Polynomial sym(int i, int power = 1) const { return Polynomial::variable(nsyms(), i, power); }

    /// Normal form: sin powers reduced below 2 via S^2 = 1 - C^2.
    Polynomial reduce(const Polynomial& p) const;

    /// Total derivative along coordinate i (chain rule through Exp/Cos/Sin
    /// symbols based at i), in normal form.
    Polynomial d_coord(const Polynomial& p, int i) const;

    /// Product in normal form, guarded by the total-degree cap.
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;
    void check_cap(const Polynomial& p) const;

    /// Symbol values at a coordinate point (size nsyms).
    std::vector<double> symbol_values(const std::vector<double>& point) const;
    double eval(const Polynomial& p, const std::vector<double>& point) const;

    Polynomial parse(const std::string& text) const { return parse_polynomial(text, names()); }

    friend bool operator==(const Space& a, const Space& b);
    friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }

private:
    int ncoords_ = 0;
    int degree_cap_ = 16;
    std::vector<Symbol> syms_;
    bool has_trig_ = false;
};

}  // namespace lieham
