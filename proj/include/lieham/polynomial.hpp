#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieham/rational.hpp"

namespace lieham {

/// Exponent vector of a Laurent monomial; entry i is the (possibly negative)
/// power of variable i.
using Monomial = std::vector<int>;

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Terms with zero coefficient are never stored.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c);

    /// Total degree = max over terms of sum of |exponents|; 0 for the zero polynomial.
    int total_degree() const;

    Polynomial partial(int var) const;                 // power-rule d/d(var), Laurent-aware
    double eval(const std::vector<double>& point) const;
    Rational eval_exact(const std::vector<Rational>& point) const;  // requires exponents >= 0

    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int k) const;  // k >= 0

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<Monomial, Rational> terms_;
};

/// Parse the textual syntax used by the CLI and config files, e.g.
/// "x^2*y - 3/2*z" or "u^-1*e1 + 2". Grammar: sums of products of powers of
/// variables and rational literals, with parentheses and unary minus.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

}  // namespace lieham
