#include "lieham/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace lieham {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index, int power) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[index] = power;
    p.add_term(m, Rational(1));
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Polynomial::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (int e : m) d += e >= 0 ? e : -e;
        if (d > deg) deg = d;
    }
    return deg;
}

Polynomial Polynomial::partial(int var) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) continue;
        Monomial d = m;
        d[var] = e - 1;
        out.add_term(d, Rational(e) * c);
    }
    return out;
}

static double ipow(double x, int e) {
    if (e < 0) return 1.0 / ipow(x, -e);
    double r = 1.0;
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

double Polynomial::eval(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point arity mismatch");
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (int i = 0; i < nvars_; ++i)
            if (m[i] != 0) t *= ipow(point[i], m[i]);
        total += t;
    }
    return total;
}

Rational Polynomial::eval_exact(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point arity mismatch");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            int e = m[i];
            Rational base = point[i];
            if (e < 0) { base = Rational(1) / base; e = -e; }
            for (int k = 0; k < e; ++k) t *= base;
        }
        total += t;
    }
    return total;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.nvars_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    Polynomial out(a.nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : a.terms_) out.terms_.emplace(m, c * k);
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial r = Polynomial::constant(nvars_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    // print highest monomial first: iterate the map in reverse (lex descending)
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = false;
        for (int e : m)
            if (e != 0) has_vars = true;
        bool coeff_printed = false;
        if (!a.is_one() || !has_vars) {
            os << a.str();
            coeff_printed = true;
        }
        bool leading = !coeff_printed;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!leading) os << "*";
            leading = false;
            os << names[i];
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const std::vector<std::string>& names;
    int nvars;

    explicit Parser(const std::string& text, const std::vector<std::string>& nm)
        : s(text), names(nm), nvars(static_cast<int>(nm.size())) {}

    void skip() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) + ": " + why);
    }

    Polynomial parse_expr() {
        Polynomial p = parse_term();
        for (;;) {
            skip();
            if (eat('+')) p += parse_term();
            else if (eat('-')) p -= parse_term();
            else return p;
        }
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        for (;;) {
            skip();
            if (eat('*')) p = p * parse_factor();
            else if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '('))
                p = p * parse_factor();  // implicit product, e.g. "2x"
            else return p;
        }
    }

    Polynomial parse_factor() {
        skip();
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        Polynomial base = parse_atom();
        skip();
        if (eat('^')) {
            int e = parse_int();
            if (e >= 0) return base.pow(e);
            // negative power is only valid for a single variable atom
            if (base.terms().size() == 1) {
                const auto& [m, c] = *base.terms().begin();
                int nz = -1;
                for (int i = 0; i < nvars; ++i)
                    if (m[i] != 0) { if (nz >= 0 || m[i] != 1) fail("negative power of non-variable"); nz = i; }
                if (nz >= 0 && c.is_one()) return Polynomial::variable(nvars, nz, e);
            }
            fail("negative power of non-variable");
        }
        return base;
    }

    int parse_int() {
        skip();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::atoi(s.substr(start, pos - start).c_str());
    }

    Polynomial parse_atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            Polynomial p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            long long numer = std::atoll(s.substr(start, pos - start).c_str());
            skip();
            if (pos < s.size() && s[pos] == '/') {
                std::size_t save = pos;
                ++pos;
                skip();
                std::size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == dstart) { pos = save; return Polynomial::constant(nvars, Rational(numer)); }
                long long denom = std::atoll(s.substr(dstart, pos - dstart).c_str());
                return Polynomial::constant(nvars, Rational(numer, denom));
            }
            return Polynomial::constant(nvars, Rational(numer));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (int i = 0; i < nvars; ++i)
                if (names[i] == name) return Polynomial::variable(nvars, i);
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
    Parser p(text, names);
    Polynomial out = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace lieham
