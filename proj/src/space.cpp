#include "lieham/space.hpp"

#include <cmath>
#include <stdexcept>

namespace lieham {

Space::Space(std::vector<std::string> coord_names, int degree_cap)
    : ncoords_(static_cast<int>(coord_names.size())), degree_cap_(degree_cap) {
    for (auto& n : coord_names) syms_.push_back(Symbol{std::move(n), SymbolKind::Coord, -1});
}

Space Space::coords(std::initializer_list<const char*> names) {
    std::vector<std::string> v(names.begin(), names.end());
    return Space(std::move(v));
}

std::vector<std::string> Space::names() const {
    std::vector<std::string> out;
    out.reserve(syms_.size());
    for (const auto& s : syms_) out.push_back(s.name);
    return out;
}

int Space::add_exp(int base_coord, const std::string& name) {
    if (base_coord < 0 || base_coord >= ncoords_) throw std::out_of_range("exp base out of range");
    syms_.push_back(Symbol{name, SymbolKind::Exp, base_coord});
    return nsyms() - 1;
}

int Space::add_trig(int base_coord, const std::string& cos_name, const std::string& sin_name) {
    if (base_coord < 0 || base_coord >= ncoords_) throw std::out_of_range("trig base out of range");
    syms_.push_back(Symbol{cos_name, SymbolKind::Cos, base_coord});
    syms_.push_back(Symbol{sin_name, SymbolKind::Sin, base_coord});
    has_trig_ = true;
    return nsyms() - 2;
}

int Space::index_of(const std::string& name) const {
    for (int i = 0; i < nsyms(); ++i)
        if (syms_[i].name == name) return i;
    return -1;
}

Polynomial Space::reduce(const Polynomial& p) const {
    if (!has_trig_) return p;
    bool needs = false;
    for (const auto& [m, c] : p.terms()) {
        for (int i = 0; i < nsyms(); ++i)
            if (syms_[i].kind == SymbolKind::Sin && m[i] >= 2) needs = true;
    }
    if (!needs) return p;
    Polynomial out(nsyms());
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(nsyms(), c);
        Monomial rest = m;
        for (int i = 0; i < nsyms(); ++i) {
            if (syms_[i].kind != SymbolKind::Sin || m[i] < 2) continue;
            int cos_idx = -1;
            for (int j = 0; j < nsyms(); ++j)
                if (syms_[j].kind == SymbolKind::Cos && syms_[j].base == syms_[i].base) cos_idx = j;
            int k = m[i] / 2;
            rest[i] = m[i] % 2;
            Polynomial one_minus_c2 = one() - sym(cos_idx, 2);
            term = term * one_minus_c2.pow(k);
        }
        Polynomial mono(nsyms());
        mono.add_term(rest, Rational(1));
        out += term * mono;
    }
    // a single pass suffices: (1 - C^2)^k introduces no sin factors
    return out;
}

Polynomial Space::d_coord(const Polynomial& p, int i) const {
    if (i < 0 || i >= ncoords_) throw std::out_of_range("coordinate index out of range");
    Polynomial out = p.partial(i);
    for (int j = ncoords_; j < nsyms(); ++j) {
        const Symbol& s = syms_[j];
        if (s.base != i) continue;
        switch (s.kind) {
            case SymbolKind::Exp:
                out += sym(j) * p.partial(j);
                break;
            case SymbolKind::Cos: {
                int sin_idx = j + 1;  // added as a pair
                out -= sym(sin_idx) * p.partial(j);
                break;
            }
            case SymbolKind::Sin: {
                int cos_idx = j - 1;
                out += sym(cos_idx) * p.partial(j);
                break;
            }
            case SymbolKind::Coord:
                break;
        }
    }
    return reduce(out);
}

void Space::check_cap(const Polynomial& p) const {
    if (p.total_degree() > degree_cap_)
        throw std::length_error("polynomial exceeds total-degree cap " + std::to_string(degree_cap_));
}

Polynomial Space::mul(const Polynomial& a, const Polynomial& b) const {
    Polynomial r = reduce(a * b);
    check_cap(r);
    return r;
}

std::vector<double> Space::symbol_values(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != ncoords_)
        throw std::invalid_argument("point arity mismatch");
    std::vector<double> vals(nsyms());
    for (int i = 0; i < nsyms(); ++i) {
        const Symbol& s = syms_[i];
        switch (s.kind) {
            case SymbolKind::Coord: vals[i] = point[i]; break;
            case SymbolKind::Exp: vals[i] = std::exp(point[s.base]); break;
            case SymbolKind::Cos: vals[i] = std::cos(point[s.base]); break;
            case SymbolKind::Sin: vals[i] = std::sin(point[s.base]); break;
        }
    }
    return vals;
}

double Space::eval(const Polynomial& p, const std::vector<double>& point) const {
    return p.eval(symbol_values(point));
}

bool operator==(const Space& a, const Space& b) {
    if (a.ncoords_ != b.ncoords_ || a.syms_.size() != b.syms_.size()) return false;
    for (std::size_t i = 0; i < a.syms_.size(); ++i) {
        if (a.syms_[i].kind != b.syms_[i].kind || a.syms_[i].base != b.syms_[i].base ||
            a.syms_[i].name != b.syms_[i].name)
            return false;
    }
    return true;
}

}  // namespace lieham
