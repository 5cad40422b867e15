#include "lieham/kks.hpp"

#include <stdexcept>

namespace lieham {

KKSBivector kks_bivector(const StructureConstants& sc) {
    ValidationReport rep = validate(sc);
    if (!rep.ok)
        throw std::invalid_argument("kks_bivector: structure constants fail " +
                                    rep.violations.front().str());
    KKSBivector out;
    out.sc = sc;
    std::vector<std::string> names;
    for (int i = 1; i <= sc.dim; ++i) names.push_back("e" + std::to_string(i));
    out.space = Space(names);
    out.L = BivField(out.space);
    for (int a = 0; a < sc.dim; ++a)
        for (int b = a + 1; b < sc.dim; ++b) {
            Polynomial p = out.space.zero();
            for (int g = 0; g < sc.dim; ++g)
                p += sc.at(a, b, g) * out.space.sym(g);
            out.L.at(a, b) = p;
        }
    return out;
}

KKSBivector kks_bivector(const CatalogEntry& entry) { return kks_bivector(entry.sc); }

VecField hamiltonian_field(const KKSBivector& kks, const Polynomial& h) {
    if (h.nvars() != kks.space.nsyms())
        throw std::invalid_argument("hamiltonian_field: variable count mismatch");
    const int r = kks.sc.dim;
    VecField X(kks.space);
    for (int b = 0; b < r; ++b) {
        Polynomial acc = kks.space.zero();
        for (int a = 0; a < r; ++a) {
            if (a == b) continue;
            acc += kks.space.mul(h.partial(a), kks.L.entry(a, b));
        }
        X.comp[b] = acc;
    }
    return X;
}

std::vector<VecField> basis_fields(const KKSBivector& kks) {
    std::vector<VecField> out;
    for (int a = 0; a < kks.sc.dim; ++a)
        out.push_back(hamiltonian_field(kks, kks.space.sym(a)));
    return out;
}

std::vector<Polynomial> casimir_residual(const KKSBivector& kks, const Polynomial& C) {
    VecField X = hamiltonian_field(kks, C);
    return X.comp;
}

}  // namespace lieham
