#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieham/polyfield.hpp"
#include "lieham/planar_classes.hpp"

namespace lieham {

/// Structure constants c_{ab}^g of a finite-dimensional real Lie algebra in a
/// fixed basis, stored exactly. Indices are 0-based internally.
struct StructureConstants {
    int dim = 0;
    std::vector<Rational> c;  // size dim^3, index (a*dim + b)*dim + g

    StructureConstants() = default;
    explicit StructureConstants(int r) : dim(r), c(static_cast<std::size_t>(r) * r * r, Rational(0)) {}

    const Rational& at(int a, int b, int g) const {
        return c[(static_cast<std::size_t>(a) * dim + b) * dim + g];
    }
    Rational& at(int a, int b, int g) {
        return c[(static_cast<std::size_t>(a) * dim + b) * dim + g];
    }
    /// Sets [e_a, e_b] = sum coeffs[g] e_g together with the antisymmetric partner.
    void set_bracket(int a, int b, const std::vector<Rational>& coeffs);

    friend bool operator==(const StructureConstants& x, const StructureConstants& y) {
        return x.dim == y.dim && x.c == y.c;
    }
};

struct Violation {
    enum class Kind { Antisymmetry, Jacobi } kind;
    int a = 0, b = 0, g = 0, nu = 0;  // indices (1-based in reports)
    std::string str() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Exact antisymmetry and Jacobi check.
ValidationReport validate(const StructureConstants& sc);

/// (ad_{e_a})_{g b} = c_{ab}^g  (matrix sending e_b to [e_a, e_b]).
RatMatrix adjoint_matrix(const StructureConstants& sc, int a);

struct CatalogEntry {
    std::string name;
    StructureConstants sc;
    std::vector<Polynomial> casimirs;  // polynomials in e_1..e_r
    std::string notes;
    std::optional<ClassLabel> planar_label;  // planar class realized by this algebra, when canonical
    Space dual_space;                        // coordinates e_1..e_r on g*
};

/// Names accepted: "sl2", "so3", "iso2", "iso11", "sl2_semi_R2",
/// "h2_semi_Rr(r)" (default r=1), "R_semi_Rr(r,l1,...,lr)", plus the
/// aliases "i16" = h2_semi_Rr(1), "i14a" = R_semi_Rr(2,1,2),
/// "i14b" = R_semi_Rr(2,0,1). Throws std::invalid_argument on unknown names.
CatalogEntry catalog(const std::string& name);

/// The eight default catalog entries.
std::vector<std::string> catalog_names();

/// Exact pairwise brackets of `fields`, resolved in their own span.
struct ClosureReport {
    bool closed = true;
    StructureConstants table;
    int fail_a = -1, fail_b = -1;  // first non-resolvable bracket when !closed
    SpanResult fail_cert;
};
ClosureReport vg_closure_report(const std::vector<VecField>& fields);

}  // namespace lieham
