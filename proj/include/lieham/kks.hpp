#pragma once

#include "lieham/lie_algebra.hpp"

namespace lieham {

/// The linear Poisson bivector on g* induced by structure constants:
/// L^{ab}(theta) = sum_g c_{ab}^g e_g, on coordinates e_1..e_r.
struct KKSBivector {
    StructureConstants sc;
    Space space;   // coordinates e_1..e_r
    BivField L;
};

/// Requires validate(sc).ok; throws std::invalid_argument otherwise.
KKSBivector kks_bivector(const StructureConstants& sc);
KKSBivector kks_bivector(const CatalogEntry& entry);

/// Hamiltonian field of h: X_h^b = sum_a (dh/de_a) L^{ab}; X_{e_a} is the
/// basis field X_a of the g* system.
VecField hamiltonian_field(const KKSBivector& kks, const Polynomial& h);

/// X_a = hamiltonian_field(e_a), a = 1..r; they close with the structure
/// constants exactly.
std::vector<VecField> basis_fields(const KKSBivector& kks);

/// residual_b = {C, e_b}; C is a Casimir iff every residual is the zero polynomial.
std::vector<Polynomial> casimir_residual(const KKSBivector& kks, const Polynomial& C);

}  // namespace lieham
