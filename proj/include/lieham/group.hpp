#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lieham/integrate.hpp"
#include "lieham/leaf.hpp"
#include "lieham/lie_algebra.hpp"
#include "lieham/rng.hpp"

namespace lieham {

/// Matrix Lie group in explicit coordinates, with exact
/// left/right-invariant vector fields. The basis is chosen so that the
/// right-invariant fields close with the catalog structure constants (up to
/// the stored basis permutation) and the left-invariant ones with the
/// opposite sign.
struct GroupModel {
    std::string name;
    std::string catalog_name;
    /// catalog basis expressed over the model basis: catalog_e_p =
    /// sum_a catalog_frame[p][a] model_e_a (a permutation matrix for the
    /// matrix-group models, the inverse adaptation frame for Gr_I14)
    RatMatrix catalog_frame;
    Space space;
    std::vector<double> identity;
    std::vector<VecField> left_fields, right_fields;
    StructureConstants sc;  // exact closure table of the right fields (model order)
    std::function<VecN(const VecN&, const VecN&)> multiply;
    std::function<VecN(const VecN&)> inverse;
    std::function<bool(const VecN&)> domain;
    /// coordinate whose sign change marks a chart exit (-1 when the chart is global)
    int chart_coord = -1;
    std::function<VecN(Rng&)> sample_near_identity;

    int dim() const { return space.ncoords(); }
};

/// Names: "SL2"; "SL2_semi_R2"; "R_semi_R2"; "H2_semi_Rr" with r >= 1;
/// "Gr_I14" with r >= 2 and exponent list lambda (eta_i = exp(lambda_i x);
/// a zero exponent selects the I14B frame, otherwise the I14A frame).
GroupModel group_model(const std::string& name, int r = 0, std::vector<int> lambda = {});

struct QuotientProjection {
    GroupModel model;
    std::string name;  // subgroup being quotiented out
    std::vector<VecField> subgroup_generators;  // left fields spanning the isotropy algebra
    std::function<Vec2(const VecN&)> projection;
    std::vector<std::vector<double>> dproj;  // constant 2 x n differential of the projection
    Space quotient_space;                    // planar chart (x, y), with u = e^x for I14
    std::vector<VecField> projected_fields;  // Dpi . right_fields, expressed on quotient_space
    std::function<VecN(Rng&)> sample_subgroup;  // random element of the subgroup
};

/// Supported pairs: SL2_semi_R2 / "SL2"; H2_semi_Rr / "R_semi_Rr";
/// R_semi_R2 / "H"; Gr_I14 / "H".
QuotientProjection quotient(const GroupModel& model, const std::string& spec_name);

/// The automorphic system X(t,g) = -sum_a b_a(t) X^R_a(g).
TDSystem automorphic_system(const GroupModel& model, const std::vector<CoefficientSpec>& coeffs);

struct SuperpositionResult {
    double residual;       // max_t |h(t) - h(t0)|_inf where h = g0(t)^-1 g(t)
    IntegrationStats stats_g0, stats_g;
};

/// Integrates the automorphic system from both initial points and reports the
/// constancy drift of h(t) = g0(t)^-1 g(t). Throws IntegrationError when a
/// solution leaves the chart domain (reporting the exit time).
SuperpositionResult superposition_residual(const GroupModel& model,
                                           const std::vector<CoefficientSpec>& coeffs,
                                           const VecN& g0_init, const VecN& g_init,
                                           const std::vector<double>& t_samples, double tol);

/// Lemma-1 residual: max over points and subgroup generators X_H of
/// |Dpi-pushforward of (L_{X_H} V)|_inf, with L computed exactly.
double projectability_residual(const QuotientProjection& q, const BivField& V,
                               const std::vector<VecN>& points);

/// Pushforward of a bivector through Dpi at a point (the (x,y) component).
double pushforward_bivector(const QuotientProjection& q, const BivField& V, const VecN& point);

struct PoissonCheckResult {
    bool schouten_zero_upstairs;       // [J,J]_SN = 0 exactly on the group
    double schouten_upstairs_maxabs;   // max |component| of [J,J]_SN over the points
    double projectability;             // Lemma-1 residual of J
    double pushforward_schouten;       // max |Dpi-pushforward of [J,J]_SN|
};

PoissonCheckResult projected_poisson_check(const QuotientProjection& q, const BivField& J,
                                           const std::vector<VecN>& points);

/// Sampled group points for verification runs.
std::vector<VecN> sample_points(const GroupModel& model, int count, Rng& rng);

}  // namespace lieham
