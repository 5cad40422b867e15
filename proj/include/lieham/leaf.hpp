#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lieham/kks.hpp"
#include "lieham/rng.hpp"

namespace lieham {

using Vec2 = std::array<double, 2>;
using VecN = std::vector<double>;
using Mat2xN = std::array<std::vector<double>, 2>;  // rows of D(inverse)

/// Explicit diffeomorphism between a 2-dimensional symplectic leaf (or
/// quotient chart) and a planar coordinate domain.
struct LeafChart {
    std::string name;
    std::string algebra;     // catalog algebra this chart belongs to
    int ambient_dim = 3;
    double k = 0.0;          // leaf parameter
    double casimir_value = 0.0;  // value the ambient Casimir takes on the leaf
    std::function<VecN(Vec2)> forward;
    std::function<std::optional<Vec2>(const VecN&)> inverse;  // partial map
    std::function<Mat2xN(Vec2)> jacobian;  // D(inverse) evaluated at forward(p)
    std::function<bool(Vec2)> domain;
    std::function<Vec2(Rng&)> sample;      // seeded domain-point generator
};

/// Built-in charts. Accepted names and parameter ranges:
///   sl2_pos (k>0), sl2_neg (k<0), sl2_zero (k=0; `branch` picks sign of e1),
///   so3 (k>0), iso2 (k>0), iso11 (k!=0)
/// plus the leaf-coordinate charts sl2_leaf (coords (e1,e2), any k, e1>0) and
/// so3_leaf (coords (r,phi), k>0) that realize the intermediate coordinates
/// the restriction formulas are written in.
LeafChart builtin_chart(const std::string& name, double k, int branch = +1);

struct RestrictedSystemSpec {
    CatalogEntry algebra;
    LeafChart chart;
    std::vector<std::function<Vec2(Vec2)>> restricted_fields;
};

/// Restriction of the g* basis fields through a chart: field a at leaf point
/// p is jacobian(p) . X_a(forward(p)).
RestrictedSystemSpec restrict_system(const CatalogEntry& algebra, const LeafChart& chart);

/// Casimir tensor fields on g*: sl2 -> (X1 (x) X3 + X3 (x) X1)/2 - X2 (x) X2;
/// so3 -> sum_i X_i (x) X_i. Supported algebras: sl2, so3.
SymField casimir_tensor(const CatalogEntry& algebra);

/// Planar class of the leaf: sl2 -> P2/I4/I5 by sign(k); so3 -> P3;
/// iso2 (k>0) -> I14A(r=2); iso11 -> I14A(r=2) for k != 0, I14A(r=1) for k = 0.
ClassLabel classify_leaf(const CatalogEntry& algebra, double k);

/// Exact symbolic determinant of the Casimir tensor in the (e1,e2) leaf
/// coordinates (the classification evidence).
Polynomial classification_determinant(const CatalogEntry& algebra);

/// Basis of a planar class (on (x,y); exponential symbol for I14).
std::vector<VecField> canonical_fields(const ClassLabel& label);
/// The symplectic-density metadata of a planar class (display only).
std::string canonical_omega(const ClassLabel& label);

struct Transition {
    std::function<Vec2(Vec2)> map;
    std::function<std::array<std::array<double, 2>, 2>(Vec2)> jacobian;  // optional analytic D(map)
};

/// max over sample points p and field index a of
/// |D(transition)(p) . X_a(p) - target_a(transition(p))|_inf, with
/// D(transition) by central differences (step fd_step) unless an analytic
/// jacobian is supplied.
double chart_equivalence_residual(const RestrictedSystemSpec& spec,
                                  const std::vector<VecField>& targets,
                                  const Transition& transition,
                                  const std::vector<Vec2>& points,
                                  double fd_step = 1e-6);
/// Same residual for an explicit list of planar fields (used for quotient checks).
double chart_equivalence_residual(const std::vector<std::function<Vec2(Vec2)>>& fields,
                                  const std::vector<VecField>& targets,
                                  const Transition& transition,
                                  const std::vector<Vec2>& points,
                                  double fd_step = 1e-6);

/// The classical pairing of restricted fields with canonical planar fields for
/// the four explicit changes of variables; `chart_name` in
/// {sl2_pos, sl2_neg, sl2_zero, so3}. Returns targets and the transition from
/// the leaf coordinates ((e1,e2) or (r,phi)) to (x,y).
struct EquivalenceData {
    std::vector<VecField> targets;
    Transition transition;
};
EquivalenceData equivalence_data(const std::string& chart_name, double k);

enum class Signature { Riemannian, Lorentzian };

struct MetricResult {
    std::array<std::array<double, 2>, 2> tensor;   // coefficient matrix in (e1,e2)
    std::array<std::array<double, 2>, 2> metric;   // its inverse
    double det;
    Signature signature;
};

/// Inverse of the Casimir tensor coefficient matrix in the (e1,e2) leaf
/// coordinates at an ambient point. Throws std::domain_error when the tensor
/// is degenerate at the point (e.g. the k = 0 sl2 leaf).
MetricResult metric_at(const CatalogEntry& algebra, double k, const VecN& ambient_point);

}  // namespace lieham
