#pragma once

#include <string>
#include <vector>

#include "lieham/polyfield.hpp"

namespace lieham {

enum class ClassKind { P1, P2, P3, P5, I1, I4, I5, I8, I12, I14A, I14B, I16 };

/// A row of the planar VG-class table, with its parameters where applicable:
/// r for the parametric classes, and the exponent list for the I14 classes
/// (eta_i = exp(lambda_i * x); lambda_1 = 0 encodes eta_1 = 1 for I14B).
struct ClassLabel {
    ClassKind kind;
    int r = 0;
    std::vector<int> lambda;

    std::string str() const;
};

ClassLabel make_label(ClassKind kind, int r = 0, std::vector<int> lambda = {});
ClassLabel parse_label(const std::string& text);

struct PlanarClassRow {
    ClassLabel label;
    std::string algebra;        // e.g. "sl2 (type I)"
    std::vector<VecField> basis;
    std::string omega;          // symplectic-form density, display metadata only
};

/// The basis of vector fields of a planar class, on coordinates (x, y); the
/// I14 classes use the exponential symbol u = e^x.
PlanarClassRow planar_class_row(const ClassLabel& label);

}  // namespace lieham
