#pragma once

#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "lieham/polyfield.hpp"

namespace lieham {

/// t-dependent coefficient b(t), restricted to three reproducible descriptor
/// families at the config boundary (the library API also accepts callables).
struct CoefficientSpec {
    struct Constant { double value = 0.0; };
    struct PolyInT { std::vector<double> coeffs; };  // c0 + c1 t + ...
    struct TrigSum {
        struct Term { double a = 0.0, b = 0.0, omega = 1.0; };  // a cos(wt) + b sin(wt)
        std::vector<Term> terms;
    };
    std::variant<Constant, PolyInT, TrigSum> desc;

    static CoefficientSpec constant(double v) { return {Constant{v}}; }
    static CoefficientSpec poly(std::vector<double> c) { return {PolyInT{std::move(c)}}; }
    static CoefficientSpec trig(std::vector<TrigSum::Term> t) { return {TrigSum{std::move(t)}}; }

    double operator()(double t) const;
};

using FieldFn = std::function<std::vector<double>(const std::vector<double>&)>;
using CoeffFn = std::function<double(double)>;

/// X(t, x) = sum_a b_a(t) X_a(x).
struct TDSystem {
    int dim = 0;
    std::vector<FieldFn> fields;
    std::vector<CoeffFn> coeffs;

    std::vector<double> rhs(double t, const std::vector<double>& x) const;
};

TDSystem make_system(const std::vector<VecField>& fields, std::vector<CoeffFn> coeffs);
TDSystem make_system(const std::vector<VecField>& fields, const std::vector<CoefficientSpec>& coeffs);
FieldFn field_fn(const VecField& X);
std::vector<CoeffFn> to_fns(const std::vector<CoefficientSpec>& specs);

struct IntegrationStats {
    long long steps = 0;
    long long rejected = 0;
    double max_error_estimate = 0.0;  // max accepted scaled error estimate
};

struct Trajectory {
    std::vector<double> times;                // strictly monotone
    std::vector<std::vector<double>> states;
    IntegrationStats stats;
};

struct IntegrationError : std::runtime_error {
    double t;
    IntegrationError(const std::string& what, double t_) : std::runtime_error(what), t(t_) {}
};

struct IntegrateOptions {
    /// When non-empty, the trajectory is sampled at exactly these times via
    /// 4th-order dense output; otherwise every accepted step is stored.
    std::vector<double> sample_times;
    long long max_steps = 2000000;
    double safety = 0.9;
};

/// Adaptive Dormand-Prince 5(4) with componentwise scaled max-norm error
/// control (atol = rtol = tol, scale floored at 1e-12). Supports backward
/// spans (t1 < t0). Throws IntegrationError on step-size underflow (reporting
/// the blow-up time) or on non-finite state.
Trajectory integrate(const TDSystem& sys, const std::vector<double>& x0,
                     double t0, double t1, double tol,
                     const IntegrateOptions& opts = {});

/// Fixed-step variant of the same tableau (no error control); used by the
/// order-verification study.
Trajectory integrate_fixed(const TDSystem& sys, const std::vector<double>& x0,
                           double t0, double t1, long long nsteps);

/// max_t |f(x(t)) - f(x(t0))| over the stored samples.
double drift(const Trajectory& traj, const std::function<double(const std::vector<double>&)>& f);
/// Drift of a polynomial observable over a space's coordinates.
double drift(const Trajectory& traj, const Space& sp, const Polynomial& f);

}  // namespace lieham
