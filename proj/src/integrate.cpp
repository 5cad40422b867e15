#include "lieham/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace lieham {

double CoefficientSpec::operator()(double t) const {
    if (const auto* c = std::get_if<Constant>(&desc)) return c->value;
    if (const auto* p = std::get_if<PolyInT>(&desc)) {
        double acc = 0.0;
        for (std::size_t i = p->coeffs.size(); i-- > 0;) acc = acc * t + p->coeffs[i];
        return acc;
    }
    const auto& ts = std::get<TrigSum>(desc);
    double acc = 0.0;
    for (const auto& term : ts.terms)
        acc += term.a * std::cos(term.omega * t) + term.b * std::sin(term.omega * t);
    return acc;
}

std::vector<double> TDSystem::rhs(double t, const std::vector<double>& x) const {
    std::vector<double> out(dim, 0.0);
    for (std::size_t a = 0; a < fields.size(); ++a) {
        double b = coeffs[a](t);
        if (b == 0.0) continue;
        std::vector<double> v = fields[a](x);
        for (int i = 0; i < dim; ++i) out[i] += b * v[i];
    }
    return out;
}

FieldFn field_fn(const VecField& X) {
    return [X](const std::vector<double>& p) { return evaluate(X, p); };
}

std::vector<CoeffFn> to_fns(const std::vector<CoefficientSpec>& specs) {
    std::vector<CoeffFn> out;
    for (const auto& s : specs) out.push_back([s](double t) { return s(t); });
    return out;
}

TDSystem make_system(const std::vector<VecField>& fields, std::vector<CoeffFn> coeffs) {
    if (fields.size() != coeffs.size())
        throw std::invalid_argument("make_system: fields/coefficients length mismatch");
    TDSystem sys;
    sys.dim = fields.empty() ? 0 : fields.front().sp.ncoords();
    for (const auto& f : fields) {
        if (f.sp.ncoords() != sys.dim) throw std::invalid_argument("make_system: dim mismatch");
        sys.fields.push_back(field_fn(f));
    }
    sys.coeffs = std::move(coeffs);
    return sys;
}

TDSystem make_system(const std::vector<VecField>& fields, const std::vector<CoefficientSpec>& coeffs) {
    return make_system(fields, to_fns(coeffs));
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double A71 = 35.0 / 384, A73 = 500.0 / 1113, A74 = 125.0 / 192, A75 = -2187.0 / 6784,
                 A76 = 11.0 / 84;
// error coefficients b5 - b4
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                 E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;
// dense-output coefficients
constexpr double D1 = -12715105075.0 / 11282082432.0;
constexpr double D3 = 87487479700.0 / 32700410799.0;
constexpr double D4 = -10690763975.0 / 1880347072.0;
constexpr double D5 = 701980252875.0 / 199316789632.0;
constexpr double D6 = -1453857185.0 / 822651844.0;
constexpr double D7 = 69997945.0 / 29380423.0;

struct StepResult {
    std::vector<double> y1;
    std::vector<double> k1, k7;          // FSAL pair
    std::vector<double> rc3, rc4, rc5;   // dense-output contributions
    double err = 0.0;                    // scaled error estimate
};

class Stepper {
public:
    Stepper(const TDSystem& sys, double tol) : sys_(sys), tol_(tol) {}

    StepResult step(double t, const std::vector<double>& y, double h,
                    const std::vector<double>* k1_reuse) const {
        const int n = sys_.dim;
        std::vector<double> k1 = k1_reuse ? *k1_reuse : sys_.rhs(t, y);
        auto at = [&](const std::vector<double>& base, std::initializer_list<std::pair<double, const std::vector<double>*>> terms,
                      double hh) {
            std::vector<double> out = base;
            for (const auto& [c, k] : terms)
                for (int i = 0; i < n; ++i) out[i] += hh * c * (*k)[i];
            return out;
        };
        std::vector<double> k2 = sys_.rhs(t + C2 * h, at(y, {{A21, &k1}}, h));
        std::vector<double> k3 = sys_.rhs(t + C3 * h, at(y, {{A31, &k1}, {A32, &k2}}, h));
        std::vector<double> k4 = sys_.rhs(t + C4 * h, at(y, {{A41, &k1}, {A42, &k2}, {A43, &k3}}, h));
        std::vector<double> k5 =
            sys_.rhs(t + C5 * h, at(y, {{A51, &k1}, {A52, &k2}, {A53, &k3}, {A54, &k4}}, h));
        std::vector<double> k6 = sys_.rhs(
            t + h, at(y, {{A61, &k1}, {A62, &k2}, {A63, &k3}, {A64, &k4}, {A65, &k5}}, h));
        StepResult r;
        r.y1 = at(y, {{A71, &k1}, {A73, &k3}, {A74, &k4}, {A75, &k5}, {A76, &k6}}, h);
        r.k7 = sys_.rhs(t + h, r.y1);
        r.k1 = std::move(k1);

        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            double e = h * (E1 * r.k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] +
                            E7 * r.k7[i]);
            double scale = std::max(tol_ + tol_ * std::max(std::abs(y[i]), std::abs(r.y1[i])), 1e-12);
            err = std::max(err, std::abs(e) / scale);
        }
        r.err = err;

        r.rc3.assign(n, 0.0);
        r.rc4.assign(n, 0.0);
        r.rc5.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            double dy = r.y1[i] - y[i];
            r.rc3[i] = h * r.k1[i] - dy;
            r.rc4[i] = dy - h * r.k7[i] - r.rc3[i];
            r.rc5[i] = h * (D1 * r.k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] +
                            D7 * r.k7[i]);
        }
        return r;
    }

private:
    const TDSystem& sys_;
    double tol_;
};

std::vector<double> dense_eval(const std::vector<double>& y0, const StepResult& r, double theta) {
    const std::size_t n = y0.size();
    std::vector<double> out(n);
    double th1 = 1.0 - theta;
    for (std::size_t i = 0; i < n; ++i) {
        double dy = r.y1[i] - y0[i];
        out[i] = y0[i] + theta * (dy + th1 * (r.rc3[i] + theta * (r.rc4[i] + th1 * r.rc5[i])));
    }
    return out;
}

void check_finite(const std::vector<double>& y, double t) {
    for (double v : y)
        if (!std::isfinite(v)) throw IntegrationError("non-finite state", t);
}

}  // namespace

Trajectory integrate(const TDSystem& sys, const std::vector<double>& x0,
                     double t0, double t1, double tol, const IntegrateOptions& opts) {
    if (!(tol > 0)) throw std::invalid_argument("integrate: tol must be positive");
    if (t1 == t0) throw std::invalid_argument("integrate: empty time span");
    if (static_cast<int>(x0.size()) != sys.dim)
        throw std::invalid_argument("integrate: initial state dimension mismatch");
    check_finite(x0, t0);

    const double dir = t1 > t0 ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    Stepper stepper(sys, tol);
    Trajectory traj;

    const bool sampling = !opts.sample_times.empty();
    std::size_t next_sample = 0;
    auto emit = [&](double t, const std::vector<double>& y) {
        traj.times.push_back(t);
        traj.states.push_back(y);
    };
    if (!sampling) emit(t0, x0);

    double t = t0;
    std::vector<double> y = x0;
    std::vector<double> k1 = sys.rhs(t0, x0);
    double h = dir * std::min(span, std::max(1e-6, span / 100.0));
    const double hmin = std::max(span * 1e-14, 1e-300);

    while (true) {
        bool last = false;
        if (std::abs(t1 - t) <= std::abs(h)) {
            h = t1 - t;
            last = true;
        }
        StepResult r = stepper.step(t, y, h, &k1);
        if (traj.stats.steps + traj.stats.rejected > opts.max_steps)
            throw IntegrationError("step budget exhausted", t);
        if (!(r.err <= 1.0)) {  // rejects NaN/inf estimates too
            ++traj.stats.rejected;
            double shrink = std::isfinite(r.err)
                                ? std::max(0.2, opts.safety * std::pow(r.err, -0.2))
                                : 0.2;
            h *= shrink;
            if (std::abs(h) < hmin)
                throw IntegrationError("step-size underflow (blow-up)", t);
            continue;
        }
        check_finite(r.y1, t + h);
        ++traj.stats.steps;
        traj.stats.max_error_estimate = std::max(traj.stats.max_error_estimate, r.err);

        double t_new = last ? t1 : t + h;
        if (sampling) {
            while (next_sample < opts.sample_times.size()) {
                double ts = opts.sample_times[next_sample];
                if (dir * (ts - t) < 0) {  // before this step; only legal at t0
                    if (ts == t0) { emit(ts, y); ++next_sample; continue; }
                    throw std::invalid_argument("integrate: sample times must lie in the span");
                }
                if (dir * (ts - t_new) > 1e-14 * span) break;
                double theta = (ts - t) / h;
                theta = std::clamp(theta, 0.0, 1.0);
                emit(ts, dense_eval(y, r, theta));
                ++next_sample;
            }
        } else {
            emit(t_new, r.y1);
        }

        t = t_new;
        y = r.y1;
        k1 = r.k7;  // FSAL
        if (last) break;
        double grow = r.err == 0.0 ? 5.0
                                   : std::min(5.0, std::max(0.2, opts.safety * std::pow(r.err, -0.2)));
        h *= grow;
    }
    if (sampling && next_sample < opts.sample_times.size())
        throw std::invalid_argument("integrate: sample times must lie in the span");
    return traj;
}

Trajectory integrate_fixed(const TDSystem& sys, const std::vector<double>& x0,
                           double t0, double t1, long long nsteps) {
    if (nsteps <= 0) throw std::invalid_argument("integrate_fixed: nsteps must be positive");
    Stepper stepper(sys, 1.0);
    Trajectory traj;
    traj.times.push_back(t0);
    traj.states.push_back(x0);
    std::vector<double> y = x0;
    const double h = (t1 - t0) / static_cast<double>(nsteps);
    for (long long s = 0; s < nsteps; ++s) {
        double t = t0 + h * static_cast<double>(s);
        StepResult r = stepper.step(t, y, h, nullptr);
        check_finite(r.y1, t + h);
        y = r.y1;
        ++traj.stats.steps;
        traj.times.push_back(s + 1 == nsteps ? t1 : t + h);
        traj.states.push_back(y);
    }
    return traj;
}

double drift(const Trajectory& traj, const std::function<double(const std::vector<double>&)>& f) {
    if (traj.states.empty()) return 0.0;
    double f0 = f(traj.states.front());
    double worst = 0.0;
    for (const auto& s : traj.states) worst = std::max(worst, std::abs(f(s) - f0));
    return worst;
}

double drift(const Trajectory& traj, const Space& sp, const Polynomial& f) {
    return drift(traj, [&](const std::vector<double>& x) { return sp.eval(f, x); });
}

}  // namespace lieham
