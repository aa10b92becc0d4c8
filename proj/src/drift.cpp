#include "floatopt/drift.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace floatopt {

namespace {

void check_params(const DriftParams& p) {
    if (!(p.mass > 0.0) || !std::isfinite(p.mass))
        throw std::invalid_argument("mass must be positive and finite");
    if (!(p.viscous >= 0.0) || !std::isfinite(p.viscous))
        throw std::invalid_argument("viscous coefficient must be nonnegative and finite");
    if (!std::isfinite(p.k_bias)) throw std::invalid_argument("k_bias must be finite");
    if (!std::isfinite(p.k_torque)) throw std::invalid_argument("k_torque must be finite");
    if (!std::isfinite(p.current)) throw std::invalid_argument("current must be finite");
    if (!std::isfinite(p.disturbance)) throw std::invalid_argument("disturbance must be finite");
}

double stiffness_of(const DriftParams& p) { return p.k_torque * p.current - p.k_bias; }

enum class Regime { Underdamped, Critical, TwoRealRoots, NoStiffness };

// Near-critical discriminants fall back to the critical branch: the exact
// two-root form loses all precision as the roots merge, while the critical
// form is their limit.
Regime classify(double m, double c, double k, double& disc) {
    if (k == 0.0) return Regime::NoStiffness;
    disc = c * c - 4.0 * m * k;
    const double scale = c * c + 4.0 * m * std::abs(k);
    if (std::abs(disc) <= 1e-12 * scale) return Regime::Critical;
    return disc < 0.0 ? Regime::Underdamped : Regime::TwoRealRoots;
}

double response(double m, double c, double k, double d, double t) {
    if (d == 0.0) return 0.0;
    double disc = 0.0;
    switch (classify(m, c, k, disc)) {
        case Regime::NoStiffness: {
            if (c == 0.0) return d * t * t / (2.0 * m);
            const double tau = m / c;
            return (d / c) * (t - tau * (1.0 - std::exp(-t / tau)));
        }
        case Regime::Critical: {
            const double alpha = c / (2.0 * m);
            return (d / k) * (1.0 - std::exp(-alpha * t) * (1.0 + alpha * t));
        }
        case Regime::Underdamped: {
            const double alpha = c / (2.0 * m);
            const double omega = std::sqrt(-disc) / (2.0 * m);
            return (d / k) * (1.0 - std::exp(-alpha * t) *
                                        (std::cos(omega * t) +
                                         (alpha / omega) * std::sin(omega * t)));
        }
        case Regime::TwoRealRoots: {
            const double root = std::sqrt(disc);
            // r1 rationalized to avoid cancellation when c^2 >> 4mk; it is
            // the growing root when k < 0.
            const double r1 = -2.0 * k / (c + root);
            const double r2 = -(c + root) / (2.0 * m);
            return (d / k) *
                   (1.0 - (r2 * std::exp(r1 * t) - r1 * std::exp(r2 * t)) / (r2 - r1));
        }
    }
    return 0.0;  // unreachable
}

}  // namespace

double effective_stiffness(const DriftParams& params) {
    check_params(params);
    return stiffness_of(params);
}

double drift_response(const DriftParams& params, double t) {
    check_params(params);
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("time must be nonnegative and finite");
    return response(params.mass, params.viscous, stiffness_of(params), params.disturbance, t);
}

DriftTrace simulate_drift(const DriftParams& params, double t_end, double dt) {
    check_params(params);
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw std::invalid_argument("t_end must be positive and finite");
    if (!(dt > 0.0) || dt > t_end)
        throw std::invalid_argument("dt must lie in (0, t_end]");
    const double m = params.mass;
    const double c = params.viscous;
    const double k = stiffness_of(params);
    const double d = params.disturbance;
    auto accel = [&](double x, double v) { return (d - c * v - k * x) / m; };

    const auto steps = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
    DriftTrace trace;
    trace.times.reserve(steps + 1);
    trace.positions.reserve(steps + 1);
    trace.velocities.reserve(steps + 1);
    double x = 0.0;
    double v = 0.0;
    trace.times.push_back(0.0);
    trace.positions.push_back(x);
    trace.velocities.push_back(v);
    for (std::size_t i = 1; i <= steps; ++i) {
        const double k1x = v;
        const double k1v = accel(x, v);
        const double k2x = v + 0.5 * dt * k1v;
        const double k2v = accel(x + 0.5 * dt * k1x, v + 0.5 * dt * k1v);
        const double k3x = v + 0.5 * dt * k2v;
        const double k3v = accel(x + 0.5 * dt * k2x, v + 0.5 * dt * k2v);
        const double k4x = v + dt * k3v;
        const double k4v = accel(x + dt * k3x, v + dt * k3v);
        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if (!std::isfinite(x) || !std::isfinite(v))
            throw std::runtime_error("integration diverged");
        trace.times.push_back(static_cast<double>(i) * dt);
        trace.positions.push_back(x);
        trace.velocities.push_back(v);
    }
    return trace;
}

double max_drift(const DriftParams& params, double horizon) {
    check_params(params);
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw std::invalid_argument("horizon must be positive and finite");
    const double d = params.disturbance;
    if (d <= 0.0) return 0.0;  // x(t) <= 0 throughout; the supremum is at rest
    const double m = params.mass;
    const double c = params.viscous;
    const double k = stiffness_of(params);
    double disc = 0.0;
    if (classify(m, c, k, disc) == Regime::Underdamped) {
        // x rises monotonically to its first peak at pi/omega and never
        // exceeds it again.
        const double omega = std::sqrt(-disc) / (2.0 * m);
        const double t_peak = std::numbers::pi / omega;
        return response(m, c, k, d, std::min(horizon, t_peak));
    }
    return response(m, c, k, d, horizon);  // monotone regimes
}

double wakeup_period(const DriftParams& params, double clearance) {
    check_params(params);
    if (!(clearance > 0.0) || !std::isfinite(clearance))
        throw std::invalid_argument("clearance must be positive and finite");
    const double inf = std::numeric_limits<double>::infinity();
    const double d = params.disturbance;
    if (d <= 0.0) return inf;
    const double m = params.mass;
    const double c = params.viscous;
    const double k = stiffness_of(params);

    double hi = 0.0;
    if (k > 0.0) {
        double disc = 0.0;
        if (classify(m, c, k, disc) == Regime::Underdamped) {
            const double omega = std::sqrt(-disc) / (2.0 * m);
            const double t_peak = std::numbers::pi / omega;
            if (response(m, c, k, d, t_peak) < clearance) return inf;
            hi = t_peak;
        } else {
            // Monotone approach to d/k: the supremum is never attained, so
            // a clearance at or above it is never reached.
            if (!(d / k > clearance)) return inf;
        }
    }
    if (hi == 0.0) {
        hi = 1.0;
        int guard = 0;
        while (max_drift(params, hi) < clearance) {
            hi *= 2.0;
            if (++guard > 2000) throw std::logic_error("wakeup bracket search failed");
        }
    }

    double lo = 0.0;  // max_drift(0) = 0 < clearance
    while (hi - lo > 1e-13 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (max_drift(params, mid) < clearance)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

double fit_disturbance(const DriftParams& params, double horizon, double target_drift) {
    check_params(params);
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw std::invalid_argument("horizon must be positive and finite");
    if (!(target_drift > 0.0) || !std::isfinite(target_drift))
        throw std::invalid_argument("target drift must be positive and finite");
    const double unit =
        response(params.mass, params.viscous, stiffness_of(params), 1.0, horizon);
    if (!(unit > 0.0) || !std::isfinite(unit))
        throw std::invalid_argument("unit disturbance response vanishes at the given horizon");
    return target_drift / unit;
}

}  // namespace floatopt
