#pragma once

// Head-drift dynamics during floating, linearized to a mass-spring-damper
// driven by a constant disturbance:
//
//     m x'' + c x' + k_eff x = d,   k_eff = k_torque * current - k_bias,
//
// from rest (x(0) = 0, x'(0) = 0). Positions in tracks, time in seconds.
// Positive k_eff restores the head toward the floating location; zero or
// negative k_eff lets the disturbance carry it away without bound.

#include <cstddef>
#include <vector>

namespace floatopt {

struct DriftParams {
    double mass = 1.0;         // m > 0
    double viscous = 0.0;      // c >= 0
    double k_bias = 0.0;       // flex-bias stiffness K_b
    double k_torque = 0.0;     // torque constant K_t
    double current = 0.0;      // bias-cancelling VCM current I
    double disturbance = 0.0;  // constant external push d
};

struct DriftTrace {
    std::vector<double> times;
    std::vector<double> positions;
    std::vector<double> velocities;
};

double effective_stiffness(const DriftParams& params);

// Closed-form x(t). Branches on the stiffness sign and the damping
// discriminant c^2 - 4 m k_eff: underdamped, critically damped, overdamped,
// zero stiffness (with and without damping), and negative stiffness
// (exponential growth). Unbounded growth is a valid return, including inf.
double drift_response(const DriftParams& params, double t);

// Fixed-step classical 4th-order integration of the same equation; the
// independent numerical check for drift_response. Samples every dt and
// throws "integration diverged" if the state leaves the finite range.
DriftTrace simulate_drift(const DriftParams& params, double t_end, double dt);

// Running maximum of x over [0, horizon]. Monotone regimes take the
// endpoint; the underdamped regime caps at the first overshoot peak.
double max_drift(const DriftParams& params, double horizon);

// Largest wake-up period that keeps the running drift below the clearance:
// sup { T : max_drift(T) < clearance }, found by bisection. Returns +inf
// when the all-time drift supremum never reaches the clearance.
double wakeup_period(const DriftParams& params, double clearance);

// Disturbance magnitude that makes x(horizon) equal target_drift, using
// linearity of the response in d. The disturbance field of params is
// ignored.
double fit_disturbance(const DriftParams& params, double horizon, double target_drift);

}  // namespace floatopt
