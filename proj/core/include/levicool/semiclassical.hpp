#ifndef LEVICOOL_SEMICLASSICAL_HPP
#define LEVICOOL_SEMICLASSICAL_HPP

#include "levicool/feedback.hpp"
#include "levicool/params.hpp"
#include "levicool/rng.hpp"

namespace levicool {

// Everything a single-axis stepper needs. Physical runs take CODATA hbar
// and trap-derived values; the scaled equations are the same system with
// hbar = 2, mass = 1, omega = 1, for which position is x/a0, momentum is
// p/(m omega a0) and time is omega t.
struct SystemParams {
    double hbar;
    double mass;
    double omega;
    double E_dot;  // shot-noise heating rate, W
    double eta;    // measurement efficiency in (0, 1]

    double a0() const;      // sqrt(hbar / (2 mass omega))
    double kappa() const;   // E_dot * mass / hbar^2
    double period() const;  // 2 pi / omega

    void validate() const;
};

SystemParams scaled_system(double eta, double delta_n);
SystemParams physical_system(const TrapDerivation& trap, Axis axis, double eta);

// gamma = strength * omega (force), chi = strength * 2 m / hbar (parametric)
double physical_strength(const SystemParams& sys, SchemeKind scheme, double scaled_strength);

struct SCState {
    double x = 0.0;
    double p = 0.0;
    double t = 0.0;
};

// Phase-space point of energy (n0 + 1/2) hbar omega at oscillation phase.
SCState sc_initial_state(const SystemParams& sys, double n0, double phase);

// E / (hbar omega) - 1/2 with E = p^2/2m + m omega^2 x^2 / 2
double sc_occupation(const SCState& state, const SystemParams& sys);

struct IntegrationOptions {
    double dt;
    double filter_mu;  // EMA time constant, same time units as dt
    bool measurement_noise = true;
};

// One trajectory's stepper: measurement record, filter/control update, RK4
// drift with the control held fixed over the step, then the shot-noise
// momentum kick. Two standard-normal draws per step (record, kick), always
// consumed so streams stay aligned between configurations.
class SemiclassicalStepper {
public:
    SemiclassicalStepper(const SystemParams& sys, const SchemeSpec& scheme,
                         const IntegrationOptions& opts);

    // throws TrajectoryUnstable on non-finite or runaway state
    void advance(SCState& state, Rng& rng);

    const FilterState& filter() const { return filter_; }
    double last_record() const { return last_record_; }
    double dt() const { return dt_; }

    // record uncertainty Delta x (0 when measurement noise is disabled)
    double record_sigma() const { return dx_; }
    // kick amplitude Delta p
    double kick_sigma() const { return dp_; }

private:
    double dt_;
    double mass_, omega_, stiffness_;  // stiffness = m omega^2
    double inv_mass_;
    double dx_, dp_;
    double guard_;  // |x| above this is treated as blow-up
    SchemeKind scheme_;
    double strength_phys_;
    FilterState filter_;
    double last_record_ = 0.0;
};

} // namespace levicool

#endif
