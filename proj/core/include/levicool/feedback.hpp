#ifndef LEVICOOL_FEEDBACK_HPP
#define LEVICOOL_FEEDBACK_HPP

#include <cstddef>
#include <vector>

#include "levicool/errors.hpp"
#include "levicool/params.hpp"

namespace levicool {

// Exponentially weighted position estimate
//   x_m(t) = (1/mu) \int_-inf^t x_i(t') exp(-(t-t')/mu) dt'
// realized with the exact per-step decay factor exp(-dt/mu), plus a ring
// buffer holding the last quarter period of x_m samples for the delayed
// velocity estimate  xdot_m = -omega x_m(t - T/4).
class FilterState {
public:
    // samples_per_quarter = round(T / (4 dt)); must be >= 1
    FilterState(double mu, int samples_per_quarter);

    // Advance by one sample and return the updated x_m. The updated value
    // is pushed to the delay line.
    double update(double x_i, double dt);

    // -omega * x_m(t - T/4); zero until the delay line has filled once.
    double velocity_estimate(double omega) const;

    bool warmed_up() const { return count_ >= ring_.size(); }
    double ema() const { return ema_; }
    double mu() const { return mu_; }
    int samples_per_quarter() const { return static_cast<int>(ring_.size()); }

    // oldest stored sample; only meaningful once warmed up
    double delayed_sample() const { return ring_[widx_]; }

private:
    double mu_;
    double ema_ = 0.0;
    double cached_dt_ = -1.0;
    double cached_decay_ = 0.0;
    std::vector<double> ring_;
    std::size_t widx_ = 0;
    std::size_t count_ = 0;
};

// Checks that dt divides T/4 to within 1% and returns round(T/(4 dt)).
int samples_per_quarter(double period, double dt);

// Control output for one step, in physical units.
struct ControlSignal {
    SchemeKind kind = SchemeKind::None;
    double p_m = 0.0;         // measured momentum m*xdot_m (force scheme), kg m/s
    double gamma = 0.0;       // force feedback strength, 1/s
    double mod_factor = 0.0;  // chi * x_m * xdot_m (parametric scheme)
    double chi = 0.0;         // parametric feedback strength, s/m^2

    // force on the particle, -gamma p_m
    double force() const { return kind == SchemeKind::Force ? -gamma * p_m : 0.0; }
    // multiplier on the trap stiffness m omega^2
    double stiffness_factor() const {
        return kind == SchemeKind::Parametric ? 1.0 + mod_factor : 1.0;
    }
};

// Builds the control signal from the current filter state. Before warm-up
// (delay line not yet filled) the control is identically zero.
// strength is physical: gamma [1/s] for Force, chi [s/m^2] for Parametric.
ControlSignal control(const FilterState& filter, SchemeKind scheme, double strength,
                      double omega, double mass);

} // namespace levicool

#endif
