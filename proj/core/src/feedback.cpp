#include "levicool/feedback.hpp"

#include <cmath>
#include <string>

namespace levicool {

FilterState::FilterState(double mu, int samples_per_quarter) : mu_(mu) {
    if (!(mu > 0.0)) throw ValidationError("filter time constant mu must be positive");
    if (samples_per_quarter < 1)
        throw ValidationError("delay line needs at least one sample per quarter period");
    ring_.assign(static_cast<std::size_t>(samples_per_quarter), 0.0);
}

double FilterState::update(double x_i, double dt) {
    if (dt != cached_dt_) {
        cached_dt_ = dt;
        cached_decay_ = std::exp(-dt / mu_);
    }
    ema_ = ema_ * cached_decay_ + (1.0 - cached_decay_) * x_i;
    ring_[widx_] = ema_;
    if (++widx_ == ring_.size()) widx_ = 0;
    ++count_;
    return ema_;
}

double FilterState::velocity_estimate(double omega) const {
    if (!warmed_up()) return 0.0;
    // widx_ points at the oldest sample, written samples_per_quarter steps ago
    return -omega * ring_[widx_];
}

int samples_per_quarter(double period, double dt) {
    if (!(dt > 0.0)) throw ValidationError("dt must be positive");
    const double quarter = period / 4.0;
    const int q = static_cast<int>(std::lround(quarter / dt));
    if (q < 1 || std::abs(q * dt - quarter) > 0.01 * quarter)
        throw ValidationError("dt must divide a quarter period to within 1% (T/4 = " +
                              std::to_string(quarter) + ", dt = " + std::to_string(dt) + ")");
    return q;
}

ControlSignal control(const FilterState& filter, SchemeKind scheme, double strength,
                      double omega, double mass) {
    ControlSignal sig;
    sig.kind = scheme;
    if (scheme == SchemeKind::None || !filter.warmed_up()) {
        if (scheme == SchemeKind::Force) sig.gamma = strength;
        if (scheme == SchemeKind::Parametric) sig.chi = strength;
        return sig;
    }
    const double xdot_m = filter.velocity_estimate(omega);
    switch (scheme) {
        case SchemeKind::Force:
            sig.gamma = strength;
            sig.p_m = mass * xdot_m;
            break;
        case SchemeKind::Parametric:
            sig.chi = strength;
            sig.mod_factor = strength * filter.ema() * xdot_m;
            break;
        case SchemeKind::None: break;
    }
    return sig;
}

} // namespace levicool
