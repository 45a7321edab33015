#include "levicool/semiclassical.hpp"

#include <cmath>
#include <string>

namespace levicool {

using consts::pi;

double SystemParams::a0() const { return std::sqrt(hbar / (2.0 * mass * omega)); }
double SystemParams::kappa() const { return E_dot * mass / (hbar * hbar); }
double SystemParams::period() const { return 2.0 * pi / omega; }

void SystemParams::validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(omega > 0.0))
        throw ValidationError("system parameters must be positive");
    if (E_dot < 0.0) throw ValidationError("shot-noise rate cannot be negative");
    if (!(eta > 0.0) || eta > 1.0)
        throw ValidationError("measurement efficiency must lie in (0,1]");
}

SystemParams scaled_system(double eta, double delta_n) {
    if (delta_n < 0.0) throw ValidationError("delta_n cannot be negative");
    SystemParams s{2.0, 1.0, 1.0, delta_n / pi, eta};
    s.validate();
    return s;
}

SystemParams physical_system(const TrapDerivation& trap, Axis axis, double eta) {
    const AxisDerivation& d = trap.axis(axis);
    SystemParams s{consts::hbar, trap.material.mass, d.omega, d.E_dot, eta};
    s.validate();
    return s;
}

double physical_strength(const SystemParams& sys, SchemeKind scheme, double scaled_strength) {
    switch (scheme) {
        case SchemeKind::Force: return scaled_strength * sys.omega;
        case SchemeKind::Parametric: return scaled_strength * 2.0 * sys.mass / sys.hbar;
        case SchemeKind::None: return 0.0;
    }
    return 0.0;
}

SCState sc_initial_state(const SystemParams& sys, double n0, double phase) {
    const double amp = sys.a0() * std::sqrt(4.0 * n0 + 2.0);
    SCState s;
    s.x = amp * std::cos(phase);
    s.p = -sys.mass * sys.omega * amp * std::sin(phase);
    return s;
}

double sc_occupation(const SCState& state, const SystemParams& sys) {
    const double energy = state.p * state.p / (2.0 * sys.mass) +
                          0.5 * sys.mass * sys.omega * sys.omega * state.x * state.x;
    return energy / (sys.hbar * sys.omega) - 0.5;
}

SemiclassicalStepper::SemiclassicalStepper(const SystemParams& sys, const SchemeSpec& scheme,
                                           const IntegrationOptions& opts)
    : dt_(opts.dt),
      mass_(sys.mass),
      omega_(sys.omega),
      stiffness_(sys.mass * sys.omega * sys.omega),
      inv_mass_(1.0 / sys.mass),
      scheme_(scheme.kind),
      strength_phys_(physical_strength(sys, scheme.kind, scheme.strength)),
      filter_(opts.filter_mu, samples_per_quarter(sys.period(), opts.dt)) {
    sys.validate();
    if (!(opts.dt > 0.0)) throw ValidationError("dt must be positive");
    if (opts.dt > sys.period() / 500.0)
        throw ValidationError("dt must not exceed T/500");
    dp_ = std::sqrt(2.0 * sys.E_dot * opts.dt * sys.mass);
    if (opts.measurement_noise) {
        if (!(sys.E_dot > 0.0))
            throw ValidationError(
                "measurement noise requires E_dot > 0; disable it for noiseless runs");
        dx_ = sys.hbar / std::sqrt(8.0 * sys.eta * sys.E_dot * opts.dt * sys.mass);
        // classical uncertainty product: record sigma times kick sigma is
        // (1/sqrt(eta)) hbar/2 identically, independent of dt
        const double product = dx_ * dp_ * std::sqrt(sys.eta) / (sys.hbar / 2.0);
        if (std::abs(product - 1.0) > 1e-12)
            throw NumericalError("uncertainty product violated: " + std::to_string(product));
    } else {
        dx_ = 0.0;
    }
    guard_ = 1e60 * sys.a0();
}

void SemiclassicalStepper::advance(SCState& s, Rng& rng) {
    const double g_meas = rng.gaussian();
    last_record_ = s.x + g_meas * dx_;
    filter_.update(last_record_, dt_);
    const ControlSignal ctl = control(filter_, scheme_, strength_phys_, omega_, mass_);

    const double h = dt_;
    double x = s.x, p = s.p;
    if (scheme_ == SchemeKind::Parametric) {
        const double k = stiffness_ * ctl.stiffness_factor();
        const double k1x = p * inv_mass_, k1p = -k * x;
        const double k2x = (p + 0.5 * h * k1p) * inv_mass_, k2p = -k * (x + 0.5 * h * k1x);
        const double k3x = (p + 0.5 * h * k2p) * inv_mass_, k3p = -k * (x + 0.5 * h * k2x);
        const double k4x = (p + h * k3p) * inv_mass_, k4p = -k * (x + h * k3x);
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    } else {
        const double F = ctl.force();  // zero for SchemeKind::None
        const double k1x = p * inv_mass_, k1p = -stiffness_ * x + F;
        const double k2x = (p + 0.5 * h * k1p) * inv_mass_,
                     k2p = -stiffness_ * (x + 0.5 * h * k1x) + F;
        const double k3x = (p + 0.5 * h * k2p) * inv_mass_,
                     k3p = -stiffness_ * (x + 0.5 * h * k2x) + F;
        const double k4x = (p + h * k3p) * inv_mass_, k4p = -stiffness_ * (x + h * k3x) + F;
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    }

    p += rng.gaussian() * dp_;
    s.x = x;
    s.p = p;
    s.t += h;

    if (!std::isfinite(x) || !std::isfinite(p) || std::abs(x) > guard_)
        throw TrajectoryUnstable("trajectory diverged at t = " + std::to_string(s.t) +
                                 " (x = " + std::to_string(x) + ")");
}

} // namespace levicool
