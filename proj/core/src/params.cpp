#include "levicool/params.hpp"

#include <cmath>
#include <sstream>

namespace levicool {

using consts::epsilon0;
using consts::hbar;
using consts::pi;
using consts::speed_of_light;

MaterialSpec MaterialSpec::from_density(double epsilon, double radius, double density) {
    if (density <= 0.0) throw ValidationError("material density must be positive");
    const double volume = 4.0 / 3.0 * pi * radius * radius * radius;
    return MaterialSpec{epsilon, radius, density * volume};
}

void MaterialSpec::validate() const {
    if (!(epsilon > 1.0))
        throw ValidationError("relative dielectric constant must exceed 1 (got " +
                              std::to_string(epsilon) + ")");
    if (!(radius > 0.0)) throw ValidationError("particle radius must be positive");
    if (!(mass > 0.0)) throw ValidationError("particle mass must be positive");
}

void LaserSpec::validate() const {
    if (!(wavelength > 0.0)) throw ValidationError("laser wavelength must be positive");
    if (!(power > 0.0)) throw ValidationError("laser power must be positive");
    if (!(numerical_aperture > 0.0) || numerical_aperture > 1.0)
        throw ValidationError("numerical aperture must lie in (0,1]");
}

double zeta(Axis axis) {
    switch (axis) {
        case Axis::X:
        case Axis::Y: return 2.0 / 5.0;
        case Axis::Z: return 1.0 / 5.0;
    }
    throw ValidationError("unknown axis");
}

const char* axis_name(Axis axis) {
    switch (axis) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        case Axis::Z: return "z";
    }
    return "?";
}

Axis axis_from_name(const std::string& name) {
    if (name == "x" || name == "X") return Axis::X;
    if (name == "y" || name == "Y") return Axis::Y;
    if (name == "z" || name == "Z") return Axis::Z;
    throw ValidationError("axis must be one of x, y, z (got '" + name + "')");
}

const char* scheme_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::None: return "none";
        case SchemeKind::Force: return "force";
        case SchemeKind::Parametric: return "parametric";
    }
    return "?";
}

TrapDerivation derive_trap(const MaterialSpec& material, const LaserSpec& laser) {
    material.validate();
    laser.validate();

    TrapDerivation out;
    out.material = material;
    out.laser = laser;

    const double eps = material.epsilon;
    const double R = material.radius;
    const double m = material.mass;
    const double lam = laser.wavelength;
    const double k0 = 2.0 * pi / lam;

    out.alpha = 4.0 * pi * epsilon0 * R * R * R * (eps - 1.0) / (eps + 2.0);
    out.w0 = lam / (pi * laser.numerical_aperture);
    out.y0 = pi * out.w0 * out.w0 / lam;

    const double I0 = 2.0 * laser.power / (pi * out.w0 * out.w0);
    out.E0 = std::sqrt(2.0 * I0 / (speed_of_light * epsilon0));
    out.photon_flux = I0 / (hbar * speed_of_light * k0);

    const double omega_xz = std::sqrt(out.alpha / m) * out.E0 / out.w0;
    const double omega_y = std::sqrt(out.alpha / (2.0 * m)) * out.E0 / out.y0;

    // isotropic part of the recoil heating rate, Edot/zeta
    const double k2a = k0 * k0 * out.alpha / (4.0 * pi * epsilon0);
    const double edot_iso = 8.0 * pi * out.photon_flux / 3.0 * k2a * k2a *
                            hbar * hbar * k0 * k0 / (2.0 * m);

    for (int i = 0; i < 3; ++i) {
        const Axis ax = static_cast<Axis>(i);
        AxisDerivation& d = out.axes[i];
        d.omega = (ax == Axis::Y) ? omega_y : omega_xz;
        d.E_dot = zeta(ax) * edot_iso;
        d.kappa = d.E_dot * m / (hbar * hbar);
        d.delta_n = 2.0 * pi * d.E_dot / (hbar * d.omega * d.omega);
        d.a0 = std::sqrt(hbar / (2.0 * m * d.omega));
        if (!std::isfinite(d.omega) || !(d.omega > 0.0) || !std::isfinite(d.E_dot))
            throw ValidationError("trap derivation produced a non-finite quantity");
    }
    return out;
}

double shot_noise_rate(const TrapDerivation& trap, Axis axis) {
    return trap.axis(axis).E_dot;
}

double delta_n(const TrapDerivation& trap, Axis axis) {
    return trap.axis(axis).delta_n;
}

double delta_n_closed_form(const MaterialSpec& material, const LaserSpec& laser, Axis axis) {
    material.validate();
    laser.validate();
    const double k0 = 2.0 * pi / laser.wavelength;
    const double w0 = laser.wavelength / (pi * laser.numerical_aperture);
    const double R = material.radius;
    return zeta(axis) * (pi / 3.0) * (material.epsilon - 1.0) / (material.epsilon + 2.0) *
           R * R * R * w0 * w0 * std::pow(k0, 5);
}

ScaledParams scale_params(const TrapDerivation& trap, Axis axis, SchemeKind scheme,
                          double scheme_strength) {
    const AxisDerivation& d = trap.axis(axis);
    ScaledParams s;
    s.scheme = scheme;
    switch (scheme) {
        case SchemeKind::Force: s.strength = scheme_strength / d.omega; break;
        case SchemeKind::Parametric:
            s.strength = hbar * scheme_strength / (2.0 * trap.material.mass);
            break;
        case SchemeKind::None: s.strength = 0.0; break;
    }
    s.E_dot_tilde = 2.0 * d.E_dot / (hbar * d.omega * d.omega);
    s.delta_n = pi * s.E_dot_tilde;
    s.a0 = d.a0;
    return s;
}

} // namespace levicool
