#ifndef LEVICOOL_PARAMS_HPP
#define LEVICOOL_PARAMS_HPP

#include <array>
#include <string>

#include "levicool/constants.hpp"
#include "levicool/errors.hpp"

namespace levicool {

// Trapped-particle material. Mass may be given directly or via a bulk
// density (kg/m^3), in which case m = rho * 4/3 pi R^3.
struct MaterialSpec {
    double epsilon;  // relative dielectric constant
    double radius;   // m
    double mass;     // kg

    static MaterialSpec from_density(double epsilon, double radius, double density);
    void validate() const;
};

struct LaserSpec {
    double wavelength;          // m
    double power;               // W
    double numerical_aperture;  // <= 1

    void validate() const;
};

enum class Axis { X = 0, Y = 1, Z = 2 };

// Dipole-radiation anisotropy of the photon recoil: 2/5 along the two
// transverse axes, 1/5 along the propagation axis.
double zeta(Axis axis);

const char* axis_name(Axis axis);
Axis axis_from_name(const std::string& name);

// Per-axis derived quantities.
struct AxisDerivation {
    double omega;    // rad/s
    double E_dot;    // W, includes the axis zeta factor
    double kappa;    // m^-2 s^-1, measurement/decoherence strength E_dot*m/hbar^2
    double delta_n;  // heating quanta per oscillation period, 2 pi E_dot / (hbar omega^2)
    double a0;       // ground-state length sqrt(hbar / (2 m omega)), m
};

struct TrapDerivation {
    MaterialSpec material;
    LaserSpec laser;
    double alpha;        // polarizability, C m^2 / V
    double w0;           // beam waist, m
    double y0;           // Rayleigh-type axial length, m
    double E0;           // focal field strength, V/m
    double photon_flux;  // photons m^-2 s^-1 at the focus
    std::array<AxisDerivation, 3> axes;

    const AxisDerivation& axis(Axis a) const { return axes[static_cast<int>(a)]; }
};

// Field and flux conventions: peak intensity of a Gaussian focus
// I0 = 2P/(pi w0^2), E0 = sqrt(2 I0 / (c eps0)), J_p = I0/(hbar c k0).
TrapDerivation derive_trap(const MaterialSpec& material, const LaserSpec& laser);

double shot_noise_rate(const TrapDerivation& trap, Axis axis);  // W

double delta_n(const TrapDerivation& trap, Axis axis);

// Power-independent closed form zeta * (pi/3) ((eps-1)/(eps+2)) R^3 w0^2 k0^5.
// Agrees with delta_n() to round-off under the field conventions above.
double delta_n_closed_form(const MaterialSpec& material, const LaserSpec& laser, Axis axis);

enum class SchemeKind { None, Force, Parametric };

const char* scheme_name(SchemeKind kind);

// Feedback scheme with its strength in scaled units:
// force   gamma_tilde = gamma / omega
// parametric chi_tilde = hbar chi / (2 m)
struct SchemeSpec {
    SchemeKind kind = SchemeKind::None;
    double strength = 0.0;
};

// Dimensionless parameter set for the scaled equations of motion.
struct ScaledParams {
    SchemeKind scheme;
    double strength;    // gamma_tilde or chi_tilde
    double E_dot_tilde; // 2 E_dot / (hbar omega^2) = delta_n / pi
    double delta_n;
    double a0;          // m, for mapping back to physical units
};

// scheme_strength is physical (gamma in 1/s, chi in s/m^2).
ScaledParams scale_params(const TrapDerivation& trap, Axis axis, SchemeKind scheme,
                          double scheme_strength);

} // namespace levicool

#endif
