#ifndef LEVICOOL_CONSTANTS_HPP
#define LEVICOOL_CONSTANTS_HPP

namespace levicool::consts {

// CODATA 2018 values, SI
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double speed_of_light = 2.99792458e8;  // m/s (exact)
inline constexpr double epsilon0 = 8.8541878128e-12;    // F/m

inline constexpr double pi = 3.14159265358979323846;

} // namespace levicool::consts

#endif
