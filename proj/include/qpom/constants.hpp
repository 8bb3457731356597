#ifndef QPOM_CONSTANTS_HPP
#define QPOM_CONSTANTS_HPP

namespace qpom::constants {

// 2018 CODATA values, SI units
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double epsilon0 = 8.8541878128e-12;   // F/m
inline constexpr double speed_of_light = 2.99792458e8; // m/s
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

} // namespace qpom::constants

#endif
