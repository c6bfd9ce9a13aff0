#pragma once

#include <numbers>

namespace abfield::constants {

inline constexpr double pi = std::numbers::pi;

/// Vacuum permeability, fixed at the pre-2019 exact value 4π×10⁻⁷ [T·m/A].
inline constexpr double mu0 = 4.0 * pi * 1e-7;

// CODATA 2018
inline constexpr double elementary_charge = 1.602176634e-19;  // [C]
inline constexpr double hbar = 1.054571817e-34;               // [J·s]
inline constexpr double planck = 6.62607015e-34;              // [J·s]
inline constexpr double electron_mass = 9.1093837015e-31;     // [kg]

/// Signed electron charge (−e).
inline constexpr double electron_charge = -elementary_charge;

}  // namespace abfield::constants

namespace abfield {

/// Constant set threaded through phase and impulse computations so scenario
/// files can swap unit systems without touching the library defaults.
struct PhysicalConstants {
    double mu0 = constants::mu0;
    double elementary_charge = constants::elementary_charge;
    double hbar = constants::hbar;
    double planck = constants::planck;
    double electron_mass = constants::electron_mass;
};

}  // namespace abfield
