#pragma once

// SI adapter. Internally hbar = k_B = 1: temperatures are k_B T / hbar in rad/s
// and a reduced force is (energy / hbar) per metre, so f[N] = hbar * f_reduced.

namespace oscforce::si {

inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double k_b = 1.380649e-23;         // J / K
inline constexpr double epsilon0 = 8.8541878128e-12;  // F / m
inline constexpr double c = 299792458.0;            // m / s

inline double temperature_to_reduced(double kelvin) { return k_b * kelvin / hbar; }
inline double temperature_from_reduced(double reduced) { return hbar * reduced / k_b; }

inline double force_to_si(double reduced) { return hbar * reduced; }
inline double force_from_si(double newtons) { return newtons / hbar; }

inline double energy_to_si(double reduced) { return hbar * reduced; }
inline double energy_from_si(double joules) { return joules / hbar; }

}  // namespace oscforce::si
