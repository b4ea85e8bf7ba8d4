#pragma once

#include <string>
#include <vector>

namespace wallosc::physical {

/// CODATA-2018 constants and the isotope masses used by the presets.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // kg
inline constexpr double electron_volt = 1.602176634e-19;   // J
inline constexpr double hydrogen_mass_u = 1.00784;
inline constexpr double deuterium_mass_u = 2.01410;
} // namespace constants

/// An adsorbed atom bound to a surface: harmonic well of force constant k
/// (N/m) centered a distance d (m) above the hard wall, atom mass m (kg).
struct AdsorptionSystem {
  double mass = 0.0;
  double force_constant = 0.0;
  double wall_distance = 0.0;
  std::string label;
};

/// The same system in oscillator units: length unit L = (hbar^2 / (k m))^{1/4},
/// frequency omega = sqrt(k/m), wall parameter q0 = d / L, energy unit
/// hbar*omega (J).
struct DimensionlessForm {
  double length_unit_L = 0.0;
  double omega = 0.0;
  double q0 = 0.0;
  double energy_unit = 0.0;
};

/// Ground-state energy of the walled oscillator for a physical system,
/// in oscillator units and in absolute units.
struct ZeroPointEnergy {
  double epsilon0 = 0.0;
  double E0_joule = 0.0;
  double E0_meV = 0.0;
};

/// Maps physical parameters to the dimensionless model.
DimensionlessForm dimensionless(const AdsorptionSystem& sys);

/// Solves for the ground state and converts to absolute units. Uses the
/// closed-form solver for q0 <= 4 and the finite-difference path beyond.
ZeroPointEnergy zero_point_energy(const AdsorptionSystem& sys);

/// Labels of the built-in presets, e.g. "H-Pd100".
const std::vector<std::string>& preset_labels();

/// Built-in preset by label; throws DomainError for unknown labels.
AdsorptionSystem preset(const std::string& label);

} // namespace wallosc::physical
