#include "wallosc/physical.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "wallosc/errors.hpp"
#include "wallosc/oracle.hpp"
#include "wallosc/spectrum.hpp"

namespace wallosc::physical {

namespace {

void require_valid(const AdsorptionSystem& sys) {
  if (!(sys.mass > 0.0))
    throw DomainError("mass must be > 0 kg");
  if (!(sys.force_constant > 0.0))
    throw DomainError("force constant must be > 0 N/m");
  if (!(sys.wall_distance >= 0.0))
    throw DomainError("wall distance must be >= 0 m");
}

const std::vector<AdsorptionSystem>& presets() {
  // Hydrogen and deuterium on Pd(100): k = 15 N/m for both, equilibrium
  // heights 0.4 A and 0.45 A above the surface.
  static const std::vector<AdsorptionSystem> table = {
      {constants::hydrogen_mass_u * constants::atomic_mass_unit, 15.0, 0.4e-10,
       "H-Pd100"},
      {constants::deuterium_mass_u * constants::atomic_mass_unit, 15.0,
       0.45e-10, "D-Pd100"},
  };
  return table;
}

} // namespace

DimensionlessForm dimensionless(const AdsorptionSystem& sys) {
  require_valid(sys);
  DimensionlessForm form;
  form.length_unit_L = std::pow(
      constants::hbar * constants::hbar / (sys.force_constant * sys.mass),
      0.25);
  form.omega = std::sqrt(sys.force_constant / sys.mass);
  form.q0 = sys.wall_distance / form.length_unit_L;
  form.energy_unit = constants::hbar * form.omega;
  return form;
}

ZeroPointEnergy zero_point_energy(const AdsorptionSystem& sys) {
  const DimensionlessForm form = dimensionless(sys);
  const spectrum::WellConfig cfg{form.q0};
  ZeroPointEnergy result;
  if (form.q0 <= 4.0)
    result.epsilon0 = spectrum::eigenvalue(0, cfg).epsilon;
  else
    result.epsilon0 = oracle::fd_eigenvalues_richardson(cfg, 0).front();
  result.E0_joule = result.epsilon0 * form.energy_unit;
  result.E0_meV = result.E0_joule / constants::electron_volt * 1e3;
  return result;
}

const std::vector<std::string>& preset_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const auto& sys : presets())
      out.push_back(sys.label);
    return out;
  }();
  return labels;
}

AdsorptionSystem preset(const std::string& label) {
  for (const auto& sys : presets())
    if (sys.label == label)
      return sys;
  std::string known;
  for (const auto& sys : presets())
    known += (known.empty() ? "" : ", ") + sys.label;
  throw DomainError("unknown preset '" + label + "'; available: " + known);
}

} // namespace wallosc::physical
