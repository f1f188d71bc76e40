#pragma once

// Klein-Gordon / Dirac spectra under spin (S = U) and pseudo-spin (S = -U)
// symmetry. Both reduce to a Schrödinger-type problem whose angular and radial
// eigenvalue relations must agree at the energy E = E_total - c² (Hartree,
// c = 1/α). With x = Eα²:
//
//   spin:   E_θ = -c_2m(4(x+2)D_θ)/4
//           E_θ = 2(x+2)D_r - (n - m + 1/2 - Zα(x+2)/√(1-(x+1)²))²
//   pseudo: E_θ = -c_2m(4x D_θ)/4
//           E_θ = 2x D_r - (n - m + 1/2 - Zα x/√(1-(x+1)²))²

#include "nck/mathieu.hpp"
#include "nck/specfun.hpp"
#include "nck/types.hpp"

#include <optional>
#include <utility>

namespace nck::rel {

inline constexpr double fine_structure = 1.0 / 137.035999;

enum class SymmetryMode { spin, pseudospin };

std::string_view to_string(SymmetryMode m) noexcept;
std::optional<SymmetryMode> parse_mode(std::string_view s) noexcept;

struct RelEnergyResult {
  double energy = 0.0; // E_total - c², Hartree
  double residual = 0.0; // |radial relation - angular relation| at the root
  std::pair<double, double> bracket{0.0, 0.0};
  Provenance provenance = Provenance::root_found;
};

struct Options {
  double residual_tolerance = 1e-10;
  /// Pseudo-spin search window (Hartree).
  double window_lo = -200.0;
  double window_hi = 0.0;
  int scan_points = 2048;
  double ceiling = 100.0; // largest D_θ for critical searches
  mathieu::Options mathieu{1e-12, 4096};
};

/// Radial-relation minus angular-relation; zero at an eigenvalue.
double relation_mismatch(SymmetryMode mode, const QuantumState& state,
                         const PotentialParams& params, double alpha, double energy,
                         const mathieu::Options& opts = {});

/// Spin-symmetric energy on the branch n - m + 1/2 + √(-E_θ + 2(x+2)D_r) = Zα(x+2)/√(...),
/// the one that reduces to the closed form as α → 0.
/// Throws NoBoundState past the critical moments.
RelEnergyResult spin_energy(const QuantumState& state, const PotentialParams& params,
                            double alpha = fine_structure, const Options& opts = {});

/// Highest root of the pseudo-spin relations inside the window, or nullopt.
std::optional<RelEnergyResult> pseudospin_energy(const QuantumState& state,
                                                 const PotentialParams& params,
                                                 double alpha = fine_structure,
                                                 const Options& opts = {});

/// Second-order expansion in α²:
///   E = -2Z²/s² + 8Z⁴α²/s⁴,  s = n_r + 1/2 + √(c_2m(8D_θ)/4 + 4D_r).
RelEnergyResult expansion_energy(const QuantumState& state, const PotentialParams& params,
                                 double alpha = fine_structure,
                                 const mathieu::Options& opts = {});

/// β = √(-E(2 + Eα²)), λ = 1/2 + √(c_2m(4(Eα²+2)D_θ)/4 + 2(Eα²+2)D_r),
/// normalized with the same constant as the Schrödinger case.
RadialSolution rel_wavefunction_params(const QuantumState& state,
                                       const PotentialParams& params, double alpha,
                                       double energy, const mathieu::Options& opts = {});

/// D_θ at which the state stops having a root. nullopt if no transition
/// occurs below opts.ceiling.
std::optional<double> critical_dtheta_rel(const QuantumState& state, double D_r,
                                          double alpha = fine_structure,
                                          SymmetryMode mode = SymmetryMode::spin,
                                          const Options& opts = {});

} // namespace nck::rel
