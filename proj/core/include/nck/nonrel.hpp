#pragma once

// Closed-form Schrödinger spectrum for V(r,θ) = -Z/r + D_r/r² + D_θ cosθ/r²
// in Hartree units:
//
//   E(n,m) = -2 Z² (n - m + 1/2 + √(c_2m(4κD_θ)/4 + 2κD_r))^-2
//
// with κ the dipole coupling scale (1 for the bare Hamiltonian).

#include "nck/mathieu.hpp"
#include "nck/specfun.hpp"
#include "nck/types.hpp"

#include <optional>

namespace nck::nonrel {

/// E_θ = -c_2m(4κD_θ)/4.
double angular_eigenvalue(int m, Branch branch, double D_theta,
                          DipoleCoupling coupling = DipoleCoupling::bare,
                          const mathieu::Options& opts = {});

/// c_2m(4κD_θ)/4 + 2κD_r; bound states exist iff this is non-negative.
double bound_state_argument(int m, Branch branch, const PotentialParams& params,
                            DipoleCoupling coupling = DipoleCoupling::bare,
                            const mathieu::Options& opts = {});

bool bound_state_exists(const QuantumState& state, const PotentialParams& params,
                        DipoleCoupling coupling = DipoleCoupling::bare,
                        const mathieu::Options& opts = {});

/// Throws NoBoundState when the state is not bound.
EnergyResult energy(const QuantumState& state, const PotentialParams& params,
                    DipoleCoupling coupling = DipoleCoupling::bare,
                    const mathieu::Options& opts = {});

struct CriticalOptions {
  double ceiling = 100.0; // largest D_θ searched
  int scan_points = 256;
  double tolerance = 1e-9; // in D_θ
  mathieu::Options mathieu{};
};

/// Upper edge of the bound region in D_θ: the largest D_θ in [0, ceiling]
/// where c_2m(4κD_θ) + 8κD_r changes sign from positive to non-positive.
/// Returns 0 when the condition is saturated at D_θ = 0 and violated beyond,
/// and nullopt when it never holds or never fails below the ceiling.
std::optional<double> critical_dtheta(int m, Branch branch, double D_r,
                                      DipoleCoupling coupling = DipoleCoupling::bare,
                                      const CriticalOptions& opts = {});

/// D_r below which the state is unbound: -c_2m(4κD_θ)/(8κ).
double critical_dr(int m, Branch branch, double D_theta,
                   DipoleCoupling coupling = DipoleCoupling::bare,
                   const mathieu::Options& opts = {});

/// β = √(-2E), λ = 1/2 + √(c/4 + 2κD_r) and the normalization constant.
RadialSolution radial_solution(const QuantumState& state, const PotentialParams& params,
                               DipoleCoupling coupling = DipoleCoupling::bare,
                               const mathieu::Options& opts = {});

/// Normalized ψ(r,θ) = R(r) Θ(θ), built once and evaluated many times.
class Wavefunction {
public:
  Wavefunction(const QuantumState& state, const PotentialParams& params,
               DipoleCoupling coupling = DipoleCoupling::bare,
               const mathieu::Options& opts = {});

  double operator()(double r, double theta) const { return radial_(r) * angular_(theta); }

  double radial(double r) const { return radial_(r); }
  double angular(double theta) const noexcept { return angular_(theta); }

  const RadialSolution& radial_solution() const noexcept { return radial_; }
  const mathieu::AngularFunction& angular_function() const noexcept { return angular_; }
  double energy() const noexcept { return energy_; }

  /// Coulomb strength of the radial equation that ψ solves exactly,
  /// β(n_r + λ) = 2Z for the closed-form spectrum above.
  double coulomb_strength() const noexcept {
    return radial_.beta * (radial_.n_r + radial_.lambda);
  }

private:
  double energy_;
  RadialSolution radial_;
  mathieu::AngularFunction angular_;
};

double wavefunction(const QuantumState& state, const PotentialParams& params, double r,
                    double theta, DipoleCoupling coupling = DipoleCoupling::bare);

/// Kratzer molecular potential d_e (r_e²/r² - 2r_e/r) written in terms of
/// PotentialParams: Z = 2 d_e r_e, D_r = d_e r_e², D_θ = 0.
struct MolecularKratzer {
  double coulomb_coeff; // -2 d_e r_e
  PotentialParams params;
};

MolecularKratzer kratzer_from_molecular(double d_e, double r_e);

/// V(r,θ) for the given parameters.
double potential(const PotentialParams& params, double r, double theta) noexcept;

} // namespace nck::nonrel
