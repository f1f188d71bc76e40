#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace nck {

/// Parity family of the angular factor: ce_2m (cosine) or se_2m (sine).
enum class Branch { cosine, sine };

std::string_view to_string(Branch b) noexcept;
std::optional<Branch> parse_branch(std::string_view s) noexcept;

/// Charge and dipole moments of V(r,θ) = -Z/r + D_r/r² + D_θ cosθ/r², Hartree units.
struct PotentialParams {
  double Z = 1.0;
  double D_r = 0.0;
  double D_theta = 0.0;

  /// Throws DomainError unless all fields are finite, Z > 0 and D_theta >= 0.
  void validate() const;
};

/// Quantum numbers of a bound state. n = n_r + m.
struct QuantumState {
  int n = 1;
  int m = 0;
  Branch branch = Branch::cosine;

  int n_r() const noexcept { return n - m; }

  static QuantumState from_radial(int n_r, int m, Branch branch) noexcept {
    return {n_r + m, m, branch};
  }

  /// Throws DomainError for m < 0, n < m, or a sine state with m = 0.
  void validate() const;
};

enum class Provenance { closed_form, root_found, expansion };

std::string_view to_string(Provenance p) noexcept;

struct EnergyResult {
  double energy = 0.0; // Hartree
  Provenance provenance = Provenance::closed_form;
  int iterations = 0;
  double residual = 0.0;
};

/// Multiplier applied to both dipole moments. `bare` is the Schrödinger
/// Hamiltonian; `doubled` is the scalar-plus-vector coupling of the
/// spin-symmetric limit, which is also the convention of the published
/// critical-moment table.
enum class DipoleCoupling { bare, doubled };

constexpr double coupling_scale(DipoleCoupling c) noexcept {
  return c == DipoleCoupling::doubled ? 2.0 : 1.0;
}

std::string_view to_string(DipoleCoupling c) noexcept;
std::optional<DipoleCoupling> parse_coupling(std::string_view s) noexcept;

} // namespace nck
