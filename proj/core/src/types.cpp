#include "nck/types.hpp"

#include "nck/error.hpp"

#include <cmath>

namespace nck {

std::string_view to_string(Branch b) noexcept { return b == Branch::cosine ? "cos" : "sin"; }

std::optional<Branch> parse_branch(std::string_view s) noexcept {
  if (s == "cos" || s == "cosine" || s == "a") return Branch::cosine;
  if (s == "sin" || s == "sine" || s == "b") return Branch::sine;
  return std::nullopt;
}

void PotentialParams::validate() const {
  if (!std::isfinite(Z) || !std::isfinite(D_r) || !std::isfinite(D_theta))
    throw DomainError("potential parameters must be finite");
  if (!(Z > 0.0)) throw DomainError("central charge Z must be positive");
  if (D_theta < 0.0) throw DomainError("D_theta must be non-negative");
}

void QuantumState::validate() const {
  if (m < 0) throw DomainError("m must be non-negative");
  if (n < m) throw DomainError("n must satisfy n >= m (n_r = n - m >= 0)");
  if (branch == Branch::sine && m == 0) throw DomainError("no sine state exists for m = 0");
}

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
  case Provenance::closed_form: return "closed_form";
  case Provenance::root_found: return "root_found";
  case Provenance::expansion: return "expansion";
  }
  return "unknown";
}

std::string_view to_string(DipoleCoupling c) noexcept {
  return c == DipoleCoupling::doubled ? "doubled" : "bare";
}

std::optional<DipoleCoupling> parse_coupling(std::string_view s) noexcept {
  if (s == "bare" || s == "1") return DipoleCoupling::bare;
  if (s == "doubled" || s == "2") return DipoleCoupling::doubled;
  return std::nullopt;
}

} // namespace nck
