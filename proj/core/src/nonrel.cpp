#include "nck/nonrel.hpp"

#include "nck/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace nck::nonrel {

namespace {

double char_value(int m, Branch branch, double D_theta, double kappa, const mathieu::Options& opts) {
  return mathieu::char_value({m, branch, 4.0 * kappa * D_theta}, opts);
}

void check_angular(int m, Branch branch) {
  QuantumState{m, m, branch}.validate();
}

[[noreturn]] void throw_unbound(const QuantumState& s, const PotentialParams& p, double kappa,
                                double argument) {
  // The angular moment is to blame when the state would be bound without it.
  const double without_angular = static_cast<double>(s.m) * s.m + 2.0 * kappa * p.D_r;
  const Moment culprit = (p.D_theta > 0.0 && without_angular > 0.0) ? Moment::angular : Moment::radial;
  std::ostringstream msg;
  msg << "no bound state for n=" << s.n << " m=" << s.m << " " << to_string(s.branch)
      << " at D_r=" << p.D_r << " D_theta=" << p.D_theta << ": "
      << (culprit == Moment::angular ? "D_theta" : "D_r")
      << " is past its critical value (c/4 + 2D_r = " << argument << ")";
  throw NoBoundState(msg.str(), culprit);
}

} // namespace

double angular_eigenvalue(int m, Branch branch, double D_theta, DipoleCoupling coupling,
                          const mathieu::Options& opts) {
  check_angular(m, branch);
  return -0.25 * char_value(m, branch, D_theta, coupling_scale(coupling), opts);
}

double bound_state_argument(int m, Branch branch, const PotentialParams& params,
                            DipoleCoupling coupling, const mathieu::Options& opts) {
  check_angular(m, branch);
  const double kappa = coupling_scale(coupling);
  return 0.25 * char_value(m, branch, params.D_theta, kappa, opts) + 2.0 * kappa * params.D_r;
}

bool bound_state_exists(const QuantumState& state, const PotentialParams& params,
                        DipoleCoupling coupling, const mathieu::Options& opts) {
  state.validate();
  params.validate();
  return bound_state_argument(state.m, state.branch, params, coupling, opts) >= 0.0;
}

EnergyResult energy(const QuantumState& state, const PotentialParams& params,
                    DipoleCoupling coupling, const mathieu::Options& opts) {
  state.validate();
  params.validate();
  const double s = bound_state_argument(state.m, state.branch, params, coupling, opts);
  if (!(s >= 0.0)) throw_unbound(state, params, coupling_scale(coupling), s);
  const double denom = state.n_r() + 0.5 + std::sqrt(s);
  return EnergyResult{-2.0 * params.Z * params.Z / (denom * denom), Provenance::closed_form, 0, 0.0};
}

std::optional<double> critical_dtheta(int m, Branch branch, double D_r, DipoleCoupling coupling,
                                      const CriticalOptions& opts) {
  check_angular(m, branch);
  if (!std::isfinite(D_r)) throw DomainError("critical_dtheta: D_r must be finite");
  const double kappa = coupling_scale(coupling);
  auto g = [&](double d) { return char_value(m, branch, d, kappa, opts.mathieu) + 8.0 * kappa * D_r; };

  // Past p ~ (4m+1)²/2 the characteristic value only decreases, so a
  // negative value there has no further sign change beyond it.
  const double turn = (4.0 * m + 1.0) * (4.0 * m + 1.0) / (8.0 * kappa);
  double d_hi = std::min(opts.ceiling, std::max(1.0, turn));
  while (g(d_hi) > 0.0) {
    if (d_hi >= opts.ceiling) return std::nullopt;
    d_hi = std::min(opts.ceiling, 2.0 * d_hi);
  }

  const int n = std::max(opts.scan_points, 4);
  std::vector<double> xs(static_cast<std::size_t>(n) + 1), gs(xs.size());
  for (int i = 0; i <= n; ++i) {
    xs[static_cast<std::size_t>(i)] = d_hi * i / n;
    gs[static_cast<std::size_t>(i)] = g(xs[static_cast<std::size_t>(i)]);
  }

  auto bisect = [&](double lo, double hi) {
    while (hi - lo > opts.tolerance) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };

  for (std::size_t i = xs.size() - 1; i-- > 0;) {
    if (gs[i] > 0.0) return bisect(xs[i], xs[i + 1]);
  }

  // Nothing positive on the grid: look for a narrow hump around the grid maximum.
  std::size_t j = 0;
  for (std::size_t i = 1; i < gs.size(); ++i)
    if (gs[i] > gs[j]) j = i;
  // Saturated exactly at D_θ = 0 (m = 0, D_r = 0).
  if (j == 0 && std::abs(gs[0]) <= 1e-12) return 0.0;
  double a = xs[j > 0 ? j - 1 : 0];
  double b = xs[std::min(j + 1, xs.size() - 1)];
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double gc = g(c), gd = g(d);
  while (b - a > opts.tolerance) {
    if (gc > 0.0 || gd > 0.0) break;
    if (gc > gd) {
      b = d; d = c; gd = gc;
      c = b - invphi * (b - a); gc = g(c);
    } else {
      a = c; c = d; gc = gd;
      d = a + invphi * (b - a); gd = g(d);
    }
  }
  if (gd > 0.0) return bisect(d, xs[std::min(j + 1, xs.size() - 1)]);
  if (gc > 0.0) return bisect(c, xs[std::min(j + 1, xs.size() - 1)]);
  return std::nullopt;
}

double critical_dr(int m, Branch branch, double D_theta, DipoleCoupling coupling,
                   const mathieu::Options& opts) {
  check_angular(m, branch);
  const double kappa = coupling_scale(coupling);
  return -char_value(m, branch, D_theta, kappa, opts) / (8.0 * kappa);
}

RadialSolution radial_solution(const QuantumState& state, const PotentialParams& params,
                               DipoleCoupling coupling, const mathieu::Options& opts) {
  const double e = energy(state, params, coupling, opts).energy;
  const double s = bound_state_argument(state.m, state.branch, params, coupling, opts);
  return make_radial_solution(std::sqrt(-2.0 * e), 0.5 + std::sqrt(s), state.n_r());
}

Wavefunction::Wavefunction(const QuantumState& state, const PotentialParams& params,
                           DipoleCoupling coupling, const mathieu::Options& opts)
    : energy_(nonrel::energy(state, params, coupling, opts).energy),
      radial_(nonrel::radial_solution(state, params, coupling, opts)),
      angular_({state.m, state.branch, 4.0 * coupling_scale(coupling) * params.D_theta}, opts) {}

double wavefunction(const QuantumState& state, const PotentialParams& params, double r,
                    double theta, DipoleCoupling coupling) {
  if (!(r > 0.0)) throw DomainError("wavefunction: r must be positive");
  return Wavefunction(state, params, coupling)(r, theta);
}

MolecularKratzer kratzer_from_molecular(double d_e, double r_e) {
  if (!(d_e > 0.0) || !(r_e > 0.0))
    throw DomainError("kratzer_from_molecular: d_e and r_e must be positive");
  const double coulomb = -2.0 * d_e * r_e;
  return MolecularKratzer{coulomb, PotentialParams{-coulomb, d_e * r_e * r_e, 0.0}};
}

double potential(const PotentialParams& params, double r, double theta) noexcept {
  return -params.Z / r + (params.D_r + params.D_theta * std::cos(theta)) / (r * r);
}

} // namespace nck::nonrel
