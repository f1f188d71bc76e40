#include "nck/relativistic.hpp"

#include "nck/error.hpp"
#include "nck/nonrel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nck::rel {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive and finite");
}

struct Bisected {
  double root;
  double lo;
  double hi;
};

// f(lo) and f(hi) must differ in sign (f(lo) >= 0 > f(hi) or the reverse).
template <class F>
Bisected bisect(F&& f, double lo, double hi, double flo, double rel_tol) {
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
    const double fm = f(mid);
    if ((fm >= 0.0) == (flo >= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), lo, hi};
}

struct Peak {
  double energy;  // argmax of the mismatch on the physical side
  double value;   // mismatch there
  double e_star;  // lower end of the physical side
  double e_top;   // upper end of the searched domain
};

// On E >= E*, where Zα(x+2)/√(-x(2+x)) >= n_r + 1/2, the spin mismatch rises
// to a single maximum and then falls to -∞ as E -> 0. A root on this side
// exists iff the maximum is non-negative.
Peak spin_peak(const QuantumState& s, const PotentialParams& p, double alpha, const Options& opts) {
  const double a2 = alpha * alpha;
  // F -> -inf as E -> 0; any point well above the spectrum works as the top
  const double e_top = -1e-12 * p.Z * p.Z;
  const double y_star = (s.n_r() + 0.5) / (p.Z * alpha);
  const double e_star = -2.0 / (1.0 + y_star * y_star) / a2;

  auto f = [&](double e) { return relation_mismatch(SymmetryMode::spin, s, p, alpha, e, opts.mathieu); };

  if (!(e_star < e_top)) return {e_top, f(e_top), e_star, e_top};

  // golden section in t = log(-E)
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::log(-e_top), b = std::log(-e_star);
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(-std::exp(c)), fd = f(-std::exp(d));
  while (b - a > 1e-11) {
    if (fc > fd) {
      a = d; d = c; fd = fc;
      c = b - invphi * (b - a); fc = f(-std::exp(c));
    } else {
      b = c; c = d; fc = fd;
      d = a + invphi * (b - a); fd = f(-std::exp(d));
    }
  }
  Peak peak{-std::exp(0.5 * (a + b)), 0.0, e_star, e_top};
  peak.value = f(peak.energy);
  const double at_star = f(e_star);
  if (at_star > peak.value) {
    peak.energy = e_star;
    peak.value = at_star;
  }
  return peak;
}

[[noreturn]] void throw_unbound(const QuantumState& s, const PotentialParams& p, std::string_view why) {
  const bool radial_ok = static_cast<double>(s.m) * s.m + 4.0 * p.D_r > 0.0;
  const Moment culprit = (p.D_theta > 0.0 && radial_ok) ? Moment::angular : Moment::radial;
  std::ostringstream msg;
  msg << "no relativistic bound state for n=" << s.n << " m=" << s.m << " " << to_string(s.branch)
      << " at D_r=" << p.D_r << " D_theta=" << p.D_theta << ": " << why;
  throw NoBoundState(msg.str(), culprit);
}

} // namespace

std::string_view to_string(SymmetryMode m) noexcept {
  return m == SymmetryMode::spin ? "spin" : "pseudospin";
}

std::optional<SymmetryMode> parse_mode(std::string_view s) noexcept {
  if (s == "spin") return SymmetryMode::spin;
  if (s == "pseudospin" || s == "pseudo-spin" || s == "pseudo") return SymmetryMode::pseudospin;
  return std::nullopt;
}

double relation_mismatch(SymmetryMode mode, const QuantumState& state, const PotentialParams& params,
                         double alpha, double energy, const mathieu::Options& opts) {
  const double x = energy * alpha * alpha;
  if (!(x > -2.0 && x < 0.0))
    throw DomainError("relation_mismatch: energy outside (-2/alpha^2, 0)");
  const double root = std::sqrt(-x * (2.0 + x)); // √(1 - (x+1)²)
  const double coupling = mode == SymmetryMode::spin ? x + 2.0 : x;
  const double za_y = params.Z * alpha * coupling / root;
  const double shift = state.n_r() + 0.5 - za_y;
  const double radial = 2.0 * coupling * params.D_r - shift * shift;
  const double angular =
      -0.25 * mathieu::char_value({state.m, state.branch, 4.0 * coupling * params.D_theta}, opts);
  return radial - angular;
}

RelEnergyResult spin_energy(const QuantumState& state, const PotentialParams& params, double alpha,
                            const Options& opts) {
  state.validate();
  params.validate();
  check_alpha(alpha);

  const Peak peak = spin_peak(state, params, alpha, opts);
  if (peak.value < 0.0) throw_unbound(state, params, "radial and angular relations do not intersect");

  auto f = [&](double e) {
    return relation_mismatch(SymmetryMode::spin, state, params, alpha, e, opts.mathieu);
  };
  const double f_top = f(peak.e_top);
  if (f_top >= 0.0)
    throw SolverFailure("spin_energy: no sign change below E = 0", peak.energy, peak.value);

  const auto b = bisect(f, peak.energy, peak.e_top, peak.value, 1e-13);
  RelEnergyResult out{b.root, std::abs(f(b.root)), {b.lo, b.hi}, Provenance::root_found};
  if (out.residual > opts.residual_tolerance) {
    std::ostringstream msg;
    msg << "spin_energy: residual " << out.residual << " above tolerance";
    throw SolverFailure(msg.str(), out.energy, out.residual);
  }
  return out;
}

std::optional<RelEnergyResult> pseudospin_energy(const QuantumState& state,
                                                 const PotentialParams& params, double alpha,
                                                 const Options& opts) {
  state.validate();
  params.validate();
  check_alpha(alpha);

  const double floor = -2.0 / (alpha * alpha);
  const double lo_w = std::max(opts.window_lo, floor);
  const double hi_w = std::min(opts.window_hi, 0.0);
  if (!(lo_w < hi_w)) return std::nullopt;
  const double eps = 1e-9 * (hi_w - lo_w);
  const double lo = lo_w + eps, hi = hi_w - eps;

  auto f = [&](double e) {
    return relation_mismatch(SymmetryMode::pseudospin, state, params, alpha, e, opts.mathieu);
  };

  const int n = std::max(opts.scan_points, 2);
  double e_prev = hi;
  double f_prev = f(hi);
  for (int i = n - 1; i >= 0; --i) {
    const double e = lo + (hi - lo) * i / n;
    const double fe = f(e);
    if ((fe >= 0.0) != (f_prev >= 0.0)) {
      const auto b = bisect(f, e, e_prev, fe, 1e-13);
      RelEnergyResult out{b.root, std::abs(f(b.root)), {b.lo, b.hi}, Provenance::root_found};
      return out;
    }
    e_prev = e;
    f_prev = fe;
  }
  return std::nullopt;
}

RelEnergyResult expansion_energy(const QuantumState& state, const PotentialParams& params,
                                 double alpha, const mathieu::Options& opts) {
  state.validate();
  params.validate();
  if (!(alpha >= 0.0)) throw DomainError("alpha must be non-negative");
  const double arg =
      nonrel::bound_state_argument(state.m, state.branch, params, DipoleCoupling::doubled, opts);
  if (!(arg >= 0.0)) throw_unbound(state, params, "c_2m(8 D_theta)/4 + 4 D_r is negative");
  const double s = state.n_r() + 0.5 + std::sqrt(arg);
  const double z2 = params.Z * params.Z;
  const double s2 = s * s;
  const double e = -2.0 * z2 / s2 + 8.0 * z2 * z2 * alpha * alpha / (s2 * s2);
  return RelEnergyResult{e, 0.0, {e, e}, Provenance::expansion};
}

RadialSolution rel_wavefunction_params(const QuantumState& state, const PotentialParams& params,
                                       double alpha, double energy, const mathieu::Options& opts) {
  state.validate();
  params.validate();
  check_alpha(alpha);
  const double x = energy * alpha * alpha;
  if (!(x > -2.0 && x < 0.0))
    throw DomainError("rel_wavefunction_params: energy outside (-2/alpha^2, 0)");
  const double u = x + 2.0;
  const double beta2 = -energy * u;
  const double lam_arg =
      0.25 * mathieu::char_value({state.m, state.branch, 4.0 * u * params.D_theta}, opts) +
      2.0 * u * params.D_r;
  if (!(beta2 > 0.0) || !(lam_arg >= 0.0))
    throw DomainError("rel_wavefunction_params: negative square-root argument");
  return make_radial_solution(std::sqrt(beta2), 0.5 + std::sqrt(lam_arg), state.n_r());
}

std::optional<double> critical_dtheta_rel(const QuantumState& state, double D_r, double alpha,
                                          SymmetryMode mode, const Options& opts) {
  state.validate();
  check_alpha(alpha);
  PotentialParams params{1.0, D_r, 0.0};

  if (mode == SymmetryMode::spin) {
    auto bound = [&](double d) {
      params.D_theta = d;
      return spin_peak(state, params, alpha, opts).value >= 0.0;
    };
    // The α -> 0 limit of the spin relations is the doubled-coupling
    // Schrödinger condition; the α² shift is tiny, so start from there.
    nonrel::CriticalOptions copts;
    copts.ceiling = opts.ceiling;
    copts.mathieu = opts.mathieu;
    const auto guess = nonrel::critical_dtheta(state.m, state.branch, D_r, DipoleCoupling::doubled, copts);
    if (!guess) return std::nullopt;
    if (*guess <= 0.0) return 0.0;

    double delta = 1e-4 * std::max(*guess, 1e-2);
    double lo = 0.0, hi = 0.0;
    bool found = false;
    for (int i = 0; i < 12 && !found; ++i, delta *= 4.0) {
      lo = std::max(0.0, *guess - delta);
      hi = std::min(opts.ceiling, *guess + delta);
      found = bound(lo) && !bound(hi);
    }
    if (!found) throw SolverFailure("critical_dtheta_rel: could not bracket the transition", *guess, delta);
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      (bound(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

  auto has_root = [&](double d) {
    params.D_theta = d;
    return pseudospin_energy(state, params, alpha, opts).has_value();
  };
  constexpr int grid = 100;
  bool prev = has_root(0.0);
  double prev_d = 0.0;
  for (int i = 1; i <= grid; ++i) {
    const double d = opts.ceiling * i / grid;
    const bool cur = has_root(d);
    if (prev && !cur) {
      double lo = prev_d, hi = d;
      while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (has_root(mid) ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev = cur;
    prev_d = d;
  }
  return std::nullopt;
}

} // namespace nck::rel
