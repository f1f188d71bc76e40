#include "nck/config.hpp"
#include "nck/range.hpp"

#include <nck/error.hpp>
#include <nck/nonrel.hpp>
#include <nck/relativistic.hpp>

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace nck::cli {

std::string_view to_string(Command c) noexcept {
  switch (c) {
  case Command::spectrum: return "spectrum";
  case Command::critical: return "critical";
  case Command::table1: return "table1";
  case Command::wavefunction: return "wavefunction";
  case Command::relativistic: return "relativistic";
  case Command::figure: return "figure";
  }
  return "?";
}

Resolved resolve(const RunConfig& cfg) {
  Resolved r;
  r.n = parse_int_range(cfg.n);
  r.m = parse_int_range(cfg.m);
  r.D_r = parse_range(cfg.D_r);
  r.D_theta = parse_range(cfg.D_theta);
  r.r = parse_range(cfg.r);
  r.theta = parse_range(cfg.theta);
  for (double d : r.D_theta)
    if (d < 0.0) throw std::invalid_argument("--Dtheta must be non-negative");
  for (double x : r.r)
    if (x < 0.0) throw std::invalid_argument("--r must be non-negative");
  if (cfg.branch == "both") {
    r.branches = {Branch::cosine, Branch::sine};
  } else if (auto b = parse_branch(cfg.branch)) {
    r.branches = {*b};
  } else {
    throw std::invalid_argument("--branch must be cos, sin or both");
  }
  const bool table = cfg.command == Command::critical || cfg.command == Command::table1;
  if (cfg.coupling) {
    const auto c = parse_coupling(*cfg.coupling);
    if (!c) throw std::invalid_argument("--coupling must be bare or doubled");
    r.coupling = *c;
  } else {
    r.coupling = table ? DipoleCoupling::doubled : DipoleCoupling::bare;
  }
  if (!(cfg.Z > 0.0) || !std::isfinite(cfg.Z)) throw std::invalid_argument("--Z must be positive");
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) throw std::invalid_argument("--alpha must be positive");
  if (!(cfg.window_lo < cfg.window_hi) || cfg.window_hi > 0.0)
    throw std::invalid_argument("--window must be lo:hi with lo < hi <= 0");
  if (!(cfg.ceiling > 0.0)) throw std::invalid_argument("--ceiling must be positive");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  return r;
}

namespace {

// Evaluates rows 0..count-1 on up to `threads` workers. Each row depends only
// on its index, so the output never depends on scheduling.
std::vector<Row> parallel_rows(std::size_t count, unsigned threads, const std::function<Row(std::size_t)>& make) {
  std::vector<Row> rows(count);
  std::vector<std::exception_ptr> errors(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < count; i += threads) {
      try {
        rows[i] = make(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

unsigned threads_of(const RunConfig& cfg) { return cfg.threads; }

mathieu::Options mathieu_opts(const RunConfig& cfg, double fallback) {
  mathieu::Options o;
  o.tolerance = cfg.tol.value_or(fallback);
  return o;
}

rel::Options rel_opts(const RunConfig& cfg) {
  rel::Options o;
  o.window_lo = cfg.window_lo;
  o.window_hi = cfg.window_hi;
  o.ceiling = cfg.ceiling;
  o.mathieu = mathieu_opts(cfg, o.mathieu.tolerance);
  return o;
}

rel::SymmetryMode mode_of(const RunConfig& cfg) {
  if (!cfg.mode) return rel::SymmetryMode::spin;
  const auto m = rel::parse_mode(*cfg.mode);
  if (!m) throw std::invalid_argument("--mode must be spin or pseudospin");
  return *m;
}

// Re-raises a solver failure with the grid point that caused it.
template <class F>
auto at_point(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const SolverFailure& e) {
    throw SolverFailure(where + ": " + e.what(), e.last_estimate(), e.est_error());
  }
}

std::string describe(int n, int m, Branch b, double D_r, double D_theta) {
  std::ostringstream s;
  s << "n=" << n << " m=" << m << " branch=" << to_string(b) << " D_r=" << format_real(D_r)
    << " D_theta=" << format_real(D_theta);
  return s.str();
}

struct StatePoint {
  int n, m;
  Branch branch;
  double D_r, D_theta;
};

std::vector<StatePoint> state_grid(const Resolved& g) {
  std::vector<StatePoint> pts;
  for (int n : g.n)
    for (int m : g.m) {
      if (m > n) continue;
      for (Branch b : g.branches) {
        if (b == Branch::sine && m == 0) continue;
        for (double dr : g.D_r)
          for (double dt : g.D_theta) pts.push_back({n, m, b, dr, dt});
      }
    }
  if (pts.empty()) throw std::invalid_argument("no valid (n, m, branch) combination in the grid");
  return pts;
}

Table spectrum(const RunConfig& cfg, const Resolved& g) {
  const auto pts = state_grid(g);
  const auto mopts = mathieu_opts(cfg, mathieu::Options{}.tolerance);
  Table t{{"n", "m", "branch", "D_r", "D_theta", "E", "status"}, {}};
  t.rows = parallel_rows(pts.size(), threads_of(cfg), [&](std::size_t i) {
    const auto& p = pts[i];
    Row row{static_cast<long long>(p.n), static_cast<long long>(p.m), std::string(to_string(p.branch)), p.D_r,
            p.D_theta, std::monostate{}, std::string("ok")};
    at_point(describe(p.n, p.m, p.branch, p.D_r, p.D_theta), [&] {
      try {
        row[5] = nonrel::energy({p.n, p.m, p.branch}, {cfg.Z, p.D_r, p.D_theta}, g.coupling, mopts).energy;
      } catch (const NoBoundState&) {
        row[6] = std::string("unbound");
      }
      return 0;
    });
    return row;
  });
  return t;
}

struct CriticalPoint {
  int n, m;
  Branch branch;
  double D_r;
};

Table critical(const RunConfig& cfg, const Resolved& g) {
  const bool relativistic = cfg.mode.has_value();
  std::vector<CriticalPoint> pts;
  for (int n : relativistic ? g.n : std::vector<int>{0})
    for (int m : g.m) {
      if (relativistic && m > n) continue;
      for (Branch b : g.branches) {
        if (b == Branch::sine && m == 0) continue;
        for (double dr : g.D_r) pts.push_back({n, m, b, dr});
      }
    }
  if (pts.empty()) throw std::invalid_argument("no valid (m, branch) combination in the grid");

  Table t;
  if (relativistic) {
    t.columns = {"n", "m", "branch", "mode", "D_r", "D_theta_crit", "status"};
  } else {
    t.columns = {"m", "branch", "D_r", "D_theta_crit", "status"};
  }
  const auto mode = mode_of(cfg);
  const auto ropts = rel_opts(cfg);
  nonrel::CriticalOptions copts;
  copts.ceiling = cfg.ceiling;
  copts.mathieu = mathieu_opts(cfg, copts.mathieu.tolerance);
  if (cfg.tol) copts.tolerance = *cfg.tol;

  t.rows = parallel_rows(pts.size(), threads_of(cfg), [&](std::size_t i) {
    const auto& p = pts[i];
    const std::optional<double> v = at_point(describe(p.n, p.m, p.branch, p.D_r, 0.0), [&] {
      if (relativistic) return rel::critical_dtheta_rel({p.n, p.m, p.branch}, p.D_r, cfg.alpha, mode, ropts);
      return nonrel::critical_dtheta(p.m, p.branch, p.D_r, g.coupling, copts);
    });
    Row row;
    if (relativistic) row = {static_cast<long long>(p.n), static_cast<long long>(p.m),
                             std::string(to_string(p.branch)), std::string(rel::to_string(mode))};
    else row = {static_cast<long long>(p.m), std::string(to_string(p.branch))};
    row.push_back(p.D_r);
    row.push_back(v ? Cell{*v} : Cell{});
    row.push_back(std::string(v ? "ok" : "none"));
    return row;
  });
  return t;
}

Table table1(const RunConfig& cfg, const Resolved& g) {
  if (g.branches.size() != 1) throw std::invalid_argument("table1 needs a single --branch");
  if (cfg.mode) throw std::invalid_argument("table1 does not take --mode");
  RunConfig long_cfg = cfg;
  long_cfg.command = Command::critical;
  const Table flat = critical(long_cfg, g);

  Table t;
  t.columns.push_back("D_r");
  std::vector<int> ms;
  for (int m : g.m)
    if (!(g.branches[0] == Branch::sine && m == 0)) ms.push_back(m);
  for (int m : ms) t.columns.push_back("m" + std::to_string(m));
  // critical() emits m-major order: row index = im * |D_r| + ir
  for (std::size_t ir = 0; ir < g.D_r.size(); ++ir) {
    Row row{g.D_r[ir]};
    for (std::size_t im = 0; im < ms.size(); ++im) row.push_back(flat.rows[im * g.D_r.size() + ir][3]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table wavefunction(const RunConfig& cfg, const Resolved& g) {
  if (g.n.size() != 1 || g.m.size() != 1 || g.branches.size() != 1 || g.D_r.size() != 1 ||
      g.D_theta.size() != 1)
    throw std::invalid_argument("wavefunction takes single values for --n --m --branch --Dr --Dtheta");
  const QuantumState s{g.n[0], g.m[0], g.branches[0]};
  s.validate();
  const PotentialParams p{cfg.Z, g.D_r[0], g.D_theta[0]};

  std::optional<nonrel::Wavefunction> psi;
  at_point(describe(s.n, s.m, s.branch, p.D_r, p.D_theta), [&] {
    try {
      psi.emplace(s, p, g.coupling, mathieu_opts(cfg, mathieu::Options{}.tolerance));
    } catch (const NoBoundState&) {
    }
    return 0;
  });

  Table t{{"r", "theta", "psi", "status"}, {}};
  const std::size_t nt = g.theta.size();
  t.rows = parallel_rows(g.r.size() * nt, threads_of(cfg), [&](std::size_t i) {
    const double r = g.r[i / nt], th = g.theta[i % nt];
    if (!psi) return Row{r, th, std::monostate{}, std::string("unbound")};
    return Row{r, th, (*psi)(r, th), std::string("ok")};
  });
  return t;
}

Table relativistic(const RunConfig& cfg, const Resolved& g) {
  const auto pts = state_grid(g);
  const auto mode = mode_of(cfg);
  const auto opts = rel_opts(cfg);
  Table t{{"n", "m", "branch", "mode", "D_r", "D_theta", "E_root", "E_expansion", "residual", "status"}, {}};
  t.rows = parallel_rows(pts.size(), threads_of(cfg), [&](std::size_t i) {
    const auto& p = pts[i];
    const QuantumState s{p.n, p.m, p.branch};
    const PotentialParams params{cfg.Z, p.D_r, p.D_theta};
    Row row{static_cast<long long>(p.n), static_cast<long long>(p.m), std::string(to_string(p.branch)),
            std::string(rel::to_string(mode)), p.D_r, p.D_theta, std::monostate{}, std::monostate{},
            std::monostate{}, std::string("ok")};
    at_point(describe(p.n, p.m, p.branch, p.D_r, p.D_theta), [&] {
      if (mode == rel::SymmetryMode::spin) {
        try {
          const auto res = rel::spin_energy(s, params, cfg.alpha, opts);
          row[6] = res.energy;
          row[8] = res.residual;
        } catch (const NoBoundState&) {
          row[9] = std::string("unbound");
        }
        try {
          row[7] = rel::expansion_energy(s, params, cfg.alpha, opts.mathieu).energy;
        } catch (const NoBoundState&) {
        }
      } else {
        const auto res = rel::pseudospin_energy(s, params, cfg.alpha, opts);
        if (res) {
          row[6] = res->energy;
          row[8] = res->residual;
        } else {
          row[9] = std::string("none");
        }
      }
      return 0;
    });
    return row;
  });
  return t;
}

} // namespace

Table evaluate(const RunConfig& cfg) {
  Command command = cfg.command;
  if (command == Command::figure) command = figure_preset(cfg.figure).command;
  RunConfig c = cfg;
  c.command = command;
  const Resolved g = resolve(c);
  switch (command) {
  case Command::spectrum: return spectrum(c, g);
  case Command::critical: return critical(c, g);
  case Command::table1: return table1(c, g);
  case Command::wavefunction: return wavefunction(c, g);
  case Command::relativistic: return relativistic(c, g);
  case Command::figure: break;
  }
  throw std::invalid_argument("unknown command");
}

} // namespace nck::cli
