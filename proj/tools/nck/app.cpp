#include "nck/app.hpp"

#include "nck/config.hpp"

#include <nck/error.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace nck::cli {

namespace {

double to_double(std::string_view key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size() || !std::isfinite(x))
    throw std::invalid_argument("--" + std::string(key) + ": '" + v + "' is not a number");
  return x;
}

struct FlagSpec {
  const char* name;
  const char* help;
};

const FlagSpec kFlags[] = {
    {"n", "principal quantum number n = n_r + m; range start:stop:step or list"},
    {"m", "angular quantum number m >= 0; range or list"},
    {"branch", "cos | sin | both"},
    {"Dr", "radial dipole moment D_r (a.u.); range or list"},
    {"Dtheta", "angular dipole moment D_theta >= 0 (a.u.); range or list"},
    {"Z", "central charge (default 1)"},
    {"alpha", "fine-structure constant (default 1/137.035999)"},
    {"mode", "spin | pseudospin (relativistic); on critical, switches to the relativistic search"},
    {"coupling", "bare | doubled dipole coupling (critical/table1 default doubled, others bare)"},
    {"r", "radial samples for wavefunction; range or list"},
    {"theta", "angular samples for wavefunction; range or list"},
    {"window", "pseudo-spin energy window lo:hi in Hartree (default -200:0)"},
    {"ceiling", "largest D_theta searched for critical values (default 100)"},
    {"tol", "tolerance of the Mathieu eigenvalue and critical-value searches"},
    {"format", "csv | json"},
    {"out", "output file (default standard output)"},
    {"threads", "worker threads, 0 = all cores (output is identical for any count)"},
};

} // namespace

void set_field(RunConfig& cfg, std::string_view key, const std::string& v) {
  if (key == "n") cfg.n = v;
  else if (key == "m") cfg.m = v;
  else if (key == "branch") cfg.branch = v;
  else if (key == "Dr") cfg.D_r = v;
  else if (key == "Dtheta") cfg.D_theta = v;
  else if (key == "r") cfg.r = v;
  else if (key == "theta") cfg.theta = v;
  else if (key == "Z") cfg.Z = to_double(key, v);
  else if (key == "alpha") cfg.alpha = to_double(key, v);
  else if (key == "mode") cfg.mode = v;
  else if (key == "coupling") cfg.coupling = v;
  else if (key == "ceiling") cfg.ceiling = to_double(key, v);
  else if (key == "tol") cfg.tol = to_double(key, v);
  else if (key == "out") cfg.out = v;
  else if (key == "window") {
    const auto colon = v.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--window must be lo:hi");
    cfg.window_lo = to_double(key, v.substr(0, colon));
    cfg.window_hi = to_double(key, v.substr(colon + 1));
  } else if (key == "format") {
    if (v == "csv") cfg.format = Format::csv;
    else if (v == "json") cfg.format = Format::json;
    else throw std::invalid_argument("--format must be csv or json");
  } else if (key == "threads") {
    const double t = to_double(key, v);
    if (t < 0 || t > 4096 || t != static_cast<unsigned>(t))
      throw std::invalid_argument("--threads must be a non-negative integer");
    cfg.threads = static_cast<unsigned>(t);
  } else {
    throw std::invalid_argument("unknown setting '" + std::string(key) + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of the 2D non-central Kratzer potential"};
  app.name("nck");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file; keys are flag names, flags override it");

  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> opts;
  for (const auto& f : kFlags) opts[f.name] = app.add_option(std::string("--") + f.name, values[f.name], f.help);

  std::string fig_help = "data behind one figure:";
  for (const auto& p : figure_presets()) fig_help += "\n  " + std::to_string(p.number) + ": " + p.title;

  auto* spectrum = app.add_subcommand("spectrum", "closed-form energies over an (n, m, branch, D_r, D_theta) grid");
  auto* critical = app.add_subcommand("critical", "critical D_theta over an (m, branch, D_r) grid");
  auto* table1 = app.add_subcommand("table1", "critical D_theta as a D_r x m table");
  auto* wave = app.add_subcommand("wavefunction", "psi(r, theta) samples for one state");
  auto* relc = app.add_subcommand("relativistic", "spin / pseudo-spin energies with the alpha^2 expansion");
  auto* figure = app.add_subcommand("figure", fig_help);
  int fig_number = 0;
  figure->add_option("N", fig_number, "figure number 1..9")->required()->check(CLI::Range(1, 9));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return exit_usage;
  }

  RunConfig cfg;
  auto set = [&](const std::string& key) { return opts.at(key)->count() > 0; };
  try {
    if (spectrum->parsed()) {
      cfg.command = Command::spectrum;
    } else if (critical->parsed() || table1->parsed()) {
      cfg.command = critical->parsed() ? Command::critical : Command::table1;
      cfg.m = "0:3:1";
      cfg.D_r = "-0.3:0.9:0.3";
    } else if (wave->parsed()) {
      cfg.command = Command::wavefunction;
      cfg.D_r = "0.3";
    } else if (relc->parsed()) {
      cfg.command = Command::relativistic;
      cfg.m = "1";
      cfg.D_r = "0.3";
      cfg.D_theta = "0.5";
    } else if (figure->parsed()) {
      cfg.command = Command::figure;
      cfg.figure = fig_number;
      for (const auto& [key, value] : figure_preset(fig_number).settings)
        if (!set(key)) set_field(cfg, key, value);
    }
    for (const auto& f : kFlags)
      if (set(f.name)) set_field(cfg, f.name, values[f.name]);
  } catch (const std::invalid_argument& e) {
    err << "nck: " << e.what() << "\n";
    return exit_usage;
  }

  Table table;
  try {
    table = evaluate(cfg);
  } catch (const std::invalid_argument& e) {
    err << "nck: " << e.what() << "\n";
    return exit_usage;
  } catch (const DomainError& e) {
    err << "nck: " << e.what() << "\n";
    return exit_usage;
  } catch (const SolverFailure& e) {
    err << "nck: solver failure at " << e.what() << " (last estimate " << e.last_estimate()
        << ", error estimate " << e.est_error() << ")\n";
    return exit_solver;
  } catch (const Error& e) {
    err << "nck: " << e.what() << "\n";
    return exit_solver;
  }

  if (cfg.out.empty()) {
    write(table, cfg.format, out);
    return out ? exit_ok : exit_solver;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "nck: cannot open '" << cfg.out << "' for writing\n";
    return exit_usage;
  }
  write(table, cfg.format, file);
  file.close();
  if (!file) {
    err << "nck: failed writing '" << cfg.out << "'\n";
    return exit_solver;
  }
  return exit_ok;
}

} // namespace nck::cli
