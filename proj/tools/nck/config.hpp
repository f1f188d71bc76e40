#pragma once
#include "nck/table.hpp"

#include <nck/types.hpp>

#include <optional>
#include <string_view>
#include <utility>
#include <string>
#include <vector>

namespace nck::cli {

enum class Command { spectrum, critical, table1, wavefunction, relativistic, figure };

std::string_view to_string(Command c) noexcept;

/// Everything a run needs. Ranges stay textual until resolve().
struct RunConfig {
  Command command = Command::spectrum;
  int figure = 0;

  std::string n = "1";
  std::string m = "0";
  std::string branch = "cos"; // cos | sin | both
  std::string D_r = "0";
  std::string D_theta = "0";
  std::string r = "0.1:10:0.1";
  std::string theta = "0:3.14159265358979:0.785398163397448";
  double Z = 1.0;
  double alpha = 1.0 / 137.035999;
  std::optional<std::string> mode; // spin | pseudospin
  std::optional<std::string> coupling; // bare | doubled
  double window_lo = -200.0;
  double window_hi = 0.0;
  double ceiling = 100.0;
  std::optional<double> tol;

  Format format = Format::csv;
  std::string out; // empty: standard output
  unsigned threads = 0; // 0: hardware concurrency
};

/// Grids and enums parsed out of a RunConfig.
struct Resolved {
  std::vector<int> n, m;
  std::vector<Branch> branches;
  std::vector<double> D_r, D_theta, r, theta;
  DipoleCoupling coupling = DipoleCoupling::bare;
};

/// Throws std::invalid_argument on bad ranges or names.
Resolved resolve(const RunConfig& cfg);

/// Sets one field by its flag name (without dashes). Throws
/// std::invalid_argument for unknown keys or unparsable values.
void set_field(RunConfig& cfg, std::string_view key, const std::string& value);

/// Data behind one of the nine figures: the command it runs and the flag
/// values that reproduce its curves.
struct FigurePreset {
  int number;
  Command command;
  std::string title;
  std::vector<std::pair<std::string, std::string>> settings;
};

/// Throws std::invalid_argument unless 1 <= number <= 9.
const FigurePreset& figure_preset(int number);
const std::vector<FigurePreset>& figure_presets();

/// Runs the configured command and returns its table.
/// Throws std::invalid_argument for bad input and nck::SolverFailure (with the
/// failing point in its message) when a solver does not converge.
Table evaluate(const RunConfig& cfg);

} // namespace nck::cli
