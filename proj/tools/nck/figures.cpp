#include "nck/config.hpp"

#include <stdexcept>

namespace nck::cli {

const std::vector<FigurePreset>& figure_presets() {
  // D_θ grids run from 0 to just past the largest critical value on each plot.
  static const std::vector<FigurePreset> presets = {
      {1, Command::spectrum, "E(1,0) vs D_theta for D_r = 0.3, 0.6, 0.9",
       {{"n", "1"}, {"m", "0"}, {"branch", "cos"}, {"Dr", "0.3,0.6,0.9"}, {"Dtheta", "0:1.4:0.01"},
        {"coupling", "doubled"}}},
      {2, Command::spectrum, "E(n,0) vs D_theta for D_r = 0.5, n = 1..5",
       {{"n", "1:5:1"}, {"m", "0"}, {"branch", "cos"}, {"Dr", "0.5"}, {"Dtheta", "0:1:0.01"},
        {"coupling", "doubled"}}},
      {3, Command::spectrum, "E(n,1) vs D_theta for D_r = 0.5, n = 1..3, cosine and sine",
       {{"n", "1:3:1"}, {"m", "1"}, {"branch", "both"}, {"Dr", "0.5"}, {"Dtheta", "0:4:0.01"},
        {"coupling", "doubled"}}},
      {4, Command::spectrum, "E(3,m) vs D_theta for D_r = 0.5, m = 0..3, cosine and sine",
       {{"n", "3"}, {"m", "0:3:1"}, {"branch", "both"}, {"Dr", "0.5"}, {"Dtheta", "0:20:0.05"},
        {"coupling", "doubled"}}},
      {5, Command::critical, "forbidden regions: critical D_theta vs D_r for m = 0, 1, 2",
       {{"m", "0:2:1"}, {"branch", "both"}, {"Dr", "-0.5:1:0.05"}, {"coupling", "doubled"}}},
      {6, Command::spectrum, "E(2,1) over D_r and D_theta",
       {{"n", "2"}, {"m", "1"}, {"branch", "cos"}, {"Dr", "0:1:0.05"}, {"Dtheta", "0:5:0.05"},
        {"coupling", "doubled"}}},
      {7, Command::relativistic, "relativistic E(n,1) vs D_theta for D_r = 0.3, n = 1..3",
       {{"n", "1:3:1"}, {"m", "1"}, {"branch", "cos"}, {"Dr", "0.3"}, {"Dtheta", "0:3.4:0.02"},
        {"mode", "spin"}}},
      {8, Command::relativistic, "relativistic E(2,1) vs D_theta for D_r = 0, 0.3, 0.6",
       {{"n", "2"}, {"m", "1"}, {"branch", "cos"}, {"Dr", "0,0.3,0.6"}, {"Dtheta", "0:4:0.02"},
        {"mode", "spin"}}},
      {9, Command::relativistic, "root-found and expansion E(n,1) vs D_theta for D_r = 0.3, n = 1..3",
       {{"n", "1:3:1"}, {"m", "1"}, {"branch", "cos"}, {"Dr", "0.3"}, {"Dtheta", "0:3.4:0.02"},
        {"mode", "spin"}}},
  };
  return presets;
}

const FigurePreset& figure_preset(int number) {
  if (number < 1 || number > 9) throw std::invalid_argument("figure number must be 1..9");
  return figure_presets()[static_cast<std::size_t>(number - 1)];
}

} // namespace nck::cli
