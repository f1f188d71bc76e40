#pragma once

// Characteristic values and π-periodic solutions of the Mathieu equation
//
//     y''(z) + (a - 2p cos 2z) y(z) = 0
//
// restricted to the even orders 2m: a_2m(p) with ce_2m and b_2m(p) with se_2m.

#include "nck/types.hpp"

#include <vector>

namespace nck::mathieu {

struct Problem {
  int order_m = 0; // function order is 2m
  Branch branch = Branch::cosine;
  double p = 0.0;

  void validate() const;
};

struct Solution {
  double char_value = 0.0;
  /// Cosine: A_0, A_2, A_4, ...; Sine: B_2, B_4, .... Normalized so that
  /// the integral of y(z)² over one 2π period is π, with the largest
  /// coefficient positive.
  std::vector<double> fourier_coeffs;
  int truncation_size = 0;
  double est_error = 0.0;
};

struct Options {
  double tolerance = 1e-10;
  int max_size = 4096;
};

/// Converged characteristic value and Fourier coefficients.
Solution solve(const Problem& prob, const Options& opts = {});

/// a_2m(p) for the cosine branch, b_2m(p) for the sine branch.
double char_value(const Problem& prob, const Options& opts = {});

/// Small-p power series through p^6, valid for m >= 4 and identical for both
/// branches at that order.
double char_value_series_small(int m, Branch branch, double p);

/// Large-p asymptotic series with k = 2n+1; approximates both a_n(p) and
/// b_{n+1}(p). Requires p > 0.
double char_value_series_large(int n, double p);

/// Evaluate ce_2m(z) or se_2m(z) from converged coefficients.
double evaluate(const Solution& sol, Branch branch, double z) noexcept;

/// First derivative with respect to z.
double evaluate_dz(const Solution& sol, Branch branch, double z) noexcept;

/// Angular factor Θ(θ) = ce_2m(θ/2) or se_2m(θ/2).
double eval_angular(const Problem& prob, double theta, const Options& opts = {});

/// Pre-solved angular factor for repeated evaluation.
class AngularFunction {
public:
  explicit AngularFunction(const Problem& prob, const Options& opts = {});

  double operator()(double theta) const noexcept {
    return evaluate(sol_, prob_.branch, 0.5 * theta);
  }

  const Problem& problem() const noexcept { return prob_; }
  const Solution& solution() const noexcept { return sol_; }

private:
  Problem prob_;
  Solution sol_;
};

} // namespace nck::mathieu
