#pragma once

#include <cmath>

namespace nck {

/// Confluent hypergeometric 1F1(a; b; z) by direct power series. Exact finite
/// sum when a is a non-positive integer.
double hyp1f1(double a, double b, double z);

/// Generalized Laguerre polynomial L_n^alpha(x), three-term recurrence.
double laguerre(int n, double alpha, double x);

/// Γ(x) for x > 0. Factorials of non-integer arguments are read as Γ(x+1).
inline double gamma_fn(double x) { return std::tgamma(x); }
inline double log_gamma(double x) { return std::lgamma(x); }

/// Radial part R(r)/√r = N r^(λ-1/2) e^(-βr) 1F1(-n_r; 2λ; 2βr).
struct RadialSolution {
  double beta = 1.0;
  double lambda = 1.0;
  int n_r = 0;
  double norm_const = 0.0;

  /// The radial factor without the angular part, at r > 0.
  double operator()(double r) const;
};

/// Constant N making ∫∫ |ψ|² r dr dθ = 1 for ψ = RadialSolution(r)·Θ(θ) with
/// a π-normalized angular factor:
///
///   N² = (2β)^(2λ+1) Γ(n_r+2λ) / (π n_r! Γ(2λ)² 2(n_r+λ))
///
/// Throws DomainError for λ < 1/2, β <= 0 or n_r < 0.
double norm_constant(double lambda, double beta, int n_r);

/// Fills in norm_const.
RadialSolution make_radial_solution(double beta, double lambda, int n_r);

} // namespace nck
