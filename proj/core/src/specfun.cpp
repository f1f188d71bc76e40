#include "nck/specfun.hpp"

#include "nck/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nck {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

} // namespace

double hyp1f1(double a, double b, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z))
    throw DomainError("hyp1f1: arguments must be finite");

  const bool terminates = is_nonpositive_integer(a);
  if (is_nonpositive_integer(b) && !(terminates && a > b))
    throw DomainError("hyp1f1: b is zero or a negative integer");

  double term = 1.0;
  double sum = 1.0;
  if (terminates) {
    const int last = static_cast<int>(-a);
    for (int k = 0; k < last; ++k) {
      term *= (a + k) / (b + k) * z / (k + 1);
      sum += term;
    }
    return sum;
  }

  constexpr int max_terms = 100000;
  for (int k = 0; k < max_terms; ++k) {
    term *= (a + k) / (b + k) * z / (k + 1);
    sum += term;
    // past the turning point the terms shrink monotonically
    if (k > std::abs(z) && std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
    if (!std::isfinite(sum)) break;
  }
  throw SolverFailure("hyp1f1: series did not converge", sum, std::abs(term));
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre: degree must be non-negative");
  if (!(alpha > -1.0)) throw DomainError("laguerre: alpha must exceed -1");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double norm_constant(double lambda, double beta, int n_r) {
  if (!(lambda >= 0.5)) throw DomainError("norm_constant: lambda must be at least 1/2");
  if (!(beta > 0.0)) throw DomainError("norm_constant: beta must be positive");
  if (n_r < 0) throw DomainError("norm_constant: n_r must be non-negative");
  const double n = n_r;
  const double log_n2 = (2.0 * lambda + 1.0) * std::log(2.0 * beta) + log_gamma(n + 2.0 * lambda) -
                        std::log(std::numbers::pi) - log_gamma(n + 1.0) -
                        2.0 * log_gamma(2.0 * lambda) - std::log(2.0 * (n + lambda));
  return std::exp(0.5 * log_n2);
}

RadialSolution make_radial_solution(double beta, double lambda, int n_r) {
  return RadialSolution{beta, lambda, n_r, norm_constant(lambda, beta, n_r)};
}

double RadialSolution::operator()(double r) const {
  if (r < 0.0) throw DomainError("radial solution: r must be non-negative");
  if (r == 0.0) return 0.0;
  const double log_env = (lambda - 0.5) * std::log(r) - beta * r;
  // past underflow of the envelope times the polynomial bound (2βr)^n_r
  if (log_env + n_r * std::log(std::max(1.0, 2.0 * beta * r)) < -745.0) return 0.0;
  const double envelope = std::exp(log_env);
  return norm_const * envelope * hyp1f1(-n_r, 2.0 * lambda, 2.0 * beta * r);
}

} // namespace nck
