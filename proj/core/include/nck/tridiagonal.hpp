#pragma once

#include <cstddef>
#include <vector>

namespace nck {

/// Real symmetric tridiagonal matrix: `diag` of size N, `off` of size N-1.
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const noexcept { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t count_below(const SymmetricTridiagonal& t, double x);

/// k-th smallest eigenvalue (k = 0 is the lowest), by Sturm bisection
/// inside the Gershgorin interval. Converges to machine resolution.
double kth_eigenvalue(const SymmetricTridiagonal& t, std::size_t k);

/// Unit eigenvector for a (converged) eigenvalue, by inverse iteration.
std::vector<double> eigenvector(const SymmetricTridiagonal& t, double eigenvalue);

} // namespace nck
