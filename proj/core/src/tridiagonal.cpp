#include "nck/tridiagonal.hpp"

#include "nck/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nck {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

void check_shape(const SymmetricTridiagonal& t) {
  if (t.diag.empty() || t.off.size() + 1 != t.diag.size())
    throw DomainError("tridiagonal: off-diagonal must have size N-1");
}

} // namespace

std::size_t count_below(const SymmetricTridiagonal& t, double x) {
  check_shape(t);
  const double tiny = std::numeric_limits<double>::min() / eps;
  std::size_t count = 0;
  double q = t.diag[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
    if (i + 1 == t.size()) break;
    const double e = t.off[i];
    q = t.diag[i + 1] - x - e * e / q;
  }
  return count;
}

double kth_eigenvalue(const SymmetricTridiagonal& t, std::size_t k) {
  check_shape(t);
  if (k >= t.size()) throw DomainError("tridiagonal: eigenvalue index out of range");

  // Gershgorin interval
  const std::size_t n = t.size();
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
    if (i + 1 < n) scale = std::max(scale, std::abs(t.off[i]));
  }
  const double floor = eps * std::max(1.0, scale);
  lo -= floor;
  hi += floor;

  // invariant: count_below(lo) <= k < count_below(hi)
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi)) + floor) break;
    if (count_below(t, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> eigenvector(const SymmetricTridiagonal& t, double eigenvalue) {
  check_shape(t);
  const std::size_t n = t.size();
  if (n == 1) return {1.0};

  // Gaussian elimination with partial pivoting on T - σI: U has two
  // superdiagonals, L is stored as multipliers.
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(t.diag[i]));
  for (double e : t.off) scale = std::max(scale, std::abs(e));
  const double sigma = eigenvalue + 8.0 * eps * std::max(1.0, std::abs(eigenvalue));

  std::vector<double> d(n), du(n - 1), du2(n > 2 ? n - 2 : 0, 0.0), dl(t.off), mult(n - 1);
  std::vector<bool> swapped(n - 1, false);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - sigma;
  du = t.off;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      const double piv = d[i] != 0.0 ? d[i] : eps * scale;
      d[i] = piv;
      mult[i] = dl[i] / piv;
      d[i + 1] -= mult[i] * du[i];
    } else {
      swapped[i] = true;
      mult[i] = d[i] / dl[i];
      d[i] = dl[i];
      const double tmp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = tmp - mult[i] * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -mult[i] * du[i + 1];
      }
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = eps * scale;

  std::vector<double> x(n, 1.0);
  for (int iter = 0; iter < 3; ++iter) {
    // forward: apply L^-1 with the recorded row swaps
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const double tmp = x[i];
        x[i] = x[i + 1];
        x[i + 1] = tmp - mult[i] * x[i + 1];
      } else {
        x[i + 1] -= mult[i] * x[i];
      }
    }
    // back substitution with U
    for (std::size_t ii = n; ii-- > 0;) {
      double s = x[ii];
      if (ii + 1 < n) s -= du[ii] * x[ii + 1];
      if (ii + 2 < n) s -= du2[ii] * x[ii + 2];
      x[ii] = s / d[ii];
    }
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
  return x;
}

} // namespace nck
