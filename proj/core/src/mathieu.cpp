#include "nck/mathieu.hpp"

#include "nck/error.hpp"
#include "nck/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nck::mathieu {

namespace {

// Fourier recurrence of the even-order, period-π solutions as a symmetric
// tridiagonal matrix. Cosine basis (√2·A_0, A_2, A_4, ...), sine basis
// (B_2, B_4, ...). A unit eigenvector in this basis is π-normalized.
SymmetricTridiagonal recurrence_matrix(Branch branch, double p, int size) {
  SymmetricTridiagonal t;
  t.diag.resize(static_cast<std::size_t>(size));
  t.off.assign(static_cast<std::size_t>(size - 1), p);
  const int first = branch == Branch::cosine ? 0 : 1;
  for (int r = 0; r < size; ++r) {
    const double k = 2.0 * (r + first);
    t.diag[static_cast<std::size_t>(r)] = k * k;
  }
  if (branch == Branch::cosine && size > 1) t.off[0] = std::sqrt(2.0) * p;
  return t;
}

std::size_t eigen_index(const Problem& prob) {
  return static_cast<std::size_t>(prob.branch == Branch::cosine ? prob.order_m : prob.order_m - 1);
}

int initial_size(const Problem& prob) {
  return 2 * prob.order_m + 16 + static_cast<int>(std::ceil(2.0 * std::sqrt(std::abs(prob.p))));
}

struct Converged {
  double value;
  int size;
  double err;
};

// Double the truncation until two successive estimates agree.
Converged converge(const Problem& prob, const Options& opts) {
  const std::size_t k = eigen_index(prob);
  int size = initial_size(prob);
  if (prob.p == 0.0) {
    // diagonal matrix, exact
    const double order = 2.0 * static_cast<double>(prob.order_m);
    return {order * order, size, 0.0};
  }
  double prev = kth_eigenvalue(recurrence_matrix(prob.branch, prob.p, size), k);
  double err = 0.0;
  while (true) {
    const int next = 2 * size;
    if (next > opts.max_size) {
      std::ostringstream msg;
      msg << "mathieu: no convergence for m=" << prob.order_m << " p=" << prob.p
          << " at truncation " << size;
      throw SolverFailure(msg.str(), prev, err);
    }
    const double cur = kth_eigenvalue(recurrence_matrix(prob.branch, prob.p, next), k);
    err = std::abs(cur - prev);
    prev = cur;
    size = next;
    if (err <= opts.tolerance) return {prev, size, err};
  }
}

} // namespace

void Problem::validate() const {
  if (order_m < 0) throw DomainError("mathieu: order m must be non-negative");
  if (branch == Branch::sine && order_m < 1)
    throw DomainError("mathieu: no sine solution of order 0");
  if (!std::isfinite(p)) throw DomainError("mathieu: parameter p must be finite");
}

Solution solve(const Problem& prob, const Options& opts) {
  prob.validate();
  const auto [value, size, err] = converge(prob, opts);

  const auto matrix = recurrence_matrix(prob.branch, prob.p, size);
  std::vector<double> coeffs = eigenvector(matrix, value);
  if (prob.branch == Branch::cosine) coeffs[0] /= std::sqrt(2.0);

  const auto largest = std::max_element(coeffs.begin(), coeffs.end(),
                                        [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (*largest < 0.0)
    for (double& c : coeffs) c = -c;

  // drop the negligible tail
  const double cutoff = 1e-18 * std::abs(*largest);
  while (coeffs.size() > 1 && std::abs(coeffs.back()) < cutoff) coeffs.pop_back();

  return Solution{value, std::move(coeffs), size, err};
}

double char_value(const Problem& prob, const Options& opts) {
  prob.validate();
  return converge(prob, opts).value;
}

double char_value_series_small(int m, Branch /*branch*/, double p) {
  if (m < 4) throw DomainError("mathieu: small-p series is only defined for m >= 4");
  const double m2 = static_cast<double>(m) * m;
  const double l = 4.0 * m2 - 1.0;
  const double p2 = p * p;
  const double p4 = p2 * p2;
  const double p6 = p4 * p2;
  return 4.0 * m2 + p2 / (2.0 * l) + (20.0 * m2 + 7.0) * p4 / (32.0 * std::pow(l, 3) * (l - 3.0)) +
         (36.0 * m2 * m2 + 232.0 * m2 + 29.0) * p6 /
             (64.0 * std::pow(l, 5) * (l - 3.0) * (l - 8.0));
}

double char_value_series_large(int n, double p) {
  if (n < 0) throw DomainError("mathieu: large-p series index must be non-negative");
  if (!(p > 0.0)) throw DomainError("mathieu: large-p series requires p > 0");
  const double k = 2.0 * n + 1.0;
  const double k2 = k * k;
  const double sp = std::sqrt(p);
  return -2.0 * p + 2.0 * k * sp - (k2 + 1.0) / 8.0 - (k2 * k + 3.0 * k) / (128.0 * sp) -
         (5.0 * k2 * k2 + 34.0 * k2 + 9.0) / (4096.0 * p);
}

double evaluate(const Solution& sol, Branch branch, double z) noexcept {
  double sum = 0.0;
  const auto& c = sol.fourier_coeffs;
  const int first = branch == Branch::cosine ? 0 : 1;
  for (std::size_t r = 0; r < c.size(); ++r) {
    const double arg = 2.0 * (static_cast<double>(r) + first) * z;
    sum += c[r] * (branch == Branch::cosine ? std::cos(arg) : std::sin(arg));
  }
  return sum;
}

double evaluate_dz(const Solution& sol, Branch branch, double z) noexcept {
  double sum = 0.0;
  const auto& c = sol.fourier_coeffs;
  const int first = branch == Branch::cosine ? 0 : 1;
  for (std::size_t r = 0; r < c.size(); ++r) {
    const double freq = 2.0 * (static_cast<double>(r) + first);
    sum += c[r] * freq * (branch == Branch::cosine ? -std::sin(freq * z) : std::cos(freq * z));
  }
  return sum;
}

double eval_angular(const Problem& prob, double theta, const Options& opts) {
  return evaluate(solve(prob, opts), prob.branch, 0.5 * theta);
}

AngularFunction::AngularFunction(const Problem& prob, const Options& opts)
    : prob_(prob), sol_(solve(prob, opts)) {}

} // namespace nck::mathieu
