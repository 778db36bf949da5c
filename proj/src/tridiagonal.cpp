#include "catenoid/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "catenoid/errors.hpp"

namespace catenoid {

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> diag, std::vector<double> off)
    : diag_(std::move(diag)), off_(std::move(off)) {
  if (diag_.empty()) throw DomainError("empty tridiagonal matrix");
  if (off_.size() + 1 != diag_.size()) throw DomainError("off-diagonal length must be n - 1");
  double emax = 0.0;
  for (double e : off_) emax = std::max(emax, e * e);
  pivmin_ = std::numeric_limits<double>::min() * std::max(1.0, emax);
}

std::size_t SymmetricTridiagonal::count_below(double x) const {
  // LDL^T of T - xI; the number of negative pivots is the count below x.
  std::size_t count = 0;
  double d = diag_[0] - x;
  if (std::abs(d) < pivmin_) d = -pivmin_;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < diag_.size(); ++i) {
    d = diag_[i] - x - off_[i - 1] * off_[i - 1] / d;
    if (std::abs(d) < pivmin_) d = -pivmin_;
    if (d < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> SymmetricTridiagonal::gershgorin() const {
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  const std::size_t n = diag_.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off_[i - 1]);
    if (i + 1 < n) r += std::abs(off_[i]);
    lo = std::min(lo, diag_[i] - r);
    hi = std::max(hi, diag_[i] + r);
  }
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
  return {lo - pad, hi + pad};
}

double SymmetricTridiagonal::eigenvalue(std::size_t k, double abs_tol) const {
  if (k >= size()) throw DomainError("eigenvalue index out of range");
  auto [lo, hi] = gershgorin();
  const double scale = std::max(std::abs(lo), std::abs(hi));
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double width = hi - lo;
    if (width <= abs_tol ||
        width <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(mid), 1e-300 * scale))
      break;
    if (count_below(mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> SymmetricTridiagonal::apply(const std::vector<double>& x) const {
  const std::size_t n = size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = diag_[i] * x[i];
    if (i > 0) v += off_[i - 1] * x[i - 1];
    if (i + 1 < n) v += off_[i] * x[i + 1];
    y[i] = v;
  }
  return y;
}

std::vector<double> SymmetricTridiagonal::eigenvector(double lambda, int iterations) const {
  const std::size_t n = size();
  // LU with partial pivoting of T - lambda I (dgttrf layout: dl, d, du, du2).
  std::vector<double> dl(off_), d(n), du(off_), du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<char> swapped(n, 0);
  for (std::size_t i = 0; i < n; ++i) d[i] = diag_[i] - lambda;
  const double tiny = std::numeric_limits<double>::epsilon() *
                      std::max(1.0, std::max(std::abs(gershgorin().first), std::abs(gershgorin().second)));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double f = dl[i] / d[i];
      dl[i] = f;
      d[i + 1] -= f * du[i];
    } else {
      const double f = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = f;
      const double t = du[i];
      du[i] = d[i + 1];
      d[i + 1] = t - f * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -f * du[i + 1];
      }
      swapped[i] = 1;
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;

  auto solve = [&](std::vector<double>& b) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const double t = b[i];
        b[i] = b[i + 1];
        b[i + 1] = t - dl[i] * b[i + 1];
      } else {
        b[i + 1] -= dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;)
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  };

  std::vector<double> v(n);
  // Deterministic, non-symmetric start so odd vectors are not missed.
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
  for (int it = 0; it < iterations; ++it) {
    solve(v);
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw NumericalError("inverse iteration failed to produce a finite vector");
    for (double& x : v) x /= norm;
  }
  return v;
}

}  // namespace catenoid
