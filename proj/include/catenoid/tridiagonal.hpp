#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace catenoid {

//! Real symmetric tridiagonal matrix with Sturm-sequence bisection.
class SymmetricTridiagonal {
 public:
  SymmetricTridiagonal(std::vector<double> diag, std::vector<double> off);

  std::size_t size() const { return diag_.size(); }
  const std::vector<double>& diag() const { return diag_; }
  const std::vector<double>& off() const { return off_; }

  //! Number of eigenvalues strictly below x (Sturm count of T - x I).
  std::size_t count_below(double x) const;

  //! Gershgorin interval containing the spectrum.
  std::pair<double, double> gershgorin() const;

  //! k-th smallest eigenvalue (0-based), bisected to |hi - lo| <= abs_tol.
  double eigenvalue(std::size_t k, double abs_tol = 0.0) const;

  //! Unit eigenvector for an accurate eigenvalue estimate (inverse iteration).
  std::vector<double> eigenvector(double lambda, int iterations = 3) const;

  //! y = T x
  std::vector<double> apply(const std::vector<double>& x) const;

 private:
  std::vector<double> diag_;
  std::vector<double> off_;
  double pivmin_;
};

}  // namespace catenoid
