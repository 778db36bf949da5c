#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "catenoid/numerov.hpp"
#include "catenoid/potentials.hpp"

namespace catenoid {

//! -Phi'' + q(zeta) Phi = eps w(zeta) Phi on the whole line, q and w even, w > 0.
struct WeightedProblem {
  std::function<double(double)> q;
  std::function<double(double)> w;
  int m = 0;
  std::string name;
  Normalization norm = Normalization::WeightedCosh2;

  //! Catenoid channel: q = m^2 - sech^2, w = cosh^2 (the area element).
  static WeightedProblem catenoid(int m);
  //! Flat reference: q = -lambda(lambda+1) sech^2, w = 1.
  static WeightedProblem poschl_teller(const PoschlTellerSpec& spec);
};

enum class BoundStateMethod { Shooting, Matrix };

const char* method_name(BoundStateMethod method);

struct BoundStateOptions {
  double eps_min = -10.0;
  double eps_max = -1e-3;
  double zeta_max = 12.0;
  std::size_t samples = 4001;   // points on [-zeta_max, zeta_max]; must be odd
  double tol = 1e-10;           // bisection width on eps
  std::size_t scan_points = 240;
  double tail_action = 36.0;
  double min_tail_action = 18.0;
  bool richardson = true;       // matrix: extrapolate from h and h/2
};

struct BoundState {
  ChannelSpec channel;  // eps holds the eigenvalue
  int nodes = 0;
  WaveFunction wave;
  BoundStateMethod method = BoundStateMethod::Shooting;
  //! Matrix method only: unextrapolated eigenvalue on the requested grid.
  double raw_eigenvalue = 0.0;
};

//! Negative eigenvalues in [eps_min, eps_max], sorted ascending.
/*! Shooting: even and odd shots from zeta = 0 on the Numerov grid, matched to
    the WKB-started decaying tail; returns an empty list if no root is
    bracketed. Matrix: second-order finite differences with Dirichlet ends,
    symmetrized as w^{-1/2} A w^{-1/2}, Sturm bisection, optional Richardson.
    Throws ConfigurationError if zeta_max cannot hold the decaying tail. */
std::vector<BoundState> bound_states(const WeightedProblem& problem, const BoundStateOptions& opts,
                                     BoundStateMethod method);

std::vector<BoundState> bound_states(int m, const BoundStateOptions& opts, BoundStateMethod method);

//! Matching determinant of one parity sector; sign changes at eigenvalues.
double shooting_mismatch(const WeightedProblem& problem, Parity parity, double eps,
                         const BoundStateOptions& opts);

//! Lowest eigenvalue mu0 of -d^2/dzeta^2 + m^2 - sech^2 + |eps| cosh^2 (Dirichlet
//! at +-zeta_max). mu0(|eps|) = 0 exactly at a bound state of the weighted problem.
double lowest_confined_eigenvalue(int m, double abs_eps, double zeta_max = 12.0,
                                  std::size_t samples = 4001);

//! Sign changes, ignoring samples below rel_floor * max|y|.
int count_nodes(const std::vector<double>& values, double rel_floor = 1e-9);

//! Even / odd classification by mirror overlap; None if mixed beyond tol.
Parity detect_parity(const std::vector<double>& values, double tol = 1e-8);

}  // namespace catenoid
