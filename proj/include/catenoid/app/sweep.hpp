#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catenoid/app/csv.hpp"
#include "catenoid/bound_states.hpp"
#include "catenoid/geometry.hpp"
#include "catenoid/scattering.hpp"

namespace catenoid {

enum class SweepQuantity { Transmission, Curvature, BoundStates, Potential };

const char* quantity_name(SweepQuantity q);

//! In-row status codes.
enum class RowStatus : int {
  Ok = 0,
  Domain = 1,        // input outside the operation's domain
  Numerical = 2,     // non-convergence or failed tolerance
  Configuration = 3,
  Range = 4,
  Other = 9,
};

//! Parameter grid with MIN:MAX:COUNT semantics (COUNT >= 1; COUNT = 1 gives MIN).
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 1;
  bool log_spaced = false;  // geometric spacing; needs min, max > 0

  std::vector<double> values() const;
  //! Parses "MIN:MAX:COUNT"; throws DomainError.
  static GridSpec parse(const std::string& text);
};

struct SweepTask {
  SweepQuantity quantity = SweepQuantity::Transmission;
  std::vector<int> m_values{0};
  //! eps for transmission, zeta (or chart coordinate) for curvature and potential.
  std::vector<double> parameters;
  Chart chart = Chart::ZPhi;  // potential sweeps
  double eps = 0.0;           // potential sweeps
  bool renormalized = false;  // potential sweeps, eta chart
  CatenoidShape shape{1.0, 1.0};
  ScatteringOptions scattering;
  BoundStateOptions bound;
  BoundStateMethod method = BoundStateMethod::Shooting;
  int workers = 0;
};

struct SweepDataset {
  csv::Table table{{}};
  std::size_t failures = 0;
};

//! Rows are enumerated m-major, then parameter; the OpenMP version evaluates
//! rows concurrently and assembles them in that order.
SweepDataset run_sweep(const SweepTask& task);
//! Serial reference; must match run_sweep byte for byte.
SweepDataset run_sweep_serial(const SweepTask& task);

}  // namespace catenoid
