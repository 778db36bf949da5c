#pragma once

#include <span>
#include <vector>

#include "catenoid/potentials.hpp"

namespace catenoid {

enum class ChannelCategory {
  NegativeNearOriginSlow,
  NegativeNearOriginFast,
  PositiveDefinite,
  OuterWell,
};

//! Upper-case names as they appear in reports.
const char* category_name(ChannelCategory c);

struct Extremum {
  double eta = 0.0;
  double value = 0.0;
  bool minimum = false;
};

struct ChannelClass {
  int m = 0;
  double eps = 0.0;
  ChannelCategory category = ChannelCategory::PositiveDefinite;
  double value_at_origin = 0.0;  // V_r - E at eta = 0
  double falloff_power = 0.0;    // p in |V_r - E| ~ (eta+1)^{-p}, last decade
  double min_value = 0.0;        // over the sampled range
  std::vector<Extremum> extrema;  // interior, eta ascending
};

struct ClassifyOptions {
  std::size_t samples = 4001;    // log-spaced in eta + 1
  double fast_power = 3.0;       // p >= fast_power counts as fast fall-off
  double extremum_tol = 1e-10;   // refinement width in eta
};

//! Taxonomy of v_renormalized on eta in [0, eta_max]:
/*! negative at eta = 0 -> NEGATIVE_NEAR_ORIGIN_{SLOW,FAST} by fitted fall-off;
    otherwise an interior minimum or any negative sample -> OUTER_WELL;
    otherwise POSITIVE_DEFINITE. Requires eta_max >= 50 (DomainError). */
std::vector<ChannelClass> classify_channels(double eps, std::span<const int> ms, double eta_max,
                                            const ClassifyOptions& opts = {});

}  // namespace catenoid
