#pragma once

#include <cstddef>
#include <string>

#include "catenoid/potentials.hpp"

namespace catenoid {

enum class Figure { Fig1Mesh, Fig2, Fig3 };

const char* figure_name(Figure f);
//! "fig1" | "fig2" | "fig3"; throws DomainError otherwise.
Figure parse_figure(const std::string& name);

struct FigureParams {
  double radius = 1.0;
  double section_scale = 1.0;
  std::size_t samples = 401;      // along zeta (fig1, fig2) or eta (fig3)
  std::size_t phi_samples = 64;   // fig1: phi in [0, 2pi)
  double zeta_extent = 2.0;       // fig1 mesh on [-extent, extent]
  double fig2_extent = 3.0;
  double eta_max = 10.0;          // fig3 on [0, eta_max]
  bool renormalized = false;      // fig3: V_r - E instead of V - E
  EnergyConvention convention = EnergyConvention::VMinusE;
};

//! CSV payload. FIG1_MESH: zeta,phi,x,y,z. FIG2: zeta,V (m = 1, eps = 0.1).
//! FIG3: eta,V_m0,V_m1,V_m2 on the PLUS patch at eps = 2.
std::string figure_data(Figure which, const FigureParams& params = {});

}  // namespace catenoid
