#include "catenoid/app/figures.hpp"

#include <numbers>

#include "catenoid/app/csv.hpp"
#include "catenoid/errors.hpp"
#include "catenoid/geometry.hpp"

namespace catenoid {

const char* figure_name(Figure f) {
  switch (f) {
    case Figure::Fig1Mesh: return "fig1";
    case Figure::Fig2: return "fig2";
    case Figure::Fig3: return "fig3";
  }
  return "?";
}

Figure parse_figure(const std::string& name) {
  if (name == "fig1") return Figure::Fig1Mesh;
  if (name == "fig2") return Figure::Fig2;
  if (name == "fig3") return Figure::Fig3;
  throw DomainError("unknown figure '" + name + "'");
}

namespace {

double lerp(double lo, double hi, std::size_t i, std::size_t n) {
  if (n < 2) return lo;
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

std::string figure_data(Figure which, const FigureParams& p) {
  using csv::format_double;
  if (p.samples < 2) throw DomainError("figure needs at least 2 samples");
  switch (which) {
    case Figure::Fig1Mesh: {
      const CatenoidShape shape(p.radius, p.section_scale);
      csv::Table t({"zeta", "phi", "x", "y", "z"});
      for (std::size_t i = 0; i < p.samples; ++i) {
        const double z = lerp(-p.zeta_extent, p.zeta_extent, i, p.samples);
        for (std::size_t j = 0; j < p.phi_samples; ++j) {
          const double phi =
              2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p.phi_samples);
          const Vec3 v = embed_catenoid(shape, z, phi);
          t.add_row({format_double(z), format_double(phi), format_double(v.x), format_double(v.y),
                     format_double(v.z)});
        }
      }
      return t.str();
    }
    case Figure::Fig2: {
      const ChannelSpec ch{1, 0.1};
      csv::Table t({"zeta", "V"});
      for (std::size_t i = 0; i < p.samples; ++i) {
        const double z = lerp(-p.fig2_extent, p.fig2_extent, i, p.samples);
        t.add_row({format_double(z), format_double(v_zeta(ch, z))});
      }
      return t.str();
    }
    case Figure::Fig3: {
      csv::Table t({"eta", "V_m0", "V_m1", "V_m2"});
      for (std::size_t i = 0; i < p.samples; ++i) {
        const EtaCoordinate ec{Patch::Plus, lerp(0.0, p.eta_max, i, p.samples)};
        std::vector<std::string> row{format_double(ec.eta)};
        for (int m = 0; m <= 2; ++m) {
          const ChannelSpec ch{m, 2.0};
          row.push_back(format_double(p.renormalized ? v_renormalized(ch, ec, p.convention)
                                                     : v_eta(ch, ec, p.convention)));
        }
        t.add_row(std::move(row));
      }
      return t.str();
    }
  }
  return {};
}

}  // namespace catenoid
