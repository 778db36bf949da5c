// Command-line front end. Exit codes: 0 success, 1 usage error, 2 numerical
// non-convergence, 3 INCONSISTENT audit (verify --strict only).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catenoid/app/audit.hpp"
#include "catenoid/app/csv.hpp"
#include "catenoid/app/figures.hpp"
#include "catenoid/app/sweep.hpp"
#include "catenoid/bound_states.hpp"
#include "catenoid/cross_chart.hpp"
#include "catenoid/errors.hpp"
#include "catenoid/geometry.hpp"
#include "catenoid/parallel.hpp"
#include "catenoid/potentials.hpp"

using namespace catenoid;
using csv::format_double;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNumerical = 2;
constexpr int kInconsistent = 3;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? lo
                    : (i + 1 == n ? hi
                                  : lo + (hi - lo) * static_cast<double>(i) /
                                             static_cast<double>(n - 1));
  return out;
}

void require_range(double lo, double hi, std::size_t n) {
  if (!(hi > lo)) throw DomainError("--max must exceed --min");
  if (n < 2) throw DomainError("--samples must be at least 2");
}

// --- geometry -----------------------------------------------------------------

struct GeometryArgs {
  std::string quantity = "metric";
  std::string chart = "zeta";
  double radius = 1.0;
  double a = 1.0;
  double min = -3.0;
  double max = 3.0;
  std::size_t samples = 201;
  std::size_t phi_samples = 64;
  std::string out = "-";
};

int run_geometry(const GeometryArgs& g) {
  require_range(g.min, g.max, g.samples);
  const CatenoidShape shape(g.radius, g.a);
  const double ar = shape.effective_radius();
  const bool rho = g.chart == "rho";
  const std::string coord = rho ? "rho" : "zeta";
  // rho charts use the upper branch zeta = arccosh(rho / aR) >= 0.
  auto zeta_of = [&](double c) {
    if (!rho) return c;
    if (!(c >= ar)) throw DomainError("rho below the throat radius aR");
    return std::acosh(c / ar);
  };
  const auto grid = linspace(g.min, g.max, g.samples);

  if (g.quantity == "mesh") {
    csv::Table t({"zeta", "phi", "x", "y", "z"});
    for (double c : grid) {
      const double z = zeta_of(c);
      for (std::size_t j = 0; j < g.phi_samples; ++j) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(g.phi_samples);
        const Vec3 v = embed_catenoid(shape, z, phi);
        t.add_row({format_double(z), format_double(phi), format_double(v.x), format_double(v.y),
                   format_double(v.z)});
      }
    }
    csv::write_text(g.out, t.str());
    return kOk;
  }
  if (g.quantity == "metric") {
    csv::Table t({coord, "g11", "g22", "sqrt_g"});
    const Chart chart = rho ? Chart::RhoPhi : Chart::ZPhi;
    for (double c : grid) {
      const MetricSample m = catenoid_metric(shape, ChartPoint{chart, c, 0.0});
      t.add_row({format_double(c), format_double(m.g11), format_double(m.g22),
                 format_double(m.sqrt_g)});
    }
    csv::write_text(g.out, t.str());
    return kOk;
  }
  if (g.quantity == "curvature") {
    csv::Table t({coord, "kappa1", "kappa2", "H", "K"});
    for (double c : grid) {
      const CurvatureSample k = curvature(shape, zeta_of(c));
      t.add_row({format_double(c), format_double(k.kappa1), format_double(k.kappa2),
                 format_double(k.mean), format_double(k.gaussian)});
    }
    csv::write_text(g.out, t.str());
    return kOk;
  }
  // potential: da Costa term with m0 = hbar = 1, three evaluation routes.
  csv::Table t({coord, "V", "V_mean_gaussian", "V_principal"});
  const PhysicalScales scales(1.0, 1.0, g.radius);
  for (double c : grid) {
    const double z = zeta_of(c);
    const GeometricPotentialForms f = geometric_potential_forms(shape, scales, z);
    t.add_row({format_double(c), format_double(geometric_potential(shape, scales, z)),
               format_double(f.mean_gaussian), format_double(f.principal_split)});
  }
  csv::write_text(g.out, t.str());
  return kOk;
}

// --- potential ----------------------------------------------------------------

struct PotentialArgs {
  std::string chart = "zeta";
  int m = 0;
  double eps = 0.1;
  double min = -3.0;
  double max = 3.0;
  std::size_t samples = 601;
  bool renormalized = false;
  std::string patch = "plus";
  std::string convention = "v-minus-e";
  std::string out = "-";
};

int run_potential(const PotentialArgs& p) {
  require_range(p.min, p.max, p.samples);
  Chart chart = Chart::ZPhi;
  if (p.chart == "eta") chart = p.patch == "minus" ? Chart::EtaMinus : Chart::EtaPlus;
  if (p.chart == "arc") chart = Chart::Arc;
  if (p.renormalized && !(chart == Chart::EtaPlus || chart == Chart::EtaMinus))
    throw DomainError("--renormalized applies to the eta chart only");
  const auto conv =
      p.convention == "unit" ? EnergyConvention::UnitEnergy : EnergyConvention::VMinusE;
  const PotentialCurve curve = sample_potential(chart, ChannelSpec{p.m, p.eps}, p.min, p.max,
                                                p.samples, p.renormalized, conv);
  csv::Table t({"coord", "value", "m", "eps", "chart"});
  for (std::size_t i = 0; i < curve.grid.size(); ++i)
    t.add_row({format_double(curve.grid[i]), format_double(curve.values[i]), std::to_string(p.m),
               format_double(p.eps), chart_name(chart)});
  csv::write_text(p.out, t.str());
  return kOk;
}

// --- bound states -------------------------------------------------------------

struct BoundArgs {
  int m = 0;
  double eps_min = -10.0;
  double eps_max = -1e-3;
  std::string method = "both";
  double tol = 1e-10;
  double zeta_max = 12.0;
  std::size_t samples = 4001;
  bool cross_chart = false;
  std::string out = "-";
};

int run_bound_states(const BoundArgs& b) {
  BoundStateOptions opts;
  opts.eps_min = b.eps_min;
  opts.eps_max = b.eps_max;
  opts.tol = b.tol;
  opts.zeta_max = b.zeta_max;
  opts.samples = b.samples;
  if (!(b.eps_max > b.eps_min)) throw DomainError("--eps-max must exceed --eps-min");

  std::vector<BoundStateMethod> methods;
  if (b.method != "matrix") methods.push_back(BoundStateMethod::Shooting);
  if (b.method != "shooting") methods.push_back(BoundStateMethod::Matrix);

  csv::Table t({"m", "method", "index", "eps", "nodes", "parity", "raw_eps", "eps_eta",
                "cross_chart_difference"});
  std::vector<std::vector<BoundState>> found;
  for (BoundStateMethod method : methods) {
    found.push_back(bound_states(b.m, opts, method));
    const auto& states = found.back();
    for (std::size_t i = 0; i < states.size(); ++i) {
      const BoundState& s = states[i];
      std::string eta, diff;
      if (b.cross_chart && method == BoundStateMethod::Shooting) {
        const CrossChartReport r = cross_chart_check(s);
        eta = format_double(r.eps_eta_plus);
        diff = format_double(r.abs_difference);
      }
      t.add_row({std::to_string(b.m), method_name(method), std::to_string(i),
                 format_double(s.channel.eps), std::to_string(s.nodes),
                 parity_name(s.wave.parity),
                 method == BoundStateMethod::Matrix ? format_double(s.raw_eigenvalue) : "", eta,
                 diff});
    }
  }
  csv::write_text(b.out, t.str());

  if (found.size() == 2) {
    const auto& a = found[0];
    const auto& c = found[1];
    if (a.size() != c.size()) {
      std::cerr << "shooting found " << a.size() << " states, matrix " << c.size() << "\n";
      return kNumerical;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      std::cerr << "state " << i << ": |shooting - matrix| = "
                << format_double(std::abs(a[i].channel.eps - c[i].channel.eps)) << "\n";
  }
  return kOk;
}

// --- scatter ------------------------------------------------------------------

struct ScatterArgs {
  int m = 0;
  std::string eps_grid = "0.01:1:25";
  bool log_grid = false;
  double u_max = 0.0;
  bool tail_correction = false;
  std::string out = "-";
};

int run_scatter(const ScatterArgs& s) {
  GridSpec grid = GridSpec::parse(s.eps_grid);
  grid.log_spaced = s.log_grid;
  SweepTask task;
  task.quantity = SweepQuantity::Transmission;
  task.m_values = {s.m};
  task.parameters = grid.values();
  task.scattering.u_max = s.u_max;
  task.scattering.tail_correction = s.tail_correction;
  const SweepDataset ds = run_sweep(task);
  csv::write_text(s.out, ds.table.str());
  if (ds.failures) {
    std::cerr << ds.failures << " row(s) failed; see the status and error columns\n";
    return kNumerical;
  }
  return kOk;
}

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::string json = "-";
  bool strict = false;
};

int run_verify(const VerifyArgs& v) {
  std::vector<AuditReport> reports;
  if (v.suite == "reflectionless" || v.suite == "all") {
    ReflectionlessAuditConfig cfg;
    if (v.json != "-") {
      std::filesystem::path p(v.json);
      p.replace_extension();
      cfg.artifact_path = p.string() + ".reflectionless_trend.csv";
    }
    reports.push_back(audit_reflectionless(cfg));
  }
  if (v.suite == "charts" || v.suite == "all") reports.push_back(audit_charts());
  if (v.suite == "equivalence" || v.suite == "all") reports.push_back(audit_equivalence());

  Json doc;
  doc["suite"] = v.suite;
  std::vector<Verdict> vs;
  Json arr = Json::array();
  for (const auto& r : reports) {
    vs.push_back(r.verdict);
    arr.push_back(r.to_json());
    std::cerr << r.claim_id << ": " << verdict_name(r.verdict) << "\n";
  }
  const Verdict overall = combine(vs);
  doc["verdict"] = verdict_name(overall);
  doc["reports"] = std::move(arr);
  csv::write_text(v.json, doc.dump(2) + "\n");
  if (v.strict && overall == Verdict::Inconsistent) return kInconsistent;
  return kOk;
}

// --- wormhole-check -----------------------------------------------------------

struct WormholeArgs {
  double b0 = 1.0;
  double theta0 = std::numbers::pi / 2.0;
  double r_min = 1.001;
  double r_max = 10.0;
  std::size_t samples = 1001;
  std::string out = "-";
};

int run_wormhole(const WormholeArgs& w) {
  require_range(w.r_min, w.r_max, w.samples);
  if (!(w.r_min - w.b0 >= kThroatCollar * w.b0))
    throw DomainError("--r-min must stay outside the throat collar r - b0 >= 1e-6 b0");
  const double a = std::sin(w.theta0);
  csv::Table t({"r", "l", "z", "g_rr", "g_phiphi", "g_rr_from_l", "g_phiphi_from_l",
                "relative_deviation"});
  double worst = 0.0;
  for (double r : linspace(w.r_min, w.r_max, w.samples)) {
    const MetricSample g = wormhole_section_metric(w.b0, w.theta0, r);
    const double l = wormhole_proper_distance(w.b0, r);
    const double dl = r / l;
    const double grr = dl * dl;
    const double gpp = a * a * (w.b0 * w.b0 + l * l);
    const double dev = std::max(std::abs(grr - g.g11) / g.g11, std::abs(gpp - g.g22) / g.g22);
    worst = std::max(worst, dev);
    t.add_row({format_double(r), format_double(l), format_double(wormhole_profile(w.b0, r)),
               format_double(g.g11), format_double(g.g22), format_double(grr), format_double(gpp),
               format_double(dev)});
  }
  csv::write_text(w.out, t.str());
  std::cerr << "max relative deviation " << format_double(worst) << "\n";
  return kOk;
}

// --- figures ------------------------------------------------------------------

struct FigureArgs {
  std::string which = "fig1";
  std::size_t samples = 0;
  bool renormalized = false;
  std::string out = "-";
};

int run_figures(const FigureArgs& f) {
  FigureParams p;
  if (f.samples) p.samples = f.samples;
  p.renormalized = f.renormalized;
  csv::write_text(f.out, figure_data(parse_figure(f.which), p));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catenoid wormhole-section quantum mechanics toolkit"};
  app.require_subcommand(1);
  int code = kOk;

  GeometryArgs ga;
  auto* geo = app.add_subcommand("geometry", "Metric, curvature, da Costa potential or mesh");
  geo->add_option("--quantity", ga.quantity)->check(CLI::IsMember({"metric", "curvature", "potential", "mesh"}));
  geo->add_option("--chart", ga.chart)->check(CLI::IsMember({"zeta", "rho"}));
  geo->add_option("--radius", ga.radius);
  geo->add_option("--a", ga.a, "Section scale sin(theta0)");
  geo->add_option("--min", ga.min);
  geo->add_option("--max", ga.max);
  geo->add_option("--samples", ga.samples);
  geo->add_option("--phi-samples", ga.phi_samples, "Mesh points in phi");
  geo->add_option("--out", ga.out);
  geo->callback([&] { code = run_geometry(ga); });

  PotentialArgs pa;
  auto* pot = app.add_subcommand("potential", "Channel potential in one chart");
  pot->add_option("--chart", pa.chart)->check(CLI::IsMember({"zeta", "eta", "arc"}));
  pot->add_option("--m", pa.m);
  pot->add_option("--eps", pa.eps);
  pot->add_option("--min", pa.min);
  pot->add_option("--max", pa.max);
  pot->add_option("--samples", pa.samples);
  pot->add_option("--renormalized", pa.renormalized);
  pot->add_option("--patch", pa.patch)->check(CLI::IsMember({"plus", "minus"}));
  pot->add_option("--convention", pa.convention, "eta chart: V - E or V with E = 1")
      ->check(CLI::IsMember({"v-minus-e", "unit"}));
  pot->add_option("--out", pa.out);
  pot->callback([&] { code = run_potential(pa); });

  BoundArgs ba;
  auto* bs = app.add_subcommand("bound-states", "Negative-eps states of one channel");
  bs->add_option("--m", ba.m);
  bs->add_option("--eps-min", ba.eps_min);
  bs->add_option("--eps-max", ba.eps_max);
  bs->add_option("--method", ba.method)->check(CLI::IsMember({"shooting", "matrix", "both"}));
  bs->add_option("--tol", ba.tol);
  bs->add_option("--zeta-max", ba.zeta_max);
  bs->add_option("--samples", ba.samples);
  bs->add_flag("--cross-chart", ba.cross_chart, "Re-solve shooting states in the eta chart");
  bs->add_option("--out", ba.out);
  bs->callback([&] { code = run_bound_states(ba); });

  ScatterArgs sa;
  auto* sc = app.add_subcommand("scatter", "Transmission across the throat");
  sc->add_option("--m", sa.m);
  sc->add_option("--eps-grid", sa.eps_grid, "MIN:MAX:COUNT");
  sc->add_flag("--log-grid", sa.log_grid, "Geometric spacing of the eps grid");
  sc->add_option("--u-max", sa.u_max, "Half-width in u; 0 picks max(40, 20/sqrt(eps))");
  sc->add_flag("--tail-correction", sa.tail_correction, "Match to Riccati-Hankel waves");
  sc->add_option("--out", sa.out);
  sc->callback([&] { code = run_scatter(sa); });

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run claim audits");
  ver->add_option("--suite", va.suite)
      ->check(CLI::IsMember({"reflectionless", "charts", "equivalence", "all"}));
  ver->add_option("--json", va.json);
  ver->add_flag("--strict", va.strict, "Exit 3 on an INCONSISTENT verdict");
  ver->callback([&] { code = run_verify(va); });

  WormholeArgs wa;
  auto* wh = app.add_subcommand("wormhole-check", "Section line element along r");
  wh->add_option("--b0", wa.b0);
  wh->add_option("--theta0", wa.theta0);
  wh->add_option("--r-min", wa.r_min);
  wh->add_option("--r-max", wa.r_max);
  wh->add_option("--samples", wa.samples);
  wh->add_option("--out", wa.out);
  wh->callback([&] { code = run_wormhole(wa); });

  FigureArgs fa;
  auto* fig = app.add_subcommand("figures", "Figure data as CSV");
  fig->add_option("--which", fa.which)->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  fig->add_option("--samples", fa.samples);
  fig->add_flag("--renormalized", fa.renormalized, "fig3: V_r - E");
  fig->add_option("--out", fa.out);
  fig->callback([&] { code = run_figures(fa); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
