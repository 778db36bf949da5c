#include "catenoid/app/audit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catenoid/app/csv.hpp"
#include "catenoid/charts.hpp"
#include "catenoid/errors.hpp"
#include "catenoid/geometry.hpp"
#include "catenoid/parallel.hpp"
#include "catenoid/potentials.hpp"
#include "catenoid/residual.hpp"
#include "catenoid/scattering.hpp"

namespace catenoid {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "CONSISTENT";
    case Verdict::Inconsistent: return "INCONSISTENT";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Verdict combine(const std::vector<Verdict>& vs) {
  bool all = !vs.empty();
  for (Verdict v : vs) {
    if (v == Verdict::Inconsistent) return Verdict::Inconsistent;
    all = all && v == Verdict::Consistent;
  }
  return all ? Verdict::Consistent : Verdict::Inconclusive;
}

Json AuditReport::to_json() const {
  Json j;
  j["claim"] = claim_id;
  j["inputs"] = inputs;
  Json comps = Json::array();
  for (const auto& c : components) {
    Json cj;
    cj["id"] = c.id;
    cj["expectation"] = c.expectation;
    cj["measured"] = c.measured;
    cj["verdict"] = verdict_name(c.verdict);
    if (!c.note.empty()) cj["note"] = c.note;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  j["verdict"] = verdict_name(verdict);
  j["artifacts"] = artifacts;
  j["diagnostics"] = diagnostics;
  return j;
}

// --- configs ------------------------------------------------------------------

namespace {

template <class T>
void get_if(const Json& j, const char* key, T& into) {
  if (j.contains(key)) into = j.at(key).get<T>();
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    out[i] = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
  }
  if (n > 1) out.back() = hi;
  return out;
}

}  // namespace

Json ReflectionlessAuditConfig::to_json() const {
  Json j;
  j["m"] = m;
  j["eps_sweep"] = eps_sweep;
  j["trend_threshold"] = trend_threshold;
  j["control_points"] = control_points;
  j["control_k_min"] = control_k_min;
  j["control_k_max"] = control_k_max;
  j["control_tolerance"] = control_tolerance;
  j["residual_extent"] = residual_extent;
  j["residual_step"] = residual_step;
  j["residual_tolerance"] = residual_tolerance;
  j["unitarity_tolerance"] = unitarity_tolerance;
  j["artifact_path"] = artifact_path;
  return j;
}

ReflectionlessAuditConfig ReflectionlessAuditConfig::from_json(const Json& j) {
  ReflectionlessAuditConfig c;
  get_if(j, "m", c.m);
  get_if(j, "eps_sweep", c.eps_sweep);
  get_if(j, "trend_threshold", c.trend_threshold);
  get_if(j, "control_points", c.control_points);
  get_if(j, "control_k_min", c.control_k_min);
  get_if(j, "control_k_max", c.control_k_max);
  get_if(j, "control_tolerance", c.control_tolerance);
  get_if(j, "residual_extent", c.residual_extent);
  get_if(j, "residual_step", c.residual_step);
  get_if(j, "residual_tolerance", c.residual_tolerance);
  get_if(j, "unitarity_tolerance", c.unitarity_tolerance);
  get_if(j, "artifact_path", c.artifact_path);
  return c;
}

Json ChartsAuditConfig::to_json() const {
  Json j;
  j["zeta_extent"] = zeta_extent;
  j["roundtrip_samples"] = roundtrip_samples;
  j["roundtrip_tolerance"] = roundtrip_tolerance;
  j["cosh_tolerance"] = cosh_tolerance;
  j["eta_max"] = eta_max;
  j["fit_samples"] = fit_samples;
  j["fit_tolerance"] = fit_tolerance;
  return j;
}

ChartsAuditConfig ChartsAuditConfig::from_json(const Json& j) {
  ChartsAuditConfig c;
  get_if(j, "zeta_extent", c.zeta_extent);
  get_if(j, "roundtrip_samples", c.roundtrip_samples);
  get_if(j, "roundtrip_tolerance", c.roundtrip_tolerance);
  get_if(j, "cosh_tolerance", c.cosh_tolerance);
  get_if(j, "eta_max", c.eta_max);
  get_if(j, "fit_samples", c.fit_samples);
  get_if(j, "fit_tolerance", c.fit_tolerance);
  return c;
}

Json EquivalenceAuditConfig::to_json() const {
  Json j;
  j["b0_values"] = b0_values;
  j["r_max_factor"] = r_max_factor;
  j["samples"] = samples;
  j["collar"] = collar;
  j["tolerance"] = tolerance;
  j["theta0_values"] = theta0_values;
  return j;
}

EquivalenceAuditConfig EquivalenceAuditConfig::from_json(const Json& j) {
  EquivalenceAuditConfig c;
  get_if(j, "b0_values", c.b0_values);
  get_if(j, "r_max_factor", c.r_max_factor);
  get_if(j, "samples", c.samples);
  get_if(j, "collar", c.collar);
  get_if(j, "tolerance", c.tolerance);
  get_if(j, "theta0_values", c.theta0_values);
  return c;
}

// --- reflectionless -----------------------------------------------------------

namespace {

AuditComponent sech_residual_component(const ReflectionlessAuditConfig& cfg) {
  AuditComponent c;
  c.id = "sech_ground_state";
  c.expectation = "Phi = sech(zeta) solves the m = 0, eps = 0 channel equation (residual 0)";
  const auto n = static_cast<std::size_t>(std::llround(2.0 * cfg.residual_extent / cfg.residual_step)) + 1;
  WaveFunction w;
  w.grid = Grid1D(-cfg.residual_extent, cfg.residual_extent, n);
  w.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.values[i] = 1.0 / std::cosh(w.grid[i]);
  const ChannelSpec ch{0, 0.0};
  const ResidualReport r = residual(w, [&](double z) { return v_zeta(ch, z); });

  // Pointwise distance to the closed form -sech tanh^2.
  double closed = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double z = w.grid[i];
    const double t = std::tanh(z);
    closed = std::max(closed, std::abs(r.values[i] + t * t / std::cosh(z)));
  }
  c.measured["max_abs_residual"] = r.max_abs;
  c.measured["max_location"] = std::abs(r.max_location);
  c.measured["weighted_l2"] = r.weighted_l2;
  c.measured["closed_form"] = "-sech(zeta) tanh^2(zeta)";
  c.measured["closed_form_max_deviation"] = closed;
  c.measured["tolerance"] = cfg.residual_tolerance;
  c.verdict = r.max_abs < cfg.residual_tolerance ? Verdict::Consistent : Verdict::Inconsistent;
  c.note = "sech(zeta) is the bound state of -Phi'' - 2 sech^2 Phi, not of the m = 0 channel";
  return c;
}

struct TrendRow {
  double eps = 0.0;
  ScatteringResult plane;
  ScatteringResult hankel;
  std::string error;
};

AuditComponent trend_component(const ReflectionlessAuditConfig& cfg, AuditReport& report) {
  AuditComponent c;
  c.id = "transmission_trend";
  c.expectation = "|T|^2 = 1 across the catenoid for all eps > 0";

  auto rows = parallel::map_omp(
      cfg.eps_sweep,
      [&](double eps) {
        TrendRow row;
        row.eps = eps;
        try {
          row.plane = transmission(cfg.m, eps);
          ScatteringOptions opts;
          opts.tail_correction = true;
          row.hankel = transmission(cfg.m, eps, opts);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        return row;
      },
      cfg.workers);

  bool failed = false;
  double max_defect = 0.0;
  Json table = Json::array();
  csv::Table artifact({"eps", "k", "T", "R", "T_tail_corrected", "unitarity_defect"});
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      failed = true;
      report.diagnostics.push_back("eps = " + csv::format_double(row.eps) + ": " + row.error);
      continue;
    }
    const double defect = std::max(row.plane.unitarity_defect, row.hankel.unitarity_defect);
    max_defect = std::max(max_defect, defect);
    Json rj;
    rj["eps"] = row.eps;
    rj["k"] = row.plane.k;
    rj["T"] = row.plane.transmission();
    rj["R"] = row.plane.reflection();
    rj["T_tail_corrected"] = row.hankel.transmission();
    rj["unitarity_defect"] = defect;
    table.push_back(rj);
    artifact.add_row({csv::format_double(row.eps), csv::format_double(row.plane.k),
                      csv::format_double(row.plane.transmission()),
                      csv::format_double(row.plane.reflection()),
                      csv::format_double(row.hankel.transmission()), csv::format_double(defect)});
  }
  c.measured["table"] = table;
  c.measured["max_unitarity_defect"] = max_defect;
  c.measured["threshold"] = cfg.trend_threshold;

  if (failed || table.empty()) {
    c.verdict = Verdict::Inconclusive;
    c.note = "solver failure in the sweep; see diagnostics";
    return c;
  }

  // Trend: least-squares slope of |T|^2 against log10(eps); monotone flag on
  // eps-sorted rows.
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : table) pts.emplace_back(r["eps"].get<double>(), r["T"].get<double>());
  std::sort(pts.begin(), pts.end());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [e, t] : pts) {
    const double x = std::log10(e);
    sx += x;
    sy += t;
    sxx += x * x;
    sxy += x * t;
  }
  const double n = static_cast<double>(pts.size());
  const double slope = pts.size() > 1 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
  bool increasing = true, decreasing = true;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    increasing = increasing && pts[i].second > pts[i - 1].second;
    decreasing = decreasing && pts[i].second < pts[i - 1].second;
  }
  c.measured["trend_coefficient"] = slope;
  c.measured["trend_variable"] = "d|T|^2 / d log10(eps)";
  c.measured["monotone"] = increasing || decreasing;
  c.measured["monotone_direction"] =
      increasing ? "T rises with eps" : (decreasing ? "T falls with eps" : "none");

  const Json& low = *std::min_element(table.begin(), table.end(), [](const Json& a, const Json& b) {
    return a["eps"].get<double>() < b["eps"].get<double>();
  });
  const double t_plane = low["T"].get<double>();
  const double t_tail = low["T_tail_corrected"].get<double>();
  c.measured["eps_at_rule"] = low["eps"];
  c.measured["T_at_rule"] = t_plane;
  const bool pass_plane = t_plane > cfg.trend_threshold;
  const bool pass_tail = t_tail > cfg.trend_threshold;
  const double margin = std::abs(t_plane - cfg.trend_threshold);
  if (pass_plane != pass_tail || margin <= 10.0 * std::max(max_defect, cfg.unitarity_tolerance)) {
    c.verdict = Verdict::Inconclusive;
    c.note = "plane-wave and tail-corrected matching straddle the threshold";
  } else {
    c.verdict = pass_plane ? Verdict::Consistent : Verdict::Inconsistent;
    c.note = "rule: CONSISTENT iff |T|^2 > threshold at the smallest eps in the sweep";
  }

  if (!cfg.artifact_path.empty()) {
    csv::write_text(cfg.artifact_path, artifact.str());
    report.artifacts.push_back(cfg.artifact_path);
  }
  return c;
}

AuditComponent control_component(const ReflectionlessAuditConfig& cfg, AuditReport& report) {
  AuditComponent c;
  c.id = "bargmann_control";
  c.expectation = "Poschl-Teller lambda = 1 is reflectionless: |T|^2 = 1";
  const PoschlTellerSpec pt{1.0};
  const auto ks = log_grid(cfg.control_k_min, cfg.control_k_max, cfg.control_points);
  auto pot = [&](double u) { return poschl_teller_potential(pt, u); };
  struct Out {
    double t = 0.0;
    std::string error;
  };
  const auto outs = parallel::map_omp(
      ks,
      [&](double k) {
        Out o;
        try {
          o.t = transmission(pot, k * k).transmission();
        } catch (const std::exception& e) {
          o.error = e.what();
        }
        return o;
      },
      cfg.workers);
  double worst = 0.0;
  bool failed = false;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (!outs[i].error.empty()) {
      failed = true;
      report.diagnostics.push_back("control k = " + csv::format_double(ks[i]) + ": " +
                                   outs[i].error);
      continue;
    }
    worst = std::max(worst, std::abs(outs[i].t - 1.0));
  }

  // Non-integer strength 1 at k = 1 against the closed form.
  const PoschlTellerSpec s1 = PoschlTellerSpec::from_strength(1.0);
  double t_num = std::nan(""), t_exact = poschl_teller_transmission(s1, 1.0);
  try {
    t_num = transmission([&](double u) { return poschl_teller_potential(s1, u); }, 1.0)
                .transmission();
  } catch (const std::exception& e) {
    failed = true;
    report.diagnostics.push_back(std::string("strength-1 control: ") + e.what());
  }

  c.measured["k_points"] = ks.size();
  c.measured["max_abs_T_minus_1"] = worst;
  c.measured["strength1_T_numeric"] = t_num;
  c.measured["strength1_T_closed_form"] = t_exact;
  c.measured["tolerance"] = cfg.control_tolerance;
  if (failed)
    c.verdict = Verdict::Inconclusive;
  else
    c.verdict = worst < cfg.control_tolerance ? Verdict::Consistent : Verdict::Inconsistent;
  return c;
}

}  // namespace

AuditReport audit_reflectionless(const ReflectionlessAuditConfig& cfg) {
  AuditReport rep;
  rep.claim_id = "reflectionless";
  rep.inputs = cfg.to_json();
  AuditComponent a, b, c;
  try {
    a = sech_residual_component(cfg);
  } catch (const std::exception& e) {
    a.id = "sech_ground_state";
    rep.diagnostics.push_back(std::string("sech check: ") + e.what());
  }
  b = trend_component(cfg, rep);
  c = control_component(cfg, rep);
  if (c.verdict != Verdict::Consistent)
    rep.verdict = Verdict::Inconclusive;  // the solver itself is not validated
  else
    rep.verdict = combine({a.verdict, b.verdict});
  rep.components = {a, b, c};
  return rep;
}

// --- charts -------------------------------------------------------------------

AuditReport audit_charts(const ChartsAuditConfig& cfg) {
  AuditReport rep;
  rep.claim_id = "charts";
  rep.inputs = cfg.to_json();
  const std::size_t n = std::max<std::size_t>(cfg.roundtrip_samples, 2);

  double roundtrip = 0.0, worst_zeta = 0.0, cosh_dev = 0.0, symmetry = 0.0, pullback = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = -cfg.zeta_extent + 2.0 * cfg.zeta_extent * static_cast<double>(i) /
                                            static_cast<double>(n - 1);
    const EtaCoordinate ec = to_eta(z);
    const double d = std::abs(from_eta(ec) - z) / std::max(1.0, std::abs(z));
    if (d > roundtrip) {
      roundtrip = d;
      worst_zeta = z;
    }
    const double ch = std::cosh(z);
    cosh_dev = std::max(cosh_dev, std::abs(cosh_from_eta(ec) - ch) / ch);

    // The MINUS patch carries literally the PLUS equations.
    const EtaCoordinate other{ec.patch == Patch::Plus ? Patch::Minus : Patch::Plus, ec.eta};
    const MetricSample g1 = eta_metric(ec), g2 = eta_metric(other);
    symmetry = std::max({symmetry, std::abs(g1.g11 - g2.g11), std::abs(g1.g22 - g2.g22),
                         std::abs(from_eta(ec) + from_eta(other))});

    // g_etaeta = cosh^2 (dzeta/deta)^2 and g_phiphi = cosh^2 with dzeta/deta = 1/x.
    const double x = ec.shifted();
    const double c2 = cosh_from_eta(ec) * cosh_from_eta(ec);
    pullback = std::max({pullback, std::abs(g1.g11 - c2 / (x * x)) / g1.g11,
                         std::abs(g1.g22 - c2) / g1.g22});
  }

  AuditComponent rt;
  rt.id = "roundtrip";
  rt.expectation = "zeta -> eta -> zeta is the identity on both patches";
  rt.measured["max_deviation"] = roundtrip;
  rt.measured["measure"] = "|dzeta| / max(1, |zeta|)";
  rt.measured["worst_zeta"] = worst_zeta;
  rt.measured["tolerance"] = cfg.roundtrip_tolerance;
  rt.verdict = roundtrip < cfg.roundtrip_tolerance ? Verdict::Consistent : Verdict::Inconsistent;

  AuditComponent co;
  co.id = "cosh_identity";
  co.expectation = "cosh u = (x^2 + 1)/(2x) with u read as zeta";
  co.measured["max_relative_deviation"] = cosh_dev;
  co.measured["tolerance"] = cfg.cosh_tolerance;
  co.verdict = cosh_dev < cfg.cosh_tolerance ? Verdict::Consistent : Verdict::Inconsistent;

  AuditComponent sy;
  sy.id = "patch_symmetry";
  sy.expectation = "PLUS and MINUS patches carry the same metric; zeta flips sign";
  sy.measured["max_deviation"] = symmetry;
  sy.verdict = symmetry == 0.0 ? Verdict::Consistent : Verdict::Inconsistent;

  AuditComponent pb;
  pb.id = "metric_pullback";
  pb.expectation = "eta metric equals the zeta metric pulled back through x = e^|zeta|";
  pb.measured["max_relative_deviation"] = pullback;
  pb.measured["tolerance"] = 1e-13;
  pb.verdict = pullback < 1e-13 ? Verdict::Consistent : Verdict::Inconsistent;

  const AsymptoticAudit fit = asymptotic_audit(cfg.eta_max, cfg.fit_samples);
  AuditComponent rad;
  rad.id = "radial_coefficient";
  rad.expectation = "g_etaeta -> 1/4 at large eta";
  rad.measured["fitted"] = fit.radial.leading;
  rad.measured["ci95_halfwidth"] = fit.radial.ci_halfwidth;
  rad.measured["stated"] = fit.stated_radial;
  rad.measured["series"] = fit.series_radial;
  rad.measured["tolerance"] = cfg.fit_tolerance;
  rad.verdict = std::abs(fit.radial.leading - fit.stated_radial) < cfg.fit_tolerance
                    ? Verdict::Consistent
                    : Verdict::Inconsistent;

  AuditComponent ang;
  ang.id = "angular_coefficient";
  ang.expectation = "g_phiphi prefactor 1/2 at large eta";
  ang.measured["fitted_leading"] = fit.angular.leading;
  ang.measured["ci95_halfwidth"] = fit.angular.ci_halfwidth;
  ang.measured["fitted_constant"] = fit.angular.constant;
  ang.measured["series_leading"] = fit.series_angular_leading;
  ang.measured["series_constant"] = fit.series_angular_constant;
  ang.measured["stated"] = fit.stated_angular;
  ang.measured["matches_stated_as_leading"] =
      std::abs(fit.angular.leading - fit.stated_angular) < cfg.fit_tolerance;
  ang.measured["matches_stated_as_constant"] =
      std::abs(fit.angular.constant - fit.stated_angular) < cfg.fit_tolerance;
  ang.verdict = Verdict::Inconclusive;
  ang.note = "report only: the stated 1/2 matches the additive constant, not the leading "
             "coefficient, and the intended reading is not determined";

  rep.components = {rt, co, sy, pb, rad, ang};
  rep.verdict = combine({rt.verdict, co.verdict, sy.verdict, pb.verdict, rad.verdict});
  return rep;
}

// --- equivalence --------------------------------------------------------------

AuditReport audit_equivalence(const EquivalenceAuditConfig& cfg) {
  AuditReport rep;
  rep.claim_id = "equivalence";
  rep.inputs = cfg.to_json();
  std::vector<Verdict> vs;

  for (double b0 : cfg.b0_values) {
    AuditComponent c;
    c.id = "line_element_b0_" + csv::format_double(b0);
    c.expectation = "dl^2 + (b0^2 + l^2) dphi^2 equals the catenoid line element in (r, phi)";
    // r - b0 log-spaced from the collar out to (factor - 1) b0.
    const auto offsets = log_grid(cfg.collar * b0, (cfg.r_max_factor - 1.0) * b0, cfg.samples);
    std::vector<double> r(offsets.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b0 + offsets[i];
    try {
      const EquivalenceAudit a = equivalence_audit(b0, r);
      c.measured["samples"] = a.samples;
      c.measured["r_min"] = r.front();
      c.measured["r_max"] = r.back();
      c.measured["max_radial_deviation"] = a.max_radial_deviation;
      c.measured["max_angular_deviation"] = a.max_angular_deviation;
      c.measured["max_relative_deviation"] = a.max_relative_deviation;
      c.measured["worst_r"] = a.worst_r;
      c.measured["tolerance"] = cfg.tolerance;
      c.verdict = a.max_relative_deviation < cfg.tolerance ? Verdict::Consistent
                                                           : Verdict::Inconsistent;
    } catch (const std::exception& e) {
      rep.diagnostics.push_back(c.id + ": " + e.what());
    }
    vs.push_back(c.verdict);
    rep.components.push_back(std::move(c));
  }

  AuditComponent th;
  th.id = "theta_sections";
  th.expectation = "theta0-section has g_phiphi = sin^2(theta0) r^2";
  std::size_t mismatches = 0, checked = 0;
  double mirror = 0.0;
  const double b0 = 1.0;
  const auto offsets = log_grid(cfg.collar, cfg.r_max_factor - 1.0, 101);
  for (double t0 : cfg.theta0_values) {
    const double a = std::sin(t0);
    for (double off : offsets) {
      const double rr = b0 + off;
      const MetricSample g = wormhole_section_metric(b0, t0, rr);
      ++checked;
      if (g.g22 != a * a * (rr * rr)) ++mismatches;
      const MetricSample gm = wormhole_section_metric(b0, std::numbers::pi - t0, rr);
      mirror = std::max(mirror, std::abs(gm.g22 - g.g22) / g.g22);
    }
  }
  th.measured["checked"] = checked;
  th.measured["inexact"] = mismatches;
  th.measured["mirror_theta_max_relative"] = mirror;
  th.verdict = mismatches == 0 && mirror < 1e-14 ? Verdict::Consistent : Verdict::Inconsistent;
  th.note = "mirror check compares theta0 with pi - theta0 (one rounding of pi - theta0 apart)";
  vs.push_back(th.verdict);
  rep.components.push_back(std::move(th));

  rep.verdict = combine(vs);
  return rep;
}

AuditReport rerun_audit(const Json& report) {
  const std::string claim = report.at("claim").get<std::string>();
  const Json& in = report.at("inputs");
  if (claim == "reflectionless") return audit_reflectionless(ReflectionlessAuditConfig::from_json(in));
  if (claim == "charts") return audit_charts(ChartsAuditConfig::from_json(in));
  if (claim == "equivalence") return audit_equivalence(EquivalenceAuditConfig::from_json(in));
  throw ConfigurationError("unknown audit claim '" + claim + "'");
}

}  // namespace catenoid
