// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "catenoid/app/audit.hpp"
#include "catenoid/app/classify.hpp"
#include "catenoid/app/csv.hpp"
#include "catenoid/app/sweep.hpp"
#include "catenoid/bound_states.hpp"
#include "catenoid/charts.hpp"
#include "catenoid/cross_chart.hpp"
#include "catenoid/geometry.hpp"
#include "catenoid/potentials.hpp"
#include "catenoid/scattering.hpp"
#include "golden.hpp"

using namespace catenoid;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double sech(double z) { return 1.0 / std::cosh(z); }

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

const AuditComponent* find(const AuditReport& rep, const std::string& id) {
  for (const auto& c : rep.components)
    if (c.id == id) return &c;
  return nullptr;
}

Outcome minimal_surface() {
  const CatenoidShape shape(1.0, 1.0);
  double h = 0.0, k = 0.0;
  for (double z : linspace(-10.0, 10.0, 2001)) {
    const CurvatureSample c = curvature(shape, z);
    const double s = sech(z);
    h = std::max(h, std::abs(c.mean));
    k = std::max(k, std::abs(c.gaussian + s * s * s * s));
  }
  return {h < 1e-12 && k < 1e-10, "max|H| = " + fmt(h) + ", max|K + sech^4| = " + fmt(k)};
}

Outcome wormhole_equivalence() {
  double worst = 0.0;
  for (double b0 : {0.5, 1.0, 2.0}) {
    std::vector<double> r;
    const double lo = b0 * (1.0 + 1e-6);
    for (double t : linspace(0.0, 1.0, 2001)) r.push_back(lo + t * (10.0 * b0 - lo));
    worst = std::max(worst, equivalence_audit(b0, r).max_relative_deviation);
  }
  bool exact = true;
  for (double theta0 : {0.3, 0.7853981633974483, 1.2, 1.5707963267948966, 2.0, 2.356194490192345})
    for (double r : linspace(1.5, 10.0, 101)) {
      const double a = std::sin(theta0);
      exact = exact && wormhole_section_metric(1.0, theta0, r).g22 == (a * a) * (r * r);
    }
  return {worst < 1e-12 && exact, "max relative deviation = " + fmt(worst) +
                                      (exact ? ", theta sections exact" : ", theta sections inexact")};
}

Outcome da_costa_forms() {
  const CatenoidShape shape(1.0, 1.0);
  const PhysicalScales scales(1.0, 1.0, 1.0);
  double worst = 0.0;
  for (double z : linspace(-10.0, 10.0, 2001)) {
    const GeometricPotentialForms f = geometric_potential_forms(shape, scales, z);
    worst = std::max(worst, std::abs(f.closed_form - f.principal_split) / std::abs(f.closed_form));
    worst = std::max(worst, std::abs(f.closed_form - f.mean_gaussian) / std::abs(f.closed_form));
  }
  return {worst < 1e-13, "max relative deviation = " + fmt(worst)};
}

Outcome chart_audits() {
  const AuditReport rep = audit_charts();
  const auto* rt = find(rep, "roundtrip");
  const auto* co = find(rep, "cosh_identity");
  const auto* rad = find(rep, "radial_coefficient");
  const auto* ang = find(rep, "angular_coefficient");
  if (!rt || !co || !rad || !ang) return {false, "missing chart audit component"};
  const double r = rt->measured["max_deviation"].get<double>();
  const double c = co->measured["max_relative_deviation"].get<double>();
  const double g = rad->measured["fitted"].get<double>();
  const bool reported = ang->measured.contains("fitted_leading") &&
                        ang->measured.contains("series_leading");
  return {r < 1e-14 && c < 1e-14 && std::abs(g - 0.25) < 1e-4 && reported,
          "roundtrip = " + fmt(r) + ", cosh = " + fmt(c) + ", g_etaeta fit = " + fmt(g) +
              ", angular leading = " + fmt(ang->measured["fitted_leading"].get<double>()) +
              " (series " + fmt(ang->measured["series_leading"].get<double>()) + ")"};
}

Outcome bargmann_control() {
  const PoschlTellerSpec one{1.0};
  BoundStateOptions opts;
  opts.eps_min = -1.5;
  opts.eps_max = -0.5;
  opts.zeta_max = 40.0;
  const auto s = bound_states(WeightedProblem::poschl_teller(one), opts, BoundStateMethod::Shooting);
  if (s.size() != 1) return {false, "expected one lambda = 1 bound state, found " + std::to_string(s.size())};
  const double de = std::abs(s[0].channel.eps + 1.0);

  double worst = 0.0;
  auto pot = [&](double u) { return poschl_teller_potential(one, u); };
  for (int i = 0; i < 20; ++i) {
    const double k = std::exp(std::log(0.2) + i * (std::log(5.0) - std::log(0.2)) / 19.0);
    worst = std::max(worst, std::abs(transmission(pot, k * k).transmission() - 1.0));
  }
  const PoschlTellerSpec s1 = PoschlTellerSpec::from_strength(1.0);
  const double t1 = transmission([&](double u) { return poschl_teller_potential(s1, u); }, 1.0).transmission();
  const double dt = std::abs(t1 - golden::kPoschlTellerStrength1K1);
  return {de < 1e-8 && worst < 1e-6 && dt < 1e-4,
          "|eps + 1| = " + fmt(de) + ", max||T|^2 - 1| = " + fmt(worst) + ", strength-1 error = " + fmt(dt)};
}

Outcome catenoid_spectra() {
  const BoundStateOptions opts;
  const auto shot = bound_states(0, opts, BoundStateMethod::Shooting);
  const auto mat = bound_states(0, opts, BoundStateMethod::Matrix);
  if (shot.size() != 1 || mat.size() != 1) return {false, "expected one m = 0 state per method"};
  const double es = shot[0].channel.eps, em = mat[0].channel.eps;
  const double agree = std::abs(es - em);
  const double gold = std::abs(em - golden::kGroundStateM0);
  bool invariants = true;
  for (const auto* s : {&shot[0], &mat[0]})
    invariants = invariants && s->nodes == 0 && count_nodes(s->wave.values) == 0 &&
                 detect_parity(s->wave.values) == Parity::Even;
  // Sturm ordering on a three-state well: n-th state has n nodes, alternating parity.
  BoundStateOptions pt;
  pt.eps_min = -10.0;
  pt.eps_max = -0.5;
  pt.zeta_max = 30.0;
  pt.samples = 12001;
  const auto three = bound_states(WeightedProblem::poschl_teller({3.0}), pt, BoundStateMethod::Matrix);
  bool sturm = three.size() == 3;
  for (std::size_t n = 0; sturm && n < three.size(); ++n)
    sturm = count_nodes(three[n].wave.values) == static_cast<int>(n) &&
            detect_parity(three[n].wave.values) == (n % 2 ? Parity::Odd : Parity::Even) &&
            (n == 0 || three[n].channel.eps > three[n - 1].channel.eps);
  for (int m : {1, 2}) sturm = sturm && bound_states(m, opts, BoundStateMethod::Matrix).empty();
  bool monotone = true;
  double prev = -INFINITY;
  for (int i = 0; i < 10; ++i) {
    const double mu = lowest_confined_eigenvalue(0, 0.02 + 0.03 * i);
    monotone = monotone && mu >= prev;
    prev = mu;
  }
  return {agree < 1e-6 && gold < 1e-6 && std::abs(es - golden::kGroundStateM0) < 1e-6 && invariants &&
              sturm && monotone,
          "eps* = " + csv::format_double(em) + ", |shooting - matrix| = " + fmt(agree) +
              ", |matrix - golden| = " + fmt(gold) + (invariants ? "" : ", node/parity FAILED") +
              (sturm ? "" : ", Sturm FAILED") + (monotone ? ", mu0 monotone" : ", mu0 NOT monotone")};
}

Outcome cross_chart() {
  double worst = 0.0;
  std::size_t states = 0;
  for (int m : {0, 1, 2})
    for (BoundStateMethod method : {BoundStateMethod::Shooting, BoundStateMethod::Matrix})
      for (const auto& s : bound_states(m, {}, method)) {
        worst = std::max(worst, cross_chart_check(s).abs_difference);
        ++states;
      }
  return {states > 0 && worst < 1e-6,
          std::to_string(states) + " states, max |eps_zeta - eps_eta| = " + fmt(worst)};
}

Outcome unitarity() {
  double worst = 0.0;
  std::size_t n = 0;
  for (int m : {0, 1, 2}) {
    GridSpec g{0.01, 1.0, 9, true};
    for (double eps : g.values()) {
      const ScatteringResult r = transmission(m, eps);
      worst = std::max(worst, std::abs(r.reflection() + r.transmission() - 1.0));
      ++n;
    }
  }
  return {worst < 1e-6, std::to_string(n) + " results, max||r|^2 + |t|^2 - 1| = " + fmt(worst)};
}

Outcome reflectionless_report() {
  const AuditReport rep = audit_reflectionless();
  const auto* a = find(rep, "sech_ground_state");
  const auto* b = find(rep, "transmission_trend");
  const auto* c = find(rep, "bargmann_control");
  if (!a || !b || !c) return {false, "missing report component"};
  const double da = std::abs(a->measured["max_abs_residual"].get<double>() - golden::kSechResidualMax);
  const Json& table = b->measured["table"];
  bool reaches = false;
  for (const auto& row : table) reaches = reaches || row["eps"].get<double>() == 0.01;
  const bool control = c->verdict == Verdict::Consistent;
  const Verdict expect = control ? combine({a->verdict, b->verdict}) : Verdict::Inconclusive;
  const Json doc = rep.to_json();
  const bool emitted = doc.contains("verdict") && doc["verdict"] == verdict_name(expect);
  return {da < 1e-6 && table.size() >= 2 && reaches && control && emitted,
          "sech residual error = " + fmt(da) + ", trend rows = " + std::to_string(table.size()) +
              ", control " + verdict_name(c->verdict) + ", verdict " + verdict_name(rep.verdict)};
}

Outcome classification() {
  const std::vector<int> ms{0, 1, -1, 2, -2};
  const auto cs = classify_channels(2.0, ms, 100.0);
  bool ok = cs.size() == ms.size();
  std::string detail;
  for (const auto& c : cs) {
    const int am = std::abs(c.m);
    bool good;
    if (am == 2)
      good = c.category == ChannelCategory::PositiveDefinite && c.min_value > 0.0;
    else
      good = (c.category == ChannelCategory::NegativeNearOriginSlow ||
              c.category == ChannelCategory::NegativeNearOriginFast) &&
             std::abs(c.value_at_origin - (am == 0 ? -2.5 : -1.5)) < 1e-12;
    ok = ok && good;
    detail += (detail.empty() ? "" : ", ") + std::string("m=") + std::to_string(c.m) + " " +
              category_name(c.category) + " V0=" + csv::format_double(c.value_at_origin);
  }
  return {ok, detail};
}

Outcome determinism() {
  SweepTask task;
  task.quantity = SweepQuantity::Transmission;
  task.m_values = {0, 1, 2};
  task.parameters = GridSpec{0.01, 1.0, 12, false}.values();
  task.workers = 1;
  const std::string one = run_sweep(task).table.str();
  task.workers = 8;
  const std::string eight = run_sweep(task).table.str();
  const std::string serial = run_sweep_serial(task).table.str();
  return {one == eight && one == serial && !one.empty(),
          std::to_string(one.size()) + " bytes, 1 vs 8 workers " + (one == eight ? "identical" : "DIFFER") +
              ", serial " + (one == serial ? "identical" : "DIFFERS")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"minimal-surface identity", minimal_surface},
      {"wormhole equivalence", wormhole_equivalence},
      {"da Costa dual forms", da_costa_forms},
      {"chart audits", chart_audits},
      {"Bargmann control", bargmann_control},
      {"catenoid spectra", catenoid_spectra},
      {"cross-chart agreement", cross_chart},
      {"scattering unitarity", unitarity},
      {"reflectionless report", reflectionless_report},
      {"channel classification", classification},
      {"sweep determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 60.0) {
      o.pass = false;
      o.detail += " (over 60 s)";
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
