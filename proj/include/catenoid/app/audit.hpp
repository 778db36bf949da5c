#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace catenoid {

using Json = nlohmann::ordered_json;

enum class Verdict { Consistent, Inconsistent, Inconclusive };

const char* verdict_name(Verdict v);

//! One claim component: what was measured and what the claim expects.
struct AuditComponent {
  std::string id;
  std::string expectation;
  Json measured = Json::object();
  Verdict verdict = Verdict::Inconclusive;
  std::string note;
};

struct AuditReport {
  std::string claim_id;
  Json inputs = Json::object();  // enough to re-run; see rerun_audit
  std::vector<AuditComponent> components;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> artifacts;
  std::vector<std::string> diagnostics;

  Json to_json() const;
};

struct ReflectionlessAuditConfig {
  int m = 0;
  std::vector<double> eps_sweep{1.0, 0.3, 0.1, 0.03, 0.01};
  double trend_threshold = 0.99;     // |T|^2 required at the smallest eps
  std::size_t control_points = 20;   // log-spaced k in [control_k_min, control_k_max]
  double control_k_min = 0.2;
  double control_k_max = 5.0;
  double control_tolerance = 1e-6;
  double residual_extent = 8.0;      // sech check on [-extent, extent]
  double residual_step = 1e-3;
  double residual_tolerance = 1e-6;  // "solves the equation" criterion
  double unitarity_tolerance = 1e-6;
  std::string artifact_path;         // trend table CSV; empty: none
  int workers = 0;

  Json to_json() const;
  static ReflectionlessAuditConfig from_json(const Json& j);
};

struct ChartsAuditConfig {
  double zeta_extent = 30.0;
  std::size_t roundtrip_samples = 6001;
  double roundtrip_tolerance = 1e-14;
  double cosh_tolerance = 1e-14;
  double eta_max = 1e4;
  std::size_t fit_samples = 400;
  double fit_tolerance = 1e-4;

  Json to_json() const;
  static ChartsAuditConfig from_json(const Json& j);
};

struct EquivalenceAuditConfig {
  std::vector<double> b0_values{0.5, 1.0, 2.0};
  double r_max_factor = 10.0;
  std::size_t samples = 2001;
  double collar = 1e-6;  // r - b0 >= collar * b0
  double tolerance = 1e-12;
  std::vector<double> theta0_values{0.3, 0.7853981633974483, 1.2, 1.5707963267948966,
                                    2.0, 2.356194490192345};

  Json to_json() const;
  static EquivalenceAuditConfig from_json(const Json& j);
};

//! sech residual, m = 0 transmission trend, Poschl-Teller lambda = 1 control.
AuditReport audit_reflectionless(const ReflectionlessAuditConfig& cfg = {});
//! eta atlas round trip, cosh identity, metric coefficient fits.
AuditReport audit_charts(const ChartsAuditConfig& cfg = {});
//! Wormhole section line element against the catenoid form.
AuditReport audit_equivalence(const EquivalenceAuditConfig& cfg = {});

//! Re-runs an audit from a report's "claim" and "inputs" fields.
AuditReport rerun_audit(const Json& report);

//! Any INCONSISTENT -> INCONSISTENT; all CONSISTENT -> CONSISTENT; else INCONCLUSIVE.
Verdict combine(const std::vector<Verdict>& vs);

}  // namespace catenoid
