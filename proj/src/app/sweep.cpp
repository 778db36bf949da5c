#include "catenoid/app/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>

#include "catenoid/errors.hpp"
#include "catenoid/parallel.hpp"

namespace catenoid {

const char* quantity_name(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::Transmission: return "transmission";
    case SweepQuantity::Curvature: return "curvature";
    case SweepQuantity::BoundStates: return "bound-states";
    case SweepQuantity::Potential: return "potential";
  }
  return "?";
}

std::vector<double> GridSpec::values() const {
  if (count == 0) throw DomainError("grid count must be >= 1");
  if (log_spaced && !(min > 0.0 && max > 0.0))
    throw DomainError("log-spaced grid needs positive bounds");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = min;
    return out;
  }
  const double denom = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / denom;
    out[i] = log_spaced ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                        : min + t * (max - min);
  }
  out.back() = max;
  return out;
}

GridSpec GridSpec::parse(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos || text.find(':', b + 1) != std::string::npos)
    throw DomainError("grid must be MIN:MAX:COUNT, got '" + text + "'");
  auto num = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || !std::isfinite(v))
      throw DomainError("bad number '" + s + "' in grid '" + text + "'");
    return v;
  };
  GridSpec g;
  g.min = num(text.substr(0, a));
  g.max = num(text.substr(a + 1, b - a - 1));
  const std::string c = text.substr(b + 1);
  char* end = nullptr;
  const long n = std::strtol(c.c_str(), &end, 10);
  if (c.empty() || *end != '\0' || n < 1)
    throw DomainError("bad count '" + c + "' in grid '" + text + "'");
  g.count = static_cast<std::size_t>(n);
  return g;
}

namespace {

using Row = std::vector<std::string>;
using csv::format_double;

struct Item {
  int m = 0;
  double p = 0.0;
};

RowStatus classify_error(std::exception_ptr e, std::string& what) {
  try {
    std::rethrow_exception(e);
  } catch (const DomainError& x) {
    what = x.what();
    return RowStatus::Domain;
  } catch (const NumericalError& x) {
    what = x.what();
    return RowStatus::Numerical;
  } catch (const ConfigurationError& x) {
    what = x.what();
    return RowStatus::Configuration;
  } catch (const RangeError& x) {
    what = x.what();
    return RowStatus::Range;
  } catch (const std::exception& x) {
    what = x.what();
  } catch (...) {
    what = "unknown error";
  }
  return RowStatus::Other;
}

std::vector<std::string> columns_for(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::Transmission:
      return {"m", "eps", "k", "r_re", "r_im", "t_re", "t_im", "R", "T", "unitarity_defect",
              "status", "error"};
    case SweepQuantity::Curvature:
      return {"zeta", "kappa1", "kappa2", "H", "K", "status", "error"};
    case SweepQuantity::BoundStates:
      return {"m", "method", "count", "eigenvalues", "nodes", "status", "error"};
    case SweepQuantity::Potential:
      return {"m", "eps", "chart", "coordinate", "value", "status", "error"};
  }
  return {};
}

std::vector<Item> enumerate(const SweepTask& t) {
  std::vector<Item> items;
  switch (t.quantity) {
    case SweepQuantity::Curvature:
      for (double p : t.parameters) items.push_back({0, p});
      break;
    case SweepQuantity::BoundStates:
      for (int m : t.m_values) items.push_back({m, 0.0});
      break;
    case SweepQuantity::Transmission:
    case SweepQuantity::Potential:
      for (int m : t.m_values)
        for (double p : t.parameters) items.push_back({m, p});
      break;
  }
  return items;
}

// Fields up to (not including) status/error.
Row evaluate(const SweepTask& t, const Item& it) {
  switch (t.quantity) {
    case SweepQuantity::Transmission: {
      const auto r = transmission(it.m, it.p, t.scattering);
      return {std::to_string(it.m), format_double(it.p), format_double(r.k),
              format_double(r.r_amp.real()), format_double(r.r_amp.imag()),
              format_double(r.t_amp.real()), format_double(r.t_amp.imag()),
              format_double(r.reflection()), format_double(r.transmission()),
              format_double(r.unitarity_defect)};
    }
    case SweepQuantity::Curvature: {
      const auto c = curvature(t.shape, it.p);
      return {format_double(it.p), format_double(c.kappa1), format_double(c.kappa2),
              format_double(c.mean), format_double(c.gaussian)};
    }
    case SweepQuantity::BoundStates: {
      const auto states = bound_states(it.m, t.bound, t.method);
      std::string eigs, nodes;
      for (std::size_t i = 0; i < states.size(); ++i) {
        if (i) {
          eigs += ';';
          nodes += ';';
        }
        eigs += format_double(states[i].channel.eps);
        nodes += std::to_string(states[i].nodes);
      }
      return {std::to_string(it.m), method_name(t.method), std::to_string(states.size()), eigs,
              nodes};
    }
    case SweepQuantity::Potential: {
      const ChannelSpec ch{it.m, t.eps};
      double v = 0.0;
      switch (t.chart) {
        case Chart::ZPhi: v = v_zeta(ch, it.p); break;
        case Chart::EtaPlus:
        case Chart::EtaMinus: {
          const Patch patch = t.chart == Chart::EtaPlus ? Patch::Plus : Patch::Minus;
          const EtaCoordinate ec{patch, it.p};
          if (!(it.p >= 0.0)) throw DomainError("eta must be >= 0");
          v = t.renormalized ? v_renormalized(ch, ec) : v_eta(ch, ec);
          break;
        }
        case Chart::Arc: v = v_scatter(it.m, it.p); break;
        default: throw DomainError(std::string("no potential in chart ") + chart_name(t.chart));
      }
      return {std::to_string(it.m), format_double(t.eps), chart_name(t.chart),
              format_double(it.p), format_double(v)};
    }
  }
  return {};
}

struct Outcome {
  Row row;
  bool failed = false;
};

Outcome evaluate_row(const SweepTask& t, const Item& it, std::size_t width) {
  Outcome o;
  try {
    o.row = evaluate(t, it);
    o.row.push_back("0");
    o.row.push_back("");
  } catch (...) {
    std::string what;
    const RowStatus s = classify_error(std::current_exception(), what);
    // Keep the identifying leading fields; blank the measured ones.
    o.row.assign(width, "");
    if (t.quantity == SweepQuantity::Curvature) {
      o.row[0] = format_double(it.p);
    } else {
      o.row[0] = std::to_string(it.m);
      if (t.quantity == SweepQuantity::Transmission) o.row[1] = format_double(it.p);
      if (t.quantity == SweepQuantity::BoundStates) o.row[1] = method_name(t.method);
      if (t.quantity == SweepQuantity::Potential) {
        o.row[1] = format_double(t.eps);
        o.row[2] = chart_name(t.chart);
        o.row[3] = format_double(it.p);
      }
    }
    o.row[width - 2] = std::to_string(static_cast<int>(s));
    o.row[width - 1] = what;
    o.failed = true;
  }
  return o;
}

template <class Map>
SweepDataset run(const SweepTask& task, Map&& map) {
  SweepDataset ds;
  ds.table = csv::Table(columns_for(task.quantity));
  const auto items = enumerate(task);
  const std::size_t width = ds.table.columns().size();
  auto outcomes = map(items, [&](const Item& it) { return evaluate_row(task, it, width); });
  for (auto& o : outcomes) {
    if (o.failed) ++ds.failures;
    ds.table.add_row(std::move(o.row));
  }
  return ds;
}

}  // namespace

SweepDataset run_sweep(const SweepTask& task) {
  return run(task, [&](const std::vector<Item>& items, auto&& f) {
    return parallel::map_omp(items, f, task.workers);
  });
}

SweepDataset run_sweep_serial(const SweepTask& task) {
  return run(task, [](const std::vector<Item>& items, auto&& f) {
    return parallel::map_serial(items, f);
  });
}

}  // namespace catenoid
