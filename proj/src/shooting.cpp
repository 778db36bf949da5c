#include "catenoid/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catenoid/errors.hpp"

namespace catenoid::detail {

std::pair<double, double> symmetric_start(Parity parity, double h, double f0, double f1) {
  if (parity == Parity::Odd) return {0.0, h};
  const double h2 = h * h;
  return {1.0, (1.0 + 5.0 * h2 * f0 / 12.0) / (1.0 - h2 * f1 / 12.0)};
}

Shot shoot(const HalfLineProblem& p, Parity parity, double eps, std::vector<double>* wave) {
  if (p.max_points < 8) throw ConfigurationError("shooting grid too short");
  const double h = p.h;
  const double h2 = h * h;
  std::vector<double> f(p.max_points);
  for (std::size_t i = 0; i < p.max_points; ++i) {
    f[i] = p.coefficient(p.x0 + h * static_cast<double>(i), eps);
    if (!std::isfinite(f[i]))
      throw NumericalError("non-finite coefficient at x = " +
                           std::to_string(p.x0 + h * static_cast<double>(i)));
  }

  // Match just outside the outermost classically allowed point.
  std::size_t last_allowed = 0;
  bool any_allowed = false;
  for (std::size_t i = 0; i < p.max_points; ++i)
    if (f[i] < 0.0) {
      last_allowed = i;
      any_allowed = true;
    }
  std::size_t match = any_allowed ? last_allowed + 1 : 1;
  match = std::max<std::size_t>(match, 2);
  if (match + 3 >= p.max_points)
    throw ConfigurationError("grid ends inside the classically allowed region; increase the extent");

  // Inward start once the WKB action is large enough, or where the Numerov
  // step gets too coarse for the decay rate.
  double action = 0.0;
  std::size_t end = match;
  for (std::size_t i = match + 1; i < p.max_points; ++i) {
    if (h2 * f[i] / 12.0 > 0.5) break;
    action += 0.5 * h * (std::sqrt(std::max(f[i - 1], 0.0)) + std::sqrt(std::max(f[i], 0.0)));
    end = i;
    if (action >= p.tail_action) break;
  }
  if (action < p.min_tail_action || end < match + 2)
    throw ConfigurationError("tail not deep enough in the forbidden region (WKB action " +
                             std::to_string(action) + " < " + std::to_string(p.min_tail_action) +
                             "); increase the extent or refine the grid");

  // Outward over [0, match + 1].
  std::vector<double> out(match + 2);
  const auto [y0, y1] = p.start(parity, eps, h, f[0], f[1]);
  out[0] = y0;
  out[1] = y1;
  numerov_march(std::span<const double>(f.data(), match + 2), h, out);

  // Inward over [match, end] from the WKB decaying branch.
  const std::size_t len = end - match + 1;
  std::vector<double> fin(len), in(len);
  for (std::size_t j = 0; j < len; ++j) fin[j] = f[end - j];
  in[0] = std::pow(fin[0], -0.25);
  in[1] = std::pow(fin[1], -0.25) * std::exp(0.5 * h * (std::sqrt(fin[0]) + std::sqrt(fin[1])));
  numerov_march(fin, h, in);
  // in[j] lives at index end - j; in_at(match) = in[len-1], in_at(match+1) = in[len-2].
  const double in_m = in[len - 1];
  const double in_m1 = in[len - 2];

  double scale = 0.0;
  for (double v : out) scale = std::max(scale, std::abs(v));
  const double am = 1.0 - h2 * f[match] / 12.0;
  const double am1 = 1.0 - h2 * f[match + 1] / 12.0;
  const double det = am * am1 * (out[match] * in_m1 - out[match + 1] * in_m) / (h * scale * in_m);

  if (wave != nullptr) {
    wave->assign(p.max_points, 0.0);
    for (std::size_t i = 0; i <= match; ++i) (*wave)[i] = out[i];
    const double c = out[match] / in_m;
    for (std::size_t j = 0; j + 1 < len; ++j) (*wave)[end - j] = c * in[j];
  }
  return Shot{det, match, end, action};
}

std::vector<double> bracketed_roots(const std::function<double(double)>& g,
                                    const std::vector<double>& scan, double tol) {
  std::vector<double> roots;
  if (scan.size() < 2) return roots;
  double a = scan[0];
  double ga = g(a);
  for (std::size_t i = 1; i < scan.size(); ++i) {
    const double b = scan[i];
    const double gb = g(b);
    if (ga == 0.0) {
      roots.push_back(a);
    } else if ((ga < 0.0) != (gb < 0.0) && gb != 0.0) {
      double lo = a, hi = b, glo = ga;
      while (std::abs(hi - lo) > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double gm = g(mid);
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((gm < 0.0) == (glo < 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    ga = gb;
  }
  if (ga == 0.0) roots.push_back(a);
  std::sort(roots.begin(), roots.end());
  // Leftmost first; merge duplicates.
  std::vector<double> merged;
  for (double r : roots)
    if (merged.empty() || std::abs(r - merged.back()) > 1e-12) merged.push_back(r);
  return merged;
}

}  // namespace catenoid::detail
