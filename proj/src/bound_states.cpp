#include "catenoid/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "catenoid/errors.hpp"
#include "catenoid/shooting.hpp"
#include "catenoid/tridiagonal.hpp"

namespace catenoid {

namespace {

void validate(const BoundStateOptions& o) {
  if (!(o.eps_min < o.eps_max) || !(o.eps_max < 0.0))
    throw DomainError("bound-state window must satisfy eps_min < eps_max < 0");
  if (!(o.zeta_max > 0.0)) throw DomainError("zeta_max must be positive");
  if (o.samples < 17 || o.samples % 2 == 0)
    throw DomainError("bound-state grid needs an odd sample count >= 17 (zeta = 0 on the grid)");
  if (!(o.tol > 0.0)) throw DomainError("tol must be positive");
  if (o.scan_points < 2) throw DomainError("scan_points must be at least 2");
}

detail::HalfLineProblem half_line(const WeightedProblem& p, const BoundStateOptions& o) {
  detail::HalfLineProblem hp;
  const std::size_t half = (o.samples - 1) / 2;
  hp.x0 = 0.0;
  hp.h = o.zeta_max / static_cast<double>(half);
  hp.max_points = half + 1;
  hp.coefficient = [q = p.q, w = p.w](double x, double eps) { return q(x) - eps * w(x); };
  hp.start = [](Parity parity, double, double h, double f0, double f1) {
    return detail::symmetric_start(parity, h, f0, f1);
  };
  hp.tail_action = o.tail_action;
  hp.min_tail_action = o.min_tail_action;
  return hp;
}

// Log-spaced in |eps| from the window edge nearest zero outwards, returned ascending.
std::vector<double> scan_grid(const BoundStateOptions& o) {
  const double lo = std::log(-o.eps_max);
  const double hi = std::log(-o.eps_min);
  std::vector<double> s(o.scan_points);
  for (std::size_t i = 0; i < o.scan_points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(o.scan_points - 1);
    s[i] = -std::exp(hi + (lo - hi) * t);
  }
  s.front() = o.eps_min;
  s.back() = o.eps_max;
  return s;
}

void normalize(WaveFunction& wave, const std::function<double(double)>& w) {
  const double h = wave.grid.spacing();
  double sum = 0.0;
  for (std::size_t i = 0; i < wave.values.size(); ++i) {
    const double v = wave.values[i];
    if (v != 0.0) sum += v * v * w(wave.grid[i]);
  }
  const double s = 1.0 / std::sqrt(sum * h);
  for (double& v : wave.values) v *= s;
}

// Even: Phi(0) > 0; odd: Phi'(0) > 0.
void fix_sign(WaveFunction& wave) {
  const std::size_t c = (wave.values.size() - 1) / 2;
  const double ref = wave.parity == Parity::Odd ? wave.values[c + 1] - wave.values[c - 1]
                                                : wave.values[c];
  if (ref < 0.0)
    for (double& v : wave.values) v = -v;
}

SymmetricTridiagonal weighted_matrix(const WeightedProblem& p, double zeta_max, std::size_t n) {
  const Grid1D grid(-zeta_max, zeta_max, n);
  const double h = grid.spacing();
  const std::size_t m = n - 2;
  std::vector<double> diag(m), off(m - 1), sw(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double z = grid[i + 1];
    const double w = p.w(z);
    sw[i] = std::sqrt(w);
    diag[i] = (2.0 / (h * h) + p.q(z)) / w;
  }
  for (std::size_t i = 0; i + 1 < m; ++i) off[i] = -1.0 / (h * h * sw[i] * sw[i + 1]);
  return SymmetricTridiagonal(std::move(diag), std::move(off));
}

std::vector<BoundState> shooting_states(const WeightedProblem& p, const BoundStateOptions& o) {
  const detail::HalfLineProblem hp = half_line(p, o);
  // Probe the window edge closest to zero: the tail is widest there.
  detail::shoot(hp, Parity::Even, o.eps_max);

  const std::vector<double> scan = scan_grid(o);
  const Grid1D grid(-o.zeta_max, o.zeta_max, o.samples);
  const std::size_t c = (o.samples - 1) / 2;
  std::vector<BoundState> states;
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    auto det = [&](double eps) { return detail::shoot(hp, parity, eps).determinant; };
    for (double eps : detail::bracketed_roots(det, scan, o.tol)) {
      std::vector<double> half;
      detail::shoot(hp, parity, eps, &half);
      WaveFunction wave{grid, std::vector<double>(o.samples, 0.0), {}, parity, p.norm};
      const double sign = parity == Parity::Odd ? -1.0 : 1.0;
      for (std::size_t j = 0; j <= c; ++j) {
        wave.values[c + j] = half[j];
        wave.values[c - j] = sign * half[j];
      }
      normalize(wave, p.w);
      fix_sign(wave);
      wave.derivs = five_point_derivative(wave.values, grid.spacing());
      BoundState s;
      s.channel = ChannelSpec{p.m, eps};
      s.nodes = count_nodes(wave.values);
      s.wave = std::move(wave);
      s.method = BoundStateMethod::Shooting;
      s.raw_eigenvalue = eps;
      states.push_back(std::move(s));
    }
  }
  std::sort(states.begin(), states.end(),
            [](const BoundState& a, const BoundState& b) { return a.channel.eps < b.channel.eps; });
  return states;
}

std::vector<BoundState> matrix_states(const WeightedProblem& p, const BoundStateOptions& o) {
  const SymmetricTridiagonal t = weighted_matrix(p, o.zeta_max, o.samples);
  const std::size_t k_lo = t.count_below(o.eps_min);
  const std::size_t k_hi = t.count_below(o.eps_max);
  std::vector<BoundState> states;
  if (k_hi <= k_lo) return states;

  const std::size_t n_fine = 2 * o.samples - 1;
  std::optional<SymmetricTridiagonal> fine;
  if (o.richardson) fine.emplace(weighted_matrix(p, o.zeta_max, n_fine));

  const Grid1D grid(-o.zeta_max, o.zeta_max, o.samples);
  const double h = grid.spacing();
  for (std::size_t k = k_lo; k < k_hi; ++k) {
    const double lambda = t.eigenvalue(k);
    double eps = lambda;
    if (fine) {
      const double lambda_fine = fine->eigenvalue(k);
      eps = (4.0 * lambda_fine - lambda) / 3.0;
    }
    const std::vector<double> v = t.eigenvector(lambda);
    WaveFunction wave{grid, std::vector<double>(o.samples, 0.0), {}, Parity::None, p.norm};
    for (std::size_t i = 0; i < v.size(); ++i)
      wave.values[i + 1] = v[i] / std::sqrt(p.w(grid[i + 1]) * h);
    wave.parity = detect_parity(wave.values);
    fix_sign(wave);
    wave.derivs = five_point_derivative(wave.values, h);
    BoundState s;
    s.channel = ChannelSpec{p.m, eps};
    s.nodes = count_nodes(wave.values);
    s.wave = std::move(wave);
    s.method = BoundStateMethod::Matrix;
    s.raw_eigenvalue = lambda;
    states.push_back(std::move(s));
  }
  return states;
}

}  // namespace

WeightedProblem WeightedProblem::catenoid(int m) {
  WeightedProblem p;
  p.q = [m](double z) { return weighted_problem_q(m, z); };
  p.w = [](double z) { return weighted_problem_w(z); };
  p.m = m;
  p.name = "catenoid";
  p.norm = Normalization::WeightedCosh2;
  return p;
}

WeightedProblem WeightedProblem::poschl_teller(const PoschlTellerSpec& spec) {
  WeightedProblem p;
  p.q = [spec](double z) { return poschl_teller_potential(spec, z); };
  p.w = [](double) { return 1.0; };
  p.m = 0;
  p.name = "poschl-teller";
  p.norm = Normalization::None;
  return p;
}

const char* method_name(BoundStateMethod method) {
  return method == BoundStateMethod::Shooting ? "shooting" : "matrix";
}

std::vector<BoundState> bound_states(const WeightedProblem& problem, const BoundStateOptions& opts,
                                     BoundStateMethod method) {
  validate(opts);
  return method == BoundStateMethod::Shooting ? shooting_states(problem, opts)
                                              : matrix_states(problem, opts);
}

std::vector<BoundState> bound_states(int m, const BoundStateOptions& opts, BoundStateMethod method) {
  return bound_states(WeightedProblem::catenoid(m), opts, method);
}

double shooting_mismatch(const WeightedProblem& problem, Parity parity, double eps,
                         const BoundStateOptions& opts) {
  validate(opts);
  return detail::shoot(half_line(problem, opts), parity, eps).determinant;
}

double lowest_confined_eigenvalue(int m, double abs_eps, double zeta_max, std::size_t samples) {
  if (!(abs_eps >= 0.0)) throw DomainError("|eps| must be nonnegative");
  const Grid1D grid(-zeta_max, zeta_max, samples);
  const double h = grid.spacing();
  const std::size_t n = samples - 2;
  std::vector<double> diag(n), off(n - 1, -1.0 / (h * h));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = grid[i + 1];
    diag[i] = 2.0 / (h * h) + weighted_problem_q(m, z) + abs_eps * weighted_problem_w(z);
  }
  return SymmetricTridiagonal(std::move(diag), std::move(off)).eigenvalue(0);
}

int count_nodes(const std::vector<double>& values, double rel_floor) {
  double vmax = 0.0;
  for (double v : values) vmax = std::max(vmax, std::abs(v));
  const double floor = rel_floor * vmax;
  int nodes = 0;
  double prev = 0.0;
  for (double v : values) {
    if (std::abs(v) <= floor) continue;
    if (prev != 0.0 && (v < 0.0) != (prev < 0.0)) ++nodes;
    prev = v;
  }
  return nodes;
}

Parity detect_parity(const std::vector<double>& values, double tol) {
  const std::size_t n = values.size();
  double self = 0.0, mirror = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    self += values[i] * values[i];
    mirror += values[i] * values[n - 1 - i];
  }
  if (!(self > 0.0)) return Parity::None;
  const double s = mirror / self;
  if (s > 1.0 - tol) return Parity::Even;
  if (s < -1.0 + tol) return Parity::Odd;
  return Parity::None;
}

}  // namespace catenoid
