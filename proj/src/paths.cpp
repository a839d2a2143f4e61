#include "ibp/paths.hpp"

#include <cmath>
#include <stdexcept>

#include "ibp/rng.hpp"

namespace ibp {

TimeGrid::TimeGrid(double horizon, std::size_t steps)
    : TimeGrid(horizon, steps, horizon / static_cast<double>(steps)) {}

TimeGrid::TimeGrid(double horizon, std::size_t steps, double guard)
    : horizon_(horizon), steps_(steps), guard_(guard) {
  if (!(horizon > 0.0)) throw std::invalid_argument("TimeGrid: horizon must be positive");
  if (steps < 2) throw std::invalid_argument("TimeGrid: at least 2 steps required");
  if (!(guard > 0.0) || !(guard < horizon))
    throw std::invalid_argument("TimeGrid: guard must lie in (0, horizon)");
}

std::size_t TimeGrid::guard_index() const {
  const double x = (1.0 - guard_ / horizon_) * static_cast<double>(steps_);
  auto k = static_cast<std::size_t>(x + 1e-9);
  if (k >= steps_) k = steps_ - 1;
  return k;
}

BrownianPair simulate_brownian_pair(const TimeGrid& grid, double noise_corr, std::uint64_t seed,
                                    std::uint64_t path_index) {
  if (!(std::abs(noise_corr) < 1.0))
    throw std::invalid_argument("simulate_brownian_pair: |noise_corr| must be < 1");
  const std::size_t n = grid.points();
  const double sqrt_dt = std::sqrt(grid.dt());
  const double ortho = std::sqrt(1.0 - noise_corr * noise_corr);

  BrownianPair out;
  out.first.assign(n, 0.0);
  out.second.assign(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const auto [z, z_ortho] = rng::keyed_normal_pair(seed, path_index, k - 1);
    out.first[k] = out.first[k - 1] + sqrt_dt * z;
    out.second[k] = out.second[k - 1] + sqrt_dt * (noise_corr * z + ortho * z_ortho);
  }
  return out;
}

std::vector<double> bridge_from_brownian(std::span<const double> path, const TimeGrid& grid) {
  if (path.size() != grid.points())
    throw std::invalid_argument("bridge_from_brownian: path does not match grid");
  const double terminal = path[grid.steps()];
  std::vector<double> out(path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    // weight is exactly 0 at k == 0 and exactly 1 at k == steps, so the
    // endpoints come out as path[0] and 0 with no rounding.
    const double weight = static_cast<double>(k) / static_cast<double>(grid.steps());
    out[k] = path[k] - weight * terminal;
  }
  return out;
}

BridgePair simulate_bridge_pair(const TimeGrid& grid, double noise_corr, std::uint64_t seed,
                                std::uint64_t path_index) {
  const BrownianPair brownian = simulate_brownian_pair(grid, noise_corr, seed, path_index);
  BridgePair out;
  out.first = bridge_from_brownian(brownian.first, grid);
  out.second = bridge_from_brownian(brownian.second, grid);
  out.noise_corr = noise_corr;
  return out;
}

double bridge_variance(double t, double horizon) {
  if (!(horizon > 0.0)) throw std::invalid_argument("bridge_variance: horizon must be positive");
  if (t < 0.0 || t > horizon)
    throw std::invalid_argument("bridge_variance: t must lie in [0, horizon]");
  return t * (horizon - t) / horizon;
}

}  // namespace ibp
