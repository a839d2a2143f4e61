#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ibp {

// Uniform time grid on [0, horizon] with a terminal guard: filter
// quantities carrying the factor horizon/(horizon - t) are only evaluated
// for t <= horizon - guard. The guard defaults to one grid step.
class TimeGrid {
 public:
  TimeGrid() : TimeGrid(1.0, 2) {}
  TimeGrid(double horizon, std::size_t steps);
  TimeGrid(double horizon, std::size_t steps, double guard);

  double horizon() const { return horizon_; }
  std::size_t steps() const { return steps_; }
  double guard() const { return guard_; }
  std::size_t points() const { return steps_ + 1; }
  double dt() const { return horizon_ / static_cast<double>(steps_); }

  // time(steps()) == horizon exactly.
  double time(std::size_t k) const {
    return horizon_ * (static_cast<double>(k) / static_cast<double>(steps_));
  }

  // Largest index k with time(k) <= horizon - guard; always < steps().
  std::size_t guard_index() const;

  bool operator==(const TimeGrid&) const = default;

 private:
  double horizon_;
  std::size_t steps_;
  double guard_;
};

struct BrownianPair {
  std::vector<double> first;   // values at grid points, size points()
  std::vector<double> second;
};

struct BridgePair {
  std::vector<double> first;   // pinned to 0 at both ends, exactly
  std::vector<double> second;
  double noise_corr = 0.0;
};

// Correlated Brownian pair on the grid. Increments per step are jointly
// Gaussian with variance dt and cross-covariance noise_corr * dt; draws are
// keyed by (seed, path_index, step), so identical inputs reproduce the pair
// bit for bit. |noise_corr| must be < 1.
BrownianPair simulate_brownian_pair(const TimeGrid& grid, double noise_corr, std::uint64_t seed,
                                    std::uint64_t path_index = 0);

// Bridge by endpoint subtraction: out[k] = path[k] - (k/steps) * path[steps].
// Both endpoints are exactly zero.
std::vector<double> bridge_from_brownian(std::span<const double> path, const TimeGrid& grid);

BridgePair simulate_bridge_pair(const TimeGrid& grid, double noise_corr, std::uint64_t seed,
                                std::uint64_t path_index = 0);

// Marginal variance t*(horizon - t)/horizon of the bridge at time t.
double bridge_variance(double t, double horizon);

}  // namespace ibp
