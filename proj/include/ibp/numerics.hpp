#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace ibp::num {

inline double log_sum_exp(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("log_sum_exp: empty input");
  const double m = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - m);
  return m + std::log(sum);
}

// Normalized posterior weights prior_i * exp(exponent_i - max exponent).
// Stable for arbitrarily large |exponent|; the dominant weight never
// underflows because its exponent is shifted to zero.
inline std::vector<double> posterior_from_exponents(std::span<const double> exponents,
                                                    std::span<const double> priors) {
  if (exponents.size() != priors.size() || exponents.empty())
    throw std::invalid_argument("posterior_from_exponents: size mismatch");
  const double m = *std::max_element(exponents.begin(), exponents.end());
  std::vector<double> weights(exponents.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    weights[i] = priors[i] * std::exp(exponents[i] - m);
    sum += weights[i];
  }
  if (!(sum > 0.0) || !std::isfinite(sum))
    throw std::runtime_error("posterior_from_exponents: degenerate weights");
  for (double& w : weights) w /= sum;
  return weights;
}

inline double normal_log_pdf(double x, double mean, double variance) {
  if (!(variance > 0.0)) throw std::invalid_argument("normal_log_pdf: variance must be positive");
  const double d = x - mean;
  return -0.5 * (std::log(2.0 * std::numbers::pi * variance) + d * d / variance);
}

inline double normal_pdf(double x, double mean, double variance) {
  return std::exp(normal_log_pdf(x, mean, variance));
}

// Differential entropy of a normal with the given variance (nats).
inline double normal_entropy(double variance) {
  if (!(variance > 0.0)) throw std::invalid_argument("normal_entropy: variance must be positive");
  return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * variance);
}

// Composite Simpson rule on an odd number of equally spaced nodes.
template <class F>
double simpson(F&& f, double lo, double hi, std::size_t nodes) {
  if (nodes < 3 || nodes % 2 == 0)
    throw std::invalid_argument("simpson: node count must be odd and >= 3");
  if (!(hi > lo)) throw std::invalid_argument("simpson: empty interval");
  const double h = (hi - lo) / static_cast<double>(nodes - 1);
  double sum = f(lo) + f(hi);
  for (std::size_t k = 1; k + 1 < nodes; ++k) {
    const double x = lo + static_cast<double>(k) * h;
    sum += (k % 2 == 1 ? 4.0 : 2.0) * f(x);
  }
  return sum * h / 3.0;
}

// Cumulative trapezoid integral of samples (abscissae, ordinates);
// out[0] = 0 and out[k] approximates the integral up to abscissae[k].
inline std::vector<double> cumulative_trapezoid(std::span<const double> abscissae,
                                                std::span<const double> ordinates) {
  if (abscissae.size() != ordinates.size())
    throw std::invalid_argument("cumulative_trapezoid: size mismatch");
  std::vector<double> out(abscissae.size(), 0.0);
  for (std::size_t k = 1; k < abscissae.size(); ++k) {
    const double dt = abscissae[k] - abscissae[k - 1];
    out[k] = out[k - 1] + 0.5 * dt * (ordinates[k] + ordinates[k - 1]);
  }
  return out;
}

// Lower Cholesky factor of a symmetric positive definite matrix (row-major
// n x n). Throws if a pivot is not strictly positive.
inline std::vector<double> cholesky_lower(std::span<const double> matrix, std::size_t n) {
  if (matrix.size() != n * n) throw std::invalid_argument("cholesky_lower: bad dimensions");
  std::vector<double> lower(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = matrix[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= lower[i * n + k] * lower[j * n + k];
      if (i == j) {
        if (!(s > 0.0)) throw std::invalid_argument("cholesky_lower: matrix is not positive definite");
        lower[i * n + i] = std::sqrt(s);
      } else {
        lower[i * n + j] = s / lower[j * n + j];
      }
    }
  }
  return lower;
}

// Streaming mean/variance accumulator (Welford). Insertion order is fixed
// by the caller, keeping Monte Carlo reductions deterministic.
class RunningStat {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  std::size_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }
  double std_dev() const { return std::sqrt(variance()); }
  double std_error() const {
    return count_ > 0 ? std_dev() / std::sqrt(static_cast<double>(count_)) : 0.0;
  }

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace ibp::num
