#include "mstinfer/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mstinfer {

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be > 0");
  // Reject draws from the tail shorter than a full multiple of bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = next_u64();
    if (x >= threshold) return x % bound;
  }
}

double Rng::uniform_open01() {
  for (;;) {
    double u = uniform01();
    if (u > 0.0) return u;
  }
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform_open01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::size_t Rng::weighted_index(std::span<const double> weights) {
  if (weights.empty())
    throw std::invalid_argument("weighted_index: empty weight vector");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0))
      throw std::invalid_argument("weighted_index: weights must be positive");
    total += w;
  }
  double target = uniform01() * total;
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    cum += weights[i];
    if (target < cum) return i;
  }
  return weights.size() - 1;  // absorbs rounding spill
}

}  // namespace mstinfer
