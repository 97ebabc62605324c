#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace mstinfer {

// splitmix64 finalizer. Used to derive child seeds and to decorrelate
// user-provided seeds (which are often small integers) before they reach the
// engine.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic seed derivation: folds each part into the running hash in
// order, so derive_seed(master, i) and derive_seed(master, i, j) give
// independent streams and any unit of work is recomputable in isolation.
constexpr std::uint64_t derive_seed(std::uint64_t base) { return base; }

template <typename... Rest>
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t next,
                                    Rest... rest) {
  return derive_seed(mix64(base ^ mix64(next)),
                     static_cast<std::uint64_t>(rest)...);
}

// Seedable RNG with portable distributions. The engine is std::mt19937_64,
// whose output sequence is pinned by the standard; the distribution logic
// lives here because standard-library distributions may differ across
// implementations. Same seed -> same draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform over [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t next_below(std::uint64_t bound);

  // Uniform over [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

  // Uniform over the open interval (0, 1).
  double uniform_open01();

  // Standard normal deviate (Box-Muller, pair cached).
  double normal();

  // Index drawn with probability proportional to weights[i].
  // Every weight must be strictly positive.
  std::size_t weighted_index(std::span<const double> weights);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    shuffle_span(std::span<T>(v));
  }

  template <typename T>
  void shuffle_span(std::span<T> v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mstinfer
