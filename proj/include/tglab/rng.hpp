#ifndef TGLAB_RNG_HPP
#define TGLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace tglab {

/// Seeded generator whose derived draws are identical across standard
/// libraries (mt19937_64 output is fixed by the standard; the distribution
/// objects are not, so they are avoided here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), rejection sampled.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// True with probability numerator / denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return below(denominator) < numerator;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t k = items.size(); k > 1; --k) {
      const auto pick = static_cast<std::size_t>(below(k));
      std::swap(items[k - 1], items[pick]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tglab

#endif  // TGLAB_RNG_HPP
