#ifndef POLYDEC_RNG_HPP
#define POLYDEC_RNG_HPP

#include <cstdint>
#include <random>

namespace polydec {

/// Deterministic 64-bit generator. Every randomized operation in the library
/// takes a seed (or one of these) explicitly, so runs are replayable.
/// Draws are produced by rejection sampling on the raw stream rather than
/// std::uniform_int_distribution, whose output is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, bound), bound >= 1, without modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in the closed range [lo, hi].
  std::int64_t int_between(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(width));
  }

  /// Derive an independent child seed; used to fan one seed out to stages.
  std::uint64_t fork_seed() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace polydec

#endif
