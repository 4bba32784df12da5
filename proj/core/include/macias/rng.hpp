#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace macias {

// Deterministic, splittable random source.  mt19937_64 has a fully
// specified output sequence, and we avoid std::uniform_int_distribution
// (whose mapping is implementation-defined) so that suite runs replay
// identically on every platform.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : eng_(seed) {}

  // Derive an independent child stream from a label, e.g. one per
  // (check id, ring) pair.
  static SplitRng derive(std::uint64_t seed, const std::string& label) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ seed;
    for (unsigned char ch : label) {
      h ^= ch;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return SplitRng(splitmix(h));
  }

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool[static_cast<std::size_t>(below(pool.size()))];
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 eng_;
};

}  // namespace macias
