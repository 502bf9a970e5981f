#pragma once

#include <cstdint>
#include <stdexcept>

namespace tassel {

// SplitMix64. uniform(lo, hi) is lo + next() % (hi - lo + 1); the modulo bias
// is accepted so that other implementations reproduce the same corpora.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long long uniform(long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("empty random range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(span == 0 ? next() : next() % span);
  }

  bool coin() { return next() & 1ULL; }

 private:
  std::uint64_t state_;
};

}  // namespace tassel
