#pragma once
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace pidmlab {

inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// seed mixer for derived generators (per-trajectory, per-cell, ...)
inline uint64_t mix_seed(uint64_t base, uint64_t stream) {
  uint64_t x = base ^ (stream * 0xd1342543de82ef95ull);
  splitmix64(x);
  return splitmix64(x);
}

// mt19937_64 has a pinned algorithm, but <random> distributions are
// implementation-defined; uniform/normal are implemented here so that
// results are bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed) {
    uint64_t s = seed;
    gen_.seed(splitmix64(s));
  }

  uint64_t seed() const { return seed_; }
  uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // [0, n); multiply-shift, bias < n / 2^64
  size_t uniform_index(size_t n) {
    return size_t(((unsigned __int128)gen_() * n) >> 64);
  }

  // Box-Muller, second value cached
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  Rng derive(uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(i)]);
  }

  // sample m distinct indices from [0, n), order-stable in draw order
  std::vector<size_t> sample_without_replacement(size_t n, size_t m) {
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    shuffle(idx);
    idx.resize(m);
    return idx;
  }

 private:
  std::mt19937_64 gen_;
  uint64_t seed_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace pidmlab
