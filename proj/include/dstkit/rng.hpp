#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Deterministic randomness used across the pipeline. Everything here is
// specified bit-for-bit (FNV-1a, SplitMix64, Fisher-Yates) so that seeded
// artifacts reproduce byte-identically across platforms and standard-library
// implementations.

namespace dstkit {

inline std::uint64_t stable_hash64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64-bit
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be > 0.
  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

namespace detail {
inline void seed_absorb(std::uint64_t& acc, std::uint64_t v) {
  acc = mix64(acc ^ (v + 0x9e3779b97f4a7c15ull + (acc << 6) + (acc >> 2)));
}
inline std::uint64_t seed_part(std::uint64_t v) { return v; }
inline std::uint64_t seed_part(std::int64_t v) { return static_cast<std::uint64_t>(v); }
inline std::uint64_t seed_part(int v) { return static_cast<std::uint64_t>(static_cast<std::int64_t>(v)); }
inline std::uint64_t seed_part(std::string_view s) { return stable_hash64(s); }
inline std::uint64_t seed_part(const std::string& s) { return stable_hash64(s); }
inline std::uint64_t seed_part(const char* s) { return stable_hash64(s); }
}  // namespace detail

// Combine a base seed with arbitrary context parts (strings, integers) into a
// stream seed. seed_for(s, "a", 1) != seed_for(s, "a", 2) etc.
template <typename... Parts>
std::uint64_t seed_for(std::uint64_t base, const Parts&... parts) {
  std::uint64_t acc = mix64(base);
  (detail::seed_absorb(acc, detail::seed_part(parts)), ...);
  return acc;
}

// Seeded Fisher-Yates shuffle (deterministic, independent of std::shuffle).
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.bounded(i));
    std::swap(items[i - 1], items[j]);
  }
}

// First k elements of a seeded shuffle of [0, n): a uniform sample without
// replacement, in draw order.
inline std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k,
                                                           std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  seeded_shuffle(idx, seed);
  if (k < idx.size()) idx.resize(k);
  return idx;
}

}  // namespace dstkit
