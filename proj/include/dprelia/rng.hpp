#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dprelia::rng {

// Counter-mode SplitMix64 (Steele/Lea/Flood finalizer, Vigna's constants).
// Output i of a stream with key k is mix(k + (i+1)*GAMMA); the generator is
// a pure function of (key, counter), so streams can be split by deriving
// fresh keys and never share state.
//
// Stream-splitting scheme used throughout the toolkit, all derived from the
// 64-bit run seed:
//   init stream      key = derive(seed, kInit, 0)      weight initialization
//   sampling stream  key = derive(seed, kSample, step) Poisson batch of step t
//   noise stream     key = derive(seed, kNoise, step)  Gaussian noise of step t
// Skipped steps (empty batches) therefore never shift later streams.

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

enum class StreamKind : std::uint64_t { kInit = 1, kSample = 2, kNoise = 3 };

inline std::uint64_t derive_key(std::uint64_t seed, StreamKind kind,
                                std::uint64_t index) {
  std::uint64_t k = mix64(seed + kGamma * static_cast<std::uint64_t>(kind));
  return mix64(k ^ mix64(index + kGamma));
}

class Stream {
 public:
  explicit Stream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGamma); }

  // Uniform in [0,1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the paired deviate is cached, so a
  // stream yields a fixed sequence regardless of call grouping.
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0,1] so log(u1) is finite.
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline Stream init_stream(std::uint64_t seed) {
  return Stream(derive_key(seed, StreamKind::kInit, 0));
}

inline Stream sampling_stream(std::uint64_t seed, std::uint64_t step) {
  return Stream(derive_key(seed, StreamKind::kSample, step));
}

inline Stream noise_stream(std::uint64_t seed, std::uint64_t step) {
  return Stream(derive_key(seed, StreamKind::kNoise, step));
}

// 64 bits of OS entropy for fresh run seeds.
inline std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace dprelia::rng
