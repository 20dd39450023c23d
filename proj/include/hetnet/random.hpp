#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Dense>

namespace hetnet {

using RandomStream = std::mt19937_64;

/// splitmix64 finalizer; used to mix seed components into stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// FNV-1a over a label, so streams can be named ("topology", "fading", ...).
constexpr std::uint64_t label_hash(std::string_view label) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

/// Identifies one independent random stream of an experiment.
struct StreamKey {
  std::uint64_t base_seed = 0;
  std::string_view scenario;
  std::int64_t grid_point = 0;
  std::uint64_t trial = 0;
  std::string_view purpose;
};

constexpr std::uint64_t derive_seed(const StreamKey& key) noexcept {
  std::uint64_t s = mix64(key.base_seed);
  s = mix64(s ^ label_hash(key.scenario));
  s = mix64(s ^ static_cast<std::uint64_t>(key.grid_point));
  s = mix64(s ^ key.trial);
  s = mix64(s ^ label_hash(key.purpose));
  return s;
}

inline RandomStream make_stream(const StreamKey& key) {
  return RandomStream(derive_seed(key));
}

/// One CN(0, variance) sample: independent real and imaginary parts, each
/// with variance/2.
inline std::complex<double> complex_normal(RandomStream& rng, double variance) {
  std::normal_distribution<double> n;
  const double scale = std::sqrt(variance / 2.0);
  const double re = n(rng);
  const double im = n(rng);
  return {scale * re, scale * im};
}

/// Row vector with i.i.d. CN(0, variance) entries.
inline Eigen::RowVectorXcd complex_normal_row(RandomStream& rng, Eigen::Index length,
                                              double variance) {
  Eigen::RowVectorXcd v(length);
  for (Eigen::Index i = 0; i < length; ++i) v(i) = complex_normal(rng, variance);
  return v;
}

}  // namespace hetnet
