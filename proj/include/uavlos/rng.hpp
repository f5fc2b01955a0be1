// Copyright 2026 The uavlos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Counter-based random numbers.
//
// Every draw is a pure function of (seed, stream, sub-keys, counter): the
// SplitMix64 finaliser applied to key + counter * golden-ratio, where the key
// hashes seed, stream and sub-keys. Scene generation, mobility and fading use
// disjoint streams, and each entity gets its own sub-key (building index, user
// id, slot, ...), so adding a building never perturbs the users and two runs
// with the same seed agree bit for bit.
//
// Distributions are implemented here rather than taken from <random> because
// the standard distributions are implementation-defined; the Poisson draw is
// by CDF inversion of a single uniform so that counts are monotone in the
// mean for a fixed seed.

#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>

namespace uavlos {

enum class Stream : std::uint64_t {
  building_count = 1,
  buildings = 2,
  uav_count = 3,
  uavs = 4,
  users = 5,
  mobility = 6,
  fading = 7,
  experiment = 8,
};

inline constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

  CounterRng(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> sub = {}) {
    std::uint64_t k = splitmix64(seed + kGolden * static_cast<std::uint64_t>(stream));
    for (auto s : sub) k = splitmix64(k ^ (s + kGolden));
    key_ = k;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return splitmix64(key_ + kGolden * ++counter_); }

  // Uniform on the open interval (0, 1).
  double uniform01() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

// Rayleigh with scale gamma: density h/gamma^2 exp(-h^2 / 2 gamma^2).
inline double draw_rayleigh(CounterRng& rng, double gamma) {
  return gamma * std::sqrt(-2.0 * std::log(rng.uniform01()));
}

// Standard normal by Box-Muller; consumes two draws.
inline double draw_normal(CounterRng& rng) {
  const double r = std::sqrt(-2.0 * std::log(rng.uniform01()));
  return r * std::cos(2.0 * std::numbers::pi * rng.uniform01());
}

// Poisson(mean) by inversion of u: the smallest k with CDF(k) >= u.
inline std::uint64_t poisson_inverse(double mean, double u) {
  if (mean <= 0.0) return 0;
  double log_p = -mean;  // log pmf(0)
  double cdf = std::exp(log_p);
  std::uint64_t k = 0;
  const std::uint64_t cap = static_cast<std::uint64_t>(mean + 40.0 * std::sqrt(mean) + 100.0);
  while (cdf < u && k < cap) {
    ++k;
    log_p += std::log(mean) - std::log(static_cast<double>(k));
    cdf += std::exp(log_p);
  }
  return k;
}

}  // namespace uavlos
