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

// mmWave LoS link budget: log-distance path loss at 73 GHz, received power,
// Rician small-scale fading and Shannon throughput.

#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "uavlos/error.hpp"
#include "uavlos/rng.hpp"

namespace uavlos {

struct ChannelParams {
  double alpha = 69.8;             // dB, path-loss intercept
  double beta = 2.0;               // path-loss exponent
  double bandwidth_hz = 100e6;
  double noise_figure_db = 9.0;
  double rician_k = 2.0;           // linear K-factor; +inf means pure LoS
  double carrier_ghz = 73.0;       // informational; alpha/beta are fitted for it
  double user_gain_dbi = 24.5;

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

namespace channel {

inline constexpr double kThermalNoiseDbmPerHz = -174.0;

inline void validate(const ChannelParams& p) {
  if (!(p.alpha > 0 && p.beta >= 1 && p.bandwidth_hz > 0 && p.noise_figure_db >= 0 && p.rician_k >= 0 &&
        p.carrier_ghz > 0))
    throw InvalidParams("channel parameters out of range");
}

inline double path_loss_db(double d, const ChannelParams& p) {
  if (!(d > 0.0)) throw InvalidDistance("path_loss_db: distance must be positive");
  return p.alpha + 10.0 * p.beta * std::log10(d);
}

inline double rx_power_dbm(double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi, double d,
                           const ChannelParams& p) {
  return tx_power_dbm + tx_gain_dbi + rx_gain_dbi - path_loss_db(d, p);
}

inline double noise_power_dbm(const ChannelParams& p) {
  return kThermalNoiseDbmPerHz + 10.0 * std::log10(p.bandwidth_hz) + p.noise_figure_db;
}

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

// B log2(1 + P |h|^2 / sigma0), with P and sigma0 both in milliwatts.
inline double throughput_bps(double rx_dbm, double h_mag, const ChannelParams& p) {
  const double snr = dbm_to_mw(rx_dbm) * h_mag * h_mag / dbm_to_mw(noise_power_dbm(p));
  return p.bandwidth_hz * std::log2(1.0 + snr);
}

// |h| for a Rician channel with K-factor p.rician_k and E[|h|^2] = 1.
inline double draw_fading(const ChannelParams& p, CounterRng& rng) {
  if (std::isinf(p.rician_k)) return 1.0;
  const double k = p.rician_k;
  const double los = std::sqrt(k / (k + 1.0));
  const double sigma = std::sqrt(1.0 / (2.0 * (k + 1.0)));
  const double re = los + sigma * draw_normal(rng);
  const double im = sigma * draw_normal(rng);
  return std::hypot(re, im);
}

}  // namespace channel
}  // namespace uavlos
