// Copyright 2026 The teqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <span>

#include "curve.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace teqkd {

/// Frame geometry and jitter level of the time-bin channel.
///
/// N bins of unit width per frame; a hidden emission time U uniform on [0,N)
/// is observed by each party through independent N(0, sigma^2) jitter.
/// gamma = 1/sigma^2 and gamma_bar = N^2/sigma^2 are the two SNR conventions.
/// Any N >= 2 is accepted here; the power-of-two constraint only matters for
/// bit labeling and is enforced by the coding layer.
struct ChannelParams {
  int n_bins;
  double sigma;

  ChannelParams(int n, double sig) : n_bins(n), sigma(sig) {
    if (n_bins < 2) throw DomainError("ChannelParams: n_bins must be >= 2");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
      throw DomainError("ChannelParams: sigma must be positive and finite");
  }

  static ChannelParams from_snr_db(int n, double gamma_db) {
    return ChannelParams(n, std::pow(10.0, -gamma_db / 20.0));
  }
  static ChannelParams from_normalized_snr_db(int n, double gamma_bar_db) {
    return from_snr_db(n, gamma_bar_db - 20.0 * std::log10(static_cast<double>(n)));
  }

  double gamma() const { return 1.0 / (sigma * sigma); }
  double gamma_bar() const { return static_cast<double>(n_bins) * n_bins / (sigma * sigma); }
  double gamma_db() const { return -20.0 * std::log10(sigma); }
  double gamma_bar_db() const { return gamma_db() + 20.0 * std::log10(static_cast<double>(n_bins)); }
  double bits_per_bin() const { return std::log2(static_cast<double>(n_bins)); }
};

/// One entangled emission as seen by both detectors, before frame validation.
struct PhotonPairSample {
  double u;        // hidden emission time in [0,N)
  double x_tilde;  // Alice's jittered position
  double y_tilde;  // Bob's jittered position
  bool alice_valid;
  bool bob_valid;
};

/// One accepted event: Alice's bin and Bob's real position within the frame.
struct SoftObservation {
  int alice_bin;
  double bob_position;
  int bob_bin;
};

/// Quantize a position to its bin. The x == N boundary (measure zero, can
/// only arise from rounding) maps to bin N-1.
inline int quantize_bin(double x, int n_bins) {
  int b = static_cast<int>(std::floor(x));
  if (b >= n_bins) b = n_bins - 1;
  if (b < 0) b = 0;
  return b;
}

PhotonPairSample sample_pair(const ChannelParams& params, RngStream& rng);

/// Rejection-sample until both frames are valid.
SoftObservation sample_valid_observation(const ChannelParams& params, RngStream& rng);

/// Leading-order symbol error rate 2/sqrt(pi) (1 - 1/N) gamma^(-1/2).
/// Valid at high SNR; below 10 dB the dropped terms matter and
/// *low_snr_warning (if given) is set.
double error_rate_closed_form(const ChannelParams& params, bool* low_snr_warning = nullptr);

struct McOptions {
  std::uint64_t max_trials = 2'000'000'000ULL;  // raw pair draws before BudgetExceeded
};

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t accepted = 0;
  std::uint64_t error_events = 0;
  std::uint64_t trials = 0;
};

/// Sample valid observations until min_error_events bin disagreements are
/// seen; returns the ratio and its binomial standard error. Throws
/// BudgetExceeded when opts.max_trials raw draws pass first.
McEstimate error_rate_monte_carlo(const ChannelParams& params, std::uint64_t min_error_events,
                                  RngStream& rng, const McOptions& opts = {});

/// P(both frames valid) = (1/N) int_0^N [Q(-u/s) - Q((N-u)/s)]^2 du.
double validity_probability(const ChannelParams& params);

/// Least-squares slope of -log10(Pe) against log10(gamma) over the top decade
/// of the curve. Requires at least 3 points inside that decade.
double diversity_order(std::span<const double> snr_db, std::span<const double> pe);
double diversity_order(const RateCurve& curve);

}  // namespace teqkd
