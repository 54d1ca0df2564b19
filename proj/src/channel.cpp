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

#include "channel.hpp"

#include <array>
#include <cmath>

#include "numerics.hpp"

namespace teqkd {

namespace {
constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031215;
// Width, in sigmas, beyond which Gaussian mass is below 1e-30; used to place
// quadrature knots around integrand supports.
constexpr double kSupport = 12.0;
}  // namespace

PhotonPairSample sample_pair(const ChannelParams& params, RngStream& rng) {
  const double n = static_cast<double>(params.n_bins);
  PhotonPairSample s;
  s.u = rng.next_uniform(n);
  s.x_tilde = s.u + params.sigma * rng.next_normal();
  s.y_tilde = s.u + params.sigma * rng.next_normal();
  s.alice_valid = (s.x_tilde >= 0.0 && s.x_tilde < n);
  s.bob_valid = (s.y_tilde >= 0.0 && s.y_tilde < n);
  return s;
}

SoftObservation sample_valid_observation(const ChannelParams& params, RngStream& rng) {
  for (;;) {
    const PhotonPairSample s = sample_pair(params, rng);
    if (s.alice_valid && s.bob_valid) {
      SoftObservation o;
      o.alice_bin = quantize_bin(s.x_tilde, params.n_bins);
      o.bob_position = s.y_tilde;
      o.bob_bin = quantize_bin(s.y_tilde, params.n_bins);
      return o;
    }
  }
}

double error_rate_closed_form(const ChannelParams& params, bool* low_snr_warning) {
  const double gamma = params.gamma();
  if (low_snr_warning) *low_snr_warning = (gamma < 10.0);
  const double n = static_cast<double>(params.n_bins);
  return kTwoOverSqrtPi * (1.0 - 1.0 / n) / std::sqrt(gamma);
}

McEstimate error_rate_monte_carlo(const ChannelParams& params, std::uint64_t min_error_events,
                                  RngStream& rng, const McOptions& opts) {
  if (min_error_events < 100)
    throw DomainError("error_rate_monte_carlo: min_error_events must be >= 100");
  McEstimate r;
  while (r.error_events < min_error_events) {
    if (r.trials >= opts.max_trials)
      throw BudgetExceeded("error_rate_monte_carlo: max_trials reached with " +
                           std::to_string(r.error_events) + " error events");
    ++r.trials;
    const PhotonPairSample s = sample_pair(params, rng);
    if (!(s.alice_valid && s.bob_valid)) continue;
    ++r.accepted;
    if (quantize_bin(s.x_tilde, params.n_bins) != quantize_bin(s.y_tilde, params.n_bins))
      ++r.error_events;
  }
  const double p = static_cast<double>(r.error_events) / static_cast<double>(r.accepted);
  r.estimate = p;
  r.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(r.accepted));
  return r;
}

double validity_probability(const ChannelParams& params) {
  // Substituting x = u/N turns (1/N) int_0^N [...]^2 du into
  // int_0^1 f_{sigma/N}(x)^2 dx with the integrand's transition regions at
  // the interval ends.
  const double sbar = params.sigma / params.n_bins;
  const std::array<double, 2> knots = {kSupport * sbar, 1.0 - kSupport * sbar};
  return integrate_knotted([sbar](double x) { const double f = f_sigma(x, sbar); return f * f; },
                           0.0, 1.0, knots);
}

double diversity_order(std::span<const double> snr_db, std::span<const double> pe) {
  if (snr_db.size() != pe.size())
    throw DomainError("diversity_order: mismatched curve arrays");
  double max_db = -1e300;
  for (double s : snr_db) max_db = std::max(max_db, s);
  // Fit -log10(Pe) = order * log10(gamma) + c over the top decade.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (size_t i = 0; i < snr_db.size(); ++i) {
    if (snr_db[i] < max_db - 10.0 || !(pe[i] > 0.0)) continue;
    const double x = snr_db[i] / 10.0;
    const double y = -std::log10(pe[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++count;
  }
  if (count < 3)
    throw InsufficientData("diversity_order: need >= 3 positive points in the top decade");
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) throw InsufficientData("diversity_order: degenerate abscissa");
  return (count * sxy - sx * sy) / denom;
}

double diversity_order(const RateCurve& curve) {
  std::vector<double> s, p;
  s.reserve(curve.points.size());
  p.reserve(curve.points.size());
  for (const RatePoint& pt : curve.points) {
    s.push_back(pt.snr_db);
    p.push_back(pt.value);
  }
  return diversity_order(s, p);
}

}  // namespace teqkd
