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

#include <string>
#include <vector>

namespace teqkd {

/// One sample of a rate or error-rate quantity against SNR.
struct RatePoint {
  double snr_db = 0.0;  // gamma or gamma_bar in dB, axis chosen by the producer
  double value = 0.0;   // bits per photon, or a probability for error curves
};

/// A curve sorted by snr_db.
struct RateCurve {
  std::string label;
  std::vector<RatePoint> points;
};

}  // namespace teqkd
