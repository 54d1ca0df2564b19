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

#include "numerics.hpp"

#include <cmath>

namespace teqkd {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488016887242097;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;
}  // namespace

double gaussian_tail(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double gaussian_tail_log(double x) {
  if (x < 35.0) {
    return std::log(gaussian_tail(x));
  }
  // erfc underflows near x ~ 37.5; switch to the asymptotic expansion
  // Q(x) = phi(x)/x * (1 - 1/x^2 + 3/x^4 - 15/x^6 + ...).
  const double ix2 = 1.0 / (x * x);
  const double series = ((-15.0 * ix2 + 3.0) * ix2 - 1.0) * ix2;
  return -0.5 * x * x - std::log(x) - kLogSqrt2Pi + std::log1p(series);
}

double f_sigma(double x, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("f_sigma: sigma must be > 0");
  return 1.0 - (gaussian_tail(x / sigma) + gaussian_tail((1.0 - x) / sigma));
}

double antiderivative_Q(double a, double x) {
  if (a == 0.0) throw DomainError("antiderivative_Q: a must be nonzero");
  const double ax = a * x;
  return x * gaussian_tail(ax) - normal_pdf(ax) / a;
}

double antiderivative_Q2(double a, double x) {
  if (a == 0.0) throw DomainError("antiderivative_Q2: a must be nonzero");
  const double ax = a * x;
  const double q = gaussian_tail(ax);
  return x * q * q - 2.0 * q * normal_pdf(ax) / a + gaussian_tail(kSqrt2 * ax) / (kSqrtPi * a);
}

namespace {
inline double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }
}  // namespace

double entropy_binary(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("entropy_binary: x must be in [0,1]");
  return -plog2p(x) - plog2p(1.0 - x);
}

double entropy_ternary(double x) {
  if (!(x >= 0.0 && x <= 0.5)) throw DomainError("entropy_ternary: x must be in [0,1/2]");
  return -plog2p(1.0 - 2.0 * x) - 2.0 * plog2p(x);
}

double entropy_bits(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) h -= plog2p(p);
  return h;
}

}  // namespace teqkd
