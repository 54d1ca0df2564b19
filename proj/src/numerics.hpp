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

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "errors.hpp"

namespace teqkd {

// All entropies and rate quantities are in bits (log base 2).

/// Gaussian tail Q(x) = P(G > x) for standard normal G. Saturates to 0/1
/// when the tail is below machine resolution.
double gaussian_tail(double x);

/// log Q(x), stable for arguments where Q itself underflows.
double gaussian_tail_log(double x);

/// Standard normal density.
inline double normal_pdf(double t) {
  return 0.39894228040143267793994605993438 * std::exp(-0.5 * t * t);
}

/// f_sigma(x) = Q(-x/sigma) - Q((1-x)/sigma), computed in the symmetric form
/// 1 - [Q(x/sigma) + Q((1-x)/sigma)] so that f(x) == f(1-x) bit-for-bit.
/// Saturates to 1.0 when both tails underflow below one ulp.
double f_sigma(double x, double sigma);

/// Antiderivative of Q(a x) in x, valid for either sign of a:
///   x Q(ax) - phi(ax)/a
double antiderivative_Q(double a, double x);

/// Antiderivative of Q^2(a x) in x:
///   x Q^2(ax) - 2 Q(ax) phi(ax)/a + Q(sqrt(2) a x)/(sqrt(pi) a)
double antiderivative_Q2(double a, double x);

/// Binary entropy in bits, x in [0,1], with 0 log 0 := 0.
double entropy_binary(double x);

/// Symmetric ternary entropy in bits, x in [0,1/2]:
///   -(1-2x) log2(1-2x) - 2x log2(x)
double entropy_ternary(double x);

/// Shannon entropy in bits of a probability vector (entries assumed >= 0).
double entropy_bits(std::span<const double> probs);

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 1 << 16;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK constants).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
double gk15(F&& f, double a, double b, double* err) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double result_g = kGK15WeightsG[3] * fc;
  double result_k = kGK15WeightsK[7] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGK15Nodes[i];
    const double fsum = f(center - dx) + f(center + dx);
    result_k += kGK15WeightsK[i] * fsum;
    if (i % 2 == 1) result_g += kGK15WeightsG[i / 2] * fsum;
  }
  result_g *= half;
  result_k *= half;
  const double diff = std::fabs(result_k - result_g);
  // QUADPACK-style sharpened estimate.
  *err = (diff > 0.0) ? std::min(diff, std::pow(200.0 * diff, 1.5)) : 0.0;
  return result_k;
}

template <class F>
double adapt(F&& f, double a, double b, double abs_tol, double rel_tol, int& budget) {
  double err = 0.0;
  const double whole = gk15(f, a, b, &err);
  if (err <= std::max(abs_tol, rel_tol * std::fabs(whole))) return whole;
  const double mid = 0.5 * (a + b);
  if (mid <= a || mid >= b) return whole;  // interval at machine resolution
  if (--budget < 0) throw NonConvergence("quadrature: max_subdivisions exhausted");
  const double child_tol = 0.5 * abs_tol;
  return adapt(f, a, mid, child_tol, rel_tol, budget) +
         adapt(f, mid, b, child_tol, rel_tol, budget);
}

}  // namespace detail

/// Deterministic adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a,b].
/// Throws NonConvergence when spec.max_subdivisions is exhausted, DomainError
/// when a > b or the spec violates its invariants.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (!(spec.abs_tol > 0.0) || spec.rel_tol < 0.0 || spec.max_subdivisions < 1)
    throw DomainError("integrate: invalid QuadratureSpec");
  if (a == b) return 0.0;
  int budget = spec.max_subdivisions;
  return detail::adapt(f, a, b, spec.abs_tol, spec.rel_tol, budget);
}

/// Quadrature of f over [a,b] split at the given interior knots. Knots outside
/// ]a,b[ are ignored. Integrands in this project are smooth between knots but
/// can be arbitrarily concentrated (sigma -> 0); callers pass the support
/// boundaries as knots so adaptivity never misses a spike.
template <class F>
double integrate_knotted(F&& f, double a, double b, std::span<const double> knots,
                         const QuadratureSpec& spec = {}) {
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  std::vector<double> cuts;
  cuts.reserve(knots.size() + 2);
  cuts.push_back(a);
  for (double k : knots)
    if (k > a && k < b) cuts.push_back(k);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  const int pieces = static_cast<int>(cuts.size()) - 1;
  QuadratureSpec piece_spec = spec;
  piece_spec.abs_tol = spec.abs_tol / std::max(1, pieces);
  for (int i = 0; i < pieces; ++i)
    total += integrate(f, cuts[i], cuts[i + 1], piece_spec);
  return total;
}

// Vector-valued quadrature: integrates m coupled components in one adaptive
// pass (refining when any component misses tolerance). Used where several
// integrands share the same expensive kernel evaluations.
inline constexpr int kMaxVecComponents = 80;

namespace detail {

template <class F>
void gk15_vec(F&& f, double a, double b, int m, double* result_k, double* max_err) {
  double result_g[kMaxVecComponents];
  double buf[kMaxVecComponents];
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  f(center, buf);
  for (int c = 0; c < m; ++c) {
    result_g[c] = kGK15WeightsG[3] * buf[c];
    result_k[c] = kGK15WeightsK[7] * buf[c];
  }
  double buf2[kMaxVecComponents];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGK15Nodes[i];
    f(center - dx, buf);
    f(center + dx, buf2);
    for (int c = 0; c < m; ++c) {
      const double fsum = buf[c] + buf2[c];
      result_k[c] += kGK15WeightsK[i] * fsum;
      if (i % 2 == 1) result_g[c] += kGK15WeightsG[i / 2] * fsum;
    }
  }
  *max_err = 0.0;
  for (int c = 0; c < m; ++c) {
    result_g[c] *= half;
    result_k[c] *= half;
    const double diff = std::fabs(result_k[c] - result_g[c]);
    const double e = (diff > 0.0) ? std::min(diff, std::pow(200.0 * diff, 1.5)) : 0.0;
    *max_err = std::max(*max_err, e);
  }
}

template <class F>
void adapt_vec(F&& f, double a, double b, int m, double abs_tol, double rel_tol, int& budget,
               double* accum) {
  double piece[kMaxVecComponents];
  double err = 0.0;
  gk15_vec(f, a, b, m, piece, &err);
  double scale = 0.0;
  for (int c = 0; c < m; ++c) scale = std::max(scale, std::fabs(piece[c]));
  const double mid = 0.5 * (a + b);
  if (err <= std::max(abs_tol, rel_tol * scale) || mid <= a || mid >= b) {
    for (int c = 0; c < m; ++c) accum[c] += piece[c];
    return;
  }
  if (--budget < 0) throw NonConvergence("quadrature(vec): max_subdivisions exhausted");
  adapt_vec(f, a, mid, m, 0.5 * abs_tol, rel_tol, budget, accum);
  adapt_vec(f, mid, b, m, 0.5 * abs_tol, rel_tol, budget, accum);
}

}  // namespace detail

/// Integrate an m-component integrand f(x, out[0..m)) over [a,b], splitting at
/// the given knots. Results accumulate into out[0..m), which must be zeroed by
/// the caller.
template <class F>
void integrate_vec(F&& f, double a, double b, int m, std::span<const double> knots,
                   const QuadratureSpec& spec, double* out) {
  if (!(a <= b)) throw DomainError("integrate_vec: requires a <= b");
  if (m < 1 || m > kMaxVecComponents) throw DomainError("integrate_vec: bad component count");
  if (a == b) return;
  std::vector<double> cuts;
  cuts.reserve(knots.size() + 2);
  cuts.push_back(a);
  for (double k : knots)
    if (k > a && k < b) cuts.push_back(k);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  const int pieces = static_cast<int>(cuts.size()) - 1;
  const double piece_tol = spec.abs_tol / std::max(1, pieces);
  int budget = spec.max_subdivisions;
  for (int i = 0; i < pieces; ++i)
    detail::adapt_vec(f, cuts[i], cuts[i + 1], m, piece_tol, spec.rel_tol, budget, out);
}

}  // namespace teqkd
