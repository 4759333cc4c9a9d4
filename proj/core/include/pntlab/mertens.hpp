// Copyright 2026 The pntlab Authors
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

#pragma once

#include <span>
#include <vector>

#include "pntlab/arith.hpp"

namespace pntlab {

class SegmentCache;

/// Partial sums Σ μ(n)/n and Σ μ(n) log(n)/n at each checkpoint.
struct MertensSeries {
    std::vector<u64> checkpoints;
    std::vector<double> s_mu;
    std::vector<double> s_mulog;
    std::vector<i64> mertens;  ///< M(y) = Σ_{n<=y} μ(n)
};

/// Checkpoints must be ascending and >= 1. When `cache` is given, segments it
/// covers are read from disk instead of sieved.
MertensSeries mertens_series(std::span<const u64> checkpoints, const SegmentCache* cache = nullptr);

double mu_over_n_partial(u64 y);
double mu_logn_over_n_partial(u64 y);
i64 mertens_function(u64 x);

/// Σ_{n<=x, n≡a (mod q)} μ(n) at each ascending threshold.
std::vector<i64> mobius_progression_sweep(std::span<const u64> xs, const ProgressionClass& cls,
                                          const SegmentCache* cache = nullptr);

/// Requires x >= 1 and a coprime class.
i64 mobius_progression_sum(u64 x, const ProgressionClass& cls);

/// Σ_{d<√x} μ(d) log(d) {x/d}.
double fractional_sum(u64 x);

/// Least-squares fit of log|s(y) - limit| = -B log log y + log C.
struct ExponentFit {
    std::vector<double> gaps;  ///< |s(y) - limit| per checkpoint
    double exponent = 0.0;     ///< fitted B
    double log_constant = 0.0; ///< fitted log C
    bool saturated = false;    ///< fewer than two gaps above 1e-12; nothing to fit
};

struct SeriesPoint {
    double y = 0.0;
    double value = 0.0;
};

/// Needs at least three points with ascending y >= 3. Points whose gap is
/// below 1e-12 are left out of the regression.
ExponentFit fit_log_exponent(std::span<const SeriesPoint> points, double limit);

}  // namespace pntlab
