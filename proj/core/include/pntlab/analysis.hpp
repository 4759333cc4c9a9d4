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

/// Residual scan parameters.
///
/// B is the Siegel–Walfisz exponent, C bounds the modulus by q <= (log x)^C,
/// D is the exponent used for Möbius sums over progressions and epsilon the
/// Montgomery exponent. B > C + 1 is enforced.
struct ScanConfig {
    ProgressionClass cls = ProgressionClass::all();
    std::vector<u64> x_grid;
    double B = 3.0;
    double C = 1.5;
    double D = 1.0;
    double epsilon = 0.0;

    /// Throws DomainError on a non-coprime class, B <= C + 1, a grid that
    /// is not strictly increasing, or a first grid point below `min_x`.
    void validate(u64 min_x) const;
};

struct ScanRow {
    u64 x = 0;
    double psi = 0.0;
    double main = 0.0;      ///< x / φ(q)
    double residual = 0.0;  ///< psi - main
    double sw_norm = 0.0;   ///< |r| φ(q) (log x)^B / x
    double rh_norm = 0.0;   ///< |r| / (√x (log x)²)
    double mont_norm = 0.0; ///< |r| √q / x^(1/2 + ε)
    bool q_admissible = false;  ///< q <= (log x)^C
};

struct ScanTable {
    ScanConfig config;
    std::vector<ScanRow> rows;
};

/// Grid points must be >= 2 so that log x > 0.
ScanTable residual_scan(const ScanConfig& cfg);

/// Rebuilds the derived columns of a row from (x, psi) and the config.
ScanRow make_scan_row(const ScanConfig& cfg, u64 x, double psi);

struct MobiusScanRow {
    u64 x = 0;
    i64 sum = 0;            ///< Σ_{n<=x, n≡a} μ(n)
    double log_norm = 0.0;  ///< |r| (log x)^D / x
    double sqrt_norm = 0.0; ///< |r| / x^(1/2 + ε)
    bool q_admissible = false;
};

struct MobiusScanTable {
    ScanConfig config;
    std::vector<MobiusScanRow> rows;
};

/// Grid points must be >= 1.
MobiusScanTable mobius_residual_scan(const ScanConfig& cfg, const SegmentCache* cache = nullptr);

/// Median of `values` restricted to rows whose x lies in [lo, hi].
double median_over(std::span<const ScanRow> rows, u64 lo, u64 hi, double (*column)(const ScanRow&));

/// |r| φ(q) / x, the relative residual.
double relative_residual(const ScanRow& row);

/// π(x; q, a) recovered from exact θ (and ψ) samples by partial summation:
/// π = S(x)/log x + ∫_2^x S(t) / (t log² t) dt, integrated with the
/// trapezoid rule on a log-spaced grid.
struct PartialSummationEstimate {
    double value = 0.0;          ///< θ route
    double psi_route = 0.0;      ///< same formula driven by ψ
    double route_gap = 0.0;      ///< psi_route - value
    double quadrature_error = 0.0;  ///< |T(2N) - T(N)| on the θ route
    u64 grid_points = 0;         ///< N actually used
    bool converged = false;      ///< quadrature_error <= 0.5 within the limit
};

inline constexpr u64 kMaxQuadraturePoints = u64{1} << 20;

/// Requires x >= 3 and grid_points >= 16. The grid doubles until the
/// estimated quadrature error is at most 0.5 counts or `max_points` is hit.
PartialSummationEstimate pi_from_psi(u64 x, const ProgressionClass& cls, u64 grid_points,
                                     u64 max_points = kMaxQuadraturePoints);

/// Strictly increasing grid of roughly `per_decade` log-spaced integers in
/// [lo, hi], both ends included.
std::vector<u64> log_grid(u64 lo, u64 hi, unsigned per_decade);

}  // namespace pntlab
