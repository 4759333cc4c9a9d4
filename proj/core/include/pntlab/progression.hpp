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

/// The residue b (mod d·q) combining n ≡ 0 (mod d) with n ≡ a (mod q).
struct CrtSolution {
    bool exists = false;
    u64 b = 0;        ///< 0 < b <= modulus when exists
    u64 modulus = 0;  ///< lcm(d, q); equals d·q for coprime inputs
};

CrtSolution crt_residue(u64 d, const ProgressionClass& cls);

/// #{n <= x : d | n, n ≡ a (mod q)}.
u64 count_progression_multiples(u64 x, u64 d, const ProgressionClass& cls);

/// Exact Chebyshev sums over one residue class up to x.
struct ChebyshevResult {
    u64 x = 0;
    ProgressionClass cls = ProgressionClass::all();
    double psi = 0.0;    ///< Σ Λ(n), n <= x, n ≡ a
    double theta = 0.0;  ///< Σ log p, p <= x, p ≡ a
    u64 pi_count = 0;    ///< #{p <= x : p ≡ a}
    double main = 0.0;   ///< x / φ(q)
    double residual = 0.0;
};

/// One streaming pass over [1, max(xs)] recording every threshold in xs.
/// xs must be ascending. Per-segment partial sums are merged in segment
/// order, so results do not depend on the worker count.
std::vector<ChebyshevResult> chebyshev_sweep(std::span<const u64> xs, const ProgressionClass& cls);

ChebyshevResult psi_direct(u64 x, const ProgressionClass& cls);
u64 pi_direct(u64 x, const ProgressionClass& cls);
double psi_all(u64 x);

}  // namespace pntlab
