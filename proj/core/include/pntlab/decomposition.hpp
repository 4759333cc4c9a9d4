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

#include "pntlab/arith.hpp"

namespace pntlab {

/// Sums of the per-n divisor split over n <= x, n ≡ a (mod q).
struct SplitTotals {
    double s1_total = 0.0;
    double s2_total = 0.0;
};

/// ψ(x, q, a) next to its main/error rearrangement.
///
/// s1_total/s2_total split each n at √n and reproduce ψ exactly;
/// m_paper/e_paper use the single threshold √x for every n, so
/// grouping_gap measures what that regrouping costs.
struct DecompositionResult {
    u64 x = 0;
    ProgressionClass cls = ProgressionClass::all();
    double psi_exact = 0.0;
    double s1_total = 0.0;
    double s2_total = 0.0;
    double m_paper = 0.0;
    double e_paper = 0.0;
    double identity_gap = 0.0;  ///< (s1_total + s2_total) - psi_exact
    double grouping_gap = 0.0;  ///< (m_paper + e_paper) - psi_exact
    double main_asymptotic = 0.0;  ///< x / φ(q)
};

/// Above this x, exact_split_sums switches from the per-n loop to the
/// d-grouped evaluation.
inline constexpr u64 kPerElementSplitLimit = 100'000;

SplitTotals exact_split_sums(u64 x, const ProgressionClass& cls);

/// Per-n route: enumerate the divisors d <= √n of each n in the class.
SplitTotals exact_split_sums_per_element(u64 x, const ProgressionClass& cls);

/// d-grouped route: count multiples of d in (d², x] for the first half and
/// sum μ(m) log m over m ∈ [d, x/d] for the second.
SplitTotals exact_split_sums_grouped(u64 x, const ProgressionClass& cls);

/// -Σ_{d<√x} μ(d) log(d) · #{n <= x : d | n, n ≡ a (mod q)}.
double main_term(u64 x, const ProgressionClass& cls);

/// -Σ_{d<=√x} Σ_{m<=x/d, m ≡ c (mod q)} μ(m) log m, with c ≡ a·d⁻¹ (mod q).
double error_term(u64 x, const ProgressionClass& cls);

DecompositionResult decompose_psi(u64 x, const ProgressionClass& cls);

/// Closed-form models of the main term and how far the literal sum is from
/// each of them.
struct MainTermModels {
    double literal = 0.0;  ///< main_term(x, cls)
    /// -(x/q) Σ_{d<√x, (d,q)=1} μ(d) log(d) / d
    double plain_q = 0.0;
    /// Σ_{d<√x} |μ(d)| log d; bounds |literal - plain_q| since each count
    /// differs from x/(dq) by less than one.
    double plain_q_bound = 0.0;
    /// -(1/φ(q)) Σ_{d<√x} μ(d) log(d) (x/d - {x/d}), all d
    double phi_model = 0.0;
    double plain_q_gap = 0.0;  ///< literal - plain_q
    double phi_gap = 0.0;      ///< literal - phi_model
};

MainTermModels main_term_models(u64 x, const ProgressionClass& cls);

}  // namespace pntlab
