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

#include <vector>

#include "pntlab/common.hpp"

namespace pntlab {

/// The two halves of Λ(n) after splitting the divisors of n at √n.
struct SplitPair {
    double s1 = 0.0;  ///< -Σ_{d|n, d<√n} μ(d) log d
    double s2 = 0.0;  ///< -Σ_{d|n, d<=√n} μ(n/d) log(n/d)
};

/// Divisors of n split at √n; a square root divisor lands in `large`.
struct DivisorPartition {
    std::vector<u64> small;
    std::vector<u64> large;
};

/// -Σ_{d|n} μ(d) log d by divisor enumeration.
double mangoldt_from_mobius(u64 n);

SplitPair split_mangoldt(u64 n);

DivisorPartition divisor_partition(u64 n);

/// Largest deviations found by verify_identities.
struct IdentityReport {
    u64 checked = 0;
    double max_inversion_gap = 0.0;  ///< max |Λ(n) - mangoldt_from_mobius(n)|
    double max_split_gap = 0.0;      ///< max |Λ(n) - (s1 + s2)|
    u64 worst_inversion_n = 0;
    u64 worst_split_n = 0;
};

/// Checks both identities for every n in [1, max_n] against Λ from the sieve.
IdentityReport verify_identities(u64 max_n);

}  // namespace pntlab
