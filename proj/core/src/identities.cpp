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

#include "pntlab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pntlab/arith.hpp"

namespace pntlab {

namespace {

struct SignedDivisor {
    u64 d;
    int mu;
};

/// Divisors of n in ascending order with μ(d) attached.
std::vector<SignedDivisor> signed_divisors(u64 n) {
    if (n == 0) throw DomainError("divisor identities require n >= 1");
    std::vector<SignedDivisor> divs{{1, 1}};
    for (const auto& [p, m] : factorize(n)) {
        const std::size_t count = divs.size();
        for (std::size_t i = 0; i < count; ++i) {
            u64 d = divs[i].d;
            for (std::uint8_t e = 1; e <= m; ++e) {
                d *= p;
                divs.push_back({d, e == 1 ? -divs[i].mu : 0});
            }
        }
    }
    std::sort(divs.begin(), divs.end(),
              [](const SignedDivisor& x, const SignedDivisor& y) { return x.d < y.d; });
    return divs;
}

double mu_log(const SignedDivisor& v) {
    return v.mu == 0 ? 0.0 : v.mu * std::log(static_cast<double>(v.d));
}

// d < √n and d <= √n, compared exactly.
bool below_root(u64 d, u64 n) { return d <= (n - 1) / d; }
bool at_most_root(u64 d, u64 n) { return d <= n / d; }

}  // namespace

double mangoldt_from_mobius(u64 n) {
    CompensatedSum acc;
    for (const auto& v : signed_divisors(n)) acc.add(-mu_log(v));
    return acc.value();
}

SplitPair split_mangoldt(u64 n) {
    const auto divs = signed_divisors(n);
    const std::size_t k = divs.size();
    CompensatedSum s1, s2;
    for (std::size_t i = 0; i < k; ++i) {
        const SignedDivisor& d = divs[i];
        if (!at_most_root(d.d, n)) break;
        if (below_root(d.d, n)) s1.add(-mu_log(d));
        // Sorted divisors pair up as d_i * d_{k-1-i} = n.
        s2.add(-mu_log(divs[k - 1 - i]));
    }
    return {s1.value(), s2.value()};
}

DivisorPartition divisor_partition(u64 n) {
    DivisorPartition out;
    for (const u64 d : divisors(n)) (below_root(d, n) ? out.small : out.large).push_back(d);
    return out;
}

IdentityReport verify_identities(u64 max_n) {
    IdentityReport report;
    if (max_n == 0) return report;
    const MangoldtTable lambda = sieve_mangoldt(1, max_n + 1);
    for (u64 n = 1; n <= max_n; ++n) {
        const double expected = lambda.lambda(n);
        const double inversion_gap = std::abs(expected - mangoldt_from_mobius(n));
        const SplitPair split = split_mangoldt(n);
        const double split_gap = std::abs(expected - (split.s1 + split.s2));
        if (inversion_gap > report.max_inversion_gap) {
            report.max_inversion_gap = inversion_gap;
            report.worst_inversion_n = n;
        }
        if (split_gap > report.max_split_gap) {
            report.max_split_gap = split_gap;
            report.worst_split_n = n;
        }
        ++report.checked;
    }
    return report;
}

}  // namespace pntlab
