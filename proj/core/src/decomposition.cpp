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

#include "pntlab/decomposition.hpp"

#include <cmath>
#include <string>

#include "pntlab/progression.hpp"

namespace pntlab {

namespace {

void require(u64 x, const ProgressionClass& cls, const char* what) {
    if (x < 1) throw DomainError(std::string(what) + ": x must be >= 1");
    if (!cls.is_coprime())
        throw DomainError(std::string(what) + ": residue class must be coprime, gcd(a, q) = " +
                          std::to_string(gcd(cls.a(), cls.q())));
    check_range_cap(x + 1, what);
}

double log_of(u64 n) { return std::log(static_cast<double>(n)); }

bool sq_below(u64 d, u64 x) { return d <= (x - 1) / d; }
bool sq_at_most(u64 d, u64 x) { return d <= x / d; }

/// Smallest prime factor of every n < hi.
std::vector<std::uint32_t> smallest_prime_factors(u64 hi) {
    std::vector<std::uint32_t> spf(hi, 0);
    for (u64 i = 2; i < hi; ++i) {
        if (spf[i] != 0) continue;
        for (u64 j = i; j < hi; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    return spf;
}

struct ErrorSums {
    CompensatedSum literal;  // m in [1, x/d]
    CompensatedSum split;  // m in [d, x/d]
};

ErrorSums error_sums(u64 x, const ProgressionClass& cls, const MobiusTable& mu) {
    ErrorSums out;
    for (u64 d = 1; sq_at_most(d, x); ++d) {
        const CrtSolution crt = crt_residue(d, cls);
        if (!crt.exists) continue;
        const u64 c = (crt.b / d) % cls.q();
        const u64 limit = x / d;
        CompensatedSum below, above;
        const u64 start = c == 0 ? cls.q() : c;
        for (u64 m = start; m <= limit; m += cls.q()) {
            const int v = mu.at(m);
            if (v == 0) continue;
            (m < d ? below : above).add(-v * log_of(m));
        }
        out.literal.merge(below);
        out.literal.merge(above);
        out.split.merge(above);
    }
    return out;
}

double main_term_impl(u64 x, const ProgressionClass& cls, const MobiusTable& mu) {
    CompensatedSum acc;
    for (u64 d = 2; sq_below(d, x); ++d) {
        const int v = mu.at(d);
        if (v == 0) continue;
        const u64 count = count_progression_multiples(x, d, cls);
        if (count != 0) acc.add(-v * log_of(d) * static_cast<double>(count));
    }
    return acc.value();
}

double grouped_s1(u64 x, const ProgressionClass& cls, const MobiusTable& mu) {
    CompensatedSum acc;
    for (u64 d = 2; sq_below(d, x); ++d) {
        const int v = mu.at(d);
        if (v == 0) continue;
        // n with d | n and d < √n, i.e. n in (d², x]
        const u64 count =
            count_progression_multiples(x, d, cls) - count_progression_multiples(d * d, d, cls);
        if (count != 0) acc.add(-v * log_of(d) * static_cast<double>(count));
    }
    return acc.value();
}

MobiusTable mobius_through(u64 x) { return sieve_mobius(1, x + 1); }

}  // namespace

SplitTotals exact_split_sums_per_element(u64 x, const ProgressionClass& cls) {
    require(x, cls, "exact_split_sums");
    const MobiusTable mu = mobius_through(x);
    const auto spf = smallest_prime_factors(x + 1);
    CompensatedSum s1, s2;
    std::vector<u64> divs;
    for (u64 n = cls.first_at_least(1); n <= x; n += cls.q()) {
        divs.assign(1, 1);
        for (u64 rest = n; rest > 1;) {
            const u64 p = spf[rest];
            const std::size_t count = divs.size();
            u64 pk = 1;
            while (rest % p == 0) {
                rest /= p;
                pk *= p;
                for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
            }
        }
        CompensatedSum n1, n2;
        for (const u64 d : divs) {
            if (!sq_at_most(d, n)) continue;
            if (sq_below(d, n) && mu.at(d) != 0) n1.add(-mu.at(d) * log_of(d));
            const u64 e = n / d;
            if (mu.at(e) != 0) n2.add(-mu.at(e) * log_of(e));
        }
        s1.merge(n1);
        s2.merge(n2);
    }
    return {s1.value(), s2.value()};
}

SplitTotals exact_split_sums_grouped(u64 x, const ProgressionClass& cls) {
    require(x, cls, "exact_split_sums");
    const MobiusTable mu = mobius_through(x);
    return {grouped_s1(x, cls, mu), error_sums(x, cls, mu).split.value()};
}

SplitTotals exact_split_sums(u64 x, const ProgressionClass& cls) {
    return x <= kPerElementSplitLimit ? exact_split_sums_per_element(x, cls)
                                      : exact_split_sums_grouped(x, cls);
}

double main_term(u64 x, const ProgressionClass& cls) {
    require(x, cls, "main_term");
    const u64 root = isqrt(x);
    return main_term_impl(x, cls, mobius_through(root + 1));
}

double error_term(u64 x, const ProgressionClass& cls) {
    require(x, cls, "error_term");
    return error_sums(x, cls, mobius_through(x)).literal.value();
}

DecompositionResult decompose_psi(u64 x, const ProgressionClass& cls) {
    require(x, cls, "decompose_psi");
    DecompositionResult r;
    r.x = x;
    r.cls = cls;
    r.psi_exact = psi_direct(x, cls).psi;

    const MobiusTable mu = mobius_through(x);
    const ErrorSums e = error_sums(x, cls, mu);
    if (x <= kPerElementSplitLimit) {
        const SplitTotals split = exact_split_sums_per_element(x, cls);
        r.s1_total = split.s1_total;
        r.s2_total = split.s2_total;
    } else {
        r.s1_total = grouped_s1(x, cls, mu);
        r.s2_total = e.split.value();
    }
    r.m_paper = main_term_impl(x, cls, mu);
    r.e_paper = e.literal.value();
    r.identity_gap = (r.s1_total + r.s2_total) - r.psi_exact;
    r.grouping_gap = (r.m_paper + r.e_paper) - r.psi_exact;
    r.main_asymptotic = static_cast<double>(x) / static_cast<double>(cls.phi());
    return r;
}

MainTermModels main_term_models(u64 x, const ProgressionClass& cls) {
    require(x, cls, "main_term_models");
    const MobiusTable mu = mobius_through(isqrt(x) + 1);
    MainTermModels out;
    out.literal = main_term_impl(x, cls, mu);
    CompensatedSum coprime_series, bound, phi_series;
    for (u64 d = 2; sq_below(d, x); ++d) {
        const int v = mu.at(d);
        if (v == 0) continue;
        const double l = log_of(d);
        phi_series.add(v * l * static_cast<double>(x / d));
        if (gcd(d, cls.q()) != 1) continue;
        coprime_series.add(v * l / static_cast<double>(d));
        bound.add(l);
    }
    const double xd = static_cast<double>(x);
    out.plain_q = -(xd / static_cast<double>(cls.q())) * coprime_series.value();
    out.plain_q_bound = bound.value();
    out.phi_model = -phi_series.value() / static_cast<double>(cls.phi());
    out.plain_q_gap = out.literal - out.plain_q;
    out.phi_gap = out.literal - out.phi_model;
    return out;
}

}  // namespace pntlab
