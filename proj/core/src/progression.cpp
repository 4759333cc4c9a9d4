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

#include "pntlab/progression.hpp"

#include <cmath>

namespace pntlab {

namespace {

__extension__ typedef __int128 i128;

/// Inverse of v modulo m (gcd(v, m) = 1, m >= 1).
u64 mod_inverse(u64 v, u64 m) {
    if (m == 1) return 0;
    i128 old_r = static_cast<i128>(v % m), r = static_cast<i128>(m);
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 quot = old_r / r;
        i128 t = old_r - quot * r;
        old_r = r;
        r = t;
        t = old_s - quot * s;
        old_s = s;
        s = t;
    }
    i128 inv = old_s % static_cast<i128>(m);
    if (inv < 0) inv += m;
    return static_cast<u64>(inv);
}

struct SegmentSums {
    CompensatedSum psi;
    CompensatedSum theta;
    u64 pi = 0;
};

}  // namespace

CrtSolution crt_residue(u64 d, const ProgressionClass& cls) {
    if (d == 0) throw DomainError("crt_residue: d must be >= 1");
    const u64 q = cls.q();
    const u64 g = gcd(d, q);
    if (cls.a() % g != 0) return {};
    const u64 qg = q / g;
    const u64 k = static_cast<u64>(static_cast<i128>(cls.a() / g) * mod_inverse(d / g, qg) % qg);
    const i128 modulus = static_cast<i128>(d) * qg;
    if (modulus > static_cast<i128>(~u64{0})) throw RangeError("crt_residue: modulus overflow");
    const auto m = static_cast<u64>(modulus);
    u64 b = static_cast<u64>(static_cast<i128>(d) * k % modulus);
    if (b == 0) b = m;
    return {true, b, m};
}

u64 count_progression_multiples(u64 x, u64 d, const ProgressionClass& cls) {
    const CrtSolution s = crt_residue(d, cls);
    if (!s.exists || s.b > x) return 0;
    return (x - s.b) / s.modulus + 1;
}

std::vector<ChebyshevResult> chebyshev_sweep(std::span<const u64> xs, const ProgressionClass& cls) {
    std::vector<ChebyshevResult> out;
    out.reserve(xs.size());
    if (xs.empty()) return out;
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] < xs[i - 1]) throw DomainError("chebyshev_sweep: thresholds must be ascending");
    const u64 xmax = xs.back();
    check_range_cap(xmax, "psi_direct");

    auto make = [&](u64 x, const SegmentSums& acc) {
        ChebyshevResult r;
        r.x = x;
        r.cls = cls;
        r.psi = acc.psi.value();
        r.theta = acc.theta.value();
        r.pi_count = acc.pi;
        r.main = static_cast<double>(x) / static_cast<double>(cls.phi());
        r.residual = r.psi - r.main;
        return r;
    };

    std::size_t next = 0;
    SegmentSums acc;
    while (next < xs.size() && xs[next] < 2) out.push_back(make(xs[next++], acc));
    if (next == xs.size()) return out;

    const PrimeBase base(xmax + 1);
    std::vector<u64> cuts;
    for (std::size_t i = next; i < xs.size(); ++i) cuts.push_back(xs[i] + 1);
    const auto bounds = segment_boundaries(2, xmax + 1, std::max(kSegmentLength, isqrt(xmax)), cuts);
    const std::size_t nseg = bounds.size() - 1;

    std::vector<SegmentSums> partial(nseg);
    parallel_for(nseg, [&](std::size_t i) {
        const u64 lo = bounds[i], hi = bounds[i + 1];
        std::vector<std::uint8_t> is_prime;
        kernel::prime_segment(base, lo, hi, is_prime);
        SegmentSums& s = partial[i];
        for (u64 n = cls.first_at_least(lo); n < hi; n += cls.q()) {
            if (!is_prime[n - lo]) continue;
            const double l = std::log(static_cast<double>(n));
            s.theta.add(l);
            s.psi.add(l);
            ++s.pi;
        }
        kernel::for_each_higher_power(base, lo, hi, [&](u64 n, u64 p, std::uint8_t) {
            if (cls.contains(n)) s.psi.add(std::log(static_cast<double>(p)));
        });
    });

    for (std::size_t i = 0; i < nseg; ++i) {
        acc.psi.merge(partial[i].psi);
        acc.theta.merge(partial[i].theta);
        acc.pi += partial[i].pi;
        while (next < xs.size() && xs[next] + 1 == bounds[i + 1]) out.push_back(make(xs[next++], acc));
    }
    return out;
}

ChebyshevResult psi_direct(u64 x, const ProgressionClass& cls) {
    const u64 xs[] = {x};
    return chebyshev_sweep(xs, cls).front();
}

u64 pi_direct(u64 x, const ProgressionClass& cls) { return psi_direct(x, cls).pi_count; }

double psi_all(u64 x) { return psi_direct(x, ProgressionClass::all()).psi; }

}  // namespace pntlab
