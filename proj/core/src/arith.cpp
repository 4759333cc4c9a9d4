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

#include "pntlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pntlab {

ProgressionClass ProgressionClass::coprime(u64 q, u64 a) {
    if (q == 0) throw DomainError("modulus q must be >= 1");
    if (a >= q)
        throw DomainError("residue a=" + std::to_string(a) + " must satisfy 0 <= a < q=" +
                          std::to_string(q));
    const u64 g = gcd(a, q);
    if (g != 1)
        throw DomainError("residue class (q=" + std::to_string(q) + ", a=" + std::to_string(a) +
                          ") is not coprime: gcd(a, q) = " + std::to_string(g));
    return {q, a, euler_phi(q), true};
}

ProgressionClass ProgressionClass::restricted(u64 q, u64 a) {
    if (q == 0) throw DomainError("modulus q must be >= 1");
    if (a >= q)
        throw DomainError("residue a=" + std::to_string(a) + " must satisfy 0 <= a < q=" +
                          std::to_string(q));
    return {q, a, euler_phi(q), gcd(a, q) == 1};
}

u64 ProgressionClass::first_at_least(u64 lo) const noexcept {
    const u64 r = lo % q_;
    return r <= a_ ? lo + (a_ - r) : lo + (q_ - r) + a_;
}

MobiusTable::MobiusTable(u64 lo, u64 hi, std::vector<std::int8_t> values)
    : lo_(lo), hi_(hi), values_(std::move(values)) {
    if (lo >= hi || values_.size() != hi - lo)
        throw DomainError("MobiusTable: values must cover [lo, hi)");
}

MangoldtTable::MangoldtTable(u64 lo, u64 hi, std::vector<PrimePower> entries)
    : lo_(lo), hi_(hi), entries_(std::move(entries)) {
    if (lo >= hi || entries_.size() != hi - lo)
        throw DomainError("MangoldtTable: entries must cover [lo, hi)");
}

double MangoldtTable::lambda(u64 n) const noexcept {
    const PrimePower& e = at(n);
    return e.is_none() ? 0.0 : std::log(static_cast<double>(e.p));
}

std::vector<std::uint32_t> primes_up_to(u64 n) {
    if (n > 0xFFFFFFFFull) throw RangeError("primes_up_to: bound exceeds 2^32");
    std::vector<std::uint32_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (u64 j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

PrimeBase::PrimeBase(u64 hi) : hi_(hi) {
    primes_ = primes_up_to(hi > 1 ? isqrt(hi - 1) : 0);
    logs_.reserve(primes_.size());
    for (auto p : primes_) logs_.push_back(std::log(static_cast<double>(p)));
}

namespace kernel {

void mobius_segment(const PrimeBase& base, u64 lo, u64 hi, std::span<std::int8_t> out,
                    std::vector<u64>& scratch) {
    const u64 len = hi - lo;
    scratch.assign(len, 1);
    std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(len), std::int8_t{1});
    for (const std::uint32_t p32 : base.primes()) {
        const u64 p = p32;
        const u64 pp = p * p;
        if (pp >= hi) break;
        for (u64 n = (lo + p - 1) / p * p; n < hi; n += p) {
            out[n - lo] = static_cast<std::int8_t>(-out[n - lo]);
            scratch[n - lo] *= p;
        }
        for (u64 n = (lo + pp - 1) / pp * pp; n < hi; n += pp) out[n - lo] = 0;
    }
    // Whatever is left over after the small primes is a single large prime.
    for (u64 i = 0; i < len; ++i)
        if (out[i] != 0 && scratch[i] != lo + i) out[i] = static_cast<std::int8_t>(-out[i]);
}

void prime_segment(const PrimeBase& base, u64 lo, u64 hi, std::vector<std::uint8_t>& is_prime) {
    const u64 len = hi - lo;
    is_prime.assign(len, 1);
    for (u64 n = lo; n < std::min<u64>(hi, 2); ++n) is_prime[n - lo] = 0;
    for (const std::uint32_t p32 : base.primes()) {
        const u64 p = p32;
        if (p * p >= hi) break;
        const u64 start = std::max(p * p, (lo + p - 1) / p * p);
        for (u64 n = start; n < hi; n += p) is_prime[n - lo] = 0;
    }
}

}  // namespace kernel

namespace {

void check_sieve_range(u64 lo, u64 hi, const char* what) {
    if (lo < 1 || lo >= hi)
        throw RangeError(std::string(what) + ": requires 1 <= lo < hi, got [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + ")");
    check_range_cap(hi, what);
}

}  // namespace

MobiusTable sieve_mobius(u64 lo, u64 hi) {
    check_sieve_range(lo, hi, "sieve_mobius");
    const PrimeBase base(hi);
    std::vector<std::int8_t> values(hi - lo);
    const auto bounds = segment_boundaries(lo, hi, std::max(kSegmentLength, isqrt(hi)));
    parallel_for(bounds.size() - 1, [&](std::size_t i) {
        std::vector<u64> scratch;
        const u64 s = bounds[i], e = bounds[i + 1];
        kernel::mobius_segment(base, s, e, std::span(values).subspan(s - lo, e - s), scratch);
    });
    return {lo, hi, std::move(values)};
}

MangoldtTable sieve_mangoldt(u64 lo, u64 hi) {
    check_sieve_range(lo, hi, "sieve_mangoldt");
    const PrimeBase base(hi);
    std::vector<PrimePower> entries(hi - lo);
    const auto bounds = segment_boundaries(lo, hi, std::max(kSegmentLength, isqrt(hi)));
    parallel_for(bounds.size() - 1, [&](std::size_t i) {
        std::vector<std::uint8_t> is_prime;
        const u64 s = bounds[i], e = bounds[i + 1];
        kernel::prime_segment(base, s, e, is_prime);
        for (u64 n = s; n < e; ++n)
            if (is_prime[n - s]) entries[n - lo] = {n, 1};
        kernel::for_each_higher_power(base, s, e, [&](u64 n, u64 p, std::uint8_t m) {
            entries[n - lo] = {p, m};
        });
    });
    return {lo, hi, std::move(entries)};
}

std::vector<PrimePower> factorize(u64 n) {
    if (n == 0) throw DomainError("factorize: n must be >= 1");
    std::vector<PrimePower> out;
    auto take = [&](u64 p) {
        std::uint8_t m = 0;
        while (n % p == 0) {
            n /= p;
            ++m;
        }
        if (m) out.push_back({p, m});
    };
    take(2);
    take(3);
    for (u64 p = 5; p <= n / p; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

u64 euler_phi(u64 q) {
    if (q == 0) throw DomainError("euler_phi: q must be >= 1");
    check_range_cap(q, "euler_phi");
    u64 phi = q;
    for (const auto& [p, m] : factorize(q)) phi = phi / p * (p - 1);
    return phi;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> divs{1};
    for (const auto& [p, m] : factorize(n)) {
        const std::size_t count = divs.size();
        u64 pk = 1;
        for (std::uint8_t k = 0; k < m; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace pntlab
