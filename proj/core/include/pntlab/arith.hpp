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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pntlab/common.hpp"

namespace pntlab {

/// Default sieve segment length (numbers per segment).
inline constexpr u64 kSegmentLength = u64{1} << 18;

/// n = p^m. A default-constructed value (p = 0) means "not a prime power".
struct PrimePower {
    u64 p = 0;
    std::uint8_t m = 0;

    [[nodiscard]] bool is_none() const noexcept { return p == 0; }
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A residue class a mod q with φ(q) cached.
///
/// Classes built with coprime() satisfy gcd(a, q) = 1; (1, 0) stands for all
/// integers. restricted() admits any 0 <= a < q and is used only where plain
/// restricted sums are wanted (residue conservation checks).
class ProgressionClass {
public:
    /// Throws DomainError (message carries the gcd) unless gcd(a, q) = 1.
    static ProgressionClass coprime(u64 q, u64 a);
    static ProgressionClass restricted(u64 q, u64 a);
    static ProgressionClass all() { return coprime(1, 0); }

    [[nodiscard]] u64 q() const noexcept { return q_; }
    [[nodiscard]] u64 a() const noexcept { return a_; }
    [[nodiscard]] u64 phi() const noexcept { return phi_; }
    [[nodiscard]] bool is_coprime() const noexcept { return coprime_; }
    [[nodiscard]] bool contains(u64 n) const noexcept { return n % q_ == a_; }

    /// Smallest member >= lo.
    [[nodiscard]] u64 first_at_least(u64 lo) const noexcept;

    friend bool operator==(const ProgressionClass&, const ProgressionClass&) = default;

private:
    ProgressionClass(u64 q, u64 a, u64 phi, bool coprime)
        : q_(q), a_(a), phi_(phi), coprime_(coprime) {}

    u64 q_;
    u64 a_;
    u64 phi_;
    bool coprime_;
};

/// μ(n) for n in [lo, hi).
class MobiusTable {
public:
    MobiusTable(u64 lo, u64 hi, std::vector<std::int8_t> values);

    [[nodiscard]] u64 lo() const noexcept { return lo_; }
    [[nodiscard]] u64 hi() const noexcept { return hi_; }
    [[nodiscard]] std::span<const std::int8_t> values() const noexcept { return values_; }
    [[nodiscard]] int at(u64 n) const noexcept { return values_[n - lo_]; }

private:
    u64 lo_;
    u64 hi_;
    std::vector<std::int8_t> values_;
};

/// Prime-power structure of every n in [lo, hi). Λ(n) is derived on demand.
class MangoldtTable {
public:
    MangoldtTable(u64 lo, u64 hi, std::vector<PrimePower> entries);

    [[nodiscard]] u64 lo() const noexcept { return lo_; }
    [[nodiscard]] u64 hi() const noexcept { return hi_; }
    [[nodiscard]] std::span<const PrimePower> entries() const noexcept { return entries_; }
    [[nodiscard]] const PrimePower& at(u64 n) const noexcept { return entries_[n - lo_]; }
    /// Λ(n) = log p, or 0.
    [[nodiscard]] double lambda(u64 n) const noexcept;

private:
    u64 lo_;
    u64 hi_;
    std::vector<PrimePower> entries_;
};

/// Primes p <= n (n < 2^32), simple sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(u64 n);

/// Sieving primes for ranges ending below `hi`, with log p cached per prime.
class PrimeBase {
public:
    explicit PrimeBase(u64 hi);

    [[nodiscard]] u64 hi() const noexcept { return hi_; }
    [[nodiscard]] std::span<const std::uint32_t> primes() const noexcept { return primes_; }
    [[nodiscard]] std::span<const double> logs() const noexcept { return logs_; }

private:
    u64 hi_;
    std::vector<std::uint32_t> primes_;
    std::vector<double> logs_;
};

namespace kernel {

/// Writes μ(n) for n in [lo, hi) into out; `scratch` is reused between calls.
void mobius_segment(const PrimeBase& base, u64 lo, u64 hi, std::span<std::int8_t> out,
                    std::vector<u64>& scratch);

/// Sets is_prime[n - lo] to 1 for primes in [lo, hi), 0 otherwise.
void prime_segment(const PrimeBase& base, u64 lo, u64 hi, std::vector<std::uint8_t>& is_prime);

/// Calls fn(n, p, m) for every prime power n = p^m with m >= 2 inside
/// [lo, hi), in ascending p then m order.
template <class Fn>
void for_each_higher_power(const PrimeBase& base, u64 lo, u64 hi, Fn&& fn) {
    for (const std::uint32_t p32 : base.primes()) {
        const u64 p = p32;
        if (p * p >= hi) break;
        u64 pk = p * p;
        std::uint8_t m = 2;
        for (;;) {
            if (pk >= lo) fn(pk, p, m);
            if (pk > (hi - 1) / p) break;
            pk *= p;
            ++m;
        }
    }
}

}  // namespace kernel

/// Segmented Möbius sieve. Requires 1 <= lo < hi <= range_cap().
MobiusTable sieve_mobius(u64 lo, u64 hi);

/// Segmented prime-power sieve. Requires 1 <= lo < hi <= range_cap().
MangoldtTable sieve_mangoldt(u64 lo, u64 hi);

/// Prime factorization by trial division, ascending primes.
std::vector<PrimePower> factorize(u64 n);

u64 euler_phi(u64 q);

/// Sorted divisors of n >= 1.
std::vector<u64> divisors(u64 n);

}  // namespace pntlab
