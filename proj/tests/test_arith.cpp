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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pntlab/arith.hpp"

using namespace pntlab;

TEST_CASE("sieve_mobius small values") {
    CHECK(sieve_mobius(1, 2).at(1) == 1);
    CHECK(sieve_mobius(30, 31).at(30) == -1);
    CHECK(sieve_mobius(18, 19).at(18) == 0);
    const auto t = sieve_mobius(1, 11);
    const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
    for (u64 n = 1; n <= 10; ++n) CHECK(t.at(n) == expected[n - 1]);
}

TEST_CASE("squarefree count and density up to 10^6") {
    constexpr u64 N = 1'000'000;
    const auto t = sieve_mobius(1, N + 1);
    u64 nonzero = 0;
    for (const auto v : t.values()) nonzero += v != 0;
    // frozen from a trial-division squarefree oracle
    CHECK(nonzero == 607926);
    const double density = static_cast<double>(nonzero) / N;
    CHECK(std::abs(density - 6.0 / (std::numbers::pi * std::numbers::pi)) < 0.001);
    CHECK(t.values().size() == N);
}

TEST_CASE("mobius table matches trial division and linear sieve") {
    constexpr u64 N = 200'000;
    const auto t = sieve_mobius(1, N + 1);
    const auto linear = oracle::linear_mobius(N);
    for (u64 n = 1; n <= N; ++n) REQUIRE(t.at(n) == linear[n]);
    for (u64 n = 1; n <= 5000; ++n) REQUIRE(t.at(n) == oracle::mobius(n));
}

TEST_CASE("segmented and monolithic sieves agree on overlapping ranges") {
    constexpr u64 N = 600'000;
    const auto whole = sieve_mobius(1, N);
    const auto whole_l = sieve_mangoldt(1, N);
    std::mt19937_64 rng(20261019);
    for (int trial = 0; trial < 25; ++trial) {
        const u64 lo = 1 + rng() % (N - 2);
        const u64 hi = lo + 1 + rng() % (N - lo);
        const auto part = sieve_mobius(lo, hi);
        const auto part_l = sieve_mangoldt(lo, hi);
        for (u64 n = lo; n < hi; ++n) {
            REQUIRE(part.at(n) == whole.at(n));
            REQUIRE(part_l.at(n) == whole_l.at(n));
        }
    }
}

TEST_CASE("sieve far from the origin matches trial division") {
    const u64 lo = 1'000'000'000'000ull;
    const auto mu = sieve_mobius(lo, lo + 2000);
    const auto lam = sieve_mangoldt(lo, lo + 2000);
    for (u64 n = lo; n < lo + 2000; n += 37) {
        CHECK(mu.at(n) == oracle::mobius(n));
        CHECK(lam.at(n).p == oracle::prime_power_base(n));
    }
}

TEST_CASE("sieve_mangoldt values") {
    const auto t = sieve_mangoldt(1, 101);
    CHECK(t.lambda(2) == doctest::Approx(0.693147).epsilon(1e-6));
    CHECK(t.lambda(9) == doctest::Approx(1.098612).epsilon(1e-6));
    CHECK(t.lambda(10) == 0.0);
    CHECK(t.lambda(1) == 0.0);
    CHECK(t.at(64) == PrimePower{2, 6});
    CHECK(t.at(81) == PrimePower{3, 4});
    CHECK(t.at(97) == PrimePower{97, 1});
    CHECK(t.at(100).is_none());
    for (u64 n = 1; n <= 100; ++n) CHECK(t.lambda(n) == doctest::Approx(oracle::mangoldt(n)));
}

TEST_CASE("mobius sums over divisors vanish; Λ sums over divisors give log n") {
    constexpr u64 N = 100'000;
    const auto mu = sieve_mobius(1, N + 1);
    const auto lam = sieve_mangoldt(1, N + 1);
    std::vector<long> mu_sum(N + 1, 0);
    std::vector<double> lam_sum(N + 1, 0.0);
    for (u64 d = 1; d <= N; ++d)
        for (u64 n = d; n <= N; n += d) {
            mu_sum[n] += mu.at(d);
            lam_sum[n] += lam.lambda(d);
        }
    for (u64 n = 1; n <= N; ++n) {
        REQUIRE(mu_sum[n] == (n == 1 ? 1 : 0));
        REQUIRE(std::abs(lam_sum[n] - std::log(static_cast<double>(n))) < 1e-9);
    }
}

TEST_CASE("range guard") {
    CHECK_THROWS_AS(sieve_mobius(0, 10), RangeError);
    CHECK_THROWS_AS(sieve_mobius(10, 10), RangeError);
    CHECK_THROWS_AS(sieve_mobius(1, kDefaultRangeCap + 1), RangeError);
    CHECK_THROWS_AS(sieve_mangoldt(5, 3), RangeError);
    const u64 saved = range_cap();
    set_range_cap(1000);
    CHECK_THROWS_AS(sieve_mangoldt(1, 1001), RangeError);
    CHECK_NOTHROW(sieve_mangoldt(1, 1000));
    set_range_cap(saved);
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(7) == 6);
    CHECK(euler_phi(12) == 4);
    for (u64 q = 1; q <= 300; ++q) {
        u64 count = 0;
        for (u64 r = 1; r <= q; ++r) count += std::gcd(r, q) == 1;
        REQUIRE(euler_phi(q) == count);
    }
    CHECK_THROWS_AS(euler_phi(0), DomainError);
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(9) == std::vector<u64>{1, 3, 9});
    for (u64 n = 1; n <= 2000; ++n) {
        std::vector<u64> brute;
        for (u64 d = 1; d <= n; ++d)
            if (n % d == 0) brute.push_back(d);
        REQUIRE(divisors(n) == brute);
    }
    const u64 big = 999'999'999'989ull;  // prime
    CHECK(divisors(big) == std::vector<u64>{1, big});
}

TEST_CASE("progression class validation") {
    const auto c = ProgressionClass::coprime(12, 5);
    CHECK(c.phi() == 4);
    CHECK(c.contains(17));
    CHECK_FALSE(c.contains(18));
    CHECK(c.first_at_least(6) == 17);
    CHECK(c.first_at_least(5) == 5);
    CHECK(ProgressionClass::all().q() == 1);
    CHECK(ProgressionClass::all().is_coprime());
    try {
        (void)ProgressionClass::coprime(12, 8);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("gcd(a, q) = 4") != std::string::npos);
    }
    CHECK_THROWS_AS(ProgressionClass::coprime(5, 5), DomainError);
    CHECK_THROWS_AS(ProgressionClass::coprime(0, 0), DomainError);
    CHECK_FALSE(ProgressionClass::restricted(12, 8).is_coprime());
}

TEST_CASE("isqrt is exact") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        const u64 n = rng() >> (rng() % 64);
        const u64 r = isqrt(n);
        REQUIRE(static_cast<unsigned __int128>(r) * r <= n);
        REQUIRE(static_cast<unsigned __int128>(r + 1) * (r + 1) > n);
    }
    CHECK(isqrt(~u64{0}) == 0xFFFFFFFFull);
}

TEST_CASE("compensated sum beats naive accumulation") {
    CompensatedSum s;
    double naive = 0;
    for (int i = 0; i < 10'000'000; ++i) {
        s.add(0.1);
        naive += 0.1;
    }
    CHECK(std::abs(s.value() - 1e6) < 1e-9);
    CHECK(std::abs(naive - 1e6) > 1e-6);
}
