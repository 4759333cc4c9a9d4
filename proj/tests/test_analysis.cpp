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

#include "pntlab/analysis.hpp"
#include "pntlab/progression.hpp"

using namespace pntlab;

namespace {

ScanConfig config_for(u64 q, u64 a, std::vector<u64> grid) {
    ScanConfig cfg;
    cfg.cls = ProgressionClass::coprime(q, a);
    cfg.x_grid = std::move(grid);
    return cfg;
}

}  // namespace

TEST_CASE("residual scan examples") {
    const auto t = residual_scan(config_for(3, 1, {20}));
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].residual == doctest::Approx(-1.1584).epsilon(1e-4));
    CHECK(t.rows[0].main == 10.0);

    const auto all = residual_scan(config_for(1, 0, {100, 1000, 54321}));
    for (const auto& r : all.rows) {
        CHECK(r.main == static_cast<double>(r.x));
        CHECK(r.residual == doctest::Approx(psi_all(r.x) - static_cast<double>(r.x)));
    }
}

TEST_CASE("normalized columns reconstruct the residual") {
    auto cfg = config_for(4, 3, log_grid(100, 10'000'000, 4));
    cfg.B = 4.5;
    cfg.epsilon = 0.1;
    const auto t = residual_scan(cfg);
    for (const auto& r : t.rows) {
        const double x = static_cast<double>(r.x), lx = std::log(x), phi = 2.0;
        CHECK(r.residual == r.psi - r.main);
        CHECK(r.sw_norm * x / (phi * std::pow(lx, cfg.B)) == doctest::Approx(std::abs(r.residual)));
        CHECK(r.rh_norm * std::sqrt(x) * lx * lx == doctest::Approx(std::abs(r.residual)));
        CHECK(r.mont_norm * std::pow(x, 0.5 + cfg.epsilon) / 2.0 == doctest::Approx(std::abs(r.residual)));
        CHECK(r.q_admissible == (4.0 <= std::pow(lx, cfg.C)));
        const auto again = make_scan_row(cfg, r.x, r.psi);
        CHECK(again.sw_norm == r.sw_norm);
        CHECK(again.rh_norm == r.rh_norm);
    }
}

TEST_CASE("RH-shaped normalization stays bounded and the SW trend decreases") {
    for (u64 q : {3ull, 4ull}) {
        const auto t = residual_scan(config_for(q, 1, log_grid(10'000, 10'000'000, 6)));
        for (const auto& r : t.rows) {
            CHECK(std::isfinite(r.sw_norm));
            CHECK(r.rh_norm < 5.0);
        }
        const double bottom = median_over(t.rows, 10'000, 100'000, relative_residual);
        const double top = median_over(t.rows, 1'000'000, 10'000'000, relative_residual);
        CHECK(top < bottom);
    }
}

TEST_CASE("median_over") {
    const auto t = residual_scan(config_for(1, 0, {100, 200, 300, 400}));
    const double m = median_over(t.rows, 100, 300, [](const ScanRow& r) { return static_cast<double>(r.x); });
    CHECK(m == 200.0);
    const double even = median_over(t.rows, 100, 400, [](const ScanRow& r) { return static_cast<double>(r.x); });
    CHECK(even == 250.0);
    CHECK_THROWS_AS(median_over(t.rows, 500, 600, relative_residual), DomainError);
}

TEST_CASE("Möbius residual scan") {
    const auto t = mobius_residual_scan(config_for(3, 1, {1, 10}));
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].sum == 1);
    CHECK(std::isfinite(t.rows[0].log_norm));
    CHECK(std::isfinite(t.rows[0].sqrt_norm));
    CHECK(t.rows[1].sum == 1);

    const auto big = mobius_residual_scan(config_for(4, 1, log_grid(10'000, 10'000'000, 4)));
    for (const auto& r : big.rows) {
        const double x = static_cast<double>(r.x);
        CHECK(r.sqrt_norm < 5.0);
        CHECK(r.sqrt_norm * std::sqrt(x) == doctest::Approx(std::abs(static_cast<double>(r.sum))));
        CHECK(r.log_norm * x / std::log(x) == doctest::Approx(std::abs(static_cast<double>(r.sum))));
    }
}

TEST_CASE("scan configuration validation") {
    CHECK_THROWS_AS(residual_scan(config_for(3, 1, {})), DomainError);
    CHECK_THROWS_AS(residual_scan(config_for(3, 1, {100, 100})), DomainError);
    CHECK_THROWS_AS(residual_scan(config_for(3, 1, {1000, 100})), DomainError);
    CHECK_THROWS_AS(residual_scan(config_for(3, 1, {1})), DomainError);
    auto bad = config_for(3, 1, {100});
    bad.B = 2.5;
    CHECK_THROWS_AS(residual_scan(bad), DomainError);
    bad = config_for(3, 1, {100});
    bad.cls = ProgressionClass::restricted(6, 3);
    try {
        (void)residual_scan(bad);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("gcd(a, q) = 3") != std::string::npos);
    }
}

TEST_CASE("partial summation recovers π") {
    const auto small = pi_from_psi(100, ProgressionClass::all(), 64);
    CHECK(std::abs(small.value - 25) <= 1.0);
    const auto tiny = pi_from_psi(3, ProgressionClass::all(), 16);
    CHECK(std::abs(tiny.value - 2) <= 1.0);

    for (u64 q : {1ull, 3ull}) {
        const auto cls = ProgressionClass::coprime(q, 1 % q);
        const auto est = pi_from_psi(1'000'000, cls, 64);
        const double exact = static_cast<double>(pi_direct(1'000'000, cls));
        CHECK(std::abs(est.value - exact) / exact < 0.01);
        CHECK(std::abs(est.value - exact) <= std::max(1.0, est.quadrature_error));
        CHECK(est.converged);
        CHECK(est.route_gap > 0);
        CHECK(est.route_gap == doctest::Approx(est.psi_route - est.value));
    }

    for (u64 x : {1000ull, 20'000ull, 300'000ull}) {
        const auto est = pi_from_psi(x, ProgressionClass::all(), 16);
        CHECK(std::abs(est.value - static_cast<double>(pi_direct(x, ProgressionClass::all()))) <=
              std::max(1.0, est.quadrature_error));
    }

    CHECK_THROWS_AS(pi_from_psi(2, ProgressionClass::all(), 64), DomainError);
    CHECK_THROWS_AS(pi_from_psi(100, ProgressionClass::all(), 8), DomainError);
}

TEST_CASE("log_grid") {
    CHECK(log_grid(10, 1000, 1) == std::vector<u64>{10, 100, 1000});
    const auto g = log_grid(10'000, 100'000'000, 8);
    CHECK(g.front() == 10'000);
    CHECK(g.back() == 100'000'000);
    CHECK(g.size() == 33);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    CHECK_THROWS_AS(log_grid(0, 10, 1), DomainError);
    CHECK_THROWS_AS(log_grid(10, 100, 0), DomainError);
}
