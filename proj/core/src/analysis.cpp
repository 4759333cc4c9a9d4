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

#include "pntlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pntlab/mertens.hpp"
#include "pntlab/progression.hpp"

namespace pntlab {

void ScanConfig::validate(u64 min_x) const {
    if (!cls.is_coprime())
        throw DomainError("scan requires a coprime residue class, gcd(a, q) = " +
                          std::to_string(gcd(cls.a(), cls.q())));
    if (!(B > C + 1.0))
        throw DomainError("scan requires B > C + 1 (B=" + std::to_string(B) +
                          ", C=" + std::to_string(C) + ")");
    if (x_grid.empty()) throw DomainError("scan grid is empty");
    if (x_grid.front() < min_x)
        throw DomainError("scan grid must start at x >= " + std::to_string(min_x));
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (x_grid[i] <= x_grid[i - 1]) throw DomainError("scan grid must be strictly increasing");
}

namespace {

bool admissible(const ScanConfig& cfg, double logx) {
    return static_cast<double>(cfg.cls.q()) <= std::pow(logx, cfg.C);
}

}  // namespace

ScanRow make_scan_row(const ScanConfig& cfg, u64 x, double psi) {
    const double xd = static_cast<double>(x);
    const double logx = std::log(xd);
    const double phi = static_cast<double>(cfg.cls.phi());
    ScanRow row;
    row.x = x;
    row.psi = psi;
    row.main = xd / phi;
    row.residual = psi - row.main;
    const double r = std::abs(row.residual);
    row.sw_norm = r * phi * std::pow(logx, cfg.B) / xd;
    row.rh_norm = r / (std::sqrt(xd) * logx * logx);
    row.mont_norm = r * std::sqrt(static_cast<double>(cfg.cls.q())) / std::pow(xd, 0.5 + cfg.epsilon);
    row.q_admissible = admissible(cfg, logx);
    return row;
}

ScanTable residual_scan(const ScanConfig& cfg) {
    cfg.validate(2);
    ScanTable table{cfg, {}};
    const auto results = chebyshev_sweep(cfg.x_grid, cfg.cls);
    table.rows.reserve(results.size());
    for (const auto& r : results) table.rows.push_back(make_scan_row(cfg, r.x, r.psi));
    return table;
}

MobiusScanTable mobius_residual_scan(const ScanConfig& cfg, const SegmentCache* cache) {
    cfg.validate(1);
    MobiusScanTable table{cfg, {}};
    const auto sums = mobius_progression_sweep(cfg.x_grid, cfg.cls, cache);
    for (std::size_t i = 0; i < sums.size(); ++i) {
        const u64 x = cfg.x_grid[i];
        const double xd = static_cast<double>(x);
        const double logx = std::log(xd);
        const double r = std::abs(static_cast<double>(sums[i]));
        MobiusScanRow row;
        row.x = x;
        row.sum = sums[i];
        row.log_norm = r * std::pow(logx, cfg.D) / xd;
        row.sqrt_norm = r / std::pow(xd, 0.5 + cfg.epsilon);
        row.q_admissible = admissible(cfg, logx);
        table.rows.push_back(row);
    }
    return table;
}

double relative_residual(const ScanRow& row) {
    return std::abs(row.residual) / row.main;
}

double median_over(std::span<const ScanRow> rows, u64 lo, u64 hi, double (*column)(const ScanRow&)) {
    std::vector<double> v;
    for (const auto& row : rows)
        if (row.x >= lo && row.x <= hi) v.push_back(column(row));
    if (v.empty()) throw DomainError("median_over: no rows in range");
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

PartialSummationEstimate pi_from_psi(u64 x, const ProgressionClass& cls, u64 grid_points,
                                     u64 max_points) {
    if (x < 3) throw DomainError("pi_from_psi: x must be >= 3");
    if (grid_points < 16) throw DomainError("pi_from_psi: grid_points must be >= 16");
    const double u0 = std::log(2.0);
    const double u1 = std::log(static_cast<double>(x));

    PartialSummationEstimate est;
    for (u64 n = grid_points;; n *= 2) {
        const u64 fine = 2 * n;
        const double h = (u1 - u0) / static_cast<double>(fine);
        std::vector<u64> nodes(fine + 1);
        for (u64 i = 0; i <= fine; ++i) {
            const double t = std::exp(u0 + h * static_cast<double>(i));
            nodes[i] = std::clamp<u64>(static_cast<u64>(std::floor(t)), 2, x);
        }
        nodes.front() = 2;
        nodes.back() = x;
        for (u64 i = 1; i <= fine; ++i) nodes[i] = std::max(nodes[i], nodes[i - 1]);
        const auto samples = chebyshev_sweep(nodes, cls);

        // Trapezoid in u = log t: ∫ S(e^u) / u² du.
        CompensatedSum theta_fine, theta_coarse, psi_fine;
        for (u64 i = 0; i <= fine; ++i) {
            const double u = u0 + h * static_cast<double>(i);
            const double w = (i == 0 || i == fine) ? 0.5 : 1.0;
            const double gt = samples[i].theta / (u * u);
            theta_fine.add(w * gt);
            psi_fine.add(w * samples[i].psi / (u * u));
            if (i % 2 == 0) theta_coarse.add(((i == 0 || i == fine) ? 0.5 : 1.0) * gt);
        }
        const double integral = h * theta_fine.value();
        const double coarse = 2.0 * h * theta_coarse.value();
        const double head_theta = samples.back().theta / u1;
        const double head_psi = samples.back().psi / u1;

        est.value = head_theta + integral;
        est.psi_route = head_psi + h * psi_fine.value();
        est.route_gap = est.psi_route - est.value;
        est.quadrature_error = std::abs(integral - coarse);
        est.grid_points = fine;
        est.converged = est.quadrature_error <= 0.5;
        if (est.converged || 2 * fine > max_points) break;
    }
    return est;
}

std::vector<u64> log_grid(u64 lo, u64 hi, unsigned per_decade) {
    if (lo < 1 || hi < lo) throw DomainError("log_grid: requires 1 <= lo <= hi");
    if (per_decade == 0) throw DomainError("log_grid: points per decade must be positive");
    std::vector<u64> grid;
    const double l0 = std::log10(static_cast<double>(lo));
    const double l1 = std::log10(static_cast<double>(hi));
    const auto steps = static_cast<u64>(std::floor((l1 - l0) * per_decade + 1e-9));
    for (u64 k = 0; k <= steps; ++k) {
        const double v = std::pow(10.0, l0 + static_cast<double>(k) / per_decade);
        const u64 x = std::clamp<u64>(static_cast<u64>(std::llround(v)), lo, hi);
        if (grid.empty() || x > grid.back()) grid.push_back(x);
    }
    if (grid.back() < hi) grid.push_back(hi);
    return grid;
}

}  // namespace pntlab
