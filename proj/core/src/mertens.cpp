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

#include "pntlab/mertens.hpp"

#include <cmath>
#include <string>

#include "pntlab/segment_cache.hpp"

namespace pntlab {

namespace {

void require_ascending(std::span<const u64> xs, const char* what) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 1) throw DomainError(std::string(what) + ": thresholds must be >= 1");
        if (i > 0 && xs[i] < xs[i - 1])
            throw DomainError(std::string(what) + ": thresholds must be ascending");
    }
}

/// Streams μ over [1, max(xs)]: segment(lo, hi, mu, acc) fills one
/// accumulator per segment, then record(acc_prefix, index) is called in order
/// for each checkpoint.
template <class Acc, class Segment, class Merge, class Record>
void mobius_sweep(std::span<const u64> xs, const SegmentCache* cache, Segment&& segment,
                  Merge&& merge, Record&& record) {
    if (xs.empty()) return;
    const u64 xmax = xs.back();
    check_range_cap(xmax + 1, "mobius sweep");
    const PrimeBase base(xmax + 1);
    std::vector<u64> cuts;
    for (const u64 x : xs) cuts.push_back(x + 1);
    const auto bounds = segment_boundaries(1, xmax + 1, std::max(kSegmentLength, isqrt(xmax)), cuts);
    const std::size_t nseg = bounds.size() - 1;
    std::vector<Acc> partial(nseg);
    parallel_for(nseg, [&](std::size_t i) {
        const u64 lo = bounds[i], hi = bounds[i + 1];
        std::vector<std::int8_t> mu(hi - lo);
        if (cache == nullptr || !cache->fill_mobius(lo, hi, mu)) {
            std::vector<u64> scratch;
            kernel::mobius_segment(base, lo, hi, mu, scratch);
        }
        segment(lo, hi, std::span<const std::int8_t>(mu), partial[i]);
    });
    Acc acc{};
    std::size_t next = 0;
    for (std::size_t i = 0; i < nseg; ++i) {
        merge(acc, partial[i]);
        while (next < xs.size() && xs[next] + 1 == bounds[i + 1]) record(acc, next++);
    }
}

struct SeriesAcc {
    CompensatedSum mu_over_n;
    CompensatedSum mulog_over_n;
    i64 mertens = 0;
};

}  // namespace

MertensSeries mertens_series(std::span<const u64> checkpoints, const SegmentCache* cache) {
    require_ascending(checkpoints, "mertens_series");
    MertensSeries out;
    out.checkpoints.assign(checkpoints.begin(), checkpoints.end());
    mobius_sweep<SeriesAcc>(
        checkpoints, cache,
        [](u64 lo, u64, std::span<const std::int8_t> mu, SeriesAcc& acc) {
            for (std::size_t i = 0; i < mu.size(); ++i) {
                if (mu[i] == 0) continue;
                const double n = static_cast<double>(lo + i);
                acc.mu_over_n.add(mu[i] / n);
                acc.mulog_over_n.add(mu[i] * std::log(n) / n);
                acc.mertens += mu[i];
            }
        },
        [](SeriesAcc& into, const SeriesAcc& part) {
            into.mu_over_n.merge(part.mu_over_n);
            into.mulog_over_n.merge(part.mulog_over_n);
            into.mertens += part.mertens;
        },
        [&](const SeriesAcc& acc, std::size_t) {
            out.s_mu.push_back(acc.mu_over_n.value());
            out.s_mulog.push_back(acc.mulog_over_n.value());
            out.mertens.push_back(acc.mertens);
        });
    return out;
}

double mu_over_n_partial(u64 y) {
    const u64 ys[] = {y};
    return mertens_series(ys).s_mu.front();
}

double mu_logn_over_n_partial(u64 y) {
    const u64 ys[] = {y};
    return mertens_series(ys).s_mulog.front();
}

i64 mertens_function(u64 x) {
    if (x == 0) return 0;
    const u64 xs[] = {x};
    return mertens_series(xs).mertens.front();
}

std::vector<i64> mobius_progression_sweep(std::span<const u64> xs, const ProgressionClass& cls,
                                          const SegmentCache* cache) {
    require_ascending(xs, "mobius_progression_sum");
    std::vector<i64> out;
    out.reserve(xs.size());
    mobius_sweep<i64>(
        xs, cache,
        [&](u64 lo, u64 hi, std::span<const std::int8_t> mu, i64& acc) {
            for (u64 n = cls.first_at_least(lo); n < hi; n += cls.q()) acc += mu[n - lo];
        },
        [](i64& into, const i64& part) { into += part; },
        [&](const i64& acc, std::size_t) { out.push_back(acc); });
    return out;
}

i64 mobius_progression_sum(u64 x, const ProgressionClass& cls) {
    if (!cls.is_coprime())
        throw DomainError("mobius_progression_sum: residue class must be coprime, gcd(a, q) = " +
                          std::to_string(gcd(cls.a(), cls.q())));
    const u64 xs[] = {x};
    return mobius_progression_sweep(xs, cls).front();
}

double fractional_sum(u64 x) {
    if (x < 1) throw DomainError("fractional_sum: x must be >= 1");
    const u64 root = isqrt(x);
    const MobiusTable mu = sieve_mobius(1, root + 2);
    CompensatedSum acc;
    for (u64 d = 2; d * d < x; ++d) {
        const int v = mu.at(d);
        if (v == 0) continue;
        const double frac = static_cast<double>(x % d) / static_cast<double>(d);
        acc.add(v * std::log(static_cast<double>(d)) * frac);
    }
    return acc.value();
}

ExponentFit fit_log_exponent(std::span<const SeriesPoint> points, double limit) {
    if (points.size() < 3) throw DomainError("fit_log_exponent: need at least 3 checkpoints");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].y < 3.0) throw DomainError("fit_log_exponent: checkpoints must be >= 3");
        if (i > 0 && points[i].y <= points[i - 1].y)
            throw DomainError("fit_log_exponent: checkpoints must be strictly ascending");
    }
    constexpr double kFloor = 1e-12;
    ExponentFit fit;
    std::vector<double> u, v;
    for (const auto& pt : points) {
        const double gap = std::abs(pt.value - limit);
        fit.gaps.push_back(gap);
        if (gap < kFloor) continue;
        u.push_back(std::log(std::log(pt.y)));
        v.push_back(std::log(gap));
    }
    if (u.size() < 2) {
        fit.saturated = true;
        return fit;
    }
    double u_mean = 0, v_mean = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        u_mean += u[i];
        v_mean += v[i];
    }
    u_mean /= static_cast<double>(u.size());
    v_mean /= static_cast<double>(u.size());
    double suv = 0, suu = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        suv += (u[i] - u_mean) * (v[i] - v_mean);
        suu += (u[i] - u_mean) * (u[i] - u_mean);
    }
    fit.exponent = -suv / suu;
    fit.log_constant = v_mean + fit.exponent * u_mean;
    return fit;
}

}  // namespace pntlab
