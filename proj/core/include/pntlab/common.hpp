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

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pntlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Default upper bound on any sieved range: 2^40.
inline constexpr u64 kDefaultRangeCap = u64{1} << 40;

/// Thrown when a requested range exceeds the configured cap or is malformed.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Thrown for arguments that violate a documented precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

u64 range_cap() noexcept;
void set_range_cap(u64 cap);

/// Throws RangeError when `hi` exceeds range_cap().
void check_range_cap(u64 hi, const char* what);

/// Worker count used by segmented sweeps. 0 selects hardware concurrency.
unsigned worker_threads() noexcept;
void set_worker_threads(unsigned n) noexcept;

/// floor(sqrt(n)), exact for all 64-bit n.
u64 isqrt(u64 n) noexcept;

u64 gcd(u64 a, u64 b) noexcept;

/// Neumaier-compensated accumulator. Merging two partial sums is
/// deterministic for a fixed merge order.
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(double init) : sum_(init) {}

    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    void merge(const CompensatedSum& other) noexcept {
        add(other.sum_);
        add(other.comp_);
    }

    CompensatedSum& operator+=(double v) noexcept {
        add(v);
        return *this;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Splits [lo, hi) into consecutive segments no longer than `seg_len`, with
/// extra cut points inserted at every value in `cuts` (each cut starts a new
/// segment). Boundaries depend only on the arguments, never on threads.
std::vector<u64> segment_boundaries(u64 lo, u64 hi, u64 seg_len,
                                    const std::vector<u64>& cuts = {});

/// Runs fn(i) for i in [0, count) over worker_threads() threads. Callers write
/// results into pre-sized per-index slots, so output order is fixed.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace pntlab
