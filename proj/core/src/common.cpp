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

#include "pntlab/common.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace pntlab {

namespace {
std::atomic<u64> g_range_cap{kDefaultRangeCap};
std::atomic<unsigned> g_threads{0};
}  // namespace

u64 range_cap() noexcept { return g_range_cap.load(std::memory_order_relaxed); }

void set_range_cap(u64 cap) {
    if (cap < 2) throw DomainError("range cap must be at least 2");
    g_range_cap.store(cap, std::memory_order_relaxed);
}

void check_range_cap(u64 hi, const char* what) {
    if (hi > range_cap())
        throw RangeError(std::string(what) + ": upper bound " + std::to_string(hi) +
                         " exceeds range cap " + std::to_string(range_cap()));
}

unsigned worker_threads() noexcept {
    const unsigned n = g_threads.load(std::memory_order_relaxed);
    if (n != 0) return n;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void set_worker_threads(unsigned n) noexcept { g_threads.store(n, std::memory_order_relaxed); }

u64 isqrt(u64 n) noexcept {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (r > 0xFFFFFFFFull || r * r > n)) --r;
    while (r + 1 <= 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

u64 gcd(u64 a, u64 b) noexcept {
    while (b != 0) {
        const u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::vector<u64> segment_boundaries(u64 lo, u64 hi, u64 seg_len, const std::vector<u64>& cuts) {
    if (seg_len == 0) throw DomainError("segment length must be positive");
    std::vector<u64> b;
    if (lo >= hi) return {lo};
    b.push_back(lo);
    // Grid cut points are aligned to multiples of seg_len, independent of lo.
    for (u64 g = (lo / seg_len + 1) * seg_len; g < hi; g += seg_len) b.push_back(g);
    for (u64 c : cuts)
        if (c > lo && c < hi) b.push_back(c);
    b.push_back(hi);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const std::size_t nthreads = std::min<std::size_t>(worker_threads(), count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace pntlab
