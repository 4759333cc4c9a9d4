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

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pntlab/arith.hpp"

namespace pntlab {

enum class SegmentKind { mobius, mangoldt };

std::string to_string(SegmentKind kind);
SegmentKind segment_kind_from_string(const std::string& s);

inline constexpr int kSegmentFormatVersion = 1;

/// Contents of `<stem>.json`, the manifest that accompanies each `<stem>.bin`.
struct SegmentManifest {
    u64 lo = 0;
    u64 hi = 0;
    SegmentKind kind = SegmentKind::mobius;
    int version = kSegmentFormatVersion;

    friend bool operator==(const SegmentManifest&, const SegmentManifest&) = default;
};

std::string manifest_to_json(const SegmentManifest& m);
/// Throws DomainError on malformed input or an unknown version.
SegmentManifest manifest_from_json(const std::string& text);

/// On-disk segment cache.
///
/// Mobius segments store one signed byte per n. Mangoldt segments store a
/// packed 9-byte record per n: little-endian 64-bit p (0 = not a prime power)
/// followed by the 8-bit exponent m.
class SegmentCache {
public:
    explicit SegmentCache(std::filesystem::path dir);

    [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }
    [[nodiscard]] const std::vector<SegmentManifest>& manifests() const noexcept {
        return manifests_;
    }

    /// Writes `<kind>-<lo>-<hi>.bin` and its manifest; creates dir as needed.
    void store(const MobiusTable& table);
    void store(const MangoldtTable& table);

    /// Copies μ over [lo, hi) out of one cached segment that covers it.
    /// Returns false when no single segment covers the range.
    bool fill_mobius(u64 lo, u64 hi, std::span<std::int8_t> out) const;

    std::optional<MobiusTable> load_mobius(u64 lo, u64 hi) const;
    std::optional<MangoldtTable> load_mangoldt(u64 lo, u64 hi) const;

    /// Re-reads manifests from disk.
    void refresh();

private:
    [[nodiscard]] const SegmentManifest* covering(SegmentKind kind, u64 lo, u64 hi) const;
    [[nodiscard]] std::filesystem::path data_path(const SegmentManifest& m) const;

    std::filesystem::path dir_;
    std::vector<SegmentManifest> manifests_;
};

/// Resolves the cache directory: explicit flag, else $PNTLAB_CACHE, else empty.
std::filesystem::path resolve_cache_dir(const std::string& flag_value);

}  // namespace pntlab
