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

#include "pntlab/segment_cache.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace pntlab {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(SegmentKind kind) {
    return kind == SegmentKind::mobius ? "mobius" : "mangoldt";
}

SegmentKind segment_kind_from_string(const std::string& s) {
    if (s == "mobius") return SegmentKind::mobius;
    if (s == "mangoldt") return SegmentKind::mangoldt;
    throw DomainError("unknown segment kind '" + s + "' (expected mobius or mangoldt)");
}

std::string manifest_to_json(const SegmentManifest& m) {
    json j;
    j["lo"] = m.lo;
    j["hi"] = m.hi;
    j["kind"] = to_string(m.kind);
    j["version"] = m.version;
    return j.dump();
}

SegmentManifest manifest_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
        SegmentManifest m;
        m.lo = j.at("lo").get<u64>();
        m.hi = j.at("hi").get<u64>();
        m.kind = segment_kind_from_string(j.at("kind").get<std::string>());
        m.version = j.at("version").get<int>();
        if (m.version != kSegmentFormatVersion)
            throw DomainError("unsupported segment format version " + std::to_string(m.version));
        if (m.lo < 1 || m.lo >= m.hi) throw DomainError("segment manifest has empty range");
        return m;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed segment manifest: ") + e.what());
    }
}

namespace {

constexpr std::size_t kMangoldtRecord = 9;

std::string stem(const SegmentManifest& m) {
    return to_string(m.kind) + "-" + std::to_string(m.lo) + "-" + std::to_string(m.hi);
}

void write_file(const fs::path& path, const char* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(data, static_cast<std::streamsize>(size));
    if (!out) throw std::runtime_error("short write to " + path.string());
}

bool read_at(const fs::path& path, std::uint64_t offset, char* data, std::size_t size) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    in.seekg(static_cast<std::streamoff>(offset));
    in.read(data, static_cast<std::streamsize>(size));
    return static_cast<std::size_t>(in.gcount()) == size;
}

}  // namespace

SegmentCache::SegmentCache(fs::path dir) : dir_(std::move(dir)) { refresh(); }

void SegmentCache::refresh() {
    manifests_.clear();
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) return;
    for (const auto& entry : fs::directory_iterator(dir_, ec)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            SegmentManifest m = manifest_from_json(ss.str());
            const u64 width = m.kind == SegmentKind::mobius ? 1 : kMangoldtRecord;
            if (fs::file_size(data_path(m), ec) == (m.hi - m.lo) * width && !ec)
                manifests_.push_back(m);
        } catch (const DomainError&) {
            // foreign or stale file; ignore
        }
    }
    std::sort(manifests_.begin(), manifests_.end(), [](const auto& x, const auto& y) {
        return std::tie(x.kind, x.lo, x.hi) < std::tie(y.kind, y.lo, y.hi);
    });
}

fs::path SegmentCache::data_path(const SegmentManifest& m) const {
    return dir_ / (stem(m) + ".bin");
}

void SegmentCache::store(const MobiusTable& table) {
    fs::create_directories(dir_);
    const SegmentManifest m{table.lo(), table.hi(), SegmentKind::mobius, kSegmentFormatVersion};
    const auto v = table.values();
    write_file(data_path(m), reinterpret_cast<const char*>(v.data()), v.size());
    const std::string manifest = manifest_to_json(m);
    write_file(dir_ / (stem(m) + ".json"), manifest.data(), manifest.size());
    refresh();
}

void SegmentCache::store(const MangoldtTable& table) {
    fs::create_directories(dir_);
    const SegmentManifest m{table.lo(), table.hi(), SegmentKind::mangoldt, kSegmentFormatVersion};
    std::vector<char> bytes;
    bytes.reserve(table.entries().size() * kMangoldtRecord);
    for (const PrimePower& e : table.entries()) {
        for (int b = 0; b < 8; ++b) bytes.push_back(static_cast<char>((e.p >> (8 * b)) & 0xFF));
        bytes.push_back(static_cast<char>(e.m));
    }
    write_file(data_path(m), bytes.data(), bytes.size());
    const std::string manifest = manifest_to_json(m);
    write_file(dir_ / (stem(m) + ".json"), manifest.data(), manifest.size());
    refresh();
}

const SegmentManifest* SegmentCache::covering(SegmentKind kind, u64 lo, u64 hi) const {
    for (const auto& m : manifests_)
        if (m.kind == kind && m.lo <= lo && hi <= m.hi) return &m;
    return nullptr;
}

bool SegmentCache::fill_mobius(u64 lo, u64 hi, std::span<std::int8_t> out) const {
    const SegmentManifest* m = covering(SegmentKind::mobius, lo, hi);
    if (m == nullptr || out.size() < hi - lo) return false;
    return read_at(data_path(*m), lo - m->lo, reinterpret_cast<char*>(out.data()), hi - lo);
}

std::optional<MobiusTable> SegmentCache::load_mobius(u64 lo, u64 hi) const {
    if (lo >= hi) return std::nullopt;
    std::vector<std::int8_t> values(hi - lo);
    if (!fill_mobius(lo, hi, values)) return std::nullopt;
    return MobiusTable(lo, hi, std::move(values));
}

std::optional<MangoldtTable> SegmentCache::load_mangoldt(u64 lo, u64 hi) const {
    if (lo >= hi) return std::nullopt;
    const SegmentManifest* m = covering(SegmentKind::mangoldt, lo, hi);
    if (m == nullptr) return std::nullopt;
    std::vector<unsigned char> bytes((hi - lo) * kMangoldtRecord);
    if (!read_at(data_path(*m), (lo - m->lo) * kMangoldtRecord,
                 reinterpret_cast<char*>(bytes.data()), bytes.size()))
        return std::nullopt;
    std::vector<PrimePower> entries(hi - lo);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const unsigned char* rec = bytes.data() + i * kMangoldtRecord;
        u64 p = 0;
        for (int b = 7; b >= 0; --b) p = (p << 8) | rec[b];
        entries[i] = {p, rec[8]};
    }
    return MangoldtTable(lo, hi, std::move(entries));
}

fs::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PNTLAB_CACHE"); env != nullptr && *env != '\0')
        return env;
    return {};
}

}  // namespace pntlab
