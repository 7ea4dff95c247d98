#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "lrckit/bounds.hpp"
#include "lrckit/lrc.hpp"

namespace lrckit::storesim {

/// On-disk description of one encoded directory: manifest.json next to one
/// node_<j>.blk file per node (blocks concatenated in row order, symbols
/// little-endian). Field names are part of the format.
struct Manifest {
    int version = 1;
    int n = 0, k = 0, r = 0, p = 8;
    std::uint32_t modulus = 0;
    std::uint64_t file_len = 0;  // original bytes
    std::uint64_t pad_len = 0;   // zero bytes appended before striping
    std::vector<std::vector<Slot>> slots;           // [node-1] -> r+1 (row, index)
    std::vector<std::vector<std::uint32_t>> crcs;   // [node-1] -> r+1 block CRC32s

    CodeParams params() const;
    int symbol_bytes() const { return p / 8; }
    std::uint64_t padded_len() const { return file_len + pad_len; }
    std::uint64_t block_symbols() const;  // symbols per block (L)

    std::string to_json() const;
    static Manifest from_json(const std::string& text);
    void save(const std::filesystem::path& dir) const;
    static Manifest load(const std::filesystem::path& dir);
};

std::filesystem::path node_file(const std::filesystem::path& dir, int node);

/// Pad, stripe into field symbols, encode, and write one block file per node
/// plus the manifest. Storage requires a byte-aligned field (p = 8 or 16).
Manifest store(const std::vector<std::uint8_t>& data, const CodeParams& params,
               const std::filesystem::path& dir);

struct RepairReport {
    int failed = 0;
    std::vector<int> contacted;
    long long blocks_transferred = 0;  // r * (r+1) on success
    std::uint64_t bytes_transferred = 0;
    double wall_ms = 0;
    bool success = false;
};

/// Delete the node's file, rebuild it from its r group peers only, rewrite
/// and re-verify checksums. Throws RepairImpossibleError when a peer file is
/// missing (callers may fall back to a global decode via retrieve).
RepairReport fail_and_repair(const std::filesystem::path& dir, int node);

/// Decode the original bytes from any >= k present nodes (restricted to
/// `allowed` when non-empty), verifying block checksums and the final length.
std::vector<std::uint8_t> retrieve(const std::filesystem::path& dir,
                                   const std::set<int>& allowed = {});
void retrieve_to_file(const std::filesystem::path& dir, const std::set<int>& allowed,
                      const std::filesystem::path& out);

struct SchemeStats {
    std::string name;
    bounds::Rational storage_overhead;    // total stored / file size
    long long nodes_contacted = 0;        // per repaired node
    std::uint64_t repair_bytes_per_failure = 0;
    std::uint64_t total_repair_bytes = 0;
};

struct ComparisonReport {
    long long failures = 0;
    SchemeStats lrc;
    SchemeStats rs;
};

/// Replay one seeded failure trace against the LRC and against an (n, k)
/// Reed-Solomon baseline with the same per-node storage, counting repair
/// traffic. Every repair is executed and verified, not just accounted.
ComparisonReport compare_schemes(const CodeParams& params, long long failures,
                                 std::uint64_t seed, std::size_t block_symbols = 64);

}  // namespace lrckit::storesim
