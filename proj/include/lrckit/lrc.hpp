#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lrckit/generator_view.hpp"
#include "lrckit/rs.hpp"

namespace lrckit {

/// Parameters of the explicit LRC: n storage nodes in groups of r+1, file of
/// M = r*k symbols per stripe, alpha = r+1 blocks per node. Requires
/// (r+1) | n and n <= q-1.
struct CodeParams {
    int n = 0;
    int k = 0;
    int r = 0;
    std::shared_ptr<const gf::Field> field;

    CodeParams() = default;
    CodeParams(int n_, int k_, int r_, std::shared_ptr<const gf::Field> f = nullptr);

    int file_symbols() const { return r * k; }       // M
    int node_capacity() const { return r + 1; }      // alpha, in blocks
    int num_groups() const { return n / (r + 1); }
    // The distance bound is tight for this construction only when (r+1) does
    // not divide k.
    bool bound_tight_expected() const { return k % (r + 1) != 0; }
};

/// One (row, block index) slot; rows 1..r hold blocks of the per-part RS
/// codewords, row r+1 holds a block of the XOR parity stripe. All 1-based.
struct Slot {
    int row = 0;
    int index = 0;
    bool operator==(const Slot&) const = default;
};

/// The circular block placement: node at local position t (1-based) of its
/// group stores, in row i, the block with within-group index
/// ((t + i - 2) mod (r+1)) + 1, offset by the group base. Every node holds
/// r+1 blocks of pairwise distinct indices, and each index owned by a group
/// appears once in each of its r+1 nodes.
class Layout {
public:
    static Layout build(const CodeParams& params);

    int n() const { return n_; }
    int r() const { return r_; }
    int group_of(int node) const;                       // 1-based
    std::vector<int> group_members(int group) const;    // ascending node ids
    const std::vector<Slot>& node_slots(int node) const;
    Slot slot(int node, int row) const { return node_slots(node)[row - 1]; }

private:
    Layout() = default;
    int n_ = 0, r_ = 0;
    std::vector<std::vector<Slot>> slots_;  // [node-1][row-1]
};

/// Everything one node stores: r+1 blocks, each a vector of field symbols
/// (one symbol per stripe of the encoded file).
struct NodeContent {
    int node_id = 0;
    std::vector<std::vector<gf::sym>> blocks;
};

/// The explicit LRC: r independent systematic (n, k) RS pre-codes, one XOR
/// parity stripe across them, circular placement. Repairs any single node by
/// XORing the r same-index blocks held by its group; decodes the file from
/// any k nodes by per-part erasure decoding.
class LrcCode {
public:
    explicit LrcCode(CodeParams params);

    const CodeParams& params() const { return params_; }
    const Layout& layout() const { return layout_; }
    const RsCode& rs() const { return rs_; }

    /// file.size() must be a positive multiple of M = r*k; symbol s*M + j of
    /// the file is symbol j of stripe s.
    std::vector<NodeContent> encode(std::span<const gf::sym> file) const;

    /// Reconstructs a lost node from the contents of the other r nodes of its
    /// group: each lost block is the XOR of the donors' same-index blocks.
    NodeContent repair(int failed, const std::vector<NodeContent>& donors) const;

    /// Decode the full file from any >= k distinct nodes.
    std::vector<gf::sym> decode(const std::vector<NodeContent>& available) const;

    /// The M x n(r+1) matrix of the whole vector-linear map (one stripe),
    /// node-major columns; feeds the bound/verifier machinery.
    GeneratorView generator_view() const;

private:
    CodeParams params_;
    RsCode rs_;
    Layout layout_;
};

}  // namespace lrckit
