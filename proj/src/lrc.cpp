#include "lrckit/lrc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lrckit/errors.hpp"

namespace lrckit {

using gf::Matrix;
using gf::sym;

CodeParams::CodeParams(int n_, int k_, int r_, std::shared_ptr<const gf::Field> f)
    : n(n_), k(k_), r(r_), field(f ? std::move(f) : gf::Field::gf256()) {
    if (n < 1 || k < 1 || r < 1) throw std::invalid_argument("n, k, r must be positive");
    if (k > n) throw std::invalid_argument("k must not exceed n");
    if (n % (r + 1) != 0) throw std::invalid_argument("(r+1) must divide n");
    if (static_cast<std::uint32_t>(n) > field->order() - 1)
        throw std::invalid_argument("n exceeds q - 1 for this field");
}

Layout Layout::build(const CodeParams& params) {
    Layout lay;
    lay.n_ = params.n;
    lay.r_ = params.r;
    const int rp1 = params.r + 1;
    lay.slots_.resize(params.n);
    for (int node = 1; node <= params.n; ++node) {
        const int group = (node - 1) / rp1;     // 0-based here
        const int t = (node - 1) % rp1 + 1;     // local position, 1-based
        auto& slots = lay.slots_[node - 1];
        slots.resize(rp1);
        for (int row = 1; row <= rp1; ++row) {
            const int within = (t + row - 2) % rp1 + 1;
            slots[row - 1] = Slot{row, group * rp1 + within};
        }
    }
    return lay;
}

int Layout::group_of(int node) const {
    if (node < 1 || node > n_) throw std::out_of_range("node id");
    return (node - 1) / (r_ + 1) + 1;
}

std::vector<int> Layout::group_members(int group) const {
    if (group < 1 || group > n_ / (r_ + 1)) throw std::out_of_range("group id");
    std::vector<int> out(r_ + 1);
    for (int i = 0; i <= r_; ++i) out[i] = (group - 1) * (r_ + 1) + i + 1;
    return out;
}

const std::vector<Slot>& Layout::node_slots(int node) const {
    if (node < 1 || node > n_) throw std::out_of_range("node id");
    return slots_[node - 1];
}

LrcCode::LrcCode(CodeParams params)
    : params_(std::move(params)),
      rs_(params_.field, params_.n, params_.k),
      layout_(Layout::build(params_)) {}

std::vector<NodeContent> LrcCode::encode(std::span<const sym> file) const {
    const int M = params_.file_symbols();
    if (file.empty() || file.size() % M != 0)
        throw std::invalid_argument("file length must be a positive multiple of r*k");
    const std::size_t len = file.size() / M;  // symbols per block
    const int n = params_.n, k = params_.k, r = params_.r;

    // Per part i: gather the k message blocks (strided across stripes), RS
    // encode them to n codeword blocks.
    std::vector<std::vector<std::vector<sym>>> y(r);  // y[i-1][w-1] = block
    std::vector<std::vector<sym>> msg(k, std::vector<sym>(len));
    for (int i = 1; i <= r; ++i) {
        for (int j = 0; j < k; ++j)
            for (std::size_t s = 0; s < len; ++s) msg[j][s] = file[s * M + (i - 1) * k + j];
        y[i - 1] = rs_.encode_blocks(msg);
    }

    // XOR parity stripe: s_w = y^(1)_w + ... + y^(r)_w.
    std::vector<std::vector<sym>> parity(n, std::vector<sym>(len, 0));
    for (int w = 0; w < n; ++w)
        for (int i = 0; i < r; ++i)
            for (std::size_t s = 0; s < len; ++s) parity[w][s] ^= y[i][w][s];

    std::vector<NodeContent> nodes(n);
    for (int node = 1; node <= n; ++node) {
        nodes[node - 1].node_id = node;
        auto& blocks = nodes[node - 1].blocks;
        blocks.resize(r + 1);
        for (const Slot& sl : layout_.node_slots(node)) {
            if (sl.row <= r)
                blocks[sl.row - 1] = y[sl.row - 1][sl.index - 1];
            else
                blocks[sl.row - 1] = parity[sl.index - 1];
        }
    }
    return nodes;
}

NodeContent LrcCode::repair(int failed, const std::vector<NodeContent>& donors) const {
    const int r = params_.r;
    const int group = layout_.group_of(failed);
    std::set<int> expected;
    for (int m : layout_.group_members(group))
        if (m != failed) expected.insert(m);

    std::set<int> got;
    for (const auto& d : donors) {
        if (!expected.count(d.node_id))
            throw RepairError("donor node " + std::to_string(d.node_id) +
                              " is not in the failed node's group");
        if (!got.insert(d.node_id).second)
            throw RepairError("duplicate donor node " + std::to_string(d.node_id));
        if (static_cast<int>(d.blocks.size()) != r + 1)
            throw RepairError("donor content has wrong block count");
    }
    if (got != expected) throw RepairError("missing donor: need the other r group members");

    const std::size_t len = donors[0].blocks[0].size();
    NodeContent out;
    out.node_id = failed;
    out.blocks.resize(r + 1);
    for (const Slot& sl : layout_.node_slots(failed)) {
        std::vector<sym> block(len, 0);
        for (const auto& d : donors) {
            // each donor holds exactly one block with this index
            const auto& dslots = layout_.node_slots(d.node_id);
            for (int row = 1; row <= r + 1; ++row) {
                if (dslots[row - 1].index != sl.index) continue;
                const auto& src = d.blocks[row - 1];
                if (src.size() != len) throw RepairError("donor block length mismatch");
                for (std::size_t s = 0; s < len; ++s) block[s] ^= src[s];
                break;
            }
        }
        out.blocks[sl.row - 1] = std::move(block);
    }
    return out;
}

std::vector<sym> LrcCode::decode(const std::vector<NodeContent>& available) const {
    const int k = params_.k, r = params_.r, M = params_.file_symbols();
    std::set<int> ids;
    for (const auto& nc : available) {
        if (nc.node_id < 1 || nc.node_id > params_.n) throw std::invalid_argument("bad node id");
        if (!ids.insert(nc.node_id).second) throw std::invalid_argument("duplicate node content");
        if (static_cast<int>(nc.blocks.size()) != r + 1)
            throw std::invalid_argument("node content has wrong block count");
    }
    if (static_cast<int>(ids.size()) < k)
        throw InsufficientSymbolsError("need at least k nodes to decode");
    const std::size_t len = available[0].blocks[0].size();

    // Any k nodes hold k distinct-index blocks of every part: rows within a
    // group never repeat an index, and groups own disjoint index ranges.
    std::vector<sym> file(static_cast<std::size_t>(M) * len);
    std::vector<int> positions;
    std::vector<std::vector<sym>> blocks;
    for (int i = 1; i <= r; ++i) {
        positions.clear();
        blocks.clear();
        for (const auto& nc : available) {
            const Slot sl = layout_.slot(nc.node_id, i);
            positions.push_back(sl.index);
            if (nc.blocks[i - 1].size() != len) throw std::invalid_argument("ragged node blocks");
            blocks.push_back(nc.blocks[i - 1]);
        }
        auto msg = rs_.decode_blocks(positions, blocks);
        for (int j = 0; j < k; ++j)
            for (std::size_t s = 0; s < len; ++s) file[s * M + (i - 1) * k + j] = msg[j][s];
    }
    return file;
}

GeneratorView LrcCode::generator_view() const {
    const int n = params_.n, k = params_.k, r = params_.r, M = params_.file_symbols();
    const int alpha = params_.node_capacity();
    Matrix mat(params_.field, M, static_cast<std::size_t>(n) * alpha);
    const Matrix& G = rs_.generator();
    for (int node = 1; node <= n; ++node) {
        for (const Slot& sl : layout_.node_slots(node)) {
            const std::size_t col = static_cast<std::size_t>(node - 1) * alpha + (sl.row - 1);
            if (sl.row <= r) {
                for (int j = 0; j < k; ++j) mat((sl.row - 1) * k + j, col) = G(sl.index - 1, j);
            } else {
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < k; ++j) mat(i * k + j, col) = G(sl.index - 1, j);
            }
        }
    }
    return GeneratorView(std::move(mat), n, alpha);
}

}  // namespace lrckit
