#include <doctest.h>

#include <algorithm>
#include <random>

#include "lrckit/errors.hpp"
#include "lrckit/lrc.hpp"

using lrckit::CodeParams;
using lrckit::GeneratorView;
using lrckit::Layout;
using lrckit::LrcCode;
using lrckit::NodeContent;
using lrckit::RepairError;
using lrckit::Slot;
using lrckit::gf::Field;
using lrckit::gf::sym;

namespace {

std::vector<sym> random_file(std::size_t len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, 255);
    std::vector<sym> f(len);
    for (auto& s : f) s = static_cast<sym>(dist(rng));
    return f;
}

}  // namespace

TEST_CASE("circular placement reproduces the (6,4,2) reference layout") {
    const CodeParams params(6, 4, 2);
    const Layout lay = Layout::build(params);

    // node 1 stores y^(1)_1, y^(2)_2, s_3
    CHECK(lay.node_slots(1) == std::vector<Slot>{{1, 1}, {2, 2}, {3, 3}});
    // node 2 stores y^(1)_2, y^(2)_3, s_1
    CHECK(lay.node_slots(2) == std::vector<Slot>{{1, 2}, {2, 3}, {3, 1}});
    // node 5 stores y^(1)_5, y^(2)_6, s_4
    CHECK(lay.node_slots(5) == std::vector<Slot>{{1, 5}, {2, 6}, {3, 4}});

    CHECK(lay.group_of(1) == 1);
    CHECK(lay.group_of(5) == 2);
    CHECK(lay.group_members(2) == std::vector<int>{4, 5, 6});
}

TEST_CASE("placement invariants hold across parameter choices") {
    for (auto [n, k, r] : {std::tuple{6, 4, 2}, {9, 5, 2}, {8, 3, 3}, {12, 7, 5}, {10, 6, 1}}) {
        const CodeParams params(n, k, r);
        const Layout lay = Layout::build(params);
        for (int g = 1; g <= params.num_groups(); ++g) {
            std::vector<int> index_count(n + 1, 0);
            for (int node : lay.group_members(g)) {
                std::vector<int> seen;
                for (const Slot& s : lay.node_slots(node)) {
                    // indices stay within the group's range
                    CHECK((s.index - 1) / (r + 1) + 1 == g);
                    seen.push_back(s.index);
                    ++index_count[s.index];
                }
                // per-node indices pairwise distinct
                std::sort(seen.begin(), seen.end());
                CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
            }
            // each group-owned index appears once per node, r+1 times total
            for (int idx : lay.group_members(g)) CHECK(index_count[idx] == r + 1);
        }
    }
}

TEST_CASE("divisibility is enforced") {
    CHECK_THROWS_AS(CodeParams(7, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams(6, 7, 2), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams(300, 4, 2), std::invalid_argument);  // n > q-1
}

TEST_CASE("encode places the Fig-style blocks, zero file encodes to zero") {
    const CodeParams params(6, 4, 2);
    const LrcCode code(params);

    const std::vector<sym> zero(8, 0);
    for (const auto& nc : code.encode(zero))
        for (const auto& blk : nc.blocks) CHECK(blk == std::vector<sym>{0});

    std::mt19937_64 rng(31);
    const auto file = random_file(8, rng);
    const auto nodes = code.encode(file);

    // recompute the two RS codewords directly
    const auto y1 = code.rs().encode(std::span<const sym>(file).subspan(0, 4));
    const auto y2 = code.rs().encode(std::span<const sym>(file).subspan(4, 4));

    // node 2 holds (y^(1)_2, y^(2)_3, s_1) with s_1 = y^(1)_1 + y^(2)_1
    CHECK(nodes[1].blocks[0][0] == y1[1]);
    CHECK(nodes[1].blocks[1][0] == y2[2]);
    CHECK(nodes[1].blocks[2][0] == (y1[0] ^ y2[0]));
}

TEST_CASE("xor-repair identity: any block is the xor of the other r same-index blocks") {
    const CodeParams params(9, 5, 2);
    const LrcCode code(params);
    std::mt19937_64 rng(37);
    const auto file = random_file(static_cast<std::size_t>(params.file_symbols()) * 3, rng);
    const auto nodes = code.encode(file);

    const Layout& lay = code.layout();
    for (int g = 1; g <= params.num_groups(); ++g) {
        for (int index : lay.group_members(g)) {
            std::vector<sym> acc(3, 0);
            for (int node : lay.group_members(g))
                for (const Slot& s : lay.node_slots(node))
                    if (s.index == index)
                        for (int i = 0; i < 3; ++i) acc[i] ^= nodes[node - 1].blocks[s.row - 1][i];
            CHECK(acc == std::vector<sym>(3, 0));
        }
    }
}

TEST_CASE("repair reconstructs every node bit-identically") {
    const CodeParams params(6, 4, 2);
    const LrcCode code(params);
    std::mt19937_64 rng(41);
    const auto file = random_file(16, rng);
    const auto nodes = code.encode(file);

    for (int failed = 1; failed <= 6; ++failed) {
        std::vector<NodeContent> donors;
        for (int m : code.layout().group_members(code.layout().group_of(failed)))
            if (m != failed) donors.push_back(nodes[m - 1]);
        const NodeContent rebuilt = code.repair(failed, donors);
        CHECK(rebuilt.node_id == failed);
        CHECK(rebuilt.blocks == nodes[failed - 1].blocks);
    }
}

TEST_CASE("repair of an all-zero node is all-zero") {
    const CodeParams params(6, 4, 2);
    const LrcCode code(params);
    const auto nodes = code.encode(std::vector<sym>(8, 0));
    const NodeContent rebuilt = code.repair(1, {nodes[1], nodes[2]});
    for (const auto& blk : rebuilt.blocks) CHECK(blk == std::vector<sym>{0});
}

TEST_CASE("repair validates its donor set") {
    const CodeParams params(6, 4, 2);
    const LrcCode code(params);
    std::mt19937_64 rng(43);
    const auto nodes = code.encode(random_file(8, rng));

    CHECK_THROWS_AS(code.repair(1, {nodes[1], nodes[3]}), RepairError);  // node 4: wrong group
    CHECK_THROWS_AS(code.repair(1, {nodes[1]}), RepairError);            // missing donor
    CHECK_THROWS_AS(code.repair(1, {nodes[1], nodes[1]}), RepairError);  // duplicate
}

TEST_CASE("every k-subset of nodes decodes the file") {
    const CodeParams params(6, 4, 2);
    const LrcCode code(params);
    std::mt19937_64 rng(47);
    const auto file = random_file(24, rng);
    const auto nodes = code.encode(file);

    std::vector<bool> sel(6, false);
    std::fill(sel.begin(), sel.begin() + 4, true);
    int cases = 0;
    do {
        std::vector<NodeContent> avail;
        for (int i = 0; i < 6; ++i)
            if (sel[i]) avail.push_back(nodes[i]);
        CHECK(code.decode(avail) == file);
        ++cases;
    } while (std::prev_permutation(sel.begin(), sel.end()));
    CHECK(cases == 15);

    CHECK(code.decode({nodes.begin(), nodes.end()}) == file);  // superset
    CHECK_THROWS_AS(code.decode({nodes[0], nodes[1], nodes[2]}),
                    lrckit::InsufficientSymbolsError);
}

TEST_CASE("decode from the reference node set {2,3,4,5}") {
    const CodeParams params(6, 4, 2);
    const LrcCode code(params);
    std::mt19937_64 rng(53);
    const auto file = random_file(8, rng);
    const auto nodes = code.encode(file);
    CHECK(code.decode({nodes[1], nodes[2], nodes[3], nodes[4]}) == file);
}

TEST_CASE("generator view reproduces the encoder and has full rank") {
    const CodeParams params(6, 4, 2);
    const LrcCode code(params);
    const GeneratorView gen = code.generator_view();
    CHECK(gen.mat().rows() == 8);
    CHECK(gen.mat().cols() == 18);

    // node 1's first slot is y^(1)_1: systematic RS row 1 in the part-1 rows
    for (int row = 0; row < 8; ++row) CHECK(gen.mat()(row, 0) == (row == 0 ? 1 : 0));

    std::mt19937_64 rng(59);
    const auto file = random_file(8, rng);
    lrckit::gf::Matrix x(params.field, 1, 8);
    for (int j = 0; j < 8; ++j) x(0, j) = file[j];
    const auto stored = x * gen.mat();

    const auto nodes = code.encode(file);
    for (int node = 1; node <= 6; ++node)
        for (int row = 1; row <= 3; ++row)
            CHECK(stored(0, (node - 1) * 3 + (row - 1)) == nodes[node - 1].blocks[row - 1][0]);

    std::vector<int> all{1, 2, 3, 4, 5, 6};
    CHECK(gen.node_rank(all) == 8);
}

TEST_CASE("storage counts: rate and overhead identities") {
    for (auto [n, k, r] : {std::tuple{6, 4, 2}, {9, 5, 2}, {12, 7, 3}}) {
        const CodeParams params(n, k, r);
        const long long M = params.file_symbols();
        const long long stored = static_cast<long long>(n) * params.node_capacity();
        // rate M/(n*alpha) == r/(r+1) * k/n, as integers: M*(r+1)*n == stored*r*k
        CHECK(M * (r + 1) * n == stored * static_cast<long long>(r) * k);
        // total stored symbols == (r+1)/r * M * n/k
        CHECK(stored * static_cast<long long>(r) * k == (r + 1) * M * n);
    }
}
