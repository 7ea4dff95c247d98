#include "lrckit/storesim.hpp"

#include <zlib.h>

#include <chrono>
#include <fstream>
#include <random>

#include <json.hpp>

#include "lrckit/errors.hpp"
#include "lrckit/rs.hpp"

namespace lrckit::storesim {

namespace fs = std::filesystem;
using gf::sym;
using nlohmann::json;

namespace {

std::uint32_t block_crc(const std::vector<std::uint8_t>& bytes) {
    return static_cast<std::uint32_t>(
        ::crc32(0L, bytes.empty() ? Z_NULL : bytes.data(), static_cast<uInt>(bytes.size())));
}

std::vector<std::uint8_t> block_to_bytes(const std::vector<sym>& block, int sym_bytes) {
    std::vector<std::uint8_t> out(block.size() * sym_bytes);
    for (std::size_t i = 0; i < block.size(); ++i)
        for (int b = 0; b < sym_bytes; ++b)
            out[i * sym_bytes + b] = static_cast<std::uint8_t>(block[i] >> (8 * b));
    return out;
}

std::vector<sym> bytes_to_block(const std::vector<std::uint8_t>& bytes, int sym_bytes) {
    std::vector<sym> out(bytes.size() / sym_bytes, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int b = 0; b < sym_bytes; ++b)
            out[i] |= static_cast<sym>(bytes[i * sym_bytes + b]) << (8 * b);
    return out;
}

void write_bytes(const fs::path& file, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + file.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("short write: " + file.string());
}

std::vector<std::uint8_t> read_bytes(const fs::path& file) {
    std::ifstream in(file, std::ios::binary | std::ios::ate);
    if (!in) throw IoError("cannot open for reading: " + file.string());
    const std::streamsize size = in.tellg();
    in.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    in.read(reinterpret_cast<char*>(bytes.data()), size);
    if (!in) throw IoError("short read: " + file.string());
    return bytes;
}

// read one node's blocks, checking CRCs against the manifest
NodeContent read_node(const Manifest& man, const fs::path& dir, int node) {
    const auto bytes = read_bytes(node_file(dir, node));
    const std::size_t block_bytes = man.block_symbols() * man.symbol_bytes();
    if (bytes.size() != block_bytes * (man.r + 1))
        throw CorruptBlockError("node file has unexpected size: " +
                                node_file(dir, node).string());
    NodeContent nc;
    nc.node_id = node;
    nc.blocks.resize(man.r + 1);
    for (int row = 0; row < man.r + 1; ++row) {
        std::vector<std::uint8_t> raw(bytes.begin() + row * block_bytes,
                                      bytes.begin() + (row + 1) * block_bytes);
        if (block_crc(raw) != man.crcs[node - 1][row])
            throw CorruptBlockError("checksum mismatch on node " + std::to_string(node) +
                                    " row " + std::to_string(row + 1));
        nc.blocks[row] = bytes_to_block(raw, man.symbol_bytes());
    }
    return nc;
}

void write_node(const Manifest& man, const fs::path& dir, const NodeContent& nc) {
    std::vector<std::uint8_t> bytes;
    for (const auto& block : nc.blocks) {
        const auto raw = block_to_bytes(block, man.symbol_bytes());
        bytes.insert(bytes.end(), raw.begin(), raw.end());
    }
    write_bytes(node_file(dir, nc.node_id), bytes);
}

}  // namespace

CodeParams Manifest::params() const {
    return CodeParams(n, k, r, std::make_shared<const gf::Field>(p, modulus));
}

std::uint64_t Manifest::block_symbols() const {
    return padded_len() / symbol_bytes() / (static_cast<std::uint64_t>(r) * k);
}

std::string Manifest::to_json() const {
    json slots_j = json::array();
    for (const auto& node : slots) {
        json per_node = json::array();
        for (const Slot& s : node) per_node.push_back({s.row, s.index});
        slots_j.push_back(per_node);
    }
    json j{{"version", version}, {"n", n},           {"k", k},
           {"r", r},             {"p", p},           {"modulus", modulus},
           {"file_len", file_len}, {"pad_len", pad_len}, {"slots", slots_j},
           {"crcs", crcs}};
    return j.dump(2) + "\n";
}

Manifest Manifest::from_json(const std::string& text) {
    const json j = json::parse(text);
    Manifest m;
    m.version = j.at("version").get<int>();
    if (m.version != 1) throw IoError("unsupported manifest version");
    m.n = j.at("n").get<int>();
    m.k = j.at("k").get<int>();
    m.r = j.at("r").get<int>();
    m.p = j.at("p").get<int>();
    m.modulus = j.at("modulus").get<std::uint32_t>();
    m.file_len = j.at("file_len").get<std::uint64_t>();
    m.pad_len = j.at("pad_len").get<std::uint64_t>();
    for (const auto& node : j.at("slots")) {
        std::vector<Slot> per_node;
        for (const auto& s : node) per_node.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
        m.slots.push_back(std::move(per_node));
    }
    m.crcs = j.at("crcs").get<std::vector<std::vector<std::uint32_t>>>();
    return m;
}

void Manifest::save(const fs::path& dir) const {
    const std::string text = to_json();
    write_bytes(dir / "manifest.json", std::vector<std::uint8_t>(text.begin(), text.end()));
}

Manifest Manifest::load(const fs::path& dir) {
    const auto bytes = read_bytes(dir / "manifest.json");
    return from_json(std::string(bytes.begin(), bytes.end()));
}

fs::path node_file(const fs::path& dir, int node) {
    return dir / ("node_" + std::to_string(node) + ".blk");
}

Manifest store(const std::vector<std::uint8_t>& data, const CodeParams& params,
               const fs::path& dir) {
    if (params.field->p() != 8 && params.field->p() != 16)
        throw std::invalid_argument("storage needs a byte-aligned field (p = 8 or 16)");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory: " + dir.string());

    const int sym_bytes = params.field->p() / 8;
    const std::uint64_t M = params.file_symbols();
    const std::uint64_t file_syms = (data.size() + sym_bytes - 1) / sym_bytes;
    const std::uint64_t blocks_len = std::max<std::uint64_t>(1, (file_syms + M - 1) / M);
    const std::uint64_t padded = blocks_len * M * sym_bytes;

    std::vector<std::uint8_t> buf(data);
    buf.resize(padded, 0);
    const std::vector<sym> file = bytes_to_block(buf, sym_bytes);

    LrcCode code(params);
    const auto nodes = code.encode(file);

    Manifest man;
    man.n = params.n;
    man.k = params.k;
    man.r = params.r;
    man.p = params.field->p();
    man.modulus = params.field->modulus();
    man.file_len = data.size();
    man.pad_len = padded - data.size();
    const Layout& lay = code.layout();
    for (int node = 1; node <= params.n; ++node) {
        man.slots.push_back(lay.node_slots(node));
        std::vector<std::uint32_t> crcs;
        for (const auto& block : nodes[node - 1].blocks)
            crcs.push_back(block_crc(block_to_bytes(block, sym_bytes)));
        man.crcs.push_back(std::move(crcs));
    }
    for (const auto& nc : nodes) write_node(man, dir, nc);
    man.save(dir);
    return man;
}

RepairReport fail_and_repair(const fs::path& dir, int node) {
    const auto start = std::chrono::steady_clock::now();
    const Manifest man = Manifest::load(dir);
    if (node < 1 || node > man.n) throw std::invalid_argument("node id out of range");

    const CodeParams params = man.params();
    const LrcCode code(params);
    const int group = code.layout().group_of(node);

    std::vector<int> peers;
    for (int m : code.layout().group_members(group))
        if (m != node) peers.push_back(m);
    for (int peer : peers)
        if (!fs::exists(node_file(dir, peer)))
            throw RepairImpossibleError("group peer " + std::to_string(peer) +
                                        " is missing; local repair impossible");

    // fail-stop injection: the node's data is gone before we start reading
    // (the file may already be absent if the failure happened externally)
    fs::remove(node_file(dir, node));

    RepairReport rep;
    rep.failed = node;
    std::vector<NodeContent> donors;
    for (int peer : peers) {
        donors.push_back(read_node(man, dir, peer));
        rep.contacted.push_back(peer);
        rep.blocks_transferred += man.r + 1;
        rep.bytes_transferred +=
            static_cast<std::uint64_t>(man.r + 1) * man.block_symbols() * man.symbol_bytes();
    }

    const NodeContent rebuilt = code.repair(node, donors);
    write_node(man, dir, rebuilt);

    // bit-identical rebuild shows up as matching checksums
    for (int row = 0; row < man.r + 1; ++row)
        if (block_crc(block_to_bytes(rebuilt.blocks[row], man.symbol_bytes())) !=
            man.crcs[node - 1][row])
            throw CorruptBlockError("repaired node fails checksum verification");

    rep.success = true;
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<std::uint8_t> retrieve(const fs::path& dir, const std::set<int>& allowed) {
    const Manifest man = Manifest::load(dir);
    std::vector<NodeContent> contents;
    for (int node = 1; node <= man.n; ++node) {
        if (!allowed.empty() && !allowed.count(node)) continue;
        if (!fs::exists(node_file(dir, node))) continue;
        contents.push_back(read_node(man, dir, node));
        if (static_cast<int>(contents.size()) == man.k) break;  // k nodes suffice
    }
    if (static_cast<int>(contents.size()) < man.k)
        throw InsufficientSymbolsError("fewer than k nodes available for retrieval");

    const CodeParams params = man.params();
    const LrcCode code(params);
    const std::vector<sym> file = code.decode(contents);
    std::vector<std::uint8_t> bytes = block_to_bytes(file, man.symbol_bytes());
    if (bytes.size() != man.padded_len())
        throw CorruptBlockError("decoded length does not match the manifest");
    bytes.resize(man.file_len);
    return bytes;
}

void retrieve_to_file(const fs::path& dir, const std::set<int>& allowed, const fs::path& out) {
    write_bytes(out, retrieve(dir, allowed));
}

ComparisonReport compare_schemes(const CodeParams& params, long long failures,
                                 std::uint64_t seed, std::size_t block_symbols) {
    const int n = params.n, k = params.k, r = params.r;
    const gf::Field& f = *params.field;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> symbol(0, f.order() - 1);
    std::uniform_int_distribution<int> node_pick(1, n);

    // shared failure trace
    std::vector<int> trace(failures);
    for (auto& t : trace) t = node_pick(rng);

    ComparisonReport rep;
    rep.failures = failures;

    // LRC: file of r*k blocks, repairs read the r group peers
    {
        std::vector<sym> file(static_cast<std::size_t>(r) * k * block_symbols);
        for (auto& s : file) s = static_cast<sym>(symbol(rng));
        LrcCode code(params);
        auto nodes = code.encode(file);
        std::uint64_t moved = 0;
        for (int failed : trace) {
            std::vector<NodeContent> donors;
            for (int m : code.layout().group_members(code.layout().group_of(failed)))
                if (m != failed) donors.push_back(nodes[m - 1]);
            NodeContent rebuilt = code.repair(failed, donors);
            if (rebuilt.blocks != nodes[failed - 1].blocks)
                throw std::logic_error("LRC repair mismatch during comparison");
            moved += static_cast<std::uint64_t>(r) * (r + 1) * block_symbols * (f.p() / 8);
        }
        rep.lrc.name = "lrc";
        rep.lrc.storage_overhead =
            bounds::Rational(static_cast<long long>(n) * (r + 1), static_cast<long long>(r) * k);
        rep.lrc.nodes_contacted = r;
        rep.lrc.repair_bytes_per_failure =
            static_cast<std::uint64_t>(r) * (r + 1) * block_symbols * (f.p() / 8);
        rep.lrc.total_repair_bytes = moved;
    }

    // RS baseline: same n, k, same per-node storage of r+1 blocks (the file
    // is larger by (r+1)/r); node repair decodes from any k peers and
    // re-encodes, moving their full contents
    {
        RsCode rs(params.field, n, k);
        std::vector<std::vector<std::vector<sym>>> lanes(r + 1);
        for (int lane = 0; lane <= r; ++lane) {
            std::vector<std::vector<sym>> msg(k, std::vector<sym>(block_symbols));
            for (auto& blk : msg)
                for (auto& s : blk) s = static_cast<sym>(symbol(rng));
            lanes[lane] = rs.encode_blocks(msg);
        }
        std::uint64_t moved = 0;
        for (int failed : trace) {
            std::vector<int> peers;
            for (int m = 1; m <= n && static_cast<int>(peers.size()) < k; ++m)
                if (m != failed) peers.push_back(m);
            for (int lane = 0; lane <= r; ++lane) {
                std::vector<std::vector<sym>> blocks;
                for (int m : peers) blocks.push_back(lanes[lane][m - 1]);
                auto msg = rs.decode_blocks(peers, blocks);
                auto reencoded = rs.encode_blocks(msg);
                if (reencoded[failed - 1] != lanes[lane][failed - 1])
                    throw std::logic_error("RS repair mismatch during comparison");
            }
            moved += static_cast<std::uint64_t>(k) * (r + 1) * block_symbols * (f.p() / 8);
        }
        rep.rs.name = "rs";
        rep.rs.storage_overhead = bounds::Rational(n, k);
        rep.rs.nodes_contacted = k;
        rep.rs.repair_bytes_per_failure =
            static_cast<std::uint64_t>(k) * (r + 1) * block_symbols * (f.p() / 8);
        rep.rs.total_repair_bytes = moved;
    }

    return rep;
}

}  // namespace lrckit::storesim
