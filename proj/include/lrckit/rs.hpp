#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "lrckit/gfmat.hpp"

namespace lrckit {

/// Systematic (n, k) Reed-Solomon code over GF(2^p), erasure channel only.
///
/// The generator is an n x k matrix: codeword[i] = row_i(G) . message. It is
/// built as a Vandermonde matrix on the first n powers of the field generator
/// and column-reduced to systematic form, which preserves the property that
/// every k x k row-submatrix is invertible (MDS).
class RsCode {
public:
    RsCode(std::shared_ptr<const gf::Field> field, int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const gf::Field& field() const { return *field_; }
    std::shared_ptr<const gf::Field> field_ptr() const { return field_; }
    const gf::Matrix& generator() const { return gen_; }

    /// message (k symbols) -> codeword (n symbols); first k symbols are the
    /// message verbatim.
    std::vector<gf::sym> encode(std::span<const gf::sym> message) const;

    /// Erasure decode from >= k (position, symbol) pairs, positions 1-based.
    /// Throws InsufficientSymbolsError below k distinct positions and
    /// DecodeError when the provided symbols are mutually inconsistent.
    std::vector<gf::sym> decode(const std::vector<std::pair<int, gf::sym>>& symbols) const;

    // Block-level variants: every "symbol" is a vector and operations apply
    // element-wise. decode_blocks uses the first k distinct positions.
    std::vector<std::vector<gf::sym>> encode_blocks(
        const std::vector<std::vector<gf::sym>>& message) const;
    std::vector<std::vector<gf::sym>> decode_blocks(
        const std::vector<int>& positions,
        const std::vector<std::vector<gf::sym>>& blocks) const;

private:
    std::shared_ptr<const gf::Field> field_;
    int n_, k_;
    gf::Matrix gen_;  // n x k, top k x k block = identity
};

}  // namespace lrckit
