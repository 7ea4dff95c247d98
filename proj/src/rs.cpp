#include "lrckit/rs.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "lrckit/errors.hpp"

namespace lrckit {

using gf::Matrix;
using gf::SolveStatus;
using gf::sym;

namespace {

// next k-combination of {0..n-1} in lexicographic order; false when done
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] != i + n - k) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

double binom(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

RsCode::RsCode(std::shared_ptr<const gf::Field> field, int n, int k)
    : field_(std::move(field)), n_(n), k_(k), gen_(field_, 0, 0) {
    if (k < 1 || n < k) throw std::invalid_argument("need 1 <= k <= n");
    if (static_cast<std::uint32_t>(n) > field_->order() - 1)
        throw std::invalid_argument("n exceeds q - 1 for this field");

    // Vandermonde on the evaluation points g^0 .. g^(n-1), then column
    // operations (right-multiply by the inverse of the top block) to reach
    // systematic form.
    Matrix vand(field_, n_, k_);
    for (int i = 0; i < n_; ++i) {
        const sym x = field_->exp(i);
        sym pw = 1;
        for (int j = 0; j < k_; ++j) {
            vand(i, j) = pw;
            pw = field_->mul(pw, x);
        }
    }
    std::vector<std::size_t> top(k_);
    for (int j = 0; j < k_; ++j) top[j] = j;
    auto inv = vand.select_rows(top).inverse();
    if (!inv) throw std::logic_error("Vandermonde top block not invertible");
    gen_ = vand * *inv;

    // MDS sanity: every k x k row-submatrix must be invertible. Exhaustive
    // for small codes, sampled otherwise.
    auto full_rank = [&](const std::vector<std::size_t>& rows) {
        return gen_.select_rows(rows).rank() == static_cast<std::size_t>(k_);
    };
    if (binom(n_, k_) <= 2000) {
        std::vector<std::size_t> c(top);
        do {
            if (!full_rank(c)) throw std::logic_error("generator lost the MDS property");
        } while (next_combination(c, n_));
    } else {
        std::mt19937_64 rng(0xC0DE5EED);
        std::vector<std::size_t> all(n_);
        for (int i = 0; i < n_; ++i) all[i] = i;
        for (int t = 0; t < 200; ++t) {
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<std::size_t> c(all.begin(), all.begin() + k_);
            std::sort(c.begin(), c.end());
            if (!full_rank(c)) throw std::logic_error("generator lost the MDS property");
        }
    }
}

std::vector<sym> RsCode::encode(std::span<const sym> message) const {
    if (message.size() != static_cast<std::size_t>(k_))
        throw std::invalid_argument("message length != k");
    std::vector<sym> out(n_, 0);
    for (int i = 0; i < n_; ++i) {
        sym acc = 0;
        for (int j = 0; j < k_; ++j) acc ^= field_->mul(gen_(i, j), message[j]);
        out[i] = acc;
    }
    return out;
}

std::vector<sym> RsCode::decode(const std::vector<std::pair<int, sym>>& symbols) const {
    std::map<int, sym> seen;
    for (const auto& [pos, value] : symbols) {
        if (pos < 1 || pos > n_) throw std::invalid_argument("position out of range");
        seen.emplace(pos, value);  // duplicates stay as extra equations below
    }
    if (seen.size() < static_cast<std::size_t>(k_))
        throw InsufficientSymbolsError("fewer than k distinct positions");

    Matrix a(field_, symbols.size(), k_);
    Matrix b(field_, symbols.size(), 1);
    for (std::size_t r = 0; r < symbols.size(); ++r) {
        const auto& [pos, value] = symbols[r];
        for (int j = 0; j < k_; ++j) a(r, j) = gen_(pos - 1, j);
        b(r, 0) = value;
    }
    auto sol = a.solve(b);
    if (sol.status == SolveStatus::inconsistent)
        throw DecodeError("symbols are inconsistent with every message");
    if (sol.status != SolveStatus::ok)
        throw std::logic_error("k distinct positions gave a deficient system");
    std::vector<sym> msg(k_);
    for (int j = 0; j < k_; ++j) msg[j] = sol.x(j, 0);
    return msg;
}

std::vector<std::vector<sym>> RsCode::encode_blocks(
    const std::vector<std::vector<sym>>& message) const {
    if (message.size() != static_cast<std::size_t>(k_))
        throw std::invalid_argument("message block count != k");
    const std::size_t len = message.empty() ? 0 : message[0].size();
    for (const auto& blk : message)
        if (blk.size() != len) throw std::invalid_argument("ragged message blocks");
    std::vector<std::vector<sym>> out(n_, std::vector<sym>(len, 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < k_; ++j) field_->mul_add_into(out[i], message[j], gen_(i, j));
    return out;
}

std::vector<std::vector<sym>> RsCode::decode_blocks(
    const std::vector<int>& positions, const std::vector<std::vector<sym>>& blocks) const {
    if (positions.size() != blocks.size())
        throw std::invalid_argument("positions/blocks length mismatch");

    // first k distinct positions, ascending
    std::vector<std::size_t> order(positions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return positions[a] < positions[b]; });
    std::vector<std::size_t> chosen;
    int last = 0;
    for (std::size_t i : order) {
        if (positions[i] < 1 || positions[i] > n_) throw std::invalid_argument("position out of range");
        if (positions[i] == last) continue;
        last = positions[i];
        chosen.push_back(i);
        if (chosen.size() == static_cast<std::size_t>(k_)) break;
    }
    if (chosen.size() < static_cast<std::size_t>(k_))
        throw InsufficientSymbolsError("fewer than k distinct positions");

    std::vector<std::size_t> rows;
    rows.reserve(chosen.size());
    for (std::size_t i : chosen) rows.push_back(positions[i] - 1);
    auto dec = gen_.select_rows(rows).inverse();
    if (!dec) throw std::logic_error("k distinct rows of an MDS generator were singular");

    const std::size_t len = blocks.empty() ? 0 : blocks[chosen[0]].size();
    std::vector<std::vector<sym>> msg(k_, std::vector<sym>(len, 0));
    for (int j = 0; j < k_; ++j)
        for (int t = 0; t < k_; ++t) {
            const auto& src = blocks[chosen[t]];
            if (src.size() != len) throw std::invalid_argument("ragged blocks");
            field_->mul_add_into(msg[j], src, (*dec)(j, t));
        }
    return msg;
}

}  // namespace lrckit
