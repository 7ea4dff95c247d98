#include "lrckit/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lrckit::gf {

namespace {

int degree(std::uint32_t v) {
    int d = -1;
    while (v) {
        ++d;
        v >>= 1;
    }
    return d;
}

// carryless product, no reduction
std::uint64_t poly_mul(std::uint32_t a, std::uint32_t b) {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1u) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return acc;
}

std::uint32_t poly_mod(std::uint64_t a, std::uint32_t m) {
    const int dm = degree(m);
    for (int d = 63; d >= dm; --d) {
        if (a >> d & 1u) a ^= static_cast<std::uint64_t>(m) << (d - dm);
    }
    return static_cast<std::uint32_t>(a);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
    return poly_mod(poly_mul(a, b), m);
}

// Stock irreducible polynomials, one per width.
constexpr std::uint32_t kDefaultModulus[17] = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,    0x83,   0x11D,
    0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003,  0x1100B,
};

}  // namespace

bool Field::irreducible(std::uint32_t poly, int p) {
    if (p < 1 || degree(poly) != p) return false;
    // trial division by every polynomial of degree 1 .. p/2
    const std::uint32_t hi = 1u << (p / 2 + 1);
    for (std::uint32_t div = 2; div < hi; ++div) {
        if (poly_mod(poly, div) == 0) return false;
    }
    return true;
}

Field::Field(int p, std::uint32_t modulus) : p_(p), modulus_(modulus) {
    if (p < 1 || p > 16) throw std::invalid_argument("field width p must be in [1, 16]");
    if (!irreducible(modulus, p))
        throw std::invalid_argument("modulus is not an irreducible polynomial of degree p");
    q_ = 1u << p;

    // Find a generator of the multiplicative group. The group is cyclic of
    // order q-1, so some element has full order; x itself need not.
    gen_ = 1;
    if (q_ > 2) {
        for (std::uint32_t cand = 2; cand < q_; ++cand) {
            std::uint32_t b = cand;
            std::uint32_t ord = 1;
            while (b != 1) {
                b = mulmod(b, cand, modulus_);
                ++ord;
                if (ord > q_) throw std::logic_error("generator order walk diverged");
            }
            if (ord == q_ - 1) {
                gen_ = static_cast<sym>(cand);
                break;
            }
        }
        if (gen_ == 1) throw std::logic_error("no generator found; modulus not irreducible?");
    }

    alog_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    std::uint32_t b = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        alog_[i] = static_cast<sym>(b);
        alog_[i + q_ - 1] = static_cast<sym>(b);
        log_[b] = static_cast<int>(i);
        b = mulmod(b, gen_, modulus_);
    }
    if (b != 1) throw std::logic_error("antilog table did not close");

    if (p_ <= 8) {
        multab_.assign(static_cast<std::size_t>(q_) * q_, 0);
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t c = 1; c < q_; ++c)
                multab_[(a << p_) + c] =
                    static_cast<std::uint8_t>(alog_[static_cast<std::size_t>(log_[a]) + log_[c]]);
    }
}

void Field::mul_add_into(std::span<sym> dst, std::span<const sym> src, sym c) const {
    if (dst.size() != src.size()) throw std::invalid_argument("mul_add_into size mismatch");
    if (c == 0) return;
    const std::size_t m = dst.size();
    if (!multab_.empty()) {
        const std::uint8_t* row = &multab_[static_cast<std::size_t>(c) << p_];
        for (std::size_t i = 0; i < m; ++i) dst[i] ^= row[src[i]];
        return;
    }
    const std::size_t lc = static_cast<std::size_t>(log_[c]);
    for (std::size_t i = 0; i < m; ++i) {
        const sym s = src[i];
        if (s) dst[i] ^= alog_[lc + static_cast<std::size_t>(log_[s])];
    }
}

std::shared_ptr<const Field> Field::make(int p) {
    if (p < 1 || p > 16) throw std::invalid_argument("field width p must be in [1, 16]");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[p];
    if (!slot) slot = std::make_shared<const Field>(p, kDefaultModulus[p]);
    return slot;
}

std::shared_ptr<const Field> Field::gf256() { return make(8); }

}  // namespace lrckit::gf
