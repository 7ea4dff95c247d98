#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lrckit/errors.hpp"

namespace lrckit::gf {

// One field symbol. Wide enough for GF(2^16).
using sym = std::uint16_t;

/// Arithmetic in GF(2^p), 1 <= p <= 16, with log/antilog tables built from a
/// generator of the multiplicative group. The modulus must be an irreducible
/// polynomial of degree p (bitmask form, x^p bit included); irreducibility is
/// verified at construction by exhaustive trial division.
///
/// Instances are immutable after construction and safe to share across threads.
class Field {
public:
    Field(int p, std::uint32_t modulus);

    // Field with the stock irreducible polynomial for the given width.
    static std::shared_ptr<const Field> make(int p);
    // Default field: GF(2^8), modulus x^8+x^4+x^3+x^2+1 (0x11D).
    static std::shared_ptr<const Field> gf256();

    int p() const { return p_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t order() const { return q_; }  // q = 2^p
    sym generator() const { return gen_; }

    sym add(sym a, sym b) const { return static_cast<sym>(a ^ b); }
    sym sub(sym a, sym b) const { return static_cast<sym>(a ^ b); }
    sym mul(sym a, sym b) const {
        if (a == 0 || b == 0) return 0;
        return alog_[static_cast<std::size_t>(log_[a]) + static_cast<std::size_t>(log_[b])];
    }
    sym inv(sym a) const {
        if (a == 0) throw DivisionByZeroError("inverse of zero");
        return alog_[q_ - 1 - static_cast<std::uint32_t>(log_[a])];
    }
    sym div(sym a, sym b) const {
        if (b == 0) throw DivisionByZeroError("division by zero");
        if (a == 0) return 0;
        return alog_[static_cast<std::size_t>(log_[a]) + q_ - 1 - static_cast<std::size_t>(log_[b])];
    }

    // a^e with e reduced mod q-1; exp(e) is generator^e.
    sym exp(std::uint32_t e) const { return alog_[e % (q_ - 1)]; }
    int log(sym a) const {
        if (a == 0) throw DivisionByZeroError("log of zero");
        return log_[a];
    }

    // dst[i] ^= c * src[i]; the workhorse of all block-level coding.
    void mul_add_into(std::span<sym> dst, std::span<const sym> src, sym c) const;

    bool same(const Field& other) const {
        return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
    }

    // True if the polynomial (bitmask, degree p) is irreducible over GF(2).
    static bool irreducible(std::uint32_t poly, int p);

private:
    int p_;
    std::uint32_t modulus_;
    std::uint32_t q_;
    sym gen_;
    std::vector<sym> alog_;       // size 2(q-1), doubled so mul never needs a mod
    std::vector<int> log_;        // size q, log_[0] = -1
    std::vector<std::uint8_t> multab_;  // full q*q table when p <= 8
};

/// A single field symbol tagged with its field. Arithmetic between elements of
/// different fields throws FieldMismatchError.
struct FieldElement {
    sym value = 0;
    const Field* field = nullptr;

    FieldElement() = default;
    FieldElement(sym v, const Field& f) : value(v), field(&f) {
        if (v >= f.order()) throw std::invalid_argument("symbol out of field range");
    }

    FieldElement operator+(FieldElement o) const {
        check(o);
        return {field->add(value, o.value), *field};
    }
    FieldElement operator-(FieldElement o) const { return *this + o; }
    FieldElement operator*(FieldElement o) const {
        check(o);
        return {field->mul(value, o.value), *field};
    }
    FieldElement operator/(FieldElement o) const {
        check(o);
        return {field->div(value, o.value), *field};
    }
    FieldElement inverse() const { return {field->inv(value), *field}; }

    bool operator==(const FieldElement& o) const { return value == o.value && field->same(*o.field); }

private:
    void check(const FieldElement& o) const {
        if (!field || !o.field || !field->same(*o.field))
            throw FieldMismatchError("operands from different fields");
    }
};

}  // namespace lrckit::gf
