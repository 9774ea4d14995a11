#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "errors.hpp"

namespace wpsc {

// Supported fields: F_2, F_3, and F_{2^m} for 2 <= m <= 16.
//
// Extension fields use the lexicographically smallest primitive polynomial of
// each degree, so element encodings, discrete-log tables, and every value
// derived from them are reproducible across builds and platforms. Bit i of
// each mask below is the coefficient of x^i.
inline constexpr uint32_t kPrimitiveModulus[17] = {
    0,       0x3,     0x7,    0xb,    0x13,   0x25,   0x43,    0x83,   0x11d,
    0x211,   0x409,   0x805,  0x1053, 0x201b, 0x402b, 0x8003,  0x1002d,
};

struct FieldSpec {
    uint32_t q = 0;               // field size
    uint32_t characteristic = 0;  // 2 or 3
    uint32_t degree = 0;          // extension degree over the prime field
    // Modulus coefficients c_0..c_m over the prime field; empty when degree == 1.
    std::vector<uint8_t> modulus;
};

// Field elements are uint32_t values in [0, q). For F_{2^m} the value's bits
// are polynomial coefficients (bit i = coefficient of x^i).
class Field {
public:
    static const Field& gf2() { return prime_field(2); }
    static const Field& gf3() { return prime_field(3); }

    static const Field& gf2m(uint32_t m) {
        if (m < 1 || m > 16) throw UsageError("gf2m: degree must be in [1, 16]");
        if (m == 1) return gf2();
        static std::array<std::unique_ptr<Field>, 17> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        if (!cache[m])
            cache[m] = std::unique_ptr<Field>(new Field(ExtensionTag{}, m));
        return *cache[m];
    }

    // q must be 2, 3, or a power of two up to 2^16.
    static const Field& gf(uint32_t q) {
        if (q == 2) return gf2();
        if (q == 3) return gf3();
        if (q >= 4 && q <= 65536 && (q & (q - 1)) == 0) {
            uint32_t m = 0;
            while ((1u << m) < q) ++m;
            return gf2m(m);
        }
        throw UsageError("gf: field size must be 2, 3, or 2^m with m <= 16");
    }

    uint32_t q() const { return spec_.q; }
    uint32_t characteristic() const { return spec_.characteristic; }
    uint32_t degree() const { return spec_.degree; }
    const FieldSpec& spec() const { return spec_; }

    bool contains(uint32_t v) const { return v < spec_.q; }

    uint32_t add(uint32_t a, uint32_t b) const {
        return spec_.characteristic == 2 ? (a ^ b) : (a + b) % 3;
    }

    uint32_t neg(uint32_t a) const {
        return spec_.characteristic == 2 ? a : (3 - a) % 3;
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (spec_.q == 2) return a & b;
        if (spec_.q == 3) return (a * b) % 3;
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("inv: zero has no inverse");
        if (spec_.q == 2) return 1;
        if (spec_.q == 3) return a;  // 1 and 2 are self-inverse mod 3
        return exp_[spec_.q - 1 - log_[a]];
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        uint32_t acc = 1, base = a;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    // A fixed generator of the multiplicative group: the class of x for
    // extensions (value 2), 2 for F_3, and 1 for F_2.
    uint32_t alpha() const { return spec_.q == 2 ? 1 : 2; }

    uint32_t alpha_pow(uint64_t i) const {
        if (spec_.q == 2) return 1;
        if (spec_.q == 3) return (i % 2 == 0) ? 1 : 2;
        return exp_[i % (spec_.q - 1)];
    }

private:
    struct PrimeTag {};
    struct ExtensionTag {};

    Field(PrimeTag, uint32_t prime) {  // q in {2, 3}
        spec_.q = prime;
        spec_.characteristic = prime;
        spec_.degree = 1;
    }

    Field(ExtensionTag, uint32_t m) {  // F_{2^m}, m >= 2
        const uint32_t q = 1u << m;
        spec_.q = q;
        spec_.characteristic = 2;
        spec_.degree = m;
        const uint32_t mod = kPrimitiveModulus[m];
        spec_.modulus.resize(m + 1);
        for (uint32_t i = 0; i <= m; ++i) spec_.modulus[i] = (mod >> i) & 1;

        // Discrete-log tables; exp_ doubled so mul can skip a reduction.
        exp_.assign(2 * (q - 1), 0);
        log_.assign(q, 0);
        uint32_t v = 1;
        for (uint32_t i = 0; i < q - 1; ++i) {
            exp_[i] = v;
            exp_[i + (q - 1)] = v;
            log_[v] = i;
            v <<= 1;
            if (v & q) v ^= mod;
        }
        if (v != 1) throw std::logic_error("field table: modulus is not primitive");
    }

    static const Field& prime_field(uint32_t p) {
        static const Field f2(PrimeTag{}, 2u);
        static const Field f3(PrimeTag{}, 3u);
        return p == 2 ? f2 : f3;
    }

    FieldSpec spec_;
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
};

inline bool same_field(const Field& a, const Field& b) { return &a == &b; }

// Checked element wrapper; operators refuse mixed-field operands.
class Element {
public:
    Element(const Field& f, uint32_t v) : f_(&f), v_(v) {
        if (!f.contains(v)) throw UsageError("Element: value outside field");
    }

    uint32_t value() const { return v_; }
    const Field& field() const { return *f_; }

    friend Element operator+(Element a, Element b) {
        a.check(b);
        return Element(*a.f_, a.f_->add(a.v_, b.v_));
    }
    friend Element operator-(Element a, Element b) {
        a.check(b);
        return Element(*a.f_, a.f_->sub(a.v_, b.v_));
    }
    friend Element operator*(Element a, Element b) {
        a.check(b);
        return Element(*a.f_, a.f_->mul(a.v_, b.v_));
    }
    friend Element operator/(Element a, Element b) {
        a.check(b);
        return Element(*a.f_, a.f_->div(a.v_, b.v_));
    }
    Element operator-() const { return Element(*f_, f_->neg(v_)); }
    Element inverse() const { return Element(*f_, f_->inv(v_)); }

    friend bool operator==(Element a, Element b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(Element a, Element b) { return !(a == b); }

private:
    void check(const Element& other) const {
        if (!same_field(*f_, *other.f_))
            throw UsageError("Element: mixed-field operands");
    }

    const Field* f_;
    uint32_t v_;
};

}  // namespace wpsc
