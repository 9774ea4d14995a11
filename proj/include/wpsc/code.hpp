#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "rng.hpp"
#include "vecmat.hpp"

namespace wpsc {

enum class Family { Hamming, Golay23, Golay11, ReedSolomon, Random };

struct CodeSpec {
    const Field* field = nullptr;
    size_t n = 0;    // block length
    size_t k = 0;    // dimension
    size_t d = 0;    // minimum distance (0 = unknown)
    size_t rho = 0;  // covering radius used for bounded decoding
    Family family = Family::Random;

    uint32_t q() const { return field->q(); }
    size_t redundancy() const { return n - k; }
};

// Sparse error pattern: (0-based position, value) pairs.
using SparseVec = std::vector<std::pair<size_t, uint32_t>>;

struct Code {
    CodeSpec spec;
    Mat H;  // (n-k) x n parity-check matrix

    // Hamming decoding: normalized column value (base-q integer, row 0 most
    // significant) -> 0-based column position.
    std::unordered_map<uint64_t, size_t> column_of;
    // Table decoding (Golay, Random): syndrome index -> coset leader.
    std::vector<SparseVec> coset_table;
    std::vector<uint8_t> coset_known;
    size_t table_radius = 0;
};

// Syndrome digits as a base-q integer, first digit most significant.
inline uint64_t syndrome_index(const Field& f, const Vec& s) {
    uint64_t idx = 0;
    for (uint32_t v : s) idx = idx * f.q() + v;
    return idx;
}

inline Vec syndrome_from_index(const Field& f, uint64_t idx, size_t len) {
    Vec s(len, 0);
    for (size_t i = len; i-- > 0;) {
        s[i] = static_cast<uint32_t>(idx % f.q());
        idx /= f.q();
    }
    return s;
}

inline uint64_t int_pow(uint64_t base, uint64_t e) {
    uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

inline uint64_t binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    uint64_t c = 1;
    for (uint64_t j = 1; j <= k; ++j) c = c * (n - j + 1) / j;
    return c;
}

// Number of words within Hamming distance rho of a fixed word of length n.
inline uint64_t sphere_size(uint32_t q, uint64_t n, uint64_t rho) {
    uint64_t total = 0;
    for (uint64_t i = 0; i <= rho; ++i)
        total += int_pow(q - 1, i) * binom(n, i);
    return total;
}

namespace detail {

// Enumerate error patterns of weight 0..radius in the canonical order
// (weight, then support lexicographically, then values lexicographically)
// and record the first pattern reaching each syndrome.
inline void build_coset_table(Code& code, size_t radius) {
    const Field& f = *code.spec.field;
    const size_t n = code.spec.n;
    const size_t R = code.spec.redundancy();
    const uint64_t syndromes = int_pow(f.q(), R);
    if (syndromes > (1ull << 22))
        throw UsageError("coset table: q^(n-k) too large to tabulate");

    code.coset_table.assign(syndromes, {});
    code.coset_known.assign(syndromes, 0);
    code.table_radius = radius;

    // Column syndromes as integers would not compose for q > 2; work with
    // digit vectors.
    Vec s(R, 0);
    code.coset_known[0] = 1;  // weight 0

    std::vector<size_t> support(radius);
    std::vector<uint32_t> vals(radius);
    for (size_t w = 1; w <= radius; ++w) {
        // first support: 0, 1, ..., w-1
        for (size_t i = 0; i < w; ++i) support[i] = i;
        for (;;) {
            for (size_t i = 0; i < w; ++i) vals[i] = 1;
            for (;;) {
                for (size_t r = 0; r < R; ++r) {
                    uint32_t acc = 0;
                    for (size_t i = 0; i < w; ++i)
                        acc = f.add(acc, f.mul(code.H(r, support[i]), vals[i]));
                    s[r] = acc;
                }
                const uint64_t idx = syndrome_index(f, s);
                if (!code.coset_known[idx]) {
                    code.coset_known[idx] = 1;
                    SparseVec e(w);
                    for (size_t i = 0; i < w; ++i) e[i] = {support[i], vals[i]};
                    code.coset_table[idx] = std::move(e);
                }
                // next value tuple (last position fastest)
                size_t i = w;
                while (i-- > 0) {
                    if (vals[i] < f.q() - 1) {
                        ++vals[i];
                        for (size_t j = i + 1; j < w; ++j) vals[j] = 1;
                        break;
                    }
                    if (i == 0) goto next_support;
                }
            }
        next_support:
            // next support combination in lexicographic order
            size_t i = w;
            bool advanced = false;
            while (i-- > 0) {
                if (support[i] < n - (w - i)) {
                    ++support[i];
                    for (size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
}

}  // namespace detail

// Hamming code over F_q with p parity symbols: n = (q^p - 1)/(q - 1), one
// column per line through the origin, represented by the unique vector whose
// first nonzero coordinate is 1, columns sorted ascending as base-q integers.
inline Code make_hamming(const Field& f, uint32_t p) {
    if (p < 2) throw UsageError("make_hamming: p must be at least 2");
    const uint64_t qp = int_pow(f.q(), p);
    const uint64_t n64 = (qp - 1) / (f.q() - 1);
    if (n64 > (1ull << 20)) throw UsageError("make_hamming: length exceeds 2^20");
    const size_t n = static_cast<size_t>(n64);

    Code code{CodeSpec{&f, n, n - p, 3, 1, Family::Hamming}, Mat(f, p, n)};
    size_t pos = 0;
    for (uint64_t t = 1; t < qp; ++t) {
        const Vec col = syndrome_from_index(f, t, p);
        uint32_t first = 0;
        for (uint32_t v : col)
            if (v) { first = v; break; }
        if (first != 1) continue;
        for (size_t r = 0; r < p; ++r) code.H(r, pos) = col[r];
        code.column_of.emplace(t, pos);
        ++pos;
    }
    return code;
}

enum class GolayVariant { Binary, Ternary };

// Generator right blocks G = [I_k | B], frozen from the bordered-circulant
// construction (quadratic-residue circulant plus all-ones border, last
// column dropped); B^T negated gives the parity rows below.
inline constexpr uint8_t kGolay23B[12][11] = {
    {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1},
    {1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0},
    {1, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0},
    {1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0},
    {1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
    {1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1},
    {1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1},
    {1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0},
    {1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1},
    {1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1},
    {1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0},
};

inline constexpr uint8_t kGolay11B[6][5] = {
    {0, 1, 1, 1, 1},
    {1, 0, 1, 2, 2},
    {1, 1, 0, 1, 2},
    {1, 2, 1, 0, 1},
    {1, 2, 2, 1, 0},
    {1, 1, 2, 2, 1},
};

inline Code make_golay(GolayVariant variant) {
    const bool binary = variant == GolayVariant::Binary;
    const Field& f = binary ? Field::gf2() : Field::gf3();
    const size_t n = binary ? 23 : 11;
    const size_t k = binary ? 12 : 6;
    const size_t d = binary ? 7 : 5;
    const size_t rho = binary ? 3 : 2;

    Code code{CodeSpec{&f, n, k, d, rho,
                       binary ? Family::Golay23 : Family::Golay11},
              Mat(f, n - k, n)};
    // H = [-B^T | I]
    for (size_t r = 0; r < n - k; ++r) {
        for (size_t c = 0; c < k; ++c)
            code.H(r, c) =
                f.neg(binary ? kGolay23B[c][r] : kGolay11B[c][r]);
        code.H(r, k + r) = 1;
    }
    detail::build_coset_table(code, rho);
    // Perfect code: every syndrome must have a leader within rho.
    for (uint8_t known : code.coset_known)
        if (!known) throw std::logic_error("golay: coset table incomplete");
    return code;
}

inline Code make_golay23() { return make_golay(GolayVariant::Binary); }
inline Code make_golay11() { return make_golay(GolayVariant::Ternary); }

// Reed-Solomon parity-check matrix on the canonical evaluation points
// (0, 1, alpha, alpha^2, ...): H[j][i] = point_i^j for j < n - dim, with
// 0^0 = 1. Any n-dim columns form an invertible (generalized Vandermonde)
// block, which is what the wet solver relies on.
inline Code make_rs(const Field& f, size_t n, size_t dim) {
    if (n > f.q())
        throw UsageError("make_rs: infeasible length, n exceeds field size");
    if (dim > n) throw UsageError("make_rs: dimension exceeds length");
    Code code{CodeSpec{&f, n, dim, n - dim + 1, n - dim, Family::ReedSolomon},
              Mat(f, n - dim, n)};
    Vec pts(n);
    for (size_t i = 0; i < n; ++i)
        pts[i] = i == 0 ? 0 : f.alpha_pow(i - 1);
    for (size_t j = 0; j < n - dim; ++j)
        for (size_t i = 0; i < n; ++i) code.H(j, i) = f.pow(pts[i], j);
    return code;
}

// Uniform random parity-check matrix from a seeded generator. Optional
// bounded-weight decode table up to table_radius (0 = no table).
inline Code make_random(const Field& f, size_t n, size_t k, uint64_t seed,
                        size_t table_radius = 0) {
    if (k > n) throw UsageError("make_random: dimension exceeds length");
    Code code{CodeSpec{&f, n, k, 0, n - k, Family::Random}, Mat(f, n - k, n)};
    std::mt19937_64 gen(seed);
    for (size_t r = 0; r < n - k; ++r)
        for (size_t c = 0; c < n; ++c)
            code.H(r, c) = static_cast<uint32_t>(uniform_below(gen, f.q()));
    if (table_radius > 0) detail::build_coset_table(code, table_radius);
    return code;
}

inline Vec syndrome(const Code& code, const Vec& x) {
    return syndrome_of(code.H, x);
}

// Minimum-weight error pattern with the given syndrome. Closed-form for
// Hamming, table lookup otherwise; a table miss on a Random code reports
// DecodeFailure.
inline Vec coset_decode(const Code& code, const Vec& s) {
    const Field& f = *code.spec.field;
    if (s.size() != code.spec.redundancy())
        throw UsageError("coset_decode: syndrome length mismatch");
    Vec e(code.spec.n, 0);
    switch (code.spec.family) {
        case Family::Hamming: {
            uint32_t first = 0;
            for (uint32_t v : s)
                if (v) { first = v; break; }
            if (first == 0) return e;  // zero syndrome
            Vec norm(s.size());
            const uint32_t c = f.inv(first);
            for (size_t i = 0; i < s.size(); ++i) norm[i] = f.mul(s[i], c);
            const auto it = code.column_of.find(syndrome_index(f, norm));
            if (it == code.column_of.end())
                throw std::logic_error("hamming decode: column lookup failed");
            e[it->second] = first;
            return e;
        }
        case Family::Golay23:
        case Family::Golay11:
        case Family::Random: {
            if (code.coset_known.empty())
                throw UsageError("coset_decode: code has no decode table");
            const uint64_t idx = syndrome_index(f, s);
            if (!code.coset_known[idx])
                throw DecodeFailure("coset_decode: syndrome outside table radius");
            for (const auto& [pos, val] : code.coset_table[idx]) e[pos] = val;
            return e;
        }
        case Family::ReedSolomon:
            throw UsageError("coset_decode: no bounded decoder for this family");
    }
    throw std::logic_error("coset_decode: unknown family");
}

// Text form: header "q n k", then n-k rows of n entries.
inline void write_matrix(std::ostream& os, const CodeSpec& spec, const Mat& H) {
    os << spec.q() << ' ' << spec.n << ' ' << spec.k << '\n';
    for (size_t r = 0; r < H.rows(); ++r) {
        for (size_t c = 0; c < H.cols(); ++c) {
            if (c) os << ' ';
            os << H(r, c);
        }
        os << '\n';
    }
}

struct ParsedMatrix {
    const Field* field;
    size_t n, k;
    Mat H;
};

inline ParsedMatrix read_matrix(std::istream& is) {
    uint64_t q, n, k;
    if (!(is >> q >> n >> k)) throw FormatError("matrix: bad header, expected 'q n k'");
    const Field* f;
    try {
        f = &Field::gf(static_cast<uint32_t>(q));
    } catch (const UsageError& e) {
        throw FormatError(std::string("matrix: ") + e.what());
    }
    if (k > n) throw FormatError("matrix: k exceeds n");
    Mat H(*f, static_cast<size_t>(n - k), static_cast<size_t>(n));
    for (size_t r = 0; r < H.rows(); ++r)
        for (size_t c = 0; c < H.cols(); ++c) {
            uint64_t v;
            if (!(is >> v)) throw FormatError("matrix: truncated entries");
            if (v >= f->q()) throw FormatError("matrix: entry outside field");
            H(r, c) = static_cast<uint32_t>(v);
        }
    return ParsedMatrix{f, static_cast<size_t>(n), static_cast<size_t>(k), H};
}

}  // namespace wpsc
