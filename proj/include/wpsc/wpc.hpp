#pragma once

#include <cmath>
#include <optional>

#include "code.hpp"

namespace wpsc {

// A cover sequence plus the set of positions the sender must not change.
// Wet indices are 1-based, sorted, and unique.
struct CoverObject {
    Vec x;
    std::vector<size_t> wet;
};

inline void validate_cover(const CoverObject& cover, size_t n, const Field& f) {
    if (cover.x.size() != n) throw UsageError("cover: length mismatch");
    for (uint32_t v : cover.x)
        if (!f.contains(v)) throw UsageError("cover: value outside field");
    size_t prev = 0;
    for (size_t i : cover.wet) {
        if (i < 1 || i > n) throw UsageError("cover: wet index out of range");
        if (i <= prev) throw UsageError("cover: wet indices must be sorted and unique");
        prev = i;
    }
}

inline std::vector<uint8_t> wet_mask_of(const CoverObject& cover, size_t n) {
    std::vector<uint8_t> mask(n, 0);
    for (size_t i : cover.wet) mask[i - 1] = 1;
    return mask;
}

struct EmbedSolution {
    Vec y;            // stego sequence, extract with y * H^T
    size_t changes;   // Hamming distance to the cover
    Vec random_tail;  // trailing syndrome symbols not carrying the message
};

// Classic syndrome embedding, no wet positions: decode m - x*H^T to the
// nearest coset leader and add it.
inline EmbedSolution solve_plain(const Code& code, const CoverObject& cover,
                                 const Vec& m) {
    const Field& f = *code.spec.field;
    validate_cover(cover, code.spec.n, f);
    if (!cover.wet.empty())
        throw UsageError("solve_plain: wet positions not supported here");
    if (m.size() != code.spec.redundancy())
        throw UsageError("solve_plain: message length must be n-k");
    Vec s = syndrome(code, cover.x);
    for (size_t i = 0; i < s.size(); ++i) s[i] = f.sub(m[i], s[i]);
    const Vec e = coset_decode(code, s);
    Vec y = cover.x;
    size_t changes = 0;
    for (size_t i = 0; i < y.size(); ++i)
        if (e[i]) { y[i] = f.add(y[i], e[i]); ++changes; }
    return EmbedSolution{std::move(y), changes, {}};
}

// As solve_plain, but refuse solutions needing more than T changes.
inline EmbedSolution solve_bounded(const Code& code, const CoverObject& cover,
                                   const Vec& m, size_t T) {
    EmbedSolution sol = solve_plain(code, cover, m);
    if (sol.changes > T)
        throw BoundExceeded("solve_bounded: nearest pattern needs " +
                            std::to_string(sol.changes) + " changes, limit " +
                            std::to_string(T));
    return sol;
}

// Wet-constrained embedding of a full (n-k)-symbol message by linear solving
// over the dry positions. Works for any parity-check matrix; no decoder
// needed. Change count is not bounded by the covering radius.
inline EmbedSolution solve_wet_unbounded(const Mat& H, const CoverObject& cover,
                                         const Vec& m) {
    const Field& f = H.field();
    validate_cover(cover, H.cols(), f);
    if (m.size() != H.rows())
        throw UsageError("solve_wet_unbounded: message length must be n-k");
    Vec y = solve_wet_linear(H, m, cover.x, wet_mask_of(cover, H.cols()));
    const size_t changes = hamming_distance(y, cover.x);
    return EmbedSolution{std::move(y), changes, {}};
}

// Wet-constrained embedding of a shortened message of n-k-r symbols: find a
// pattern of at most rho changes on dry positions whose syndrome starts with
// m; the last r syndrome symbols come out of the search and are returned as
// random_tail. Patterns are scanned by weight, then support, then values, so
// the result is deterministic and change-minimal.
inline EmbedSolution solve_randomized(const Code& code, const CoverObject& cover,
                                      const Vec& m, size_t r) {
    const Field& f = *code.spec.field;
    const size_t n = code.spec.n;
    const size_t R = code.spec.redundancy();
    validate_cover(cover, n, f);
    if (r >= R) throw UsageError("solve_randomized: r must be below n-k");
    if (m.size() != R - r)
        throw UsageError("solve_randomized: message length must be n-k-r");

    std::vector<size_t> dry;
    {
        const auto mask = wet_mask_of(cover, n);
        for (size_t i = 0; i < n; ++i)
            if (!mask[i]) dry.push_back(i);
    }

    const Vec s0 = syndrome(code, cover.x);
    const size_t keep = R - r;
    auto matches = [&](const Vec& s) {
        for (size_t i = 0; i < keep; ++i)
            if (s[i] != m[i]) return false;
        return true;
    };
    auto finish = [&](Vec y, size_t changes, const Vec& s) {
        Vec tail(s.begin() + keep, s.end());
        return EmbedSolution{std::move(y), changes, std::move(tail)};
    };

    if (matches(s0)) return finish(cover.x, 0, s0);

    const size_t rho = code.spec.rho;
    std::vector<size_t> pick;
    std::vector<uint32_t> vals;
    Vec s(R);
    for (size_t w = 1; w <= rho && w <= dry.size(); ++w) {
        pick.resize(w);
        vals.resize(w);
        for (size_t i = 0; i < w; ++i) pick[i] = i;
        for (;;) {
            for (size_t i = 0; i < w; ++i) vals[i] = 1;
            for (;;) {
                for (size_t row = 0; row < R; ++row) {
                    uint32_t acc = s0[row];
                    for (size_t i = 0; i < w; ++i)
                        acc = f.add(acc, f.mul(code.H(row, dry[pick[i]]), vals[i]));
                    s[row] = acc;
                }
                if (matches(s)) {
                    Vec y = cover.x;
                    for (size_t i = 0; i < w; ++i)
                        y[dry[pick[i]]] = f.add(y[dry[pick[i]]], vals[i]);
                    return finish(std::move(y), w, s);
                }
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
            size_t i = w;
            bool advanced = false;
            while (i-- > 0) {
                if (pick[i] < dry.size() - (w - i)) {
                    ++pick[i];
                    for (size_t j = i + 1; j < w; ++j) pick[j] = pick[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    throw Infeasible("solve_randomized: no pattern within the covering radius "
                     "matches the message prefix");
}

// Smallest r such that every wet set of size ell is embeddable: syndromes
// reachable with changes confined to any n-ell dry positions, plus the q^r
// tail variants, must cover all q^(n-k) syndromes.
inline std::optional<size_t> min_r(const CodeSpec& spec, size_t ell) {
    switch (spec.family) {
        case Family::Hamming:
        case Family::Golay23:
        case Family::Golay11:
            break;
        default:
            throw UsageError("min_r: supported for perfect code families only");
    }
    if (ell > spec.n) throw UsageError("min_r: wet count exceeds length");
    const uint64_t total = int_pow(spec.q(), spec.redundancy());
    const uint64_t reachable = sphere_size(spec.q(), spec.n - ell, spec.rho);
    for (size_t r = 0; r <= spec.redundancy(); ++r) {
        if (int_pow(spec.q(), r) + reachable >= total + 1) return r;
    }
    return std::nullopt;
}

// Largest wet count for which the randomized solver over the Hamming family
// still carries at least one message symbol, i.e. min_r(ell) <= p - 1.
// min_r is monotone nondecreasing in ell, so binary search applies.
inline size_t max_wet_for_one_symbol(const Field& f, uint32_t p) {
    const Code code = make_hamming(f, p);
    size_t lo = 0, hi = code.spec.n;  // invariant: lo feasible, hi+1 not checked
    // min_r(0) = 0 < p, so lo = 0 is feasible for p >= 1.
    while (lo < hi) {
        const size_t mid = lo + (hi - lo + 1) / 2;
        if (*min_r(code.spec, mid) + 1 <= p)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// With ell wet positions and g sacrificed symbols, at least n - ell - g
// message symbols survive (never negative).
inline size_t guaranteed_symbols(size_t n, size_t ell, size_t g) {
    if (ell > n) throw UsageError("guaranteed_symbols: wet count exceeds length");
    const size_t used = ell + g;
    return used >= n ? 0 : n - used;
}

// Maximum-distance embedding: n - ell message symbols through an [n, ell]
// code on the canonical evaluation points. Always solvable because every
// square submatrix of the parity block is invertible.
inline Vec rs_wet_embed(const Field& f, size_t n, const Vec& x, const Vec& m,
                        const std::vector<size_t>& wet) {
    const Code code = make_rs(f, n, wet.size());
    CoverObject cover{x, wet};
    return solve_wet_unbounded(code.H, cover, m).y;
}

// Probability that a uniform nrow x ncol matrix over F_q has full row rank,
// lower-bounded in closed form; the square binary case uses the limit
// constant of the product (1 - 2^-i).
inline double rank_lower_bound(uint32_t q, size_t ncol, size_t nrow) {
    if (ncol < nrow)
        throw std::domain_error("rank_lower_bound: fewer columns than rows");
    if (q == 2 && ncol == nrow) return 0.288;
    const double diff = static_cast<double>(ncol - nrow);
    return 1.0 - 1.0 / (std::pow(static_cast<double>(q), diff) * (q - 1));
}

}  // namespace wpsc
