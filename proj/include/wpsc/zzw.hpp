#pragma once

#include <cstdint>
#include <istream>
#include <ostream>

#include "wpc.hpp"

namespace wpsc {

inline uint32_t ceil_log2(uint64_t x) {  // smallest b with 2^b >= x
    uint32_t b = 0;
    while ((1ull << b) < x) ++b;
    return b;
}

// Parameters of the layered big-container scheme.
//
// A container is n = 2^u - 1 columns of 2^p - 1 bits. Each column carries one
// symbol of GF(2^(p-r)) (the first p-r syndrome bits of a length-(2^p - 1)
// Hamming check), those symbols carry the payload through an RS wet channel
// in which "failed" columns are wet, and the vector of column parities
// carries (r, f) through a length-n Hamming check so the receiver needs no
// side information.
struct ZzwParams {
    uint32_t r_max = 0;  // largest per-column randomization considered
    uint32_t o = 0;      // bits storing the failure fraction
    uint32_t r_bits = 0; // bits storing r (as r_max - r)
    uint32_t u = 0;      // r_bits + o, parity-vector redundancy
    uint32_t p = 0;      // r_max + u, per-column redundancy
    size_t n = 0;        // columns, 2^u - 1
    size_t column_len = 0;  // bits per column, 2^p - 1
    uint32_t r_lo = 0;   // smallest r the r_bits field can represent

    static ZzwParams make(uint32_t r_max, uint32_t o) {
        if (r_max < 1) throw UsageError("zzw params: r_max must be at least 1");
        if (o < 1) throw UsageError("zzw params: o must be at least 1");
        ZzwParams pr;
        pr.r_max = r_max;
        pr.o = o;
        pr.r_bits = ceil_log2(r_max);
        pr.u = pr.r_bits + o;
        pr.p = r_max + pr.u;
        if (pr.u < 2)
            throw UsageError("zzw params: parity channel needs u >= 2 bits");
        if (pr.p > 20)
            throw UsageError("zzw params: column length 2^p - 1 exceeds 2^20");
        pr.n = (size_t{1} << pr.u) - 1;
        pr.column_len = (size_t{1} << pr.p) - 1;
        const uint32_t span = 1u << pr.r_bits;  // distinct r values storable
        pr.r_lo = r_max + 1 > span ? r_max + 1 - span : 0;
        if (pr.p - pr.r_lo > 16)
            throw UsageError("zzw params: symbol field exceeds 2^16");
        return pr;
    }
};

// One cover column: raw bits plus its wet positions (1-based, sorted).
struct ColumnBlock {
    std::vector<uint8_t> bits;
    std::vector<size_t> wet;
};

inline void validate_columns_shape(const std::vector<std::vector<uint8_t>>& cols,
                                   const ZzwParams& pr) {
    if (cols.size() != pr.n)
        throw UsageError("zzw: expected " + std::to_string(pr.n) + " columns");
    for (const auto& c : cols) {
        if (c.size() != pr.column_len)
            throw UsageError("zzw: column length mismatch");
        for (uint8_t b : c)
            if (b > 1) throw UsageError("zzw: column bits must be 0 or 1");
    }
}

inline void validate_blocks(const std::vector<ColumnBlock>& blocks,
                            const ZzwParams& pr) {
    if (blocks.size() != pr.n)
        throw UsageError("zzw: expected " + std::to_string(pr.n) + " columns");
    for (const auto& blk : blocks) {
        if (blk.bits.size() != pr.column_len)
            throw UsageError("zzw: column length mismatch");
        for (uint8_t b : blk.bits)
            if (b > 1) throw UsageError("zzw: column bits must be 0 or 1");
        size_t prev = 0;
        for (size_t w : blk.wet) {
            if (w < 1 || w > pr.column_len)
                throw UsageError("zzw: wet index out of range");
            if (w <= prev)
                throw UsageError("zzw: wet indices must be sorted and unique");
            prev = w;
        }
    }
}

// Length-(2^p - 1) Hamming syndrome of a bit column, as the integer whose
// bit p-1 is the first syndrome digit: the XOR of the 1-based indices of the
// set bits.
inline uint64_t column_syndrome_int(const std::vector<uint8_t>& bits) {
    uint64_t s = 0;
    for (size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) s ^= j + 1;
    return s;
}

// The GF(2^(p-r)) symbol a column carries: its first p-r syndrome digits.
// Flips at positions below 2^r (1-based) leave it untouched.
inline uint32_t column_symbol(const std::vector<uint8_t>& bits, uint32_t r) {
    return static_cast<uint32_t>(column_syndrome_int(bits) >> r);
}

inline uint32_t column_parity(const std::vector<uint8_t>& bits) {
    uint32_t v = 0;
    for (uint8_t b : bits) v ^= b;
    return v;
}

// Payload packing: symbols are consecutive groups of sym_bits bits, most
// significant bit first, in syndrome order.
inline Vec bits_to_symbols(const std::vector<uint8_t>& bits, uint32_t sym_bits) {
    if (sym_bits == 0 || bits.size() % sym_bits != 0)
        throw UsageError("bits_to_symbols: length not a multiple of symbol size");
    Vec syms(bits.size() / sym_bits, 0);
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) throw UsageError("bits_to_symbols: bits must be 0 or 1");
        syms[i / sym_bits] = (syms[i / sym_bits] << 1) | bits[i];
    }
    return syms;
}

inline std::vector<uint8_t> symbols_to_bits(const Vec& syms, uint32_t sym_bits) {
    std::vector<uint8_t> bits(syms.size() * sym_bits);
    for (size_t i = 0; i < syms.size(); ++i)
        for (uint32_t b = 0; b < sym_bits; ++b)
            bits[i * sym_bits + b] = (syms[i] >> (sym_bits - 1 - b)) & 1;
    return bits;
}

struct ZzwPlan {
    uint32_t r = 0;        // per-column randomization
    size_t f = 0;          // wet symbol count after padding to the stored grid
    uint32_t f_u = 0;      // o-bit numerator: f = f_u * 2^(u-o)
    size_t capacity_bits = 0;  // (n - f) * (p - r)
    std::vector<size_t> feasible;  // 0-based columns carrying payload symbols
    std::vector<size_t> failed;    // 0-based columns wet at the symbol layer
    std::vector<uint8_t> is_failed;  // n flags, 1 = in failed
};

namespace detail {

// Smallest r at which a column with ell wet bits is embeddable:
// 2^r tail variants must cover the ell+1 sphere... the column solver needs
// 2^r >= ell + 1 in the worst case, i.e. r >= ceil(log2(ell + 1)).
inline uint32_t column_need_r(size_t ell) { return ceil_log2(ell + 1); }

// Does the column have a dry bit among positions 1..2^r - 1 (the bits whose
// flips leave the column's symbol untouched)?
inline bool has_dry_tail_bit(const ColumnBlock& blk, uint32_t r) {
    const size_t tail = (size_t{1} << r) - 1;
    size_t wi = 0;
    for (size_t pos = 1; pos <= tail && pos <= blk.bits.size(); ++pos) {
        while (wi < blk.wet.size() && blk.wet[wi] < pos) ++wi;
        if (wi == blk.wet.size() || blk.wet[wi] != pos) return true;
    }
    return false;
}

// XOR basis over u-bit integers for greedy rank tracking.
struct XorBasis {
    std::vector<uint64_t> rows;
    size_t rank = 0;

    explicit XorBasis(uint32_t bits) : rows(bits, 0) {}

    uint64_t reduce(uint64_t v) const {
        for (size_t b = rows.size(); b-- > 0;)
            if ((v >> b) & 1 && rows[b]) v ^= rows[b];
        return v;
    }

    bool insert(uint64_t v) {
        v = reduce(v);
        if (!v) return false;
        size_t b = rows.size();
        while (b-- > 0)
            if ((v >> b) & 1) break;
        rows[b] = v;
        ++rank;
        return true;
    }
};

}  // namespace detail

// Choose (r, f): among representable r values, count the columns that cannot
// embed at r, pad that count up to the stored grid (at least 2^(u-1), a
// multiple of 2^(u-o), below the all-ones marker and below n), and maximize
// raw capacity (n - failures(r)) * (p - r), ties toward smaller r. The
// padding columns ("artificially wetted") are chosen dry-tail-capable first
// so the parity channel stays solvable, then most fragile (fewest dry bits),
// then lowest index.
inline ZzwPlan plan(const std::vector<ColumnBlock>& blocks, const ZzwParams& pr) {
    validate_blocks(blocks, pr);
    const size_t n = pr.n;

    std::vector<uint32_t> need(n);
    std::vector<size_t> ell(n);
    for (size_t i = 0; i < n; ++i) {
        ell[i] = blocks[i].wet.size();
        need[i] = detail::column_need_r(ell[i]);
    }

    const uint64_t grid = uint64_t{1} << (pr.u - pr.o);  // f granularity
    const uint64_t floor_f = uint64_t{1} << (pr.u - 1);
    const uint32_t t_max = (1u << pr.o) - 2;  // all-ones reserved

    bool found = false;
    uint32_t best_r = 0;
    uint64_t best_obj = 0;
    size_t best_f_raw = 0, best_f_hat = 0;
    for (uint32_t r = pr.r_lo; r <= pr.r_max; ++r) {
        size_t f_raw = 0;
        for (size_t i = 0; i < n; ++i) f_raw += need[i] > r;
        uint64_t f_hat = (f_raw + grid - 1) / grid * grid;
        if (f_hat < floor_f) f_hat = floor_f;
        const uint64_t t = f_hat / grid;
        if (t > t_max || f_hat >= n) continue;
        const uint64_t obj = (n - f_raw) * (pr.p - r);
        if (!found || obj > best_obj) {
            found = true;
            best_obj = obj;
            best_r = r;
            best_f_raw = f_raw;
            best_f_hat = static_cast<size_t>(f_hat);
        }
    }
    if (!found)
        throw NoFeasiblePlan("zzw plan: no (r, f) pair leaves positive capacity");

    ZzwPlan out;
    out.r = best_r;
    out.f = best_f_hat;
    out.f_u = static_cast<uint32_t>(best_f_hat / grid);
    out.capacity_bits = (n - best_f_hat) * (pr.p - best_r);
    out.is_failed.assign(n, 0);

    detail::XorBasis basis(pr.u);
    std::vector<size_t> candidates;
    for (size_t i = 0; i < n; ++i) {
        if (need[i] > best_r) {
            out.is_failed[i] = 1;
            if (detail::has_dry_tail_bit(blocks[i], best_r))
                basis.insert(i + 1);
        } else {
            candidates.push_back(i);
        }
    }

    std::sort(candidates.begin(), candidates.end(), [&](size_t a, size_t b) {
        const bool ua = detail::has_dry_tail_bit(blocks[a], best_r);
        const bool ub = detail::has_dry_tail_bit(blocks[b], best_r);
        if (ua != ub) return ua;
        const size_t da = pr.column_len - ell[a], db = pr.column_len - ell[b];
        if (da != db) return da < db;
        return a < b;
    });

    size_t to_add = best_f_hat - best_f_raw;
    std::vector<uint8_t> picked(n, 0);
    while (to_add > 0) {
        size_t choice = n;  // sentinel
        if (basis.rank < pr.u) {
            for (size_t i : candidates) {
                if (picked[i]) continue;
                if (detail::has_dry_tail_bit(blocks[i], best_r) &&
                    basis.reduce(i + 1) != 0) {
                    choice = i;
                    break;
                }
            }
        }
        if (choice == n) {
            for (size_t i : candidates) {
                if (!picked[i]) { choice = i; break; }
            }
        }
        picked[choice] = 1;
        out.is_failed[choice] = 1;
        if (detail::has_dry_tail_bit(blocks[choice], best_r))
            basis.insert(choice + 1);
        --to_add;
    }

    for (size_t i = 0; i < n; ++i)
        (out.is_failed[i] ? out.failed : out.feasible).push_back(i);
    return out;
}

namespace detail {

// Parameter word carried by the column parities: r stored as r_max - r in
// the high r_bits bits, the failure numerator in the low o bits.
inline Vec parameter_word(const ZzwParams& pr, uint32_t r, uint32_t f_u) {
    const uint32_t word = ((pr.r_max - r) << pr.o) | f_u;
    Vec bits(pr.u);
    for (uint32_t b = 0; b < pr.u; ++b)
        bits[b] = (word >> (pr.u - 1 - b)) & 1;
    return bits;
}

// Flip the lowest-index dry bit among positions 1..2^r - 1. The caller
// guarantees one exists.
inline void flip_dry_tail_bit(std::vector<uint8_t>& bits,
                              const std::vector<size_t>& wet, uint32_t r) {
    const size_t tail = (size_t{1} << r) - 1;
    size_t wi = 0;
    for (size_t pos = 1; pos <= tail && pos <= bits.size(); ++pos) {
        while (wi < wet.size() && wet[wi] < pos) ++wi;
        if (wi == wet.size() || wet[wi] != pos) {
            bits[pos - 1] ^= 1;
            return;
        }
    }
    throw std::logic_error("zzw: no dry tail bit to flip");
}

// Adjust column parities to carry the parameter word. Only columns in
// flippable (0-based) may change, each by one tail-bit flip that preserves
// its symbol. Throws RankDeficient when the parity system cannot be met.
inline void fix_parities(std::vector<std::vector<uint8_t>>& cols,
                         const std::vector<ColumnBlock>& blocks,
                         const std::vector<size_t>& flippable,
                         const ZzwParams& pr, uint32_t r, uint32_t f_u) {
    const Code h2 = make_hamming(Field::gf2(), pr.u);
    CoverObject cover;
    cover.x.resize(pr.n);
    for (size_t i = 0; i < pr.n; ++i) cover.x[i] = column_parity(cols[i]);
    std::vector<uint8_t> dry(pr.n, 0);
    for (size_t i : flippable) dry[i] = 1;
    for (size_t i = 0; i < pr.n; ++i)
        if (!dry[i]) cover.wet.push_back(i + 1);
    const Vec target = parameter_word(pr, r, f_u);
    const EmbedSolution sol = solve_wet_unbounded(h2.H, cover, target);
    for (size_t i = 0; i < pr.n; ++i)
        if (sol.y[i] != cover.x[i])
            flip_dry_tail_bit(cols[i], blocks[i].wet, r);
}

}  // namespace detail

// Embed payload_bits (at most capacity; zero-padded to exact capacity) into
// the container. Three stages: (a) solve the RS wet channel over the column
// symbols with failed columns wet, (b) embed each target symbol into its
// column with the randomized solver, (c) adjust column parities to publish
// (r, f) via symbol-preserving tail flips on failed columns. Wet bits are
// never altered. Throws RankDeficient when stage (c) is unsolvable.
inline std::vector<std::vector<uint8_t>> zzw_embed(
    const std::vector<ColumnBlock>& blocks,
    const std::vector<uint8_t>& payload_bits, const ZzwParams& pr,
    const ZzwPlan& plan) {
    validate_blocks(blocks, pr);
    const size_t n = pr.n;
    if (plan.r < pr.r_lo || plan.r > pr.r_max)
        throw UsageError("zzw embed: plan r not representable");
    if (plan.failed.size() != plan.f || plan.is_failed.size() != n ||
        plan.feasible.size() + plan.failed.size() != n)
        throw UsageError("zzw embed: inconsistent plan");
    if (size_t{plan.f_u} << (pr.u - pr.o) != plan.f)
        throw UsageError("zzw embed: plan f not on the stored grid");
    if (plan.capacity_bits != (n - plan.f) * (pr.p - plan.r))
        throw UsageError("zzw embed: plan capacity mismatch");
    if (payload_bits.size() > plan.capacity_bits)
        throw UsageError("zzw embed: payload exceeds capacity");
    for (uint8_t b : payload_bits)
        if (b > 1) throw UsageError("zzw embed: payload bits must be 0 or 1");
    for (size_t i = 0; i < n; ++i)
        if (!plan.is_failed[i] &&
            detail::column_need_r(blocks[i].wet.size()) > plan.r)
            throw UsageError("zzw embed: plan marks an unembeddable column dry");

    const uint32_t sym_bits = pr.p - plan.r;
    const Field& fq = Field::gf2m(sym_bits);

    // (a) target symbols through the RS wet channel
    Vec x_syms(n);
    for (size_t i = 0; i < n; ++i)
        x_syms[i] = column_symbol(blocks[i].bits, plan.r);
    std::vector<uint8_t> padded = payload_bits;
    padded.resize(plan.capacity_bits, 0);
    const Vec m_syms = bits_to_symbols(padded, sym_bits);
    std::vector<size_t> wet_cols;
    for (size_t i : plan.failed) wet_cols.push_back(i + 1);
    const Vec targets = rs_wet_embed(fq, n, x_syms, m_syms, wet_cols);

    // (b) per-column randomized embedding
    const Code h1 = make_hamming(Field::gf2(), pr.p);
    std::vector<std::vector<uint8_t>> stego(n);
    for (size_t i = 0; i < n; ++i) {
        if (plan.is_failed[i]) {
            stego[i] = blocks[i].bits;
            continue;
        }
        CoverObject cover;
        cover.x.assign(blocks[i].bits.begin(), blocks[i].bits.end());
        cover.wet = blocks[i].wet;
        const auto target_bits = symbols_to_bits(Vec{targets[i]}, sym_bits);
        const Vec msg(target_bits.begin(), target_bits.end());
        const EmbedSolution sol = solve_randomized(h1, cover, msg, plan.r);
        stego[i].assign(sol.y.begin(), sol.y.end());
    }

    // (c) publish (r, f) on the parity vector
    std::vector<size_t> flippable;
    for (size_t i : plan.failed)
        if (detail::has_dry_tail_bit(blocks[i], plan.r)) flippable.push_back(i);
    detail::fix_parities(stego, blocks, flippable, pr, plan.r, plan.f_u);
    return stego;
}

struct ZzwExtracted {
    std::vector<uint8_t> payload_bits;  // exactly capacity_bits
    uint32_t r = 0;
    size_t f = 0;
};

// Recover (r, f) from the column parities, then the payload from the column
// symbols. Needs no wet information. Throws DeclaredFailure when the sender
// stored the reserved marker, FormatError when the parameter word is not
// decodable.
inline ZzwExtracted zzw_extract(const std::vector<std::vector<uint8_t>>& cols,
                                const ZzwParams& pr) {
    validate_columns_shape(cols, pr);
    uint64_t word = 0;
    for (size_t i = 0; i < pr.n; ++i)
        if (column_parity(cols[i])) word ^= i + 1;
    const uint32_t t = static_cast<uint32_t>(word & ((1u << pr.o) - 1));
    const uint32_t e = static_cast<uint32_t>(word >> pr.o);
    if (t == (1u << pr.o) - 1)
        throw DeclaredFailure("zzw extract: sender declared embedding failure");
    if (t < (1u << (pr.o - 1)))
        throw FormatError("zzw extract: failure fraction below the floor");
    if (e > pr.r_max - pr.r_lo)
        throw FormatError("zzw extract: r field out of range");
    const uint32_t r = pr.r_max - e;
    const size_t f = size_t{t} << (pr.u - pr.o);

    const uint32_t sym_bits = pr.p - r;
    const Field& fq = Field::gf2m(sym_bits);
    Vec x_syms(pr.n);
    for (size_t i = 0; i < pr.n; ++i) x_syms[i] = column_symbol(cols[i], r);
    const Code hq = make_rs(fq, pr.n, f);
    const Vec payload_syms = syndrome_of(hq.H, x_syms);
    return ZzwExtracted{symbols_to_bits(payload_syms, sym_bits), r, f};
}

// Sender-side: overwrite the parameter word with the reserved all-ones
// marker so the receiver sees DeclaredFailure. Any dry bit may flip since no
// payload survives. Throws RankDeficient when even that is impossible.
inline std::vector<std::vector<uint8_t>> declare_failure(
    const std::vector<ColumnBlock>& blocks, const ZzwParams& pr) {
    validate_blocks(blocks, pr);
    const Code h2 = make_hamming(Field::gf2(), pr.u);
    CoverObject cover;
    cover.x.resize(pr.n);
    std::vector<std::vector<uint8_t>> cols(pr.n);
    for (size_t i = 0; i < pr.n; ++i) {
        cols[i] = blocks[i].bits;
        cover.x[i] = column_parity(cols[i]);
    }
    for (size_t i = 0; i < pr.n; ++i)
        if (blocks[i].wet.size() == pr.column_len) cover.wet.push_back(i + 1);
    const uint32_t word = (1u << pr.o) - 1;  // e = 0, t = all ones
    Vec target(pr.u);
    for (uint32_t b = 0; b < pr.u; ++b)
        target[b] = (word >> (pr.u - 1 - b)) & 1;
    const EmbedSolution sol = solve_wet_unbounded(h2.H, cover, target);
    for (size_t i = 0; i < pr.n; ++i) {
        if (sol.y[i] == cover.x[i]) continue;
        // lowest-index dry bit anywhere in the column
        size_t wi = 0;
        for (size_t pos = 1; pos <= pr.column_len; ++pos) {
            while (wi < blocks[i].wet.size() && blocks[i].wet[wi] < pos) ++wi;
            if (wi == blocks[i].wet.size() || blocks[i].wet[wi] != pos) {
                cols[i][pos - 1] ^= 1;
                break;
            }
        }
    }
    return cols;
}

// ---- container serialization ----

inline constexpr char kContainerMagic[4] = {'W', 'P', 'C', '1'};
inline constexpr char kWetMagic[4] = {'W', 'P', 'W', '1'};

namespace detail {

inline void put_u32le(std::ostream& os, uint32_t v) {
    char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                 static_cast<char>((v >> 16) & 0xff),
                 static_cast<char>((v >> 24) & 0xff)};
    os.write(b, 4);
}

inline uint32_t get_u32le(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw FormatError("container: truncated header");
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) |
           (static_cast<uint32_t>(b[3]) << 24);
}

inline void write_header(std::ostream& os, const char magic[4],
                         const ZzwParams& pr) {
    os.write(magic, 4);
    os.put(static_cast<char>(pr.p));
    os.put(static_cast<char>(pr.r_max));
    os.put(static_cast<char>(pr.o));
    put_u32le(os, static_cast<uint32_t>(pr.n));
}

inline ZzwParams read_header(std::istream& is, const char magic[4]) {
    char m[4];
    is.read(m, 4);
    if (!is || m[0] != magic[0] || m[1] != magic[1] || m[2] != magic[2] ||
        m[3] != magic[3])
        throw FormatError("container: bad magic");
    const int p = is.get(), r_max = is.get(), o = is.get();
    if (p < 0 || r_max < 0 || o < 0)
        throw FormatError("container: truncated header");
    ZzwParams pr;
    try {
        pr = ZzwParams::make(static_cast<uint32_t>(r_max),
                             static_cast<uint32_t>(o));
    } catch (const UsageError& e) {
        throw FormatError(std::string("container: ") + e.what());
    }
    if (pr.p != static_cast<uint32_t>(p))
        throw FormatError("container: p does not match r_max and o");
    if (get_u32le(is) != pr.n)
        throw FormatError("container: column count does not match parameters");
    return pr;
}

// Columns are packed LSB-first: bit j of a column lands in byte j/8, bit j%8.
inline void write_bits(std::ostream& os, const std::vector<uint8_t>& bits) {
    const size_t nbytes = (bits.size() + 7) / 8;
    std::vector<char> buf(nbytes, 0);
    for (size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) buf[j / 8] |= static_cast<char>(1u << (j % 8));
    os.write(buf.data(), static_cast<std::streamsize>(nbytes));
}

inline std::vector<uint8_t> read_bits(std::istream& is, size_t count) {
    const size_t nbytes = (count + 7) / 8;
    std::vector<unsigned char> buf(nbytes);
    is.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(nbytes));
    if (!is) throw FormatError("container: truncated column data");
    std::vector<uint8_t> bits(count);
    for (size_t j = 0; j < count; ++j) bits[j] = (buf[j / 8] >> (j % 8)) & 1;
    for (size_t j = count; j < nbytes * 8; ++j)
        if ((buf[j / 8] >> (j % 8)) & 1)
            throw FormatError("container: nonzero padding bits");
    return bits;
}

}  // namespace detail

struct Container {
    ZzwParams params;
    std::vector<std::vector<uint8_t>> columns;
};

inline void write_container(std::ostream& os, const ZzwParams& pr,
                            const std::vector<std::vector<uint8_t>>& cols) {
    validate_columns_shape(cols, pr);
    detail::write_header(os, kContainerMagic, pr);
    for (const auto& c : cols) detail::write_bits(os, c);
}

inline Container read_container(std::istream& is) {
    Container ct{detail::read_header(is, kContainerMagic), {}};
    ct.columns.reserve(ct.params.n);
    for (size_t i = 0; i < ct.params.n; ++i)
        ct.columns.push_back(detail::read_bits(is, ct.params.column_len));
    return ct;
}

// Sender-side sidecar with the wet masks, same column shape (bit = wet).
inline void write_wet_sidecar(std::ostream& os, const ZzwParams& pr,
                              const std::vector<ColumnBlock>& blocks) {
    validate_blocks(blocks, pr);
    detail::write_header(os, kWetMagic, pr);
    for (const auto& blk : blocks) {
        std::vector<uint8_t> mask(pr.column_len, 0);
        for (size_t w : blk.wet) mask[w - 1] = 1;
        detail::write_bits(os, mask);
    }
}

inline std::vector<std::vector<size_t>> read_wet_sidecar(std::istream& is,
                                                         const ZzwParams& pr) {
    const ZzwParams got = detail::read_header(is, kWetMagic);
    if (got.r_max != pr.r_max || got.o != pr.o)
        throw FormatError("wet sidecar: parameters do not match container");
    std::vector<std::vector<size_t>> wets(pr.n);
    for (size_t i = 0; i < pr.n; ++i) {
        const auto mask = detail::read_bits(is, pr.column_len);
        for (size_t j = 0; j < mask.size(); ++j)
            if (mask[j]) wets[i].push_back(j + 1);
    }
    return wets;
}

inline std::vector<ColumnBlock> attach_wet(
    const std::vector<std::vector<uint8_t>>& cols,
    const std::vector<std::vector<size_t>>& wets) {
    if (cols.size() != wets.size())
        throw UsageError("attach_wet: column count mismatch");
    std::vector<ColumnBlock> blocks(cols.size());
    for (size_t i = 0; i < cols.size(); ++i)
        blocks[i] = ColumnBlock{cols[i], wets[i]};
    return blocks;
}

}  // namespace wpsc
