// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>
#include <wpsc/wpsc.hpp>

using namespace wpsc;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    const char* name;
    double limit_ms;  // 0 = no runtime cap
    std::function<std::optional<std::string>()> fn;
};

size_t weight_of(const Vec& v) {
    size_t w = 0;
    for (uint32_t x : v) w += x != 0;
    return w;
}

// Direct counting condition: q^(n-k) + 1 <= q^r + sum_{i<=rho} (q-1)^i C(n-ell, i).
bool counting_ok(const CodeSpec& spec, size_t ell, size_t r) {
    const uint64_t q = spec.q();
    uint64_t rhs = int_pow(q, r);
    for (uint64_t i = 0; i <= spec.rho; ++i)
        rhs += int_pow(q - 1, i) * binom(spec.n - ell, i);
    return int_pow(q, spec.redundancy()) + 1 <= rhs;
}

uint32_t ceil_log_base(uint64_t base, uint64_t x) {
    uint32_t r = 0;
    uint64_t v = 1;
    while (v < x) {
        v *= base;
        ++r;
    }
    return r;
}

std::optional<std::string> check_infallibility() {
    const Code code = make_hamming(Field::gf2(), 3);
    const Field& f = Field::gf2();
    std::vector<std::vector<size_t>> wet_sets{{}};
    for (size_t a = 1; a <= 7; ++a) {
        wet_sets.push_back({a});
        for (size_t b = a + 1; b <= 7; ++b) {
            wet_sets.push_back({a, b});
            for (size_t c = b + 1; c <= 7; ++c) wet_sets.push_back({a, b, c});
        }
    }
    for (const auto& wet : wet_sets) {
        const size_t r = *min_r(code.spec, wet.size());
        const size_t mlen = 3 - r;
        for (uint64_t xi = 0; xi < 128; ++xi) {
            CoverObject cover{syndrome_from_index(f, xi, 7), wet};
            for (uint64_t mi = 0; mi < (uint64_t{1} << mlen); ++mi) {
                const Vec m = syndrome_from_index(f, mi, mlen);
                EmbedSolution sol;
                try {
                    sol = solve_randomized(code, cover, m, r);
                } catch (const std::exception& e) {
                    return std::string("solver failed: ") + e.what();
                }
                const Vec s = syndrome(code, sol.y);
                if (!std::equal(m.begin(), m.end(), s.begin()))
                    return "syndrome prefix mismatch";
                for (size_t p : wet)
                    if (sol.y[p - 1] != cover.x[p - 1])
                        return "wet position modified";
                size_t diff = 0;
                for (size_t i = 0; i < 7; ++i) diff += sol.y[i] != cover.x[i];
                if (diff > 1) return "more than one change";
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_min_r_exactness() {
    const Code g23 = make_golay23();
    for (size_t ell = 0; ell <= 23; ++ell) {
        // cubic count of syndromes not reachable from n - ell dry columns
        const uint64_t cubic =
            (6 + 1592 * ell - 69 * ell * ell + ell * ell * ell) / 6;
        const size_t want = ceil_log_base(2, cubic);
        if (*min_r(g23.spec, ell) != want)
            return "golay23 closed form mismatch at ell=" + std::to_string(ell);
    }
    const Code g11 = make_golay11();
    for (size_t ell = 0; ell <= 11; ++ell) {
        const uint64_t poly = 1 + 44 * ell - 2 * ell * ell;
        const size_t want = ceil_log_base(3, poly);
        if (*min_r(g11.spec, ell) != want)
            return "golay11 closed form mismatch at ell=" + std::to_string(ell);
    }
    for (uint32_t q : {2u, 3u})
        for (uint32_t p = 2; p <= 5; ++p) {
            const Code ham = make_hamming(Field::gf(q), p);
            for (size_t ell = 0; ell <= ham.spec.n; ++ell) {
                const size_t want = ceil_log_base(q, (q - 1) * ell + 1);
                if (*min_r(ham.spec, ell) != want)
                    return "hamming closed form mismatch";
            }
        }
    // minimality: the counting condition holds at min_r and fails below it
    for (const Code* code : {&g23, &g11})
        for (size_t ell = 0; ell <= code->spec.n; ++ell) {
            const size_t r = *min_r(code->spec, ell);
            if (!counting_ok(code->spec, ell, r)) return "condition fails at min_r";
            if (r > 0 && counting_ok(code->spec, ell, r - 1))
                return "min_r not minimal at ell=" + std::to_string(ell);
        }
    return std::nullopt;
}

std::optional<std::string> check_fig1() {
    const CodeSpec g23 = make_golay23().spec;
    const CodeSpec g11 = make_golay11().spec;
    for (const CodeSpec* spec : {&g23, &g11}) {
        const auto rows = fig1_table(*spec);
        if (rows.size() != spec->n + 1) return "row count";
        size_t prev = spec->redundancy();
        for (const auto& row : rows) {
            if (row.remaining > prev) return "remaining column increases";
            prev = row.remaining;
            if (!counting_ok(*spec, row.ell, row.min_r))
                return "row fails the counting condition";
            if (row.min_r > 0 && counting_ok(*spec, row.ell, row.min_r - 1))
                return "row min_r not minimal";
            if (row.remaining != spec->redundancy() - row.min_r)
                return "remaining inconsistent";
        }
        const std::string name = spec->n == 23 ? "acceptance_fig1_golay23.csv"
                                               : "acceptance_fig1_golay11.csv";
        std::ofstream out(name);
        write_fig1_csv(out, rows);
        if (!out) return "cannot write " + name;
    }
    const auto rows23 = fig1_table(g23);
    if (rows23[1].min_r != 8 || rows23[1].remaining != 3)
        return "golay23 spot row ell=1";
    const auto rows11 = fig1_table(g11);
    if (rows11[1].min_r != 4 || rows11[1].remaining != 1)
        return "golay11 spot row ell=1";
    return std::nullopt;
}

std::optional<std::string> check_perfectness() {
    std::vector<Code> codes;
    codes.push_back(make_golay23());
    codes.push_back(make_golay11());
    for (uint32_t p = 2; p <= 4; ++p)
        codes.push_back(make_hamming(Field::gf2(), p));
    for (const Code& code : codes) {
        const Field& f = *code.spec.field;
        if (sphere_size(f.q(), code.spec.n, code.spec.rho) !=
            int_pow(f.q(), code.spec.redundancy()))
            return "sphere packing equality fails";
        const uint64_t total = int_pow(f.q(), code.spec.redundancy());
        std::set<Vec> leaders;
        for (uint64_t idx = 0; idx < total; ++idx) {
            const Vec s = syndrome_from_index(f, idx, code.spec.redundancy());
            Vec e;
            try {
                e = coset_decode(code, s);
            } catch (const std::exception& ex) {
                return std::string("decode failed: ") + ex.what();
            }
            if (weight_of(e) > code.spec.rho) return "leader beyond the radius";
            if (syndrome(code, e) != s) return "leader has wrong syndrome";
            if (!leaders.insert(e).second) return "duplicate leader";
        }
        if (leaders.size() != total) return "decode not a bijection";
    }
    return std::nullopt;
}

std::optional<std::string> check_rank_mc() {
    const McResult sq =
        failure_rate_mc(MatrixRankMcConfig{2, 10, 20, 10}, 1, 10000, 1);
    if (sq.per_block_rate < 0.288)
        return "square case " + std::to_string(sq.per_block_rate) + " < 0.288";
    const double bound = rank_lower_bound(2, 25, 20);  // 0.96875
    const double sigma = std::sqrt(bound * (1.0 - bound) / 10000.0);
    const McResult tall =
        failure_rate_mc(MatrixRankMcConfig{2, 20, 30, 5}, 1, 10000, 1);
    if (tall.per_block_rate < bound - 3.0 * sigma)
        return "tall case " + std::to_string(tall.per_block_rate) +
               " below bound minus 3 sigma";
    return std::nullopt;
}

std::optional<std::string> check_rs_infallibility() {
    const Field& f = Field::gf(16);
    std::mt19937_64 gen(77);
    Vec x(15);
    for (auto& v : x) v = static_cast<uint32_t>(uniform_below(gen, 16));
    const Code rs = make_rs(f, 15, 4);
    size_t sets = 0;
    for (size_t a = 1; a <= 15; ++a)
        for (size_t b = a + 1; b <= 15; ++b)
            for (size_t c = b + 1; c <= 15; ++c)
                for (size_t d = c + 1; d <= 15; ++d) {
                    const std::vector<size_t> wet{a, b, c, d};
                    Vec m(11);
                    for (auto& v : m)
                        v = static_cast<uint32_t>(uniform_below(gen, 16));
                    Vec y;
                    try {
                        y = rs_wet_embed(f, 15, x, m, wet);
                    } catch (const std::exception& e) {
                        return std::string("wet set failed: ") + e.what();
                    }
                    if (syndrome_of(rs.H, y) != m) return "syndrome mismatch";
                    for (size_t p : wet)
                        if (y[p - 1] != x[p - 1]) return "wet symbol modified";
                    ++sets;
                }
    if (sets != 1365) return "wet set enumeration incomplete";
    return std::nullopt;
}

std::optional<std::string> check_zzw_roundtrip() {
    const ZzwParams pr = ZzwParams::make(2, 2);
    if (pr.u != 3 || pr.p != 5 || pr.n != 7) return "derived parameters wrong";
    std::mt19937_64 gen(20240818);
    for (int run = 0; run < 1000; ++run) {
        std::vector<ColumnBlock> blocks(pr.n);
        for (auto& blk : blocks) {
            blk.bits.resize(pr.column_len);
            for (auto& b : blk.bits)
                b = static_cast<uint8_t>(uniform_below(gen, 2));
            const size_t ell = uniform_below(gen, 4);  // at most 3 wet bits
            for (uint64_t w : sample_distinct(gen, pr.column_len, ell))
                blk.wet.push_back(static_cast<size_t>(w) + 1);
        }
        ZzwPlan pl;
        std::vector<std::vector<uint8_t>> stego;
        std::vector<uint8_t> payload;
        try {
            pl = plan(blocks, pr);
            payload.resize(pl.capacity_bits);
            for (auto& b : payload)
                b = static_cast<uint8_t>(uniform_below(gen, 2));
            stego = zzw_embed(blocks, payload, pr, pl);
        } catch (const std::exception& e) {
            return "run " + std::to_string(run) + " failed: " + e.what();
        }
        if (pl.capacity_bits != (pr.n - pl.f) * (pr.p - pl.r))
            return "capacity formula";
        if (pl.capacity_bits > (size_t{1} << (pr.u - 1)) * (pr.p - pl.r))
            return "capacity above the structural cap";
        ZzwExtracted got;
        try {
            got = zzw_extract(stego, pr);
        } catch (const std::exception& e) {
            return "extract failed: " + std::string(e.what());
        }
        if (got.r != pl.r || got.f != pl.f) return "recovered (r, f) differ";
        if (got.payload_bits != payload) return "payload mismatch";
        for (size_t i = 0; i < pr.n; ++i)
            for (size_t w : blocks[i].wet)
                if (stego[i][w - 1] != blocks[i].bits[w - 1])
                    return "wet bit modified";
    }
    return std::nullopt;
}

std::optional<std::string> check_efficiency() {
    if (efficiency_loss(8, 23, 12) != 8.0 / 11.0) return "loss(8,23,12)";
    if (efficiency_loss(0, 23, 12) != 0.0) return "loss(0,23,12)";
    if (efficiency_loss(2, 7, 4) != 2.0 / 3.0) return "loss(2,7,4)";
    if (sphere_covering_bound(2, 1.0) != 2.0) return "bound at full payload";
    const CodeSpec specs[] = {
        make_hamming(Field::gf2(), 2).spec, make_hamming(Field::gf2(), 3).spec,
        make_hamming(Field::gf2(), 4).spec, make_hamming(Field::gf2(), 5).spec,
        make_hamming(Field::gf3(), 2).spec, make_hamming(Field::gf3(), 3).spec,
        make_golay23().spec,                make_golay11().spec};
    for (const CodeSpec& spec : specs)
        for (size_t r = 0; r < spec.redundancy(); ++r) {
            const BoundReport rep = bound_report(spec, r);
            if (rep.loss !=
                static_cast<double>(r) / static_cast<double>(spec.redundancy()))
                return "loss not the exact ratio";
            if (rep.e_actual > rep.e_bound) return "bound violated";
        }
    return std::nullopt;
}

}  // namespace

int main() {
    const Check checks[] = {
        {"randomized embedding never fails within min_r", 10000.0,
         check_infallibility},
        {"min_r matches the closed forms, minimally", 0.0,
         check_min_r_exactness},
        {"capacity tables reproduce the counting condition", 0.0, check_fig1},
        {"perfect-code coset decoding is bijective", 0.0, check_perfectness},
        {"random-matrix rank frequency meets the bound", 0.0, check_rank_mc},
        {"reed-solomon wet embedding never fails", 5000.0,
         check_rs_infallibility},
        {"layered container roundtrip, parameters recovered", 30000.0,
         check_zzw_roundtrip},
        {"efficiency accounting is exact and bounded", 0.0, check_efficiency},
    };

    bool all_ok = true;
    int idx = 0;
    for (const Check& c : checks) {
        ++idx;
        const auto start = Clock::now();
        std::optional<std::string> failure;
        try {
            failure = c.fn();
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start)
                .count();
        if (!failure && c.limit_ms > 0.0 && ms > c.limit_ms)
            failure = "runtime " + std::to_string(ms) + " ms over budget";
        std::printf("[%d/8] %s %s (%.0f ms)%s%s\n", idx,
                    failure ? "FAIL" : "PASS", c.name, ms,
                    failure ? ": " : "", failure ? failure->c_str() : "");
        all_ok = all_ok && !failure;
    }
    return all_ok ? 0 : 1;
}
