#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <wpsc/code.hpp>

using namespace wpsc;

namespace {

// Generator G = [I_k | B] recovered from H = [-B^T | I], for independent
// minimum-distance checks.
Mat generator_from_parity(const Code& code) {
    const Field& f = *code.spec.field;
    const size_t n = code.spec.n, k = code.spec.k;
    Mat G(f, k, n);
    for (size_t r = 0; r < k; ++r) {
        G(r, r) = 1;
        for (size_t c = 0; c < n - k; ++c) G(r, k + c) = f.neg(code.H(c, r));
    }
    return G;
}

size_t weight(const Vec& v) {
    size_t w = 0;
    for (uint32_t x : v) w += x != 0;
    return w;
}

// Exhaustive minimum weight over all nonzero codewords (q^k enumeration).
size_t min_distance(const Code& code) {
    const Field& f = *code.spec.field;
    const Mat G = generator_from_parity(code);
    const size_t k = code.spec.k, n = code.spec.n;
    const uint64_t total = int_pow(f.q(), k);
    size_t best = n + 1;
    for (uint64_t m = 1; m < total; ++m) {
        const Vec msg = syndrome_from_index(f, m, k);
        Vec w(n, 0);
        for (size_t c = 0; c < n; ++c) {
            uint32_t acc = 0;
            for (size_t r = 0; r < k; ++r)
                acc = f.add(acc, f.mul(msg[r], G(r, c)));
            w[c] = acc;
        }
        best = std::min(best, weight(w));
    }
    return best;
}

}  // namespace

TEST_CASE("hamming 2,3 structure") {
    const Code code = make_hamming(Field::gf2(), 3);
    CHECK(code.spec.n == 7);
    CHECK(code.spec.k == 4);
    CHECK(code.spec.d == 3);
    CHECK(code.spec.rho == 1);
    const uint8_t want[3][7] = {{0, 0, 0, 1, 1, 1, 1},
                                {0, 1, 1, 0, 0, 1, 1},
                                {1, 0, 1, 0, 1, 0, 1}};
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 7; ++c) REQUIRE(code.H(r, c) == want[r][c]);
}

TEST_CASE("hamming 3,2 structure") {
    const Code code = make_hamming(Field::gf3(), 2);
    CHECK(code.spec.n == 4);
    CHECK(code.spec.k == 2);
    const uint8_t want[2][4] = {{0, 1, 1, 1}, {1, 0, 1, 2}};
    for (size_t r = 0; r < 2; ++r)
        for (size_t c = 0; c < 4; ++c) REQUIRE(code.H(r, c) == want[r][c]);
}

TEST_CASE("hamming column normalization properties") {
    for (auto [q, p] : {std::pair<uint32_t, uint32_t>{2, 4}, {2, 5}, {3, 3}, {4, 2}}) {
        const Field& f = Field::gf(q);
        const Code code = make_hamming(f, p);
        REQUIRE(code.spec.n == (int_pow(q, p) - 1) / (q - 1));
        std::set<uint64_t> seen;
        uint64_t prev = 0;
        for (size_t c = 0; c < code.spec.n; ++c) {
            Vec col(p);
            for (size_t r = 0; r < p; ++r) col[r] = code.H(r, c);
            uint32_t first = 0;
            for (uint32_t v : col)
                if (v) { first = v; break; }
            REQUIRE(first == 1);  // canonical column per projective line
            const uint64_t idx = syndrome_index(f, col);
            REQUIRE(idx > prev);  // ascending as base-q integers
            prev = idx;
            REQUIRE(seen.insert(idx).second);
        }
    }
    CHECK_THROWS_AS(make_hamming(Field::gf2(), 1), UsageError);
    CHECK_THROWS_AS(make_hamming(Field::gf2(), 21), UsageError);
}

TEST_CASE("syndrome basics") {
    const Code code = make_hamming(Field::gf2(), 3);
    CHECK(syndrome(code, Vec(7, 0)) == Vec{0, 0, 0});
    // single error at position j reproduces column j
    for (size_t j = 0; j < 7; ++j) {
        Vec e(7, 0);
        e[j] = 1;
        const Vec s = syndrome(code, e);
        for (size_t r = 0; r < 3; ++r) REQUIRE(s[r] == code.H(r, j));
    }
}

TEST_CASE("golay codes are the right codes") {
    const Code g23 = make_golay23();
    CHECK(g23.spec.n == 23);
    CHECK(g23.spec.k == 12);
    CHECK(g23.spec.d == 7);
    CHECK(g23.spec.rho == 3);
    CHECK(min_distance(g23) == 7);

    const Code g11 = make_golay11();
    CHECK(g11.spec.n == 11);
    CHECK(g11.spec.k == 6);
    CHECK(g11.spec.d == 5);
    CHECK(g11.spec.rho == 2);
    CHECK(min_distance(g11) == 5);

    CHECK(make_golay(GolayVariant::Binary).H == g23.H);
    CHECK(make_golay(GolayVariant::Ternary).H == g11.H);
}

TEST_CASE("perfect codes meet sphere packing exactly") {
    CHECK(sphere_size(2, 7, 1) == 8);            // 2^3
    CHECK(sphere_size(2, 23, 3) == 2048);        // 2^11
    CHECK(sphere_size(3, 11, 2) == 243);         // 3^5
    CHECK(sphere_size(3, 13, 1) == 27);          // 3^3
    CHECK(sphere_size(2, 15, 1) == 16);          // 2^4
}

TEST_CASE("coset decoding is a bijection onto the spheres") {
    const Code codes[] = {make_hamming(Field::gf2(), 3),
                          make_hamming(Field::gf2(), 4),
                          make_hamming(Field::gf3(), 2), make_golay23(),
                          make_golay11()};
    for (const Code& code : codes) {
        const Field& f = *code.spec.field;
        const uint64_t total = int_pow(f.q(), code.spec.redundancy());
        std::set<Vec> leaders;
        for (uint64_t idx = 0; idx < total; ++idx) {
            const Vec s = syndrome_from_index(f, idx, code.spec.redundancy());
            const Vec e = coset_decode(code, s);
            REQUIRE(weight(e) <= code.spec.rho);
            REQUIRE(syndrome(code, e) == s);
            REQUIRE(leaders.insert(e).second);
        }
        REQUIRE(leaders.size() == total);
    }
}

TEST_CASE("coset decoding inverts small errors") {
    const Code g23 = make_golay23();
    // every weight <= 3 pattern is its own coset leader
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 300; ++trial) {
        Vec e(23, 0);
        const size_t w = uniform_below(gen, 4);
        for (uint64_t pos : sample_distinct(gen, 23, w)) e[pos] = 1;
        REQUIRE(coset_decode(g23, syndrome(g23, e)) == e);
    }
    const Code g11 = make_golay11();
    for (int trial = 0; trial < 300; ++trial) {
        Vec e(11, 0);
        const size_t w = uniform_below(gen, 3);
        for (uint64_t pos : sample_distinct(gen, 11, w))
            e[pos] = 1 + static_cast<uint32_t>(uniform_below(gen, 2));
        REQUIRE(coset_decode(g11, syndrome(g11, e)) == e);
    }
}

TEST_CASE("reed-solomon construction") {
    const Field& f16 = Field::gf(16);
    const Code rs = make_rs(f16, 15, 11);
    CHECK(rs.spec.redundancy() == 4);
    CHECK(rs.spec.d == 5);
    // evaluation points in canonical order: 0, then powers of alpha
    const uint32_t pts[8] = {0, 1, 2, 4, 8, 3, 6, 12};
    for (size_t i = 0; i < 8; ++i) REQUIRE(rs.H(1, i) == pts[i]);
    for (size_t i = 0; i < 15; ++i) REQUIRE(rs.H(0, i) == 1);  // 0^0 = 1

    // every 4-column subset is invertible (MDS property)
    size_t checked = 0;
    for (size_t a = 0; a < 15; ++a)
        for (size_t b = a + 1; b < 15; ++b)
            for (size_t c = b + 1; c < 15; ++c)
                for (size_t d = c + 1; d < 15; ++d) {
                    Mat sub(f16, 4, 4);
                    const size_t cols[4] = {a, b, c, d};
                    for (size_t r = 0; r < 4; ++r)
                        for (size_t j = 0; j < 4; ++j)
                            sub(r, j) = rs.H(r, cols[j]);
                    REQUIRE(rank_of(sub) == 4);
                    ++checked;
                }
    REQUIRE(checked == 1365);

    CHECK(make_rs(f16, 15, 15).H.rows() == 0);
    CHECK_THROWS_AS(make_rs(Field::gf(8), 9, 5), UsageError);
    CHECK_THROWS_AS(coset_decode(rs, Vec{0, 0, 0, 0}), UsageError);
}

TEST_CASE("random codes are seeded deterministically") {
    const Field& f = Field::gf2();
    const Code a = make_random(f, 30, 10, 42);
    const Code b = make_random(f, 30, 10, 42);
    const Code c = make_random(f, 30, 10, 43);
    CHECK(a.H == b.H);
    CHECK(!(a.H == c.H));
    CHECK(a.spec.d == 0);
    CHECK(a.spec.rho == 20);
}

TEST_CASE("random code bounded decoding uses its table") {
    const Code code = make_random(Field::gf2(), 10, 5, 7, 1);
    CHECK(code.table_radius == 1);
    // weight <= 1 gives at most 11 of the 32 syndromes; find hits and misses
    size_t misses = 0;
    for (uint64_t idx = 0; idx < 32; ++idx) {
        const Vec s = syndrome_from_index(Field::gf2(), idx, 5);
        if (code.coset_known[idx]) {
            const Vec e = coset_decode(code, s);
            REQUIRE(weight(e) <= 1);
            REQUIRE(syndrome(code, e) == s);
        } else {
            CHECK_THROWS_AS(coset_decode(code, s), DecodeFailure);
            ++misses;
        }
    }
    REQUIRE(misses >= 32 - 11);
    // no table at all
    const Code plain = make_random(Field::gf2(), 10, 5, 7);
    CHECK_THROWS_AS(coset_decode(plain, Vec(5, 0)), UsageError);
}

TEST_CASE("matrix text roundtrip") {
    const Code g11 = make_golay11();
    std::stringstream ss;
    write_matrix(ss, g11.spec, g11.H);
    const std::string text = ss.str();
    CHECK(text.substr(0, 7) == "3 11 6\n");
    std::stringstream in(text);
    const ParsedMatrix parsed = read_matrix(in);
    CHECK(parsed.field == g11.spec.field);
    CHECK(parsed.n == 11);
    CHECK(parsed.k == 6);
    CHECK(parsed.H == g11.H);

    std::stringstream junk("3 11 6\n0 1 junk");
    CHECK_THROWS_AS(read_matrix(junk), FormatError);
    std::stringstream badq("5 4 2\n0 0 0 0\n0 0 0 0\n");
    CHECK_THROWS_AS(read_matrix(badq), FormatError);
    std::stringstream badval("2 4 2\n0 1 2 0\n0 0 0 0\n");
    CHECK_THROWS_AS(read_matrix(badval), FormatError);
    std::stringstream trunc("2 4 2\n0 1\n");
    CHECK_THROWS_AS(read_matrix(trunc), FormatError);
}
