#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "zzw.hpp"

namespace wpsc {

// Symbol vector files: one line of space-separated base-10 values.
inline Vec read_vector(std::istream& is, const Field& f) {
    Vec v;
    uint64_t x;
    while (is >> x) {
        if (!f.contains(static_cast<uint32_t>(x)))
            throw FormatError("vector: value outside field");
        v.push_back(static_cast<uint32_t>(x));
    }
    if (!is.eof() && is.fail()) throw FormatError("vector: non-numeric content");
    return v;
}

inline void write_vector(std::ostream& os, const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    os << '\n';
}

// Wet-position files: one 1-based index per line, sorted ascending.
inline std::vector<size_t> read_wet_positions(std::istream& is) {
    std::vector<size_t> wet;
    uint64_t x;
    while (is >> x) wet.push_back(static_cast<size_t>(x));
    if (!is.eof() && is.fail())
        throw FormatError("wet positions: non-numeric content");
    for (size_t i = 1; i < wet.size(); ++i)
        if (wet[i] <= wet[i - 1])
            throw FormatError("wet positions: must be sorted and unique");
    return wet;
}

inline void write_wet_positions(std::ostream& os, const std::vector<size_t>& wet) {
    for (size_t w : wet) os << w << '\n';
}

// Hex <-> bit sequences, most significant bit of each hex digit first.
inline std::vector<uint8_t> hex_to_bits(const std::string& hex, size_t bit_count) {
    if (bit_count > hex.size() * 4)
        throw FormatError("hex: fewer digits than the declared bit count");
    std::vector<uint8_t> bits(bit_count);
    for (size_t i = 0; i < bit_count; ++i) {
        const char c = hex[i / 4];
        uint32_t nib;
        if (c >= '0' && c <= '9') nib = static_cast<uint32_t>(c - '0');
        else if (c >= 'a' && c <= 'f') nib = static_cast<uint32_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') nib = static_cast<uint32_t>(c - 'A' + 10);
        else throw FormatError("hex: invalid digit");
        bits[i] = (nib >> (3 - i % 4)) & 1;
    }
    return bits;
}

inline std::string bits_to_hex(const std::vector<uint8_t>& bits) {
    std::string hex((bits.size() + 3) / 4, '0');
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) throw UsageError("bits_to_hex: bits must be 0 or 1");
        if (bits[i]) {
            const size_t d = i / 4;
            uint32_t nib = hex[d] <= '9' ? static_cast<uint32_t>(hex[d] - '0')
                                         : static_cast<uint32_t>(hex[d] - 'a' + 10);
            nib |= 1u << (3 - i % 4);
            hex[d] = nib < 10 ? static_cast<char>('0' + nib)
                              : static_cast<char>('a' + nib - 10);
        }
    }
    return hex;
}

// Payload files: "bits N" header line, then one line of hex digits (the bit
// count is not recoverable from hex alone). An empty payload omits the hex
// line.
inline std::vector<uint8_t> read_payload(std::istream& is) {
    std::string tag;
    size_t count = 0;
    if (!(is >> tag >> count) || tag != "bits")
        throw FormatError("payload: expected 'bits N' header");
    if (count == 0) return {};
    std::string hex;
    if (!(is >> hex)) throw FormatError("payload: missing hex digits");
    return hex_to_bits(hex, count);
}

inline void write_payload(std::ostream& os, const std::vector<uint8_t>& bits) {
    os << "bits " << bits.size() << '\n';
    if (!bits.empty()) os << bits_to_hex(bits) << '\n';
}

}  // namespace wpsc
