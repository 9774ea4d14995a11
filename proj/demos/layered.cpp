// End-to-end run of the layered container scheme: plan (r, f) from the wet
// masks, embed a payload, serialize, and recover everything from the stego
// columns alone.

#include <iostream>
#include <random>
#include <sstream>

#include <wpsc/wpsc.hpp>

using namespace wpsc;

int main() {
    const ZzwParams params = ZzwParams::make(2, 2);
    std::cout << "params: u=" << params.u << " p=" << params.p
              << " n=" << params.n << " column_len=" << params.column_len
              << "\n";

    // Random cover with up to 3 wet bits per column.
    std::mt19937_64 gen(7);
    std::vector<ColumnBlock> blocks(params.n);
    for (auto& blk : blocks) {
        blk.bits.resize(params.column_len);
        for (auto& b : blk.bits) b = static_cast<uint8_t>(uniform_below(gen, 2));
        const size_t ell = uniform_below(gen, 4);
        for (uint64_t w : sample_distinct(gen, params.column_len, ell))
            blk.wet.push_back(static_cast<size_t>(w) + 1);
    }

    const ZzwPlan plan_out = plan(blocks, params);
    std::cout << "plan: r=" << plan_out.r << " f=" << plan_out.f
              << " capacity_bits=" << plan_out.capacity_bits << "\n";

    std::vector<uint8_t> payload(plan_out.capacity_bits);
    for (auto& b : payload) b = static_cast<uint8_t>(uniform_below(gen, 2));

    const auto stego = zzw_embed(blocks, payload, params, plan_out);

    // Serialize and re-read, as a receiver without the wet masks would.
    std::stringstream file;
    write_container(file, params, stego);
    const Container ct = read_container(file);
    const ZzwExtracted got = zzw_extract(ct.columns, ct.params);

    std::cout << "extracted: r=" << got.r << " f=" << got.f
              << " payload_match="
              << (got.payload_bits == payload ? "yes" : "no") << "\n";
    return 0;
}
