// Command-line front end: embedding, extraction, the layered container
// pipeline, capacity/bound reports, and Monte-Carlo simulation.
//
// Exit codes: 0 success; 1 argument or file-format errors; 2 precondition
// violations; 3 rank-deficient wet system; 4 change budget exceeded;
// 5 infeasible embedding (including no feasible layered plan, decode-table
// misses, and declared embedding failures).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <wpsc/wpsc.hpp>

using namespace wpsc;

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open " + path + " for writing");
    return f;
}

uint64_t parse_num(const std::string& s) {
    try {
        size_t pos = 0;
        const uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) throw FormatError("code selector: bad number " + s);
        return v;
    } catch (const FormatError&) {
        throw;
    } catch (const std::exception&) {
        throw FormatError("code selector: bad number " + s);
    }
}

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    return parts;
}

// Selectors: golay23 | golay11 | hamming:q:p | rs:q:n:dim |
// random:q:n:k:seed[:table_radius]
Code parse_code(const std::string& sel) {
    const auto parts = split_colon(sel);
    if (parts.empty()) throw FormatError("empty code selector");
    const std::string& kind = parts[0];
    if (kind == "golay23" || kind == "golay11") {
        if (parts.size() != 1)
            throw FormatError("code selector: " + kind + " takes no parameters");
        return kind == "golay23" ? make_golay23() : make_golay11();
    }
    if (kind == "hamming") {
        if (parts.size() != 3)
            throw FormatError("code selector: expected hamming:q:p");
        return make_hamming(Field::gf(static_cast<uint32_t>(parse_num(parts[1]))),
                            static_cast<uint32_t>(parse_num(parts[2])));
    }
    if (kind == "rs") {
        if (parts.size() != 4)
            throw FormatError("code selector: expected rs:q:n:dim");
        return make_rs(Field::gf(static_cast<uint32_t>(parse_num(parts[1]))),
                       parse_num(parts[2]), parse_num(parts[3]));
    }
    if (kind == "random") {
        if (parts.size() != 5 && parts.size() != 6)
            throw FormatError("code selector: expected random:q:n:k:seed[:radius]");
        return make_random(Field::gf(static_cast<uint32_t>(parse_num(parts[1]))),
                           parse_num(parts[2]), parse_num(parts[3]),
                           parse_num(parts[4]),
                           parts.size() == 6 ? parse_num(parts[5]) : 0);
    }
    throw FormatError("unknown code selector: " + kind);
}

// Message symbols from a file: plain symbol vector, or with bits=true a
// payload file whose bits pack into symbols of the field's bit width.
Vec read_message(const std::string& path, const Field& f, bool bits,
                 size_t expect) {
    auto in = open_in(path);
    if (!bits) {
        const Vec m = read_vector(in, f);
        if (m.size() != expect)
            throw UsageError("message: expected " + std::to_string(expect) +
                             " symbols, got " + std::to_string(m.size()));
        return m;
    }
    if (f.characteristic() != 2)
        throw UsageError("--bits requires a binary-extension field");
    const auto payload = read_payload(in);
    if (payload.size() != expect * f.degree())
        throw UsageError("message: expected " +
                         std::to_string(expect * f.degree()) + " bits, got " +
                         std::to_string(payload.size()));
    return bits_to_symbols(payload, f.degree());
}

void write_message(const std::string& path, const Field& f, bool bits,
                   const Vec& m) {
    auto out = open_out(path);
    if (!bits) {
        write_vector(out, m);
        return;
    }
    if (f.characteristic() != 2)
        throw UsageError("--bits requires a binary-extension field");
    write_payload(out, symbols_to_bits(m, f.degree()));
}

struct EmbedArgs {
    std::string code_sel, h_in, cover_path, msg_path, wet_path, out_path, h_out;
    std::string solver = "auto";
    bool bits = false;
    uint64_t T = 0, r = 0;
    bool has_T = false, has_r = false;
};

int run_embed(const EmbedArgs& a) {
    std::optional<Code> code;
    std::optional<ParsedMatrix> parsed;
    if (!a.code_sel.empty()) {
        code = parse_code(a.code_sel);
    } else if (!a.h_in.empty()) {
        auto in = open_in(a.h_in);
        parsed = read_matrix(in);
    } else {
        throw UsageError("embed: need --code or --h-in");
    }
    const Field& f = code ? *code->spec.field : *parsed->field;
    const Mat& H = code ? code->H : parsed->H;
    const size_t n = H.cols();

    CoverObject cover;
    {
        auto in = open_in(a.cover_path);
        cover.x = read_vector(in, f);
    }
    if (!a.wet_path.empty()) {
        auto in = open_in(a.wet_path);
        cover.wet = read_wet_positions(in);
    }

    std::string solver = a.solver;
    if (solver == "auto")
        solver = cover.wet.empty() ? (a.has_T ? "bounded" : "plain")
                                   : (a.has_r ? "randomized" : "wet");

    EmbedSolution sol{{}, 0, {}};
    if (solver == "plain" || solver == "bounded") {
        if (!code) throw UsageError("embed: this solver needs --code");
        const Vec m =
            read_message(a.msg_path, f, a.bits, code->spec.redundancy());
        sol = solver == "plain" ? solve_plain(*code, cover, m)
                                : solve_bounded(*code, cover, m, a.T);
    } else if (solver == "wet") {
        const Vec m = read_message(a.msg_path, f, a.bits, H.rows());
        sol = solve_wet_unbounded(H, cover, m);
    } else if (solver == "randomized") {
        if (!code) throw UsageError("embed: this solver needs --code");
        if (!a.has_r) throw UsageError("embed: randomized solver needs --r");
        if (a.r >= code->spec.redundancy())
            throw UsageError("embed: --r must be below n-k");
        const Vec m = read_message(a.msg_path, f, a.bits,
                                   code->spec.redundancy() - a.r);
        sol = solve_randomized(*code, cover, m, a.r);
    } else {
        throw UsageError("embed: unknown solver " + solver);
    }

    {
        auto out = open_out(a.out_path);
        write_vector(out, sol.y);
    }
    if (!a.h_out.empty()) {
        auto out = open_out(a.h_out);
        if (code)
            write_matrix(out, code->spec, code->H);
        else {
            CodeSpec spec;
            spec.field = parsed->field;
            spec.n = parsed->n;
            spec.k = parsed->k;
            write_matrix(out, spec, parsed->H);
        }
    }
    std::cout << "changes=" << sol.changes << '\n';
    if (solver == "randomized") {
        std::cout << "tail=";
        write_vector(std::cout, sol.random_tail);
    }
    (void)n;
    return 0;
}

struct ExtractArgs {
    std::string code_sel, h_in, stego_path, out_path;
    uint64_t r = 0;
    bool bits = false;
};

int run_extract(const ExtractArgs& a) {
    std::optional<Code> code;
    std::optional<ParsedMatrix> parsed;
    if (!a.code_sel.empty()) {
        code = parse_code(a.code_sel);
    } else if (!a.h_in.empty()) {
        auto in = open_in(a.h_in);
        parsed = read_matrix(in);
    } else {
        throw UsageError("extract: need --code or --h-in");
    }
    const Field& f = code ? *code->spec.field : *parsed->field;
    const Mat& H = code ? code->H : parsed->H;

    Vec y;
    {
        auto in = open_in(a.stego_path);
        y = read_vector(in, f);
    }
    if (y.size() != H.cols())
        throw UsageError("extract: stego length must be n");
    if (a.r >= H.rows() + 1 || a.r > H.rows())
        throw UsageError("extract: --r must be at most n-k");
    Vec s = syndrome_of(H, y);
    s.resize(H.rows() - a.r);
    write_message(a.out_path, f, a.bits, s);
    std::cout << "symbols=" << s.size() << '\n';
    return 0;
}

struct ZzwEmbedArgs {
    std::string container, wet_path, payload_path, out_path;
};

int run_zzw_embed(const ZzwEmbedArgs& a) {
    Container cover;
    {
        auto in = open_in(a.container);
        cover = read_container(in);
    }
    std::vector<std::vector<size_t>> wets;
    {
        auto in = open_in(a.wet_path);
        wets = read_wet_sidecar(in, cover.params);
    }
    std::vector<uint8_t> payload;
    {
        auto in = open_in(a.payload_path);
        payload = read_payload(in);
    }
    const auto blocks = attach_wet(cover.columns, wets);
    const ZzwPlan pl = plan(blocks, cover.params);
    const auto stego = zzw_embed(blocks, payload, cover.params, pl);
    {
        auto out = open_out(a.out_path);
        write_container(out, cover.params, stego);
    }
    std::cout << "r=" << pl.r << " f=" << pl.f
              << " capacity_bits=" << pl.capacity_bits << '\n';
    return 0;
}

struct ZzwExtractArgs {
    std::string container, out_path;
};

int run_zzw_extract(const ZzwExtractArgs& a) {
    Container ct;
    {
        auto in = open_in(a.container);
        ct = read_container(in);
    }
    const ZzwExtracted got = zzw_extract(ct.columns, ct.params);
    {
        auto out = open_out(a.out_path);
        write_payload(out, got.payload_bits);
    }
    std::cout << "r=" << got.r << " f=" << got.f
              << " bits=" << got.payload_bits.size() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomized wet-paper syndrome coding"};
    app.require_subcommand(1);
    std::ostringstream result;  // deferred so failures print nothing partial

    int rc = 0;
    auto embed_args = std::make_shared<EmbedArgs>();
    auto* embed = app.add_subcommand("embed", "embed a message into a cover vector");
    embed->add_option("--code", embed_args->code_sel, "code selector");
    embed->add_option("--h-in", embed_args->h_in, "parity-check matrix file");
    embed->add_option("--cover", embed_args->cover_path, "cover vector file")
        ->required();
    embed->add_option("--msg", embed_args->msg_path, "message file")->required();
    embed->add_flag("--bits", embed_args->bits, "message file is a bit payload");
    embed->add_option("--wet-file", embed_args->wet_path, "wet positions file");
    embed->add_option("--solver", embed_args->solver,
                      "auto|plain|bounded|wet|randomized");
    embed->add_option("--T", embed_args->T, "change budget for bounded")
        ->check(CLI::NonNegativeNumber);
    embed->add_option("--r", embed_args->r, "randomized syndrome symbols");
    embed->add_option("--out", embed_args->out_path, "stego vector output")
        ->required();
    embed->add_option("--h-out", embed_args->h_out, "export parity-check matrix");
    embed->callback([&, embed_args] {
        embed_args->has_T = embed->count("--T") > 0;
        embed_args->has_r = embed->count("--r") > 0;
        rc = run_embed(*embed_args);
    });

    auto extract_args = std::make_shared<ExtractArgs>();
    auto* extract = app.add_subcommand("extract", "extract a message from a stego vector");
    extract->add_option("--code", extract_args->code_sel, "code selector");
    extract->add_option("--h-in", extract_args->h_in, "parity-check matrix file");
    extract->add_option("--stego", extract_args->stego_path, "stego vector file")
        ->required();
    extract->add_option("--r", extract_args->r, "randomized symbols to drop");
    extract->add_flag("--bits", extract_args->bits, "write a bit payload file");
    extract->add_option("--out", extract_args->out_path, "message output")
        ->required();
    extract->callback([&, extract_args] { rc = run_extract(*extract_args); });

    auto ze_args = std::make_shared<ZzwEmbedArgs>();
    auto* ze = app.add_subcommand("zzw-embed", "embed a payload into a container");
    ze->add_option("--container", ze_args->container, "cover container file")
        ->required();
    ze->add_option("--wet-file", ze_args->wet_path, "wet sidecar file")->required();
    ze->add_option("--payload", ze_args->payload_path, "payload file")->required();
    ze->add_option("--out", ze_args->out_path, "stego container output")->required();
    ze->callback([&, ze_args] { rc = run_zzw_embed(*ze_args); });

    auto zx_args = std::make_shared<ZzwExtractArgs>();
    auto* zx = app.add_subcommand("zzw-extract", "extract a payload from a container");
    zx->add_option("--container", zx_args->container, "stego container file")
        ->required();
    zx->add_option("--out", zx_args->out_path, "payload output")->required();
    zx->callback([&, zx_args] { rc = run_zzw_extract(*zx_args); });

    auto minr_code = std::make_shared<std::string>();
    auto minr_wet = std::make_shared<uint64_t>(0);
    auto* minr = app.add_subcommand("min-r", "randomized symbols needed for a wet count");
    minr->add_option("--code", *minr_code, "code selector")->required();
    minr->add_option("--wet", *minr_wet, "wet position count");
    minr->callback([&, minr_code, minr_wet] {
        const Code code = parse_code(*minr_code);
        const auto r = min_r(code.spec, *minr_wet);
        if (!r) throw Infeasible("min-r: no r satisfies the counting bound");
        std::cout << *r << '\n';
    });

    auto bounds_code = std::make_shared<std::string>();
    auto bounds_wet = std::make_shared<uint64_t>(0);
    auto bounds_r = std::make_shared<uint64_t>(0);
    auto bounds_out = std::make_shared<std::string>();
    auto* bounds = app.add_subcommand("bounds", "efficiency report for a code");
    bounds->add_option("--code", *bounds_code, "code selector")->required();
    bounds->add_option("--wet", *bounds_wet, "wet count (sets r via min-r)");
    auto* bounds_r_opt = bounds->add_option("--r", *bounds_r, "override r directly");
    bounds->add_option("--out", *bounds_out, "CSV output file (default stdout)");
    bounds->callback([&, bounds_code, bounds_wet, bounds_r, bounds_out,
                      bounds_r_opt] {
        const Code code = parse_code(*bounds_code);
        const size_t r = bounds_r_opt->count()
                             ? static_cast<size_t>(*bounds_r)
                             : *min_r(code.spec, *bounds_wet);
        const BoundReport rep = bound_report(code.spec, r);
        std::ostringstream csv;
        csv.precision(12);
        csv << "alpha,e_bound,e_actual,loss\n"
            << rep.alpha << ',' << rep.e_bound << ',' << rep.e_actual << ','
            << rep.loss << '\n';
        if (bounds_out->empty())
            std::cout << csv.str();
        else
            open_out(*bounds_out) << csv.str();
    });

    struct SimArgs {
        std::string mode, code_sel, csv_path;
        uint64_t wet = 0, r = 0, q = 2, rows = 0, cols = 0;
        uint64_t trials = 0, blocks = 1, seed = 0;
    };
    auto sim_args = std::make_shared<SimArgs>();
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo solvability estimate");
    sim->add_option("--mode", sim_args->mode, "randomized|matrix-rank")->required();
    sim->add_option("--code", sim_args->code_sel, "code selector (randomized mode)");
    sim->add_option("--wet", sim_args->wet, "wet count");
    sim->add_option("--r", sim_args->r, "randomized symbols (randomized mode)");
    sim->add_option("--q", sim_args->q, "field size (matrix-rank mode)");
    sim->add_option("--rows", sim_args->rows, "matrix rows (matrix-rank mode)");
    sim->add_option("--cols", sim_args->cols, "total columns (matrix-rank mode)");
    sim->add_option("--trials", sim_args->trials, "trial count")->required();
    sim->add_option("--blocks", sim_args->blocks, "blocks in the long message");
    sim->add_option("--seed", sim_args->seed, "generator seed");
    sim->add_option("--csv", sim_args->csv_path, "write per-trial results CSV");
    sim->callback([&, sim_args] {
        std::ofstream csv;
        std::ostream* raw = nullptr;
        if (!sim_args->csv_path.empty()) {
            csv = open_out(sim_args->csv_path);
            raw = &csv;
        }
        McResult res;
        if (sim_args->mode == "randomized") {
            if (sim_args->code_sel.empty())
                throw UsageError("simulate: randomized mode needs --code");
            const Code code = parse_code(sim_args->code_sel);
            res = failure_rate_mc(
                RandomizedMcConfig{&code, sim_args->wet, sim_args->r},
                sim_args->blocks, sim_args->trials, sim_args->seed, raw);
        } else if (sim_args->mode == "matrix-rank") {
            res = failure_rate_mc(
                MatrixRankMcConfig{static_cast<uint32_t>(sim_args->q),
                                   sim_args->rows, sim_args->cols,
                                   sim_args->wet},
                sim_args->blocks, sim_args->trials, sim_args->seed, raw);
        } else {
            throw UsageError("simulate: unknown mode " + sim_args->mode);
        }
        std::cout.precision(10);
        std::cout << "successes=" << res.successes << " trials=" << res.trials
                  << " per_block_rate=" << res.per_block_rate
                  << " long_message_rate=" << res.long_message_rate << '\n';
    });

    auto fig1_code = std::make_shared<std::string>();
    auto fig1_out = std::make_shared<std::string>();
    auto* fig1 = app.add_subcommand("fig1", "capacity table across wet counts");
    fig1->add_option("--code", *fig1_code, "code selector")->required();
    fig1->add_option("--out", *fig1_out, "CSV output file (default stdout)");
    fig1->callback([&, fig1_code, fig1_out] {
        const Code code = parse_code(*fig1_code);
        const auto rows = fig1_table(code.spec);
        if (fig1_out->empty()) {
            write_fig1_csv(std::cout, rows);
        } else {
            auto out = open_out(*fig1_out);
            write_fig1_csv(out, rows);
        }
    });

    try {
        app.parse(argc, argv);
        return rc;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const RankDeficient& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const Infeasible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const DecodeFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const DeclaredFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
