#pragma once

#include <cmath>
#include <ostream>
#include <vector>

#include "wpc.hpp"

namespace wpsc {

// q-ary entropy H_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x),
// continuous at the endpoints.
inline double entropy_q(uint32_t q, double x) {
    if (q < 2) throw UsageError("entropy_q: q must be at least 2");
    if (x < 0.0 || x > 1.0) throw UsageError("entropy_q: x must be in [0, 1]");
    const double lq = std::log(static_cast<double>(q));
    double h = x * std::log(static_cast<double>(q - 1)) / lq;
    if (x > 0.0) h -= x * std::log(x) / lq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / lq;
    return h;
}

// Inverse of entropy_q on the increasing branch [0, 1 - 1/q], by bisection
// to absolute tolerance 1e-12. Values outside [0, 1] clamp to the endpoints.
inline double inv_entropy_q(uint32_t q, double y) {
    if (q < 2) throw UsageError("inv_entropy_q: q must be at least 2");
    if (y <= 0.0) return 0.0;
    const double top = 1.0 - 1.0 / q;
    if (y >= 1.0) return top;
    double lo = 0.0, hi = top;
    for (int iter = 0; iter < 80 && hi - lo > 1e-12; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (entropy_q(q, mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Upper bound on embedding efficiency at relative payload alpha:
// e <= alpha / H_q^{-1}(alpha).
inline double sphere_covering_bound(uint32_t q, double alpha) {
    if (alpha <= 0.0 || alpha > 1.0)
        throw std::domain_error("sphere_covering_bound: alpha must be in (0, 1]");
    return alpha / inv_entropy_q(q, alpha);
}

// Relative efficiency sacrificed to r randomized syndrome symbols.
inline double efficiency_loss(size_t r, size_t n, size_t k) {
    if (k >= n) throw std::domain_error("efficiency_loss: k must be below n");
    if (r >= n - k)
        throw std::domain_error("efficiency_loss: r must be below n-k");
    return static_cast<double>(r) / static_cast<double>(n - k);
}

// Loss of the Hamming family at wet density lambda as p grows:
// ceil(log_q((q-1) * floor(lambda n) + 1)) / p.
inline double asymptotic_loss(uint32_t q, double lambda, uint32_t p) {
    if (lambda <= 0.0 || lambda >= 1.0 / q)
        throw std::domain_error("asymptotic_loss: lambda must be in (0, 1/q)");
    if (p < 2) throw UsageError("asymptotic_loss: p must be at least 2");
    const uint64_t n = (int_pow(q, p) - 1) / (q - 1);
    const uint64_t ell = static_cast<uint64_t>(lambda * static_cast<double>(n));
    const uint64_t need = (q - 1) * ell + 1;
    uint32_t r = 0;
    uint64_t qr = 1;
    while (qr < need) {
        qr *= q;
        ++r;
    }
    return static_cast<double>(r) / static_cast<double>(p);
}

struct BoundReport {
    double alpha;     // message symbols per cover symbol
    double e_bound;   // sphere-covering ceiling at that alpha
    double e_actual;  // achieved efficiency under uniform syndromes
    double loss;      // r / (n-k)
};

// Achieved efficiency of a perfect code with r randomized symbols: message
// symbols divided by the mean coset-leader weight. Under uniform syndromes
// the mean is sum(i * (q-1)^i * C(n,i)) / q^(n-k) over i <= rho; for the
// Hamming family this reduces to 1 - q^-(n-k) changes per block.
inline BoundReport bound_report(const CodeSpec& spec, size_t r) {
    switch (spec.family) {
        case Family::Hamming:
        case Family::Golay23:
        case Family::Golay11:
            break;
        default:
            throw UsageError("bound_report: perfect code families only");
    }
    if (r >= spec.redundancy())
        throw std::domain_error("bound_report: r must be below n-k");
    const size_t msg = spec.redundancy() - r;
    const double alpha = static_cast<double>(msg) / static_cast<double>(spec.n);
    double weighted = 0.0;
    for (uint64_t i = 1; i <= spec.rho; ++i)
        weighted += static_cast<double>(i) *
                    static_cast<double>(int_pow(spec.q() - 1, i)) *
                    static_cast<double>(binom(spec.n, i));
    const double avg =
        weighted / static_cast<double>(int_pow(spec.q(), spec.redundancy()));
    return BoundReport{alpha, sphere_covering_bound(spec.q(), alpha),
                       static_cast<double>(msg) / avg,
                       static_cast<double>(r) / static_cast<double>(spec.redundancy())};
}

struct Fig1Row {
    size_t ell;        // wet positions
    size_t min_r;      // randomized symbols required
    size_t remaining;  // message symbols left, n-k-min_r
};

// Capacity table of a perfect code: one row per wet count from 0 to n.
inline std::vector<Fig1Row> fig1_table(const CodeSpec& spec) {
    std::vector<Fig1Row> rows;
    rows.reserve(spec.n + 1);
    for (size_t ell = 0; ell <= spec.n; ++ell) {
        const size_t r = *min_r(spec, ell);
        rows.push_back(Fig1Row{ell, r, spec.redundancy() - r});
    }
    return rows;
}

inline void write_fig1_csv(std::ostream& os, const std::vector<Fig1Row>& rows) {
    os << "l,min_r,remaining\n";
    for (const auto& row : rows)
        os << row.ell << ',' << row.min_r << ',' << row.remaining << '\n';
}

struct McResult {
    size_t successes = 0;
    size_t trials = 0;
    double per_block_rate = 0.0;
    double long_message_rate = 0.0;  // per_block_rate^blocks
};

// Monte-Carlo success estimate for the randomized solver: random cover,
// random wet set of size ell, random message of n-k-r symbols per trial.
struct RandomizedMcConfig {
    const Code* code;
    size_t ell;
    size_t r;
};

// Monte-Carlo estimate that a uniform nrow x (ncol_total - ell) matrix over
// F_q has full row rank: the solvability event for unbounded wet embedding
// with a random code.
struct MatrixRankMcConfig {
    uint32_t q;
    size_t nrow;
    size_t ncol_total;
    size_t ell;
};

namespace detail {

template <class TrialFn>
McResult run_mc(size_t blocks, size_t trials, TrialFn&& trial,
                std::ostream* raw_csv) {
    if (trials == 0) throw UsageError("failure_rate_mc: trials must be positive");
    if (blocks == 0) throw UsageError("failure_rate_mc: blocks must be positive");
    if (raw_csv) *raw_csv << "trial_block,success\n";
    McResult res;
    res.trials = trials;
    for (size_t t = 0; t < trials; ++t) {
        const bool ok = trial(t);
        res.successes += ok;
        if (raw_csv) *raw_csv << t << ',' << (ok ? 1 : 0) << '\n';
    }
    res.per_block_rate =
        static_cast<double>(res.successes) / static_cast<double>(res.trials);
    res.long_message_rate =
        std::pow(res.per_block_rate, static_cast<double>(blocks));
    return res;
}

}  // namespace detail

inline McResult failure_rate_mc(const RandomizedMcConfig& cfg, size_t blocks,
                                size_t trials, uint64_t seed,
                                std::ostream* raw_csv = nullptr) {
    const Code& code = *cfg.code;
    const Field& f = *code.spec.field;
    const size_t n = code.spec.n;
    if (cfg.ell > n) throw UsageError("failure_rate_mc: wet count exceeds length");
    if (cfg.r >= code.spec.redundancy())
        throw UsageError("failure_rate_mc: r must be below n-k");
    std::mt19937_64 gen(seed);
    return detail::run_mc(
        blocks, trials,
        [&](size_t) {
            CoverObject cover;
            cover.x.resize(n);
            for (auto& v : cover.x)
                v = static_cast<uint32_t>(uniform_below(gen, f.q()));
            for (uint64_t w : sample_distinct(gen, n, cfg.ell))
                cover.wet.push_back(static_cast<size_t>(w) + 1);
            Vec m(code.spec.redundancy() - cfg.r);
            for (auto& v : m)
                v = static_cast<uint32_t>(uniform_below(gen, f.q()));
            try {
                solve_randomized(code, cover, m, cfg.r);
                return true;
            } catch (const Infeasible&) {
                return false;
            }
        },
        raw_csv);
}

inline McResult failure_rate_mc(const MatrixRankMcConfig& cfg, size_t blocks,
                                size_t trials, uint64_t seed,
                                std::ostream* raw_csv = nullptr) {
    if (cfg.ell > cfg.ncol_total)
        throw UsageError("failure_rate_mc: wet count exceeds total columns");
    const size_t dry = cfg.ncol_total - cfg.ell;
    if (dry < cfg.nrow)
        throw UsageError("failure_rate_mc: dry columns below row count");
    const Field& f = Field::gf(cfg.q);
    std::mt19937_64 gen(seed);
    return detail::run_mc(
        blocks, trials,
        [&](size_t) {
            Mat A(f, cfg.nrow, dry);
            for (size_t r = 0; r < cfg.nrow; ++r)
                for (size_t c = 0; c < dry; ++c)
                    A(r, c) = static_cast<uint32_t>(uniform_below(gen, f.q()));
            return rank_of(A) == cfg.nrow;
        },
        raw_csv);
}

}  // namespace wpsc
