#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "field.hpp"

namespace wpsc {

// A vector of field-element values. Values are plain uint32_t in [0, q); the
// owning Field is passed alongside wherever arithmetic happens.
using Vec = std::vector<uint32_t>;

class Mat {
public:
    Mat(const Field& f, size_t rows, size_t cols)
        : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(const Field& f, size_t n) {
        Mat m(f, n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return *f_; }

    uint32_t operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    uint32_t& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.f_->q() == b.f_->q() && a.rows_ == b.rows_ &&
               a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    const Field* f_;
    size_t rows_, cols_;
    Vec a_;
};

// x * H^T: one value per row of H.
inline Vec syndrome_of(const Mat& H, const Vec& x) {
    if (x.size() != H.cols()) throw UsageError("syndrome_of: length mismatch");
    const Field& f = H.field();
    Vec s(H.rows(), 0);
    for (size_t r = 0; r < H.rows(); ++r) {
        uint32_t acc = 0;
        for (size_t c = 0; c < H.cols(); ++c)
            acc = f.add(acc, f.mul(H(r, c), x[c]));
        s[r] = acc;
    }
    return s;
}

inline size_t hamming_distance(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw UsageError("hamming_distance: length mismatch");
    size_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

inline size_t rank_of(Mat A) {
    const Field& f = A.field();
    size_t rank = 0;
    for (size_t col = 0; col < A.cols() && rank < A.rows(); ++col) {
        size_t pivot = rank;
        while (pivot < A.rows() && A(pivot, col) == 0) ++pivot;
        if (pivot == A.rows()) continue;
        for (size_t c = col; c < A.cols(); ++c) std::swap(A(rank, c), A(pivot, c));
        const uint32_t pinv = f.inv(A(rank, col));
        for (size_t r = rank + 1; r < A.rows(); ++r) {
            const uint32_t factor = f.mul(A(r, col), pinv);
            if (factor == 0) continue;
            for (size_t c = col; c < A.cols(); ++c)
                A(r, c) = f.sub(A(r, c), f.mul(factor, A(rank, c)));
        }
        ++rank;
    }
    return rank;
}

// Solve y * H^T = target subject to y_i = x_i wherever wet_mask[i] != 0.
// Unconstrained positions not needed as pivots keep their x values, so the
// solution is deterministic and change-minimal within the elimination's
// pivot choice. Throws RankDeficient when the system is inconsistent.
inline Vec solve_wet_linear(const Mat& H, const Vec& target, const Vec& x,
                            const std::vector<uint8_t>& wet_mask) {
    const Field& f = H.field();
    const size_t R = H.rows(), N = H.cols();
    if (x.size() != N) throw UsageError("solve_wet_linear: cover length mismatch");
    if (target.size() != R) throw UsageError("solve_wet_linear: target length mismatch");
    if (wet_mask.size() != N) throw UsageError("solve_wet_linear: mask length mismatch");

    std::vector<size_t> dry;
    for (size_t i = 0; i < N; ++i)
        if (!wet_mask[i]) dry.push_back(i);
    const size_t D = dry.size();

    // Augmented system over the dry unknowns; wet contributions fold into the
    // right-hand side.
    Mat A(f, R, D + 1);
    for (size_t r = 0; r < R; ++r) {
        for (size_t j = 0; j < D; ++j) A(r, j) = H(r, dry[j]);
        uint32_t rhs = target[r];
        for (size_t i = 0; i < N; ++i)
            if (wet_mask[i]) rhs = f.sub(rhs, f.mul(H(r, i), x[i]));
        A(r, D) = rhs;
    }

    // Gauss-Jordan with partial pivoting by first nonzero row.
    std::vector<size_t> pivot_col;
    size_t done = 0;
    for (size_t col = 0; col < D && done < R; ++col) {
        size_t pr = done;
        while (pr < R && A(pr, col) == 0) ++pr;
        if (pr == R) continue;
        for (size_t c = 0; c <= D; ++c) std::swap(A(done, c), A(pr, c));
        const uint32_t pinv = f.inv(A(done, col));
        for (size_t c = 0; c <= D; ++c) A(done, c) = f.mul(A(done, c), pinv);
        for (size_t r = 0; r < R; ++r) {
            if (r == done) continue;
            const uint32_t factor = A(r, col);
            if (factor == 0) continue;
            for (size_t c = 0; c <= D; ++c)
                A(r, c) = f.sub(A(r, c), f.mul(factor, A(done, c)));
        }
        pivot_col.push_back(col);
        ++done;
    }

    for (size_t r = done; r < R; ++r)
        if (A(r, D) != 0)
            throw RankDeficient("solve_wet_linear: adjustment not in dry-column span");

    Vec y = x;
    std::vector<uint8_t> is_pivot(D, 0);
    for (size_t col : pivot_col) is_pivot[col] = 1;
    // Free unknowns keep their cover values; pivots absorb the rest.
    for (size_t r = 0; r < done; ++r) {
        uint32_t v = A(r, D);
        for (size_t j = 0; j < D; ++j)
            if (!is_pivot[j]) v = f.sub(v, f.mul(A(r, j), x[dry[j]]));
        y[dry[pivot_col[r]]] = v;
    }
    return y;
}

}  // namespace wpsc
