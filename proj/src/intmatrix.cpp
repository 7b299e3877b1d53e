#include "purefields/intmatrix.hpp"

#include <algorithm>
#include <optional>

namespace purefields {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::row(size_t i) const {
    return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void IntMatrix::set_row(size_t i, const std::vector<Int>& r) {
    std::copy(r.begin(), r.end(), a_.begin() + i * cols_);
}

void IntMatrix::append_row(const std::vector<Int>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

namespace {

// Lower-triangular HNF via gcd elimination, columns processed right to left.
// Entering column c every working row is zero in all columns > c.
std::vector<std::optional<std::vector<Int>>> hnf_pivots(const IntMatrix& mat, size_t n) {
    std::vector<std::vector<Int>> work;
    for (size_t i = 0; i < mat.rows(); ++i) work.push_back(mat.row(i));
    std::vector<std::optional<std::vector<Int>>> pivot(n);

    for (size_t c = n; c-- > 0;) {
        for (;;) {
            size_t best = work.size();
            for (size_t i = 0; i < work.size(); ++i) {
                if (work[i][c] == 0) continue;
                if (best == work.size() ||
                    cmp(abs(work[i][c]), abs(work[best][c])) < 0)
                    best = i;
            }
            if (best == work.size()) break;  // column is zero
            bool others = false;
            for (size_t i = 0; i < work.size(); ++i) {
                if (i == best || work[i][c] == 0) continue;
                others = true;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), work[i][c].get_mpz_t(), work[best][c].get_mpz_t());
                for (size_t j = 0; j <= c; ++j) work[i][j] -= q * work[best][j];
            }
            if (!others) {
                std::vector<Int> p = work[best];
                if (p[c] < 0)
                    for (Int& x : p) x = -x;
                pivot[c] = std::move(p);
                work.erase(work.begin() + best);
                break;
            }
        }
    }
    // Reduce below-diagonal entries into [0, diagonal); descending columns so
    // a reduction never disturbs an already-reduced one.
    for (size_t j = n; j-- > 0;) {
        if (!pivot[j]) continue;
        for (size_t i = j + 1; i < n; ++i) {
            if (!pivot[i]) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), (*pivot[i])[j].get_mpz_t(), (*pivot[j])[j].get_mpz_t());
            if (q == 0) continue;
            for (size_t k = 0; k <= j; ++k) (*pivot[i])[k] -= q * (*pivot[j])[k];
        }
    }
    return pivot;
}

}  // namespace

IntMatrix hnf(const IntMatrix& mat) {
    auto pivot = hnf_pivots(mat, mat.cols());
    size_t rank = 0;
    for (auto& p : pivot)
        if (p) ++rank;
    if (rank != mat.rows()) throw math_error("hnf: rank-deficient input");
    IntMatrix out(rank, mat.cols());
    size_t r = 0;
    for (auto& p : pivot)
        if (p) out.set_row(r++, *p);
    return out;
}

IntMatrix hnf_rows(const IntMatrix& mat) {
    auto pivot = hnf_pivots(mat, mat.cols());
    IntMatrix out;
    for (auto& p : pivot)
        if (p) out.append_row(*p);
    return out;
}

Int diagonal_product(const IntMatrix& mat) {
    Int d(1);
    for (size_t i = 0; i < std::min(mat.rows(), mat.cols()); ++i) d *= mat.at(i, i);
    return d;
}

}  // namespace purefields
