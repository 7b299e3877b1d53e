#include <doctest.h>

#include <random>

#include "purefields/intmatrix.hpp"

using namespace purefields;

namespace {

IntMatrix from_rows(std::vector<std::vector<long>> rows) {
    IntMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Random unimodular matrix as a product of elementary row operations.
IntMatrix random_unimodular(size_t n, std::mt19937& rng) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int step = 0; step < 20; ++step) {
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        long c = coef(rng);
        for (size_t j = 0; j < n; ++j) u.at(a, j) += c * u.at(b, j);
    }
    return u;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k)
            for (size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    return c;
}

}  // namespace

TEST_CASE("hnf frozen examples") {
    CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
    CHECK(hnf(from_rows({{0, 1}, {1, 0}})) == from_rows({{1, 0}, {0, 1}}));
    CHECK(hnf(from_rows({{2, 0}, {3, 1}})) == from_rows({{2, 0}, {1, 1}}));
    CHECK_THROWS_AS(hnf(from_rows({{1, 2}, {2, 4}})), math_error);
}

TEST_CASE("hnf shape invariants") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 2 + trial % 4;
        IntMatrix m(n, n);
        do {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        } while ([&] {
            try {
                hnf(m);
                return false;
            } catch (const math_error&) {
                return true;
            }
        }());
        IntMatrix h = hnf(m);
        for (size_t i = 0; i < n; ++i) {
            CHECK(h.at(i, i) > 0);
            for (size_t j = i + 1; j < n; ++j) CHECK(h.at(i, j) == 0);
            for (size_t j = 0; j < i; ++j) {
                CHECK(h.at(i, j) >= 0);
                CHECK(h.at(i, j) < h.at(j, j));
            }
        }
        // Idempotence and invariance under unimodular row transforms.
        CHECK(hnf(h) == h);
        CHECK(hnf(matmul(random_unimodular(n, rng), m)) == h);
    }
}
