#ifndef PUREFIELDS_INTMATRIX_HPP
#define PUREFIELDS_INTMATRIX_HPP

#include <vector>

#include "purefields/numeric.hpp"

namespace purefields {

// Rectangular integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    std::vector<Int> row(size_t i) const;
    void set_row(size_t i, const std::vector<Int>& r);
    void append_row(const std::vector<Int>& r);

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    size_t rows_, cols_;
    std::vector<Int> a_;
};

// Hermite normal form, lower-triangular convention: row i has its last
// non-zero entry on the diagonal, diagonal entries positive, below-diagonal
// entries reduced into [0, diagonal).  Row span is preserved.  Throws
// math_error on rank-deficient input.
IntMatrix hnf(const IntMatrix& mat);

// Same reduction but rank deficiency is allowed: returns only the pivot rows
// (one per pivot column, ascending).  Used for lattice updates where the
// input deliberately stacks redundant generators.
IntMatrix hnf_rows(const IntMatrix& mat);

// Product of diagonal entries of a square triangular matrix.
Int diagonal_product(const IntMatrix& mat);

}  // namespace purefields

#endif
