#pragma once

#include <cstddef>
#include <vector>

#include "hh/rational.hpp"

namespace hh {

// Dense rational matrix, row-major. Sizes here are small (slice dimensions),
// so no sparsity is attempted.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    // [this; other] stacked vertically; column counts must agree.
    QMatrix stacked(const QMatrix& other) const;

    bool is_zero() const {
        for (const Rational& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Rank over Q via fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing each row's denominators. Pivoting is deterministic:
// first nonzero entry in column order. Every interior division is checked to
// be exact.
std::size_t exact_rank(const QMatrix& m);

// cols - rank; the dimension of the right kernel.
std::size_t kernel_dimension(const QMatrix& m);

}  // namespace hh
