#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "permeq/scalar.hpp"

namespace permeq {

/// Dense matrix over Scalar with exact operations.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols, unsigned conductor = 1)
        : rows_(rows), cols_(cols), data_(rows * cols, Scalar::rational(0, conductor)) {}

    static Mat identity(size_t n, unsigned conductor = 1);
    static Mat zero(size_t rows, size_t cols, unsigned conductor = 1) {
        return Mat(rows, cols, conductor);
    }
    /// Permutation matrix P with P * e_j = e_{perm[j]}.
    static Mat permutation(const std::vector<size_t>& perm, unsigned conductor = 1);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    Mat transpose() const;
    Mat kron(const Mat& o) const;              // Kronecker / tensor product
    Mat inverse() const;                       // throws if singular
    bool invertible() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  private:
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Solve A x = b exactly; throws if the system is singular.
std::vector<Scalar> solve_linear(const Mat& a, const std::vector<Scalar>& b);

}  // namespace permeq
