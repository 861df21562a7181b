// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace maskbench {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Every dimension in this project is tiny
// (hard cap 64 on state dimensions), so the implementation favors clarity
// over blocking or sparsity.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Complex>& data() const { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    double max_abs() const;
    double max_abs_diff(const ComplexMatrix& other) const;
    double frobenius_norm() const;
    bool is_finite() const;

    // (A + A†)/2; square matrices only.
    ComplexMatrix hermitian_part() const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

// Kronecker product, left factor most significant: index = i_a * b.rows + i_b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigendecomposition of the Hermitian part of a square matrix by cyclic
// complex Jacobi rotations. Eigenvalues ascending; column k of `vectors`
// pairs with values[k], so hermitian_part(A) == V diag(values) V†.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

HermitianEigen eigen_hermitian(const ComplexMatrix& m);

}  // namespace maskbench
