// Copyright 2026 The qcommbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcb {

using cplx = std::complex<double>;

/// Small dense complex matrix (gate and Kraus operators). Row-major.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> values);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const cplx> diag);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    cplx &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<const cplx> data() const noexcept {
        return data_;
    }

    Matrix adjoint() const;
    Matrix conjugate() const;
    Matrix operator*(const Matrix &rhs) const;
    Matrix operator+(const Matrix &rhs) const;
    Matrix operator*(cplx scale) const;

    /// Kronecker product; `*this` occupies the high-order index bits.
    Matrix kron(const Matrix &rhs) const;

    /// Largest absolute entry-wise difference. Shapes must match.
    double max_abs_diff(const Matrix &other) const;
    bool approx_equal(const Matrix &other, double tol) const;
    bool is_unitary(double tol) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

namespace detail {

/// Applies `m` (dimension 2^k) to the k index bits `bit_positions` of a
/// vector of 2^num_bits amplitudes. bit_positions[0] is the most significant
/// bit of the matrix's local index. Bit position 0 is the least significant
/// bit of the global index.
void apply_matrix(std::span<cplx> amps, std::size_t num_bits, std::span<const std::size_t> bit_positions,
                  const Matrix &m);

}  // namespace detail

}  // namespace qcb
