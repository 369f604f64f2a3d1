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

#include "qcb/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "qcb/error.hpp"

namespace qcb {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> values)
    : rows_(rows), cols_(cols), data_(values) {
    if (data_.size() != rows * cols) {
        throw Error("Matrix: initializer has wrong number of entries");
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const cplx> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Matrix Matrix::conjugate() const {
    Matrix out = *this;
    for (auto &v : out.data_) {
        v = std::conj(v);
    }
    return out;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw Error("Matrix: shape mismatch in product");
    }
    Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx a = (*this)(r, k);
            if (a == cplx{}) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error("Matrix: shape mismatch in sum");
    }
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] += rhs.data_[i];
    }
    return out;
}

Matrix Matrix::operator*(cplx scale) const {
    Matrix out = *this;
    for (auto &v : out.data_) {
        v *= scale;
    }
    return out;
}

Matrix Matrix::kron(const Matrix &rhs) const {
    Matrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (std::size_t r1 = 0; r1 < rows_; ++r1) {
        for (std::size_t c1 = 0; c1 < cols_; ++c1) {
            const cplx a = (*this)(r1, c1);
            for (std::size_t r2 = 0; r2 < rhs.rows_; ++r2) {
                for (std::size_t c2 = 0; c2 < rhs.cols_; ++c2) {
                    out(r1 * rhs.rows_ + r2, c1 * rhs.cols_ + c2) = a * rhs(r2, c2);
                }
            }
        }
    }
    return out;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error("Matrix: shape mismatch in comparison");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

bool Matrix::approx_equal(const Matrix &other, double tol) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && max_abs_diff(other) <= tol;
}

bool Matrix::is_unitary(double tol) const {
    if (!is_square()) {
        return false;
    }
    return (adjoint() * *this).approx_equal(identity(rows_), tol);
}

namespace detail {

void apply_matrix(std::span<cplx> amps, std::size_t num_bits, std::span<const std::size_t> bit_positions,
                  const Matrix &m) {
    const std::size_t k = bit_positions.size();
    const std::size_t local_dim = std::size_t{1} << k;
    if (m.rows() != local_dim || m.cols() != local_dim) {
        throw Error("apply_matrix: matrix dimension does not match target count");
    }
    if (amps.size() != (std::size_t{1} << num_bits)) {
        throw Error("apply_matrix: amplitude buffer has wrong length");
    }

    // offsets[j] is the global index delta of local basis state j.
    std::vector<std::size_t> offsets(local_dim, 0);
    for (std::size_t j = 0; j < local_dim; ++j) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((j >> (k - 1 - t)) & 1) {
                offsets[j] |= std::size_t{1} << bit_positions[t];
            }
        }
    }
    std::vector<std::size_t> sorted(bit_positions.begin(), bit_positions.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<cplx> in(local_dim);
    const std::size_t outer = std::size_t{1} << (num_bits - k);
    for (std::size_t b = 0; b < outer; ++b) {
        // Spread the bits of b around the (zeroed) target positions.
        std::size_t base = b;
        for (std::size_t pos : sorted) {
            const std::size_t low = base & ((std::size_t{1} << pos) - 1);
            base = ((base >> pos) << (pos + 1)) | low;
        }
        for (std::size_t j = 0; j < local_dim; ++j) {
            in[j] = amps[base | offsets[j]];
        }
        for (std::size_t r = 0; r < local_dim; ++r) {
            cplx acc{};
            for (std::size_t c = 0; c < local_dim; ++c) {
                acc += m(r, c) * in[c];
            }
            amps[base | offsets[r]] = acc;
        }
    }
}

}  // namespace detail

}  // namespace qcb
