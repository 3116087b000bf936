/*
   Copyright 2026 The cliffalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CLIFFALG_FIELDLINALG_HPP
#define CLIFFALG_FIELDLINALG_HPP

#include <Eigen/Core>
#include <map>
#include <optional>
#include <vector>

#include "cliffalg/cyclotomic.hpp"
#include "cliffalg/rational.hpp"

namespace cliffalg {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using FieldMatrix = DenseMatrix<FieldElem>;
using RationalMatrix = DenseMatrix<Rational>;

template <class Scalar>
DenseMatrix<Scalar> kronecker(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    DenseMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Rank by Gaussian elimination.  Exactness makes any nonzero pivot valid,
/// so the first one in column order is taken (deterministic).
template <class Scalar>
int rank_exact(DenseMatrix<Scalar> m) {
    int rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row) m.row(pivot).swap(m.row(row));
        const Scalar inv = m(row, col).inverse();
        for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const Scalar factor = m(i, col) * inv;
            for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        ++rank;
        ++row;
    }
    return rank;
}

template <class Scalar>
Scalar determinant_exact(DenseMatrix<Scalar> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant_exact: not square");
    Scalar det(1);
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = col; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Scalar(0);
        if (pivot != col) {
            m.row(pivot).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        const Scalar inv = m(col, col).inverse();
        for (Eigen::Index i = col + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const Scalar factor = m(i, col) * inv;
            for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

/// Gauss-Jordan inverse; std::nullopt for singular input.
template <class Scalar>
std::optional<DenseMatrix<Scalar>> inverse_exact(const DenseMatrix<Scalar>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse_exact: not square");
    const Eigen::Index n = m.rows();
    DenseMatrix<Scalar> a = m;
    DenseMatrix<Scalar> inv(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = Scalar(i == j ? 1 : 0);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = col; i < n; ++i)
            if (!a(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        const Scalar piv_inv = a(col, col).inverse();
        for (Eigen::Index j = 0; j < n; ++j) {
            a(col, j) *= piv_inv;
            inv(col, j) *= piv_inv;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            const Scalar factor = a(i, col);
            for (Eigen::Index j = 0; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

/// Incrementally maintained row-echelon basis of a subspace of k^n; used to
/// grow word spans until closure.  Deterministic: pivots are leftmost
/// nonzero coordinates, rows normalized to pivot 1.
template <class Scalar>
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t width) : width_(width) {}

    /// Reduce v against the basis; if a nonzero remainder survives, add it
    /// and return true.
    bool insert(std::vector<Scalar> v) {
        if (v.size() != width_) throw std::invalid_argument("EchelonSpan: width mismatch");
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero()) continue;
            const Scalar factor = v[pivot];
            for (std::size_t j = pivot; j < width_; ++j) v[j] -= factor * row[j];
        }
        std::size_t pivot = width_;
        for (std::size_t j = 0; j < width_; ++j)
            if (!v[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot == width_) return false;
        const Scalar inv = v[pivot].inverse();
        for (std::size_t j = pivot; j < width_; ++j) v[j] *= inv;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    int dimension() const { return static_cast<int>(rows_.size()); }

private:
    std::size_t width_;
    std::map<std::size_t, std::vector<Scalar>> rows_;  // pivot column -> row
};

}  // namespace cliffalg

#endif
