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

#include "cliffalg/polymatrix.hpp"

#include <string>
#include <vector>

namespace cliffalg {

namespace {

// Tag a result with the ambient arity without ever shrinking a declared one
// (constants may carry a wider tag than the matrix arity).
MultiPoly widen(MultiPoly p, int nvars) {
    return p.nvars() >= nvars ? p : p.with_nvars(nvars);
}

}  // namespace

int matrix_arity(const PolyMatrix& m) {
    int nvars = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const MultiPoly& p = m(i, j);
            if (p.is_constant()) continue;
            if (nvars == 0)
                nvars = p.nvars();
            else if (p.nvars() != nvars)
                throw std::invalid_argument("PolyMatrix: entries of mixed arity");
        }
    return nvars;
}

PolyMatrix poly_identity(Eigen::Index size) {
    PolyMatrix m(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j) m(i, j) = MultiPoly(i == j ? 1 : 0);
    return m;
}

bool poly_matrix_equal(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

PolyMatrix poly_power_matrix(const PolyMatrix& m, unsigned exponent) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_power_matrix: not square");
    PolyMatrix base = m;
    PolyMatrix result = poly_identity(m.rows());
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        base = base * base;
        exponent >>= 1U;
    }
    return result;
}

MultiPoly determinant_bareiss(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const Eigen::Index n = m.rows();
    const int nvars = matrix_arity(m);
    if (n == 0) return MultiPoly(1);
    PolyMatrix a = m;
    int sign = 1;
    MultiPoly prev_pivot(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            Eigen::Index pivot = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (!a(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return MultiPoly().with_nvars(nvars);
            a.row(k).swap(a.row(pivot));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)).divide_exact(prev_pivot);
        prev_pivot = a(k, k);
    }
    MultiPoly det = widen(a(n - 1, n - 1), nvars);
    return sign < 0 ? -det : det;
}

namespace {

MultiPoly cofactor_det_rec(const PolyMatrix& a, std::vector<Eigen::Index>& cols,
                           Eigen::Index row) {
    const Eigen::Index n = a.rows();
    if (row == n) return MultiPoly(1);
    MultiPoly det;
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const Eigen::Index j = cols[t];
        if (a(row, j).is_zero()) continue;
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(t));
        MultiPoly minor = cofactor_det_rec(a, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(t), j);
        MultiPoly contrib = a(row, j) * minor;
        det = (t % 2 == 0) ? det + contrib : det - contrib;
    }
    return det;
}

}  // namespace

MultiPoly determinant_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const int nvars = matrix_arity(m);
    if (m.rows() == 0) return MultiPoly(1);
    std::vector<Eigen::Index> cols(static_cast<std::size_t>(m.cols()));
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = static_cast<Eigen::Index>(j);
    return widen(cofactor_det_rec(m, cols, 0), nvars);
}

MultiPoly determinant(const PolyMatrix& m) {
    return m.rows() <= 3 ? determinant_cofactor(m) : determinant_bareiss(m);
}

namespace {

MultiPoly pfaffian_rec(const PolyMatrix& a, std::vector<Eigen::Index>& idx) {
    if (idx.empty()) return MultiPoly(1);
    MultiPoly pf;
    const Eigen::Index i0 = idx.front();
    // j runs over the remaining indices; position t corresponds to column
    // index j = t+1 in the submatrix, so the sign alternates starting with +.
    for (std::size_t t = 1; t < idx.size(); ++t) {
        const Eigen::Index j = idx[t];
        if (a(i0, j).is_zero()) continue;
        std::vector<Eigen::Index> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t s = 1; s < idx.size(); ++s)
            if (s != t) rest.push_back(idx[s]);
        MultiPoly sub = pfaffian_rec(a, rest);
        MultiPoly contrib = a(i0, j) * sub;
        pf = (t % 2 == 1) ? pf + contrib : pf - contrib;
    }
    return pf;
}

}  // namespace

MultiPoly pfaffian(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: not square");
    const Eigen::Index n = m.rows();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size " + std::to_string(n));
    const int nvars = matrix_arity(m);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!m(i, i).is_zero())
            throw NotSkewSymmetricError(i, i, "pfaffian: nonzero diagonal entry (" +
                                                  std::to_string(i) + "," + std::to_string(i) +
                                                  ")");
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (m(i, j) != -m(j, i))
                throw NotSkewSymmetricError(
                    i, j,
                    "pfaffian: entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not the negative of its transpose");
    }
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<Eigen::Index>(i);
    return pfaffian_rec(m, idx).with_nvars(nvars);
}

}  // namespace cliffalg
