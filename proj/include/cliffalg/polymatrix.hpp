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

#ifndef CLIFFALG_POLYMATRIX_HPP
#define CLIFFALG_POLYMATRIX_HPP

#include <Eigen/Core>
#include <stdexcept>

#include "cliffalg/multipoly.hpp"

namespace cliffalg {

/// Square matrix with polynomial entries; all entries must share one arity
/// (constants bridge, as for MultiPoly itself).
using PolyMatrix = Eigen::Matrix<MultiPoly, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest arity among the entries; throws when two nonconstant entries
/// disagree.
int matrix_arity(const PolyMatrix& m);

PolyMatrix poly_identity(Eigen::Index size);

bool poly_matrix_equal(const PolyMatrix& a, const PolyMatrix& b);

/// Exact e-th power under matrix multiplication (binary exponentiation;
/// exact arithmetic makes the association order immaterial).
PolyMatrix poly_power_matrix(const PolyMatrix& m, unsigned exponent);

/// Fraction-free (Bareiss) determinant; every division is exact in the
/// polynomial ring.  Row pivoting only, sign tracked.
MultiPoly determinant_bareiss(const PolyMatrix& m);

/// Cofactor expansion along the first row; intended for small sizes and as
/// an independent cross-check of the fraction-free route.
MultiPoly determinant_cofactor(const PolyMatrix& m);

/// Cofactor expansion for size <= 3, fraction-free elimination above.
MultiPoly determinant(const PolyMatrix& m);

/// Raised by pfaffian() on inputs that are not skew-symmetric; names the
/// offending entry.
class NotSkewSymmetricError : public std::domain_error {
public:
    NotSkewSymmetricError(Eigen::Index row, Eigen::Index col, const std::string& what)
        : std::domain_error(what), row_(row), col_(col) {}
    Eigen::Index row() const { return row_; }
    Eigen::Index col() const { return col_; }

private:
    Eigen::Index row_;
    Eigen::Index col_;
};

/// Pfaffian of a skew-symmetric matrix of even size 2k by first-row
/// expansion: Pf(M) = sum_{j>=2} (-1)^j m_{1j} Pf(M_{1^,j^}).
/// Satisfies Pf(M)^2 = det(M).  Throws NotSkewSymmetricError or
/// std::invalid_argument (odd size).
MultiPoly pfaffian(const PolyMatrix& m);

}  // namespace cliffalg

#endif
