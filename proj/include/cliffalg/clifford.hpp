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

#ifndef CLIFFALG_CLIFFORD_HPP
#define CLIFFALG_CLIFFORD_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "cliffalg/fieldlinalg.hpp"
#include "cliffalg/multipoly.hpp"
#include "cliffalg/polymatrix.hpp"

namespace cliffalg {

/// Candidate matrix representation: n constant m x m matrices A_1..A_n that
/// should satisfy (x_1 A_1 + ... + x_n A_n)^d = f * I_m for the degree-d
/// form f in n variables.  The dimension m must be a multiple of d.
class GCARep {
public:
    GCARep(unsigned degree, unsigned nvars, MultiPoly form, std::vector<FieldMatrix> matrices);

    unsigned degree() const { return degree_; }    // d
    unsigned nvars() const { return nvars_; }      // n
    unsigned dimension() const { return dim_; }    // m
    const MultiPoly& form() const { return form_; }
    const std::vector<FieldMatrix>& matrices() const { return matrices_; }

private:
    unsigned degree_;
    unsigned nvars_;
    unsigned dim_;
    MultiPoly form_;
    std::vector<FieldMatrix> matrices_;
};

struct VerifyDiscrepancy {
    Eigen::Index row;
    Eigen::Index col;
    Monomial exponents;
    FieldElem expected;
    FieldElem actual;
};

struct VerifyReport {
    bool pass;
    std::optional<VerifyDiscrepancy> first_discrepancy;  // absent iff pass
};

/// Expands (sum x_i A_i)^d symbolically and compares it entrywise with
/// f * I_m.  The reported discrepancy is the first in (row, col, graded-lex
/// exponent) order.
VerifyReport verify_rep(const GCARep& rep);

/// The linear matrix sum x_i A_i with polynomial entries in n variables.
PolyMatrix linear_matrix(const GCARep& rep);

/// d x d clock matrix diag(1, w, ..., w^(d-1)) over Q(w_d).
FieldMatrix clock_matrix(unsigned d);

/// d x d cyclic shift with X[i][j] = 1 iff i = j+1 (mod d); satisfies
/// Z X = w X Z against the clock Z.
FieldMatrix shift_matrix(unsigned d);

/// Representation of the diagonal form sum c_i^d x_i^d on m = d^(n-1)
/// dimensions, built from clock/shift tensor factors:
///   e_i = Z^(i-1) (x) X (x) I^(n-1-i)  for i < n,   e_n = Z^(n-1),
/// with A_i = c_i e_i.  The result passes verify_rep by construction of the
/// commutation relations; callers certify post hoc.
GCARep generate_diagonal_rep(unsigned d, unsigned n, const std::vector<FieldElem>& roots);

/// w*I_m - sum x_i A_i in n+1 variables (x1 is the new variable; the form's
/// variables shift up by one).  Requires a verified representation.
PolyMatrix presentation_matrix(const GCARep& rep);

/// det(w*I - sum x_i A_i) == (w^d - f)^(m/d), exactly.
bool char_poly_identity(const GCARep& rep);

struct IrredReport {
    int algebra_dimension;
    bool irreducible;  // true iff algebra_dimension == m^2
    int word_length_reached;
};

/// Raised when the word-length budget is exhausted before the span closes;
/// carries the partial state instead of guessing a verdict.
class WordLengthExhausted : public std::runtime_error {
public:
    WordLengthExhausted(int dimension, unsigned max_len)
        : std::runtime_error("irreducible: word length budget " + std::to_string(max_len) +
                             " exhausted before span closure (dimension so far " +
                             std::to_string(dimension) + ")"),
          dimension_(dimension) {}
    int dimension() const { return dimension_; }

private:
    int dimension_;
};

/// Grows the linear span of words in the generators until it stops growing
/// or reaches the full matrix algebra; the span is closed once one more
/// round of left-multiplications adds nothing.
IrredReport irreducible(const GCARep& rep, unsigned max_word_len = 0);

/// Rank m/d of the matching bundle-side object.
unsigned ulrich_rank(const GCARep& rep);

}  // namespace cliffalg

#endif
