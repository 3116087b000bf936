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

#ifndef CLIFFALG_MULTIPOLY_HPP
#define CLIFFALG_MULTIPOLY_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "cliffalg/cyclotomic.hpp"
#include "cliffalg/rational.hpp"

namespace cliffalg {

/// Exponent vector of a monomial; entry i is the power of variable i
/// (0-based in code, printed 1-based as x1, x2, ...).
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

/// Graded-lexicographic order: higher total degree first, ties broken
/// lexicographically with variable 0 strongest.
bool graded_lex_greater(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over a cyclotomic field.  Terms are kept
/// in strictly descending graded-lex order with nonzero coefficients; this
/// makes printing and term maps canonical.
///
/// Constants have no variable semantics, so arithmetic between polynomials
/// of different arities is allowed exactly when one side is constant; the
/// result takes the larger arity.  A mismatch between two nonconstant
/// polynomials throws.
class MultiPoly {
public:
    struct Term {
        Monomial exponents;
        FieldElem coeff;
    };

    MultiPoly() : nvars_(0) {}
    MultiPoly(long value) : MultiPoly(FieldElem(value)) {}  // NOLINT: literals
    MultiPoly(const Rational& value) : MultiPoly(FieldElem(value)) {}  // NOLINT
    MultiPoly(const FieldElem& value);                                 // NOLINT

    /// x_index as a polynomial in nvars variables (index is 0-based).
    static MultiPoly variable(int index, int nvars);
    static MultiPoly monomial(const FieldElem& coeff, Monomial exponents);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; throws otherwise.
    FieldElem constant_value() const;

    /// Coefficient of the given exponent vector (zero when absent).  The
    /// vector must have length nvars().
    FieldElem coefficient(const Monomial& exponents) const;

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    const Term& leading_term() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned exponent) const;
    MultiPoly derivative(int var) const;

    /// Substitute x_var -> lambda * x_var.
    MultiPoly scale_variable(int var, const FieldElem& lambda) const;

    /// Reinterpret in count additional leading variables (all exponents 0);
    /// existing variable i becomes variable i + count.
    MultiPoly prepend_variables(int count) const;

    /// Reinterpret in a wider arity, padding trailing exponents with zeros.
    MultiPoly with_nvars(int nvars) const;

    FieldElem evaluate(const std::vector<FieldElem>& point) const;

    /// Exact quotient; throws std::domain_error when the division does not
    /// terminate with remainder zero.
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    /// Canonical text form: graded-lex descending terms, explicit
    /// coefficients, e.g. "1*x1^2 - 1*x2*x3 + 1/2".
    std::string str() const;

private:
    static MultiPoly make(int nvars, std::vector<Term> sorted_terms);
    friend struct MultiPolyBuilder;

    int nvars_;
    std::vector<Term> terms_;  // descending graded-lex, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace cliffalg

namespace Eigen {
template <>
struct NumTraits<cliffalg::MultiPoly> : GenericNumTraits<cliffalg::MultiPoly> {
    typedef cliffalg::MultiPoly Real;
    typedef cliffalg::MultiPoly NonInteger;
    typedef cliffalg::MultiPoly Nested;
    typedef cliffalg::MultiPoly Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 32,
        AddCost = 500,
        MulCost = 1000
    };
    static inline Real epsilon() { return cliffalg::MultiPoly(); }
    static inline Real dummy_precision() { return cliffalg::MultiPoly(); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
