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

#ifndef CLIFFALG_CYCLOTOMIC_HPP
#define CLIFFALG_CYCLOTOMIC_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "cliffalg/rational.hpp"

namespace cliffalg {

/// Coefficients of the d-th cyclotomic polynomial, ascending, monic with
/// integer entries.  Computed by exact division of t^d - 1 by the product
/// of the cyclotomic polynomials of the proper divisors of d.
std::vector<Rational> cyclotomic_polynomial(unsigned order);

/// The field Q(w) = Q[t]/Phi_d(t) for a primitive d-th root of unity w.
/// Instances are shared and immutable; obtain them through of_order().
class CycloField {
public:
    static std::shared_ptr<const CycloField> of_order(unsigned order);
    /// The rationals, represented as the order-1 field Q[t]/(t - 1).
    static std::shared_ptr<const CycloField> rationals() { return of_order(1); }

    unsigned order() const { return order_; }
    unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
    const std::vector<Rational>& modulus() const { return modulus_; }

private:
    explicit CycloField(unsigned order);
    unsigned order_;
    std::vector<Rational> modulus_;
};

/// Element of a cyclotomic field, stored as coordinates in the power basis
/// 1, w, ..., w^(deg-1).  Arithmetic between elements of different orders is
/// allowed only when one side is rational (order 1), which embeds anywhere.
class FieldElem {
public:
    FieldElem() : FieldElem(Rational(0)) {}
    FieldElem(long value) : FieldElem(Rational(value)) {}  // NOLINT: literals
    FieldElem(const Rational& value);                      // NOLINT: scalar promotion
    FieldElem(std::shared_ptr<const CycloField> field, std::vector<Rational> coords);

    static FieldElem zero(const std::shared_ptr<const CycloField>& field);
    static FieldElem one(const std::shared_ptr<const CycloField>& field);
    /// The class of t, i.e. the primitive root the field is built on.
    static FieldElem primitive_root(const std::shared_ptr<const CycloField>& field);
    static FieldElem primitive_root(unsigned order) {
        return primitive_root(CycloField::of_order(order));
    }

    const std::shared_ptr<const CycloField>& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when all coordinates above the constant one vanish.
    bool is_rational() const;
    /// The constant coordinate; throws unless is_rational().
    Rational rational_value() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);
    FieldElem& operator/=(const FieldElem& rhs);

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    /// Extended-Euclid inverse against the field modulus; throws on zero.
    FieldElem inverse() const;
    FieldElem pow(long exponent) const;

    /// Canonical text: a plain rational when possible, otherwise
    /// "(c0 + c1*w + c2*w^2 + ...)" with zero coordinates omitted.
    std::string str() const;

private:
    std::shared_ptr<const CycloField> field_;
    std::vector<Rational> coords_;  // length == field_->degree()
};

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

/// Gaussian binomial [n choose k] evaluated at a primitive order-th root of
/// unity, computed exactly in Q(w).  Requires 0 <= k <= n and, for the
/// product formula to be well defined, k == 0, k == n, or n < order + k.
FieldElem gauss_binomial_at_root(unsigned n, unsigned k, unsigned order);

/// [d choose k] at a primitive d-th root; zero for all 0 < k < d.
inline FieldElem gauss_binomial(unsigned d, unsigned k) {
    return gauss_binomial_at_root(d, k, d);
}

}  // namespace cliffalg

namespace Eigen {
template <>
struct NumTraits<cliffalg::FieldElem> : GenericNumTraits<cliffalg::FieldElem> {
    typedef cliffalg::FieldElem Real;
    typedef cliffalg::FieldElem NonInteger;
    typedef cliffalg::FieldElem Nested;
    typedef cliffalg::FieldElem Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 120,
        MulCost = 240
    };
    static inline Real epsilon() { return cliffalg::FieldElem(0); }
    static inline Real dummy_precision() { return cliffalg::FieldElem(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
