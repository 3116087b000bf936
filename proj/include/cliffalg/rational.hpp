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

#ifndef CLIFFALG_RATIONAL_HPP
#define CLIFFALG_RATIONAL_HPP

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>

namespace cliffalg {

// Expression templates are disabled: `auto x = a*b;` on the et_on variant
// binds a lazy proxy that aliases its operands.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact rational number.  Canonical form: gcd(|num|, den) = 1 and den >= 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit for literals
    explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational inverse() const;

    /// Integer power, negative exponents via the inverse.
    Rational pow(long exponent) const;

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

private:
    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cliffalg

namespace Eigen {
template <>
struct NumTraits<cliffalg::Rational> : GenericNumTraits<cliffalg::Rational> {
    typedef cliffalg::Rational Real;
    typedef cliffalg::Rational NonInteger;
    typedef cliffalg::Rational Nested;
    typedef cliffalg::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40
    };
    static inline Real epsilon() { return cliffalg::Rational(0); }
    static inline Real dummy_precision() { return cliffalg::Rational(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif
