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

#include "cliffalg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace cliffalg {

namespace {

// Dense univariate polynomials over Q, ascending coefficients, trimmed.
using UniPoly = std::vector<Rational>;

UniPoly trimmed(UniPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int degree_of(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return trimmed(std::move(out));
}

// Long division; the divisor must be nonzero.
std::pair<UniPoly, UniPoly> uni_divmod(UniPoly num, const UniPoly& den) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    num = trimmed(std::move(num));
    const int dd = degree_of(den);
    const Rational lead_inv = den.back().inverse();
    if (degree_of(num) < dd) return {{}, std::move(num)};
    UniPoly quot(num.size() - den.size() + 1, Rational(0));
    for (int i = degree_of(num); i >= dd; --i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        if (num[ui].is_zero()) continue;
        Rational c = num[ui] * lead_inv;
        quot[ui - static_cast<std::size_t>(dd)] = c;
        for (int j = 0; j <= dd; ++j)
            num[static_cast<std::size_t>(i - dd + j)] -= c * den[static_cast<std::size_t>(j)];
    }
    return {trimmed(std::move(quot)), trimmed(std::move(num))};
}

UniPoly uni_mod(UniPoly num, const UniPoly& den) {
    return uni_divmod(std::move(num), den).second;
}

UniPoly uni_scale(UniPoly p, const Rational& c) {
    for (auto& x : p) x *= c;
    return trimmed(std::move(p));
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return trimmed(std::move(out));
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned order) {
    if (order == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
    static std::map<unsigned, UniPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    // Recursion bottoms out at Phi_1 = t - 1; compute divisors' polynomials
    // without re-locking.
    std::vector<unsigned> stack{order};
    while (!stack.empty()) {
        unsigned d = stack.back();
        if (cache.count(d)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0 && !cache.count(e)) {
                stack.push_back(e);
                ready = false;
            }
        if (!ready) continue;
        stack.pop_back();
        if (d == 1) {
            cache.emplace(1u, UniPoly{Rational(-1), Rational(1)});
            continue;
        }
        UniPoly num(d + 1, Rational(0));
        num[0] = Rational(-1);
        num[d] = Rational(1);
        for (unsigned e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            auto [q, r] = uni_divmod(std::move(num), cache.at(e));
            if (!r.empty())
                throw std::logic_error("cyclotomic_polynomial: division was not exact");
            num = std::move(q);
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(order);
}

CycloField::CycloField(unsigned order) : order_(order), modulus_(cyclotomic_polynomial(order)) {}

std::shared_ptr<const CycloField> CycloField::of_order(unsigned order) {
    if (order == 0) throw std::invalid_argument("CycloField: order must be >= 1");
    static std::map<unsigned, std::shared_ptr<const CycloField>> registry;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(order);
    if (it != registry.end()) return it->second;
    auto field = std::shared_ptr<const CycloField>(new CycloField(order));
    registry.emplace(order, field);
    return field;
}

FieldElem::FieldElem(const Rational& value)
    : field_(CycloField::rationals()), coords_{value} {}

FieldElem::FieldElem(std::shared_ptr<const CycloField> field, std::vector<Rational> coords)
    : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("FieldElem: null field");
    const std::size_t deg = field_->degree();
    if (coords.size() > deg) {
        UniPoly reduced = uni_mod(std::move(coords), field_->modulus());
        reduced.resize(deg, Rational(0));
        coords_ = std::move(reduced);
    } else {
        coords.resize(deg, Rational(0));
        coords_ = std::move(coords);
    }
}

FieldElem FieldElem::zero(const std::shared_ptr<const CycloField>& field) {
    return FieldElem(field, {});
}

FieldElem FieldElem::one(const std::shared_ptr<const CycloField>& field) {
    return FieldElem(field, {Rational(1)});
}

FieldElem FieldElem::primitive_root(const std::shared_ptr<const CycloField>& field) {
    return FieldElem(field, {Rational(0), Rational(1)});
}

bool FieldElem::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (coords_.empty() || !coords_[0].is_one()) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

bool FieldElem::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

Rational FieldElem::rational_value() const {
    if (!is_rational()) throw std::domain_error("FieldElem: not a rational value");
    return coords_.empty() ? Rational(0) : coords_[0];
}

namespace {

// Lift both operands into a common field; only rational values embed
// elsewhere.
std::shared_ptr<const CycloField> common_field(const FieldElem& a, const FieldElem& b) {
    const unsigned oa = a.field()->order(), ob = b.field()->order();
    if (oa == ob) return a.field();
    if (a.is_rational()) return b.field();
    if (b.is_rational()) return a.field();
    throw std::invalid_argument("FieldElem: mismatched cyclotomic fields (orders " +
                                std::to_string(oa) + " and " + std::to_string(ob) + ")");
}

std::vector<Rational> lifted_coords(const FieldElem& x,
                                    const std::shared_ptr<const CycloField>& field) {
    std::vector<Rational> c = x.coords();
    c.resize(field->degree(), Rational(0));
    return c;
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    auto field = common_field(a, b);
    std::vector<Rational> ca = lifted_coords(a, field), cb = lifted_coords(b, field);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return FieldElem(field, std::move(ca));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    auto field = common_field(a, b);
    std::vector<Rational> ca = lifted_coords(a, field), cb = lifted_coords(b, field);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] -= cb[i];
    return FieldElem(field, std::move(ca));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    auto field = common_field(a, b);
    UniPoly prod = uni_mul(lifted_coords(a, field), lifted_coords(b, field));
    return FieldElem(field, uni_mod(std::move(prod), field->modulus()));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.is_rational() && b.is_rational()) return a.rational_value() == b.rational_value();
    if (a.field()->order() != b.field()->order()) return false;
    return a.coords() == b.coords();
}

FieldElem FieldElem::operator-() const {
    std::vector<Rational> c = coords_;
    for (auto& x : c) x = -x;
    return FieldElem(field_, std::move(c));
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) { return *this = *this + rhs; }
FieldElem& FieldElem::operator-=(const FieldElem& rhs) { return *this = *this - rhs; }
FieldElem& FieldElem::operator*=(const FieldElem& rhs) { return *this = *this * rhs; }
FieldElem& FieldElem::operator/=(const FieldElem& rhs) { return *this = *this / rhs; }

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElem: inverse of zero");
    // Extended Euclid in Q[t] against the (irreducible) modulus: the gcd is a
    // nonzero constant, and the Bezout coefficient of *this is the inverse.
    UniPoly r0 = field_->modulus(), r1 = trimmed(coords_);
    UniPoly s0 = {}, s1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = uni_divmod(std::move(r0), r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s_next = uni_sub(s0, uni_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    if (degree_of(r0) != 0)
        throw std::logic_error("FieldElem: modulus is not coprime to the element");
    return FieldElem(field_, uni_scale(std::move(s0), r0[0].inverse()));
}

FieldElem FieldElem::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    FieldElem base = *this;
    FieldElem result = FieldElem::one(field_);
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

std::string FieldElem::str() const {
    if (is_rational()) return rational_value().str();
    std::string out = "(";
    bool first = true;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        const Rational& c = coords_[k];
        if (c.is_zero()) continue;
        if (first) {
            out += c.str();
            first = false;
        } else {
            out += (c.sign() < 0) ? " - " : " + ";
            out += c.abs().str();
        }
        if (k >= 1) {
            out += "*w";
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    out += ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.str(); }

FieldElem gauss_binomial_at_root(unsigned n, unsigned k, unsigned order) {
    if (k > n) throw std::invalid_argument("gauss_binomial_at_root: k > n");
    auto field = CycloField::of_order(order);
    if (k == 0 || k == n) return FieldElem::one(field);
    const FieldElem one = FieldElem::one(field);
    const FieldElem root = FieldElem::primitive_root(field);
    FieldElem result = one;
    for (unsigned j = 1; j <= k; ++j) {
        FieldElem den = one - root.pow(static_cast<long>(j));
        if (den.is_zero())
            throw std::domain_error("gauss_binomial_at_root: vanishing denominator");
        result *= (one - root.pow(static_cast<long>(n - j + 1))) / den;
    }
    return result;
}

}  // namespace cliffalg
