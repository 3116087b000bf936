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

#include "cliffalg/multipoly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace cliffalg {

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool graded_lex_greater(const Monomial& a, const Monomial& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return graded_lex_greater(a, b);
    }
};

Monomial padded(Monomial m, int nvars) {
    m.resize(static_cast<std::size_t>(nvars), 0);
    return m;
}

}  // namespace

MultiPoly MultiPoly::make(int nvars, std::vector<Term> sorted_terms) {
    MultiPoly p;
    p.nvars_ = nvars;
    p.terms_ = std::move(sorted_terms);
    return p;
}

MultiPoly::MultiPoly(const FieldElem& value) : nvars_(0) {
    if (!value.is_zero()) terms_.push_back(Term{Monomial{}, value});
}

MultiPoly MultiPoly::variable(int index, int nvars) {
    if (nvars <= 0 || index < 0 || index >= nvars)
        throw std::invalid_argument("MultiPoly::variable: index out of range");
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(index)] = 1;
    return make(nvars, {Term{std::move(m), FieldElem(1)}});
}

MultiPoly MultiPoly::monomial(const FieldElem& coeff, Monomial exponents) {
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
    if (coeff.is_zero()) return make(static_cast<int>(exponents.size()), {});
    const int nvars = static_cast<int>(exponents.size());
    return make(nvars, {Term{std::move(exponents), coeff}});
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && cliffalg::total_degree(terms_[0].exponents) == 0;
}

FieldElem MultiPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
    return terms_.empty() ? FieldElem(0) : terms_[0].coeff;
}

FieldElem MultiPoly::coefficient(const Monomial& exponents) const {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::coefficient: arity mismatch");
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exponents,
        [](const Term& t, const Monomial& m) { return graded_lex_greater(t.exponents, m); });
    if (it != terms_.end() && it->exponents == exponents) return it->coeff;
    return FieldElem(0);
}

int MultiPoly::total_degree() const {
    return terms_.empty() ? -1 : cliffalg::total_degree(terms_.front().exponents);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = cliffalg::total_degree(terms_.front().exponents);
    for (const Term& t : terms_)
        if (cliffalg::total_degree(t.exponents) != d) return false;
    return true;
}

const MultiPoly::Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("MultiPoly: zero polynomial has no leading term");
    return terms_.front();
}

namespace {

// Common arity for a binary operation; constants bridge arities.
int merged_arity(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() == b.nvars()) return a.nvars();
    if (a.is_constant() || b.is_constant()) return std::max(a.nvars(), b.nvars());
    throw std::invalid_argument("MultiPoly: arity mismatch (" + std::to_string(a.nvars()) +
                                " vs " + std::to_string(b.nvars()) + " variables)");
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    const int nvars = merged_arity(a, b);
    const MultiPoly aw = (a.nvars() == nvars) ? a : a.with_nvars(nvars);
    const MultiPoly bw = (b.nvars() == nvars) ? b : b.with_nvars(nvars);
    const auto& ta = aw.terms();
    const auto& tb = bw.terms();
    std::vector<MultiPoly::Term> out;
    out.reserve(ta.size() + tb.size());
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() ||
            (i < ta.size() && graded_lex_greater(ta[i].exponents, tb[j].exponents))) {
            out.push_back(ta[i]);
            ++i;
        } else if (i == ta.size() || graded_lex_greater(tb[j].exponents, ta[i].exponents)) {
            out.push_back(tb[j]);
            ++j;
        } else {
            FieldElem c = ta[i].coeff + tb[j].coeff;
            if (!c.is_zero()) out.push_back({ta[i].exponents, std::move(c)});
            ++i;
            ++j;
        }
    }
    return MultiPoly::make(nvars, std::move(out));
}

MultiPoly MultiPoly::operator-() const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coeff = -t.coeff;
    return make(nvars_, std::move(out));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const int nvars = merged_arity(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly::make(nvars, {});
    const MultiPoly aw = (a.nvars() == nvars) ? a : a.with_nvars(nvars);
    const MultiPoly bw = (b.nvars() == nvars) ? b : b.with_nvars(nvars);
    std::map<Monomial, FieldElem, GradedLexGreater> acc;
    for (const auto& ta : aw.terms()) {
        for (const auto& tb : bw.terms()) {
            Monomial e = ta.exponents;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += tb.exponents[k];
            FieldElem c = ta.coeff * tb.coeff;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), std::move(c));
            else
                it->second += c;
        }
    }
    std::vector<MultiPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.push_back({e, std::move(c)});
    return MultiPoly::make(nvars, std::move(out));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) { return *this = *this + rhs; }
MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this = *this - rhs; }
MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
    if (a.nvars() != b.nvars() || a.terms().size() != b.terms().size()) return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (a.terms()[i].exponents != b.terms()[i].exponents ||
            a.terms()[i].coeff != b.terms()[i].coeff)
            return false;
    return true;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly base = *this;
    MultiPoly result = MultiPoly(1).with_nvars(nvars_);
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        base = base * base;
        exponent >>= 1U;
    }
    return result;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_)
        throw std::invalid_argument("MultiPoly::derivative: variable out of range");
    std::vector<Term> out;
    for (const Term& t : terms_) {
        const int e = t.exponents[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Term nt = t;
        nt.coeff = nt.coeff * FieldElem(e);
        nt.exponents[static_cast<std::size_t>(var)] -= 1;
        out.push_back(std::move(nt));
    }
    // Lowering one exponent keeps the graded-lex relative order.
    return make(nvars_, std::move(out));
}

MultiPoly MultiPoly::scale_variable(int var, const FieldElem& lambda) const {
    if (var < 0 || var >= nvars_)
        throw std::invalid_argument("MultiPoly::scale_variable: variable out of range");
    std::vector<Term> out;
    for (const Term& t : terms_) {
        const int e = t.exponents[static_cast<std::size_t>(var)];
        FieldElem c = t.coeff * lambda.pow(e);
        if (!c.is_zero()) out.push_back({t.exponents, std::move(c)});
    }
    return make(nvars_, std::move(out));
}

MultiPoly MultiPoly::prepend_variables(int count) const {
    if (count < 0) throw std::invalid_argument("MultiPoly::prepend_variables: negative count");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial e(static_cast<std::size_t>(count), 0);
        e.insert(e.end(), t.exponents.begin(), t.exponents.end());
        out.push_back({std::move(e), t.coeff});
    }
    return make(nvars_ + count, std::move(out));
}

MultiPoly MultiPoly::with_nvars(int nvars) const {
    if (nvars < nvars_) throw std::invalid_argument("MultiPoly::with_nvars: cannot shrink arity");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back({padded(t.exponents, nvars), t.coeff});
    return make(nvars, std::move(out));
}

FieldElem MultiPoly::evaluate(const std::vector<FieldElem>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::evaluate: point arity mismatch");
    FieldElem sum(0);
    for (const Term& t : terms_) {
        FieldElem prod = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            const int e = t.exponents[i];
            if (e != 0) prod *= point[i].pow(e);
        }
        sum += prod;
    }
    return sum;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    if (divisor.is_constant()) {
        const FieldElem inv = divisor.constant_value().inverse();
        std::vector<Term> out = terms_;
        for (Term& t : out) t.coeff *= inv;
        return make(nvars_, std::move(out));
    }
    const int nvars = merged_arity(*this, divisor);
    MultiPoly rem = this->with_nvars(nvars);
    const MultiPoly den = divisor.with_nvars(nvars);
    const Monomial& de = den.leading_term().exponents;
    const FieldElem dc_inv = den.leading_term().coeff.inverse();
    MultiPoly quot = MultiPoly().with_nvars(nvars);
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        Monomial qe = lt.exponents;
        for (std::size_t i = 0; i < qe.size(); ++i) {
            qe[i] -= de[i];
            if (qe[i] < 0)
                throw std::domain_error("MultiPoly: division is not exact");
        }
        MultiPoly t = MultiPoly::monomial(lt.coeff * dc_inv, std::move(qe));
        quot += t;
        rem -= t * den;
    }
    return quot;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        std::string coeff_str;
        bool negative = false;
        if (t.coeff.is_rational()) {
            const Rational r = t.coeff.rational_value();
            negative = r.sign() < 0;
            coeff_str = (first ? r : r.abs()).str();
        } else {
            coeff_str = t.coeff.str();
        }
        if (!first) out += negative ? " - " : " + ";
        out += coeff_str;
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            const int e = t.exponents[i];
            if (e == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (e > 1) out += "^" + std::to_string(e);
        }
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace cliffalg
