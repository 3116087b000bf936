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

#include "cliffalg/textio.hpp"

#include <cctype>
#include <vector>

namespace cliffalg {

namespace {

// Recursive-descent parser over a character cursor.  The grammar:
//
//   poly      := [sign] term { sign term }
//   term      := coefficient [ '*' monomial ] | monomial
//   monomial  := factor { '*' factor }
//   factor    := 'x' nat [ '^' nat ]
//   coefficient := rational | '(' cyclo ')'
//   cyclo     := [sign] cterm { sign cterm }
//   cterm     := rational [ '*' wpow ] | wpow
//   wpow      := 'w' [ '^' nat ]
//   rational  := nat [ '/' nat ]
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    BigInt natural() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a digit");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return BigInt(digits);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" +
                         std::string(text_) + "\"");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// sign prefix: returns +1/-1, defaults to +1 when absent
int parse_sign(Cursor& c) {
    if (c.accept('-')) return -1;
    c.accept('+');
    return 1;
}

Rational parse_unsigned_rational(Cursor& c) {
    BigInt num = c.natural();
    if (c.accept('/')) {
        BigInt den = c.natural();
        if (den == 0) c.fail("zero denominator");
        return Rational(std::move(num), std::move(den));
    }
    return Rational(std::move(num));
}

Rational parse_signed_rational(Cursor& c) {
    const int sign = parse_sign(c);
    Rational r = parse_unsigned_rational(c);
    return sign < 0 ? -r : r;
}

int parse_w_power(Cursor& c) {
    // caller consumed 'w'
    if (c.accept('^')) {
        BigInt e = c.natural();
        if (e > 1000000) c.fail("root-of-unity power too large");
        return static_cast<int>(e);
    }
    return 1;
}

FieldElem parse_cyclo_body(Cursor& c, const std::shared_ptr<const CycloField>& field) {
    const FieldElem root = FieldElem::primitive_root(field);
    FieldElem sum = FieldElem::zero(field);
    bool first = true;
    while (true) {
        if (first && c.peek() == ')') break;
        int sign = 1;
        if (first) {
            sign = parse_sign(c);
        } else {
            if (c.peek() == ')') break;
            if (c.accept('+'))
                sign = 1;
            else if (c.accept('-'))
                sign = -1;
            else
                c.fail("expected '+', '-' or ')'");
        }
        Rational coeff(1);
        int wpow = 0;
        if (c.peek() == 'w') {
            c.accept('w');
            wpow = parse_w_power(c);
        } else {
            coeff = parse_unsigned_rational(c);
            if (c.accept('*')) {
                if (!c.accept('w')) c.fail("expected 'w'");
                wpow = parse_w_power(c);
            }
        }
        if (sign < 0) coeff = -coeff;
        sum += FieldElem(coeff) * root.pow(wpow);
        first = false;
    }
    return sum;
}

FieldElem parse_field_elem_body(Cursor& c, const std::shared_ptr<const CycloField>& field) {
    if (c.accept('(')) {
        FieldElem e = parse_cyclo_body(c, field);
        c.expect(')');
        return e;
    }
    return FieldElem(parse_signed_rational(c));
}

struct ParsedFactor {
    int var;  // 0-based
    int power;
};

ParsedFactor parse_factor(Cursor& c, int nvars) {
    if (!c.accept('x')) c.fail("expected a variable");
    BigInt idx = c.natural();
    if (idx < 1 || idx > nvars) c.fail("variable index out of range");
    int power = 1;
    if (c.accept('^')) {
        BigInt e = c.natural();
        if (e > 1000000) c.fail("exponent too large");
        power = static_cast<int>(e);
    }
    return {static_cast<int>(idx) - 1, power};
}

MultiPoly parse_term(Cursor& c, int sign, int nvars,
                     const std::shared_ptr<const CycloField>& field) {
    // tolerate an explicitly signed coefficient after a separator, "+ -2*x1"
    while (c.peek() == '+' || c.peek() == '-') sign *= parse_sign(c);
    FieldElem coeff = FieldElem::one(field);
    bool have_coeff = false;
    if (c.peek() == '(' || std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = parse_field_elem_body(c, field);
        have_coeff = true;
    }
    Monomial expo(static_cast<std::size_t>(nvars), 0);
    bool have_vars = false;
    if (!have_coeff || c.accept('*')) {
        while (true) {
            ParsedFactor f = parse_factor(c, nvars);
            expo[static_cast<std::size_t>(f.var)] += f.power;
            have_vars = true;
            if (!c.accept('*')) break;
        }
    }
    if (!have_coeff && !have_vars) c.fail("expected a term");
    if (sign < 0) coeff = -coeff;
    return MultiPoly::monomial(coeff, std::move(expo));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    Cursor c(text);
    Rational r = parse_signed_rational(c);
    if (!c.at_end()) c.fail("trailing characters");
    return r;
}

FieldElem parse_field_elem(std::string_view text,
                           const std::shared_ptr<const CycloField>& field) {
    Cursor c(text);
    int sign = 1;
    if (c.peek() == '-' || c.peek() == '+') sign = parse_sign(c);
    FieldElem e = parse_field_elem_body(c, field);
    if (!c.at_end()) c.fail("trailing characters");
    return sign < 0 ? -e : e;
}

MultiPoly parse_poly(std::string_view text, int nvars,
                     const std::shared_ptr<const CycloField>& field) {
    if (nvars < 0) throw std::invalid_argument("parse_poly: negative arity");
    Cursor c(text);
    MultiPoly sum = MultiPoly().with_nvars(nvars);
    int sign = parse_sign(c);
    while (true) {
        sum += parse_term(c, sign, nvars, field);
        if (c.at_end()) break;
        if (c.accept('+'))
            sign = 1;
        else if (c.accept('-'))
            sign = -1;
        else
            c.fail("expected '+' or '-'");
    }
    return sum;
}

}  // namespace cliffalg
