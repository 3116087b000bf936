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

#ifndef CLIFFALG_TEXTIO_HPP
#define CLIFFALG_TEXTIO_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cliffalg/cyclotomic.hpp"
#include "cliffalg/multipoly.hpp"
#include "cliffalg/rational.hpp"

namespace cliffalg {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "p" or "p/q", optionally signed.
Rational parse_rational(std::string_view text);

/// A rational, or "(c0 + c1*w + c2*w^2 + ...)" with w the primitive root of
/// the given field.
FieldElem parse_field_elem(std::string_view text,
                           const std::shared_ptr<const CycloField>& field);

/// Full polynomial in variables x1..x<nvars>, terms joined by + and -.
/// Coefficients may be omitted ("x1^2" means 1*x1^2).
MultiPoly parse_poly(std::string_view text, int nvars,
                     const std::shared_ptr<const CycloField>& field);

}  // namespace cliffalg

#endif
