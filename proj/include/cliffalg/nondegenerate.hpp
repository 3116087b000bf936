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

#ifndef CLIFFALG_NONDEGENERATE_HPP
#define CLIFFALG_NONDEGENERATE_HPP

#include <array>
#include <optional>
#include <string>

#include "cliffalg/multipoly.hpp"

namespace cliffalg {

enum class Nondegeneracy { Nondegenerate, Degenerate, Inconclusive };

struct NondegeneracyReport {
    Nondegeneracy verdict;
    /// Projective point at which all three partials vanish (Degenerate only).
    std::optional<std::array<Rational, 3>> witness;
    std::string note;
};

/// Certifies whether the common vanishing locus of the three partial
/// derivatives of f is only the origin.  f must be homogeneous of degree
/// >= 2 in exactly 3 variables.
///
/// Decision routes, in order:
///   - diagonal form with all three coefficients nonzero: nondegenerate;
///   - the degree-(3d-5) span of the partial-derivative multiples covers
///     every monomial of that degree: nondegenerate;
///   - a small-coordinate projective common zero is found: degenerate,
///     with witness;
///   - otherwise: inconclusive (never guesses).
NondegeneracyReport nondegenerate(const MultiPoly& f);

std::string to_string(Nondegeneracy verdict);

}  // namespace cliffalg

#endif
