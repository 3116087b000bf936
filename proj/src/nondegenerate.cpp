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

#include "cliffalg/nondegenerate.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "cliffalg/fieldlinalg.hpp"

namespace cliffalg {

std::string to_string(Nondegeneracy verdict) {
    switch (verdict) {
        case Nondegeneracy::Nondegenerate:
            return "nondegenerate";
        case Nondegeneracy::Degenerate:
            return "degenerate";
        case Nondegeneracy::Inconclusive:
            return "inconclusive";
    }
    return "?";
}

namespace {

std::vector<Monomial> monomials_of_degree(int degree, int nvars) {
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(nvars), 0);
    // lexicographic enumeration by recursion on the first variable
    struct Rec {
        int nvars;
        std::vector<Monomial>& out;
        Monomial& cur;
        void go(int var, int remaining) {
            if (var == nvars - 1) {
                cur[static_cast<std::size_t>(var)] = remaining;
                out.push_back(cur);
                return;
            }
            for (int e = remaining; e >= 0; --e) {
                cur[static_cast<std::size_t>(var)] = e;
                go(var + 1, remaining - e);
            }
        }
    } rec{nvars, out, cur};
    rec.go(0, degree);
    return out;
}

bool diagonal_with_full_support(const MultiPoly& f, int degree) {
    bool present[3] = {false, false, false};
    for (const auto& t : f.terms()) {
        int support = -1;
        for (int i = 0; i < 3; ++i) {
            if (t.exponents[static_cast<std::size_t>(i)] == 0) continue;
            if (support >= 0) return false;  // mixed monomial
            if (t.exponents[static_cast<std::size_t>(i)] != degree) return false;
            support = i;
        }
        if (support < 0) return false;  // constant term cannot appear
        present[support] = true;
    }
    return present[0] && present[1] && present[2];
}

}  // namespace

NondegeneracyReport nondegenerate(const MultiPoly& f) {
    if (f.nvars() != 3 && !f.is_constant())
        throw std::invalid_argument("nondegenerate: expected a polynomial in 3 variables");
    if (!f.is_homogeneous() || f.total_degree() < 2)
        throw std::invalid_argument("nondegenerate: expected a homogeneous form of degree >= 2");
    const int d = f.total_degree();
    const MultiPoly form = f.with_nvars(3);

    if (diagonal_with_full_support(form, d))
        return {Nondegeneracy::Nondegenerate, std::nullopt,
                "diagonal form with all coefficients nonzero"};

    const MultiPoly partials[3] = {form.derivative(0), form.derivative(1), form.derivative(2)};

    // Degree at which the ideal of the partials must contain every monomial
    // when their common projective zero set is empty.
    const int target_degree = 3 * (d - 1) - 2;
    const int multiplier_degree = target_degree - (d - 1);
    const std::vector<Monomial> columns = monomials_of_degree(target_degree, 3);
    const std::vector<Monomial> multipliers = monomials_of_degree(multiplier_degree, 3);

    std::map<Monomial, std::size_t> column_index;
    for (std::size_t c = 0; c < columns.size(); ++c) column_index.emplace(columns[c], c);

    FieldMatrix mac(static_cast<Eigen::Index>(3 * multipliers.size()),
                    static_cast<Eigen::Index>(columns.size()));
    mac.setConstant(FieldElem(0));
    Eigen::Index row = 0;
    for (const MultiPoly& p : partials) {
        for (const Monomial& mu : multipliers) {
            for (const auto& t : p.terms()) {
                Monomial e = t.exponents;
                for (std::size_t k = 0; k < 3; ++k) e[k] += mu[k];
                mac(row, static_cast<Eigen::Index>(column_index.at(e))) = t.coeff;
            }
            ++row;
        }
    }
    const int rank = rank_exact<FieldElem>(mac);
    if (rank == static_cast<int>(columns.size()))
        return {Nondegeneracy::Nondegenerate, std::nullopt,
                "partial-derivative multiples span every monomial of degree " +
                    std::to_string(target_degree)};

    // Rank fell short: hunt for a small-coordinate projective witness.
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                // normalize: first nonzero coordinate positive
                const int lead = (a != 0) ? a : (b != 0 ? b : c);
                if (lead < 0) continue;
                const std::vector<FieldElem> point = {FieldElem(a), FieldElem(b), FieldElem(c)};
                bool all_vanish = true;
                for (const MultiPoly& p : partials)
                    if (!p.evaluate(point).is_zero()) {
                        all_vanish = false;
                        break;
                    }
                if (all_vanish)
                    return {Nondegeneracy::Degenerate,
                            std::array<Rational, 3>{Rational(a), Rational(b), Rational(c)},
                            "common projective zero of all three partial derivatives"};
            }
    return {Nondegeneracy::Inconclusive, std::nullopt,
            "span rank " + std::to_string(rank) + " of " + std::to_string(columns.size()) +
                " short of full, and no small-coordinate witness found"};
}

}  // namespace cliffalg
