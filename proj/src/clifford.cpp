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

#include "cliffalg/clifford.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace cliffalg {

GCARep::GCARep(unsigned degree, unsigned nvars, MultiPoly form,
               std::vector<FieldMatrix> matrices)
    : degree_(degree), nvars_(nvars), form_(std::move(form)), matrices_(std::move(matrices)) {
    if (degree_ < 2) throw std::invalid_argument("GCARep: degree must be >= 2");
    if (nvars_ < 2) throw std::invalid_argument("GCARep: need at least 2 variables");
    if (matrices_.size() != nvars_)
        throw std::invalid_argument("GCARep: expected one matrix per variable");
    if (matrices_[0].rows() == 0) throw std::invalid_argument("GCARep: empty matrices");
    dim_ = static_cast<unsigned>(matrices_[0].rows());
    for (const FieldMatrix& a : matrices_)
        if (a.rows() != static_cast<Eigen::Index>(dim_) ||
            a.cols() != static_cast<Eigen::Index>(dim_))
            throw std::invalid_argument("GCARep: matrices must be square of equal size");
    if (dim_ % degree_ != 0)
        throw std::invalid_argument("GCARep: dimension " + std::to_string(dim_) +
                                    " is not a multiple of the degree " +
                                    std::to_string(degree_));
    if (form_.is_zero() || !form_.is_homogeneous() ||
        form_.total_degree() != static_cast<int>(degree_))
        throw std::invalid_argument("GCARep: form must be homogeneous of the stated degree");
    if (form_.nvars() != static_cast<int>(nvars_))
        throw std::invalid_argument("GCARep: form arity mismatch");
}

PolyMatrix linear_matrix(const GCARep& rep) {
    const auto m = static_cast<Eigen::Index>(rep.dimension());
    const int n = static_cast<int>(rep.nvars());
    PolyMatrix lin(m, m);
    for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c) {
            MultiPoly entry = MultiPoly().with_nvars(n);
            for (int i = 0; i < n; ++i) {
                const FieldElem& a = rep.matrices()[static_cast<std::size_t>(i)](r, c);
                if (a.is_zero()) continue;
                Monomial e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i)] = 1;
                entry += MultiPoly::monomial(a, std::move(e));
            }
            lin(r, c) = std::move(entry);
        }
    return lin;
}

namespace {

// First difference between two polynomials in descending graded-lex order,
// reported as (exponents, lhs coefficient, rhs coefficient).
std::optional<std::tuple<Monomial, FieldElem, FieldElem>> first_poly_difference(
    const MultiPoly& actual, const MultiPoly& expected) {
    const auto& ta = actual.terms();
    const auto& te = expected.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < te.size()) {
        if (j == te.size() ||
            (i < ta.size() && graded_lex_greater(ta[i].exponents, te[j].exponents))) {
            return std::make_tuple(ta[i].exponents, ta[i].coeff, FieldElem(0));
        }
        if (i == ta.size() || graded_lex_greater(te[j].exponents, ta[i].exponents)) {
            return std::make_tuple(te[j].exponents, FieldElem(0), te[j].coeff);
        }
        if (ta[i].coeff != te[j].coeff)
            return std::make_tuple(ta[i].exponents, ta[i].coeff, te[j].coeff);
        ++i;
        ++j;
    }
    return std::nullopt;
}

}  // namespace

VerifyReport verify_rep(const GCARep& rep) {
    const PolyMatrix power = poly_power_matrix(linear_matrix(rep), rep.degree());
    const auto m = static_cast<Eigen::Index>(rep.dimension());
    const int n = static_cast<int>(rep.nvars());
    const MultiPoly zero = MultiPoly().with_nvars(n);
    for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c) {
            const MultiPoly& expected = (r == c) ? rep.form() : zero;
            auto diff = first_poly_difference(power(r, c), expected);
            if (diff) {
                auto [expo, actual_c, expected_c] = *diff;
                return {false, VerifyDiscrepancy{r, c, expo, expected_c, actual_c}};
            }
        }
    return {true, std::nullopt};
}

FieldMatrix clock_matrix(unsigned d) {
    if (d < 1) throw std::invalid_argument("clock_matrix: d must be >= 1");
    auto field = CycloField::of_order(d);
    const FieldElem root = FieldElem::primitive_root(field);
    FieldMatrix z(d, d);
    z.setConstant(FieldElem::zero(field));
    for (unsigned i = 0; i < d; ++i) z(i, i) = root.pow(static_cast<long>(i));
    return z;
}

FieldMatrix shift_matrix(unsigned d) {
    if (d < 1) throw std::invalid_argument("shift_matrix: d must be >= 1");
    auto field = CycloField::of_order(d);
    FieldMatrix x(d, d);
    x.setConstant(FieldElem::zero(field));
    for (unsigned j = 0; j < d; ++j) x((j + 1) % d, j) = FieldElem::one(field);
    return x;
}

GCARep generate_diagonal_rep(unsigned d, unsigned n, const std::vector<FieldElem>& roots) {
    if (d < 2) throw std::invalid_argument("generate_diagonal_rep: degree must be >= 2");
    if (n < 2) throw std::invalid_argument("generate_diagonal_rep: need at least 2 variables");
    if (roots.size() != n)
        throw std::invalid_argument("generate_diagonal_rep: expected one root per variable");
    for (const FieldElem& c : roots)
        if (c.is_zero()) throw std::invalid_argument("generate_diagonal_rep: zero root");

    auto field = CycloField::of_order(d);
    const FieldMatrix z = clock_matrix(d);
    const FieldMatrix x = shift_matrix(d);
    FieldMatrix eye(d, d);
    eye.setConstant(FieldElem::zero(field));
    for (unsigned i = 0; i < d; ++i) eye(i, i) = FieldElem::one(field);

    std::vector<FieldMatrix> generators;
    generators.reserve(n);
    for (unsigned i = 1; i <= n; ++i) {
        FieldMatrix acc(1, 1);
        acc(0, 0) = FieldElem::one(field);
        for (unsigned slot = 1; slot <= n - 1; ++slot) {
            const FieldMatrix* factor;
            if (i < n)
                factor = (slot < i) ? &z : (slot == i ? &x : &eye);
            else
                factor = &z;
            acc = kronecker<FieldElem>(acc, *factor);
        }
        generators.push_back(acc * roots[i - 1]);
    }

    MultiPoly form = MultiPoly().with_nvars(static_cast<int>(n));
    for (unsigned i = 0; i < n; ++i) {
        Monomial e(n, 0);
        e[i] = static_cast<int>(d);
        form += MultiPoly::monomial(roots[i].pow(static_cast<long>(d)), std::move(e));
    }
    return GCARep(d, n, std::move(form), std::move(generators));
}

PolyMatrix presentation_matrix(const GCARep& rep) {
    const VerifyReport check = verify_rep(rep);
    if (!check.pass)
        throw std::domain_error("presentation_matrix: representation fails verification");
    const auto m = static_cast<Eigen::Index>(rep.dimension());
    const int n = static_cast<int>(rep.nvars());
    const MultiPoly w = MultiPoly::variable(0, n + 1);
    PolyMatrix out(m, m);
    for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c) {
            MultiPoly entry = (r == c) ? w : MultiPoly().with_nvars(n + 1);
            for (int i = 0; i < n; ++i) {
                const FieldElem& a = rep.matrices()[static_cast<std::size_t>(i)](r, c);
                if (a.is_zero()) continue;
                Monomial e(static_cast<std::size_t>(n + 1), 0);
                e[static_cast<std::size_t>(i + 1)] = 1;
                entry -= MultiPoly::monomial(a, std::move(e));
            }
            out(r, c) = std::move(entry);
        }
    return out;
}

bool char_poly_identity(const GCARep& rep) {
    const MultiPoly det = determinant(presentation_matrix(rep));
    const int n = static_cast<int>(rep.nvars());
    const MultiPoly w = MultiPoly::variable(0, n + 1);
    const MultiPoly target =
        (w.pow(rep.degree()) - rep.form().prepend_variables(1)).pow(ulrich_rank(rep));
    return det == target;
}

IrredReport irreducible(const GCARep& rep, unsigned max_word_len) {
    const auto m = static_cast<Eigen::Index>(rep.dimension());
    const std::size_t width = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
    if (max_word_len == 0) max_word_len = static_cast<unsigned>(width) + 1;

    auto flatten = [width, m](const FieldMatrix& a) {
        std::vector<FieldElem> v;
        v.reserve(width);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < m; ++j) v.push_back(a(i, j));
        return v;
    };

    FieldMatrix eye(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) eye(i, j) = FieldElem(i == j ? 1 : 0);

    EchelonSpan<FieldElem> span(width);
    span.insert(flatten(eye));
    std::vector<FieldMatrix> frontier{eye};
    int reached = 0;
    const int full = static_cast<int>(width);

    for (unsigned len = 1;; ++len) {
        if (len > max_word_len)
            throw WordLengthExhausted(span.dimension(), max_word_len);
        std::vector<FieldMatrix> next;
        for (const FieldMatrix& g : rep.matrices())
            for (const FieldMatrix& b : frontier) {
                FieldMatrix prod = g * b;
                if (span.insert(flatten(prod))) next.push_back(std::move(prod));
            }
        reached = static_cast<int>(len);
        if (span.dimension() == full || next.empty()) break;
        frontier = std::move(next);
    }
    return {span.dimension(), span.dimension() == full, reached};
}

unsigned ulrich_rank(const GCARep& rep) { return rep.dimension() / rep.degree(); }

}  // namespace cliffalg
