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

#include "cliffalg/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffalg {

IntLattice::IntLattice(GramMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
        throw std::invalid_argument("IntLattice: Gram matrix must be square and nonempty");
    if (gram_ != gram_.transpose())
        throw std::invalid_argument("IntLattice: Gram matrix must be symmetric");
}

namespace {

std::shared_ptr<const IntLattice> make_diagonal_lattice(std::int64_t first, std::int64_t rest,
                                                        std::string label) {
    GramMatrix g = GramMatrix::Zero(8, 8);
    g(0, 0) = first;
    for (int i = 1; i < 8; ++i) g(i, i) = rest;
    return std::make_shared<const IntLattice>(std::move(g), std::move(label));
}

}  // namespace

std::shared_ptr<const IntLattice> IntLattice::delpezzo2() {
    static const std::shared_ptr<const IntLattice> instance =
        make_diagonal_lattice(1, -1, "delpezzo2");
    return instance;
}

std::shared_ptr<const IntLattice> IntLattice::cliffk3() {
    static const std::shared_ptr<const IntLattice> instance =
        make_diagonal_lattice(2, -2, "cliffk3");
    return instance;
}

bool same_lattice(const IntLattice& a, const IntLattice& b) {
    return a.rank() == b.rank() && a.gram() == b.gram();
}

DivisorClass make_class(std::shared_ptr<const IntLattice> lattice,
                        const std::vector<std::int64_t>& coeffs) {
    if (!lattice) throw std::invalid_argument("make_class: null lattice");
    if (static_cast<int>(coeffs.size()) != lattice->rank())
        throw std::invalid_argument("make_class: coefficient count does not match rank");
    CoeffVector v(lattice->rank());
    for (int i = 0; i < lattice->rank(); ++i) v(i) = coeffs[static_cast<std::size_t>(i)];
    return {std::move(lattice), std::move(v)};
}

std::int64_t pair(const DivisorClass& a, const DivisorClass& b) {
    if (!a.lattice || !b.lattice) throw std::invalid_argument("pair: null lattice");
    if (!same_lattice(*a.lattice, *b.lattice))
        throw std::invalid_argument("pair: divisor classes live in different lattices");
    return a.coeffs.dot(a.lattice->gram() * b.coeffs);
}

std::vector<DivisorClass> delpezzo_minus_one_curves() {
    auto lat = IntLattice::delpezzo2();
    std::vector<DivisorClass> out;
    out.reserve(56);
    // e_i
    for (int i = 1; i <= 7; ++i) {
        std::vector<std::int64_t> c(8, 0);
        c[static_cast<std::size_t>(i)] = 1;
        out.push_back(make_class(lat, c));
    }
    // e_0 - e_i - e_j, i < j
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            std::vector<std::int64_t> c(8, 0);
            c[0] = 1;
            c[static_cast<std::size_t>(i)] = -1;
            c[static_cast<std::size_t>(j)] = -1;
            out.push_back(make_class(lat, c));
        }
    // 2e_0 - e_{i1} - ... - e_{i5}: complements of pairs, so enumerate the
    // two omitted indices
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            std::vector<std::int64_t> c(8, -1);
            c[0] = 2;
            c[static_cast<std::size_t>(i)] = 0;
            c[static_cast<std::size_t>(j)] = 0;
            out.push_back(make_class(lat, c));
        }
    // 3e_0 - sum_{i != j} e_i - 2 e_j
    for (int j = 1; j <= 7; ++j) {
        std::vector<std::int64_t> c(8, -1);
        c[0] = 3;
        c[static_cast<std::size_t>(j)] = -2;
        out.push_back(make_class(lat, c));
    }
    return out;
}

DivisorClass delpezzo_canonical_class() {
    return make_class(IntLattice::delpezzo2(), {-3, 1, 1, 1, 1, 1, 1, 1});
}

DivisorClass pullback_to_k3(const DivisorClass& c) {
    if (!c.lattice || !same_lattice(*c.lattice, *IntLattice::delpezzo2()))
        throw std::invalid_argument("pullback_to_k3: source must live in the delpezzo2 lattice");
    return {IntLattice::cliffk3(), c.coeffs};
}

std::vector<DivisorClass> conic_classes() {
    std::vector<DivisorClass> out;
    out.reserve(56);
    for (const DivisorClass& e : delpezzo_minus_one_curves()) out.push_back(pullback_to_k3(e));
    return out;
}

DivisorClass k3_hyperplane_class() {
    return make_class(IntLattice::cliffk3(), {3, -1, -1, -1, -1, -1, -1, -1});
}

EffectivityHint effectivity_hint(const DivisorClass& d, const DivisorClass& ample) {
    const std::int64_t square = self_intersection(d);
    if (square > 0) {
        const std::int64_t deg = pair(d, ample);
        if (deg > 0) return EffectivityHint::Effective;
        if (deg < 0) return EffectivityHint::AntiEffective;
    }
    return EffectivityHint::Inconclusive;
}

std::string to_string(EffectivityHint h) {
    switch (h) {
        case EffectivityHint::Effective:
            return "effective";
        case EffectivityHint::AntiEffective:
            return "anti_effective";
        case EffectivityHint::Inconclusive:
            return "inconclusive";
    }
    return "?";
}

namespace {

// Straight-line re-check of an emitted solution, independent of the Eigen
// pairing path used during enumeration.
bool straight_line_recheck(const ConeSearchSpec& spec, const std::vector<std::int64_t>& v) {
    const int rank = spec.lattice->rank();
    const auto& g = spec.lattice->gram();
    auto pairing = [&](const std::vector<std::int64_t>& a, const CoeffVector& b) {
        std::int64_t s = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) s += a[static_cast<std::size_t>(i)] * g(i, j) * b(j);
        return s;
    };
    std::int64_t self = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            self += v[static_cast<std::size_t>(i)] * g(i, j) * v[static_cast<std::size_t>(j)];
    if (self != spec.selfint_target) return false;
    if (pairing(v, spec.degree_form.coeffs) != spec.degree_target) return false;
    for (const DivisorClass& c : spec.nonneg_classes)
        if (pairing(v, c.coeffs) < 0) return false;
    return true;
}

}  // namespace

SearchCertificate cone_search(const ConeSearchSpec& spec) {
    if (!spec.lattice) throw std::invalid_argument("cone_search: null lattice");
    const int rank = spec.lattice->rank();
    if (static_cast<int>(spec.bounds.size()) != rank)
        throw std::invalid_argument(
            "cone_search: bounds must cover every coordinate (got " +
            std::to_string(spec.bounds.size()) + " of " + std::to_string(rank) + ")");
    if (!same_lattice(*spec.degree_form.lattice, *spec.lattice))
        throw std::invalid_argument("cone_search: degree form lives in a different lattice");
    for (const DivisorClass& c : spec.nonneg_classes)
        if (!same_lattice(*c.lattice, *spec.lattice))
            throw std::invalid_argument("cone_search: constraint class in a different lattice");

    const GramMatrix& g = spec.lattice->gram();
    const CoeffVector degree_row = g * spec.degree_form.coeffs;
    std::vector<CoeffVector> nonneg_rows;
    nonneg_rows.reserve(spec.nonneg_classes.size());
    for (const DivisorClass& c : spec.nonneg_classes) nonneg_rows.push_back(g * c.coeffs);

    SearchCertificate cert;
    cert.preset = spec.preset;
    cert.constraints = spec.description;
    cert.bounds = spec.bounds;
    cert.candidates_checked = 0;

    bool empty_box = false;
    for (const auto& [lo, hi] : spec.bounds)
        if (lo > hi) empty_box = true;

    std::vector<std::vector<std::int64_t>> raw_solutions;
    if (!empty_box) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i) v[static_cast<std::size_t>(i)] = spec.bounds[i].first;
        while (true) {
            ++cert.candidates_checked;
            CoeffVector vec(rank);
            for (int i = 0; i < rank; ++i) vec(i) = v[static_cast<std::size_t>(i)];
            const std::int64_t deg = vec.dot(degree_row);
            if (deg == spec.degree_target) {
                const std::int64_t self = vec.dot(g * vec);
                if (self == spec.selfint_target) {
                    bool ok = true;
                    for (const CoeffVector& row : nonneg_rows)
                        if (vec.dot(row) < 0) {
                            ok = false;
                            break;
                        }
                    if (ok) raw_solutions.push_back(v);
                }
            }
            int pos = rank - 1;
            while (pos >= 0 && v[static_cast<std::size_t>(pos)] == spec.bounds[pos].second) {
                v[static_cast<std::size_t>(pos)] = spec.bounds[pos].first;
                --pos;
            }
            if (pos < 0) break;
            ++v[static_cast<std::size_t>(pos)];
        }
    }

    std::sort(raw_solutions.begin(), raw_solutions.end());
    for (const auto& v : raw_solutions) {
        if (!straight_line_recheck(spec, v))
            throw std::logic_error("cone_search: solution failed independent re-verification");
        cert.solutions.push_back(make_class(spec.lattice, v));
    }
    cert.wall_notes = empty_box ? "empty bounds box; nothing enumerated"
                                : "single-threaded exhaustive scan over the stated box; "
                                  "solutions re-verified by a straight-line evaluator";
    return cert;
}

ConeSearchSpec prop46_spec(std::int64_t degree_target, std::int64_t selfint_target) {
    ConeSearchSpec spec;
    spec.lattice = IntLattice::cliffk3();
    spec.degree_form = k3_hyperplane_class();
    spec.degree_target = degree_target;
    spec.selfint_target = selfint_target;
    spec.nonneg_classes = conic_classes();
    spec.bounds.assign(8, {-3, 0});
    spec.bounds[0] = {1, 8};
    spec.description = "D = a e~0 - sum b_i e~i with a in [1,8], b_i in [0,3]; D.H = " +
                       std::to_string(degree_target) +
                       ", D^2 = " + std::to_string(selfint_target) +
                       ", D.c >= 0 for all 56 conic classes";
    spec.preset = "prop-4.6";
    if (degree_target != 6 || selfint_target != 4) spec.preset += "-control";
    return spec;
}

SearchCertificate prop46_search() { return cone_search(prop46_spec()); }

}  // namespace cliffalg
