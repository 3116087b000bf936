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

#ifndef CLIFFALG_LATTICE_HPP
#define CLIFFALG_LATTICE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cliffalg {

using GramMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using CoeffVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Free Z-module with a symmetric integer pairing.
class IntLattice {
public:
    IntLattice(GramMatrix gram, std::string label);

    int rank() const { return static_cast<int>(gram_.rows()); }
    const GramMatrix& gram() const { return gram_; }
    const std::string& label() const { return label_; }

    /// Rank-8 lattice diag(1,-1,...,-1): the plane class and seven
    /// exceptional classes of the blown-up plane.
    static std::shared_ptr<const IntLattice> delpezzo2();

    /// Rank-8 lattice diag(2,-2,...,-2): the double-cover pullback basis on
    /// the quartic w^4 = f.
    static std::shared_ptr<const IntLattice> cliffk3();

private:
    GramMatrix gram_;
    std::string label_;
};

bool same_lattice(const IntLattice& a, const IntLattice& b);

struct DivisorClass {
    std::shared_ptr<const IntLattice> lattice;
    CoeffVector coeffs;
};

DivisorClass make_class(std::shared_ptr<const IntLattice> lattice,
                        const std::vector<std::int64_t>& coeffs);

/// Intersection pairing v1^T G v2; throws on lattice mismatch.
std::int64_t pair(const DivisorClass& a, const DivisorClass& b);

inline std::int64_t self_intersection(const DivisorClass& d) { return pair(d, d); }

/// The 56 classes of self-intersection -1 on the blown-up plane:
/// 7 exceptional + 21 lines + 21 conics + 7 cubics with a double point.
std::vector<DivisorClass> delpezzo_minus_one_curves();

/// K_S = -3 e_0 + sum e_i.
DivisorClass delpezzo_canonical_class();

/// Same coefficient vector reinterpreted in the double-cover lattice;
/// doubles every pairing.
DivisorClass pullback_to_k3(const DivisorClass& c);

/// Pullbacks of the 56 (-1)-classes: 56 classes with c^2 = -2, c.H = 2.
std::vector<DivisorClass> conic_classes();

/// H = 3 e~_0 - sum e~_i, the degree form (H^2 = 4, H.conic = 2).
DivisorClass k3_hyperplane_class();

enum class EffectivityHint { Effective, AntiEffective, Inconclusive };

/// Square-positive classes pair strictly with an ample class on one side or
/// the other; everything else is left undecided.
EffectivityHint effectivity_hint(const DivisorClass& d, const DivisorClass& ample);

std::string to_string(EffectivityHint h);

using SearchBounds = std::vector<std::pair<std::int64_t, std::int64_t>>;

struct ConeSearchSpec {
    std::shared_ptr<const IntLattice> lattice;
    DivisorClass degree_form;
    std::int64_t degree_target;
    std::int64_t selfint_target;
    std::vector<DivisorClass> nonneg_classes;
    SearchBounds bounds;  // inclusive [lo, hi] per coordinate, exactly rank entries
    std::string description;
    std::string preset;  // empty for ad hoc searches
};

/// Exhaustive enumeration result.  Emptiness claims are scoped by the
/// recorded bounds; every solution is re-verified by a straight-line
/// evaluator before emission and the list is sorted lexicographically.
struct SearchCertificate {
    std::string preset;
    std::string constraints;
    SearchBounds bounds;
    std::uint64_t candidates_checked;
    std::vector<DivisorClass> solutions;
    std::string wall_notes;
};

/// Throws std::invalid_argument when the bounds do not cover every
/// coordinate (no silent truncation).
SearchCertificate cone_search(const ConeSearchSpec& spec);

/// The named infeasibility search: degree-6, square-4 classes over the box
/// a in [1,8], b_i in [0,3] written as a e~_0 - sum b_i e~_i, subject to
/// nonnegativity against all 56 conics.  Expected outcome: no solutions
/// over the 8*4^7 = 131072 candidates.  The degree and square targets are
/// parameters so the same engine runs positive controls.
ConeSearchSpec prop46_spec(std::int64_t degree_target = 6, std::int64_t selfint_target = 4);

SearchCertificate prop46_search();

}  // namespace cliffalg

#endif
