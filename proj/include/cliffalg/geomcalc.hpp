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

#ifndef CLIFFALG_GEOMCALC_HPP
#define CLIFFALG_GEOMCALC_HPP

#include <optional>
#include <string>
#include <vector>

#include "cliffalg/rational.hpp"

namespace cliffalg {

/// Chern data of a sheaf on a K3 surface: rank, c1^2 (self-intersection of
/// the first Chern class) and c2.
struct ChernData {
    long rank;
    long c1_sq;
    long c2;
};

/// Riemann-Roch on a K3: chi = 2*rank + c1^2/2 - c2.  Throws on odd c1^2
/// (the intersection form is even).
long k3_euler_char(const ChernData& cd);

/// Genus of a curve class of even self-intersection s on a K3:
/// g = s/2 + 1.  Throws on odd input or s < -2.
long adjunction_genus(long selfint);

/// Coefficients (ascending, exact rationals) of d*r*binom(t+n-1, n-1), the
/// Hilbert polynomial that pins down the bundles matching d*r-dimensional
/// representations.
std::vector<Rational> ulrich_hilbert_poly(long d, long r, long n);

/// rho = g - (r+1)(g+r-d).
long brill_noether_rho(long g, long r, long d);

struct GonalityResult {
    long gonality;
    /// gonality - 2, except degree 9 where the rule is unsupported.
    std::optional<long> clifford_index;
};

/// For a smooth complete-intersection space curve with at most ell collinear
/// points: gonality = degree - ell.
GonalityResult basili_gonality(long degree, long max_collinear);

/// Result of the pencil-dimension bound: either the bound d - k or the name
/// of the violated hypothesis.
struct PencilBound {
    std::optional<long> bound;
    std::string violated_clause;  // empty when bound holds
};

/// dim W^1_d <= d - k for a curve of gonality k on a K3, under
/// rho(g,1,k) <= 0 and d <= g - k + 2; both hypotheses are checked.
PencilBound aprodu_farkas_bound(long g, long k, long d);

enum class CurveClass { Hyperelliptic, NonHyperelliptic, GenericNonspecial };

/// Dimension bound for W^r_d, tiered by how special the curve is:
///   hyperelliptic: d - 2r        (2 <= d <= 2g-2)
///   nonhyperelliptic: d - 2r - 1 (2 <= d <= 2g-2)
///   generic_nonspecial (neither hyperelliptic, trigonal, bielliptic nor a
///   plane quintic): d - 2r - 2   (2 <= d <= g-2)
/// Throws on a range violation for the requested tier or d < 2r.
long martens_bound(long g, long r, long d, CurveClass curve_class);

struct ResidualSeries {
    long degree;  // d' = 2g - 2 - d
    long rank;    // r' = r - d + g - 1, clamped at -1 (empty)
};

/// Serre residuation W^r_d ~ W^{r'}_{d'}; requires 0 <= d <= 2g-2.
ResidualSeries serre_residual(long g, long r, long d);

struct MukaiResult {
    /// 2 r c2 - (r-1) c1^2 - 2(r^2 - 1), the simple-sheaf moduli dimension.
    long dimension;
    /// chi(E (x) E^) = 2 r^2 - (2 r c2 - (r-1) c1^2), reported for
    /// cross-reference.
    long chi_end;
};

MukaiResult mukai_moduli_dim(const ChernData& cd);

/// Genus of a double cover of a genus-g_base curve with the given number of
/// (simple) branch points: g = 2*g_base - 1 + branch/2.  Throws on odd
/// branch count.
long riemann_hurwitz_double_cover(long g_base, long branch_points);

std::string to_string(CurveClass c);
CurveClass curve_class_from_string(const std::string& s);

}  // namespace cliffalg

#endif
