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

#include "cliffalg/geomcalc.hpp"

#include <stdexcept>

namespace cliffalg {

long k3_euler_char(const ChernData& cd) {
    if (cd.c1_sq % 2 != 0)
        throw std::invalid_argument("k3_euler_char: c1^2 must be even on a K3 surface");
    return 2 * cd.rank + cd.c1_sq / 2 - cd.c2;
}

long adjunction_genus(long selfint) {
    if (selfint % 2 != 0)
        throw std::invalid_argument("adjunction_genus: self-intersection must be even");
    if (selfint < -2)
        throw std::invalid_argument("adjunction_genus: self-intersection below -2");
    return selfint / 2 + 1;
}

std::vector<Rational> ulrich_hilbert_poly(long d, long r, long n) {
    if (d < 2 || r < 1 || n < 1)
        throw std::invalid_argument("ulrich_hilbert_poly: need d >= 2, r >= 1, n >= 1");
    // d*r * (t+1)(t+2)...(t+n-1) / (n-1)!
    std::vector<Rational> poly{Rational(1)};
    for (long k = 1; k <= n - 1; ++k) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i] * Rational(k);  // constant part of (t + k)
            next[i + 1] += poly[i];
        }
        poly = std::move(next);
    }
    Rational factorial(1);
    for (long k = 2; k <= n - 1; ++k) factorial *= Rational(k);
    const Rational scale = Rational(d * r) / factorial;
    for (auto& c : poly) c *= scale;
    return poly;
}

long brill_noether_rho(long g, long r, long d) { return g - (r + 1) * (g + r - d); }

GonalityResult basili_gonality(long degree, long max_collinear) {
    if (max_collinear < 0 || degree <= max_collinear)
        throw std::invalid_argument("basili_gonality: need degree > max_collinear >= 0");
    GonalityResult res;
    res.gonality = degree - max_collinear;
    if (degree != 9) res.clifford_index = res.gonality - 2;
    return res;
}

PencilBound aprodu_farkas_bound(long g, long k, long d) {
    if (brill_noether_rho(g, 1, k) > 0) return {std::nullopt, "rho(g,1,k) <= 0"};
    if (d > g - k + 2) return {std::nullopt, "d <= g - k + 2"};
    return {d - k, ""};
}

long martens_bound(long g, long r, long d, CurveClass curve_class) {
    if (r <= 0 || d < 2 * r)
        throw std::invalid_argument("martens_bound: need d >= 2r > 0");
    if (d < 2) throw std::invalid_argument("martens_bound: need d >= 2");
    switch (curve_class) {
        case CurveClass::Hyperelliptic:
            if (d > 2 * g - 2)
                throw std::invalid_argument("martens_bound: need d <= 2g-2 for this tier");
            return d - 2 * r;
        case CurveClass::NonHyperelliptic:
            if (d > 2 * g - 2)
                throw std::invalid_argument("martens_bound: need d <= 2g-2 for this tier");
            return d - 2 * r - 1;
        case CurveClass::GenericNonspecial:
            if (d > g - 2)
                throw std::invalid_argument("martens_bound: need d <= g-2 for this tier");
            return d - 2 * r - 2;
    }
    throw std::logic_error("martens_bound: unreachable");
}

ResidualSeries serre_residual(long g, long r, long d) {
    if (d < 0 || d > 2 * g - 2)
        throw std::invalid_argument("serre_residual: degree out of range [0, 2g-2]");
    ResidualSeries out;
    out.degree = 2 * g - 2 - d;
    out.rank = r - d + g - 1;
    if (out.rank < -1) out.rank = -1;
    return out;
}

MukaiResult mukai_moduli_dim(const ChernData& cd) {
    if (cd.c1_sq % 2 != 0)
        throw std::invalid_argument("mukai_moduli_dim: c1^2 must be even on a K3 surface");
    MukaiResult res;
    const long pairing = 2 * cd.rank * cd.c2 - (cd.rank - 1) * cd.c1_sq;
    res.dimension = pairing - 2 * (cd.rank * cd.rank - 1);
    res.chi_end = 2 * cd.rank * cd.rank - pairing;
    return res;
}

long riemann_hurwitz_double_cover(long g_base, long branch_points) {
    if (g_base < 0) throw std::invalid_argument("riemann_hurwitz_double_cover: negative genus");
    if (branch_points < 0 || branch_points % 2 != 0)
        throw std::invalid_argument(
            "riemann_hurwitz_double_cover: branch count must be even and >= 0");
    return 2 * g_base - 1 + branch_points / 2;
}

std::string to_string(CurveClass c) {
    switch (c) {
        case CurveClass::Hyperelliptic:
            return "hyperelliptic";
        case CurveClass::NonHyperelliptic:
            return "nonhyperelliptic";
        case CurveClass::GenericNonspecial:
            return "generic_nonspecial";
    }
    return "?";
}

CurveClass curve_class_from_string(const std::string& s) {
    if (s == "hyperelliptic") return CurveClass::Hyperelliptic;
    if (s == "nonhyperelliptic") return CurveClass::NonHyperelliptic;
    if (s == "generic_nonspecial") return CurveClass::GenericNonspecial;
    throw std::invalid_argument("unknown curve class: " + s);
}

}  // namespace cliffalg
