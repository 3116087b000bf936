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

#include "cliffalg/ledger.hpp"

#include <iomanip>
#include <sstream>

#include "cliffalg/geomcalc.hpp"

namespace cliffalg {

std::vector<LedgerEntry> numerology_replay() {
    std::vector<LedgerEntry> out;
    const ChernData twist2{1, 16, 0};    // O_X(2): c1 = 2H, (2H)^2 = 16
    const ChernData twist3{1, 36, 0};    // O_X(3): (3H)^2 = 36
    const ChernData bundle{2, 36, 14};   // rank-2, c1 = 3H, c2 = 14

    const long chi2 = k3_euler_char(twist2);
    const long chi3 = k3_euler_char(twist3);
    const long h0_bundle = k3_euler_char(bundle);
    const long moduli = mukai_moduli_dim(bundle).dimension;
    const long dim_sys3 = chi3 - 1;
    const long dim_grass = 2 * (h0_bundle - 2);  // dim G(2, h0)
    const long dim_total = moduli + dim_grass;

    auto add = [&out](std::string id, std::string description, long expected, long recomputed,
                      std::vector<std::string> assumptions = {}) {
        out.push_back(LedgerEntry{std::move(id), std::move(description), expected, recomputed,
                                  std::move(assumptions)});
    };

    add("N01", "dim |O_X(3)| on the quartic surface: chi(O_X(3)) - 1", 19, dim_sys3);
    add("N02", "dim G(2,8), pencils inside the 8-dimensional section space of E", 12, dim_grass,
        {"h^0(E) = 8 from N13"});
    add("N03", "dim of the pencil bundle over the 14-dimensional moduli family: 14 + 12", 26,
        dim_total);
    add("N04", "general fiber of the induced map to |O_X(3)|: 26 - 19 (= rho(19,1,14))", 7,
        dim_total - dim_sys3);
    add("N05", "dim of the incidence scheme of (subscheme, pencil) pairs: 26 + 1", 27,
        dim_total + 1);
    add("N06", "dim |I_Z(3)| for the arising length-14 subschemes Z: 8 - 1 - 1", 6,
        h0_bundle - 1 - 1, {"h^0(E) = 8 from N13"});
    add("N07", "dim of the length-14 locus swept in the Hilbert scheme: 27 - 6", 21,
        (dim_total + 1) - (h0_bundle - 2));
    add("N08",
        "bound for length-14 subschemes on a quadric section meeting the "
        "section-extension condition: 11 + 9, with 9 = dim |O_X(2)|",
        20, 11 + (chi2 - 1), {"the 11 of N09"});
    add("N09",
        "bound for the extension-condition locus over a genus-9 quadric-section "
        "curve: 7 + 4 (base-point locus bound + general fiber of N10)",
        11, 7 + (13 - 9),
        {"dim of the base-point locus bounded by dim(C x W_6) + ... <= 7"});
    add("N10",
        "general fiber of the degree-13 Abel-type map on the genus-9 curve: "
        "nonspecial Riemann-Roch gives dim |M| = 13 - 9",
        4, 13 - 9, {"special locus has lower dimension: W^5_13 = W_3 is 3-dimensional"});
    add("N11", "chi(I_Z(2)) = chi(O_X(2)) - len(Z) = 10 - 14", -4, chi2 - 14,
        {"len(Z) = 14", "hence h^1(I_Z(2)) = 4 = h^0(O_X(1)) given h^0 = h^2 = 0"});
    add("N12", "chi(O_X(2)) on the quartic K3", 10, chi2);
    add("N13", "h^0(E) for rank-2 E with c1^2 = 36, c2 = 14: chi by Riemann-Roch", 8, h0_bundle,
        {"h^1(E) = h^2(E) = 0 (weakly Ulrich vanishing, granted)"});
    add("N14", "genus of a curve in |2H| by adjunction from (2H)^2 = 16", 9,
        adjunction_genus(16));
    add("N15", "genus of a curve in |3H| by adjunction from (3H)^2 = 36", 19,
        adjunction_genus(36));
    {
        const GonalityResult gon = basili_gonality(12, 4);
        add("N16", "gonality of the degree-12 complete-intersection curve (ell = 4)", 8,
            gon.gonality, {"exactly 4 collinear points: a line on the cubic, none on the quartic"});
        add("N17", "Clifford index of the same curve (degree 12 != 9)", 6,
            gon.clifford_index.value_or(-1));
    }
    {
        const PencilBound bound = aprodu_farkas_bound(19, 8, 13);
        add("N18",
            "bound for dim W^1_13 on the genus-19 curve (gonality 8); the "
            "addition map then bounds base-point members of W^1_14 by 5 + 1 = 6",
            5, bound.bound ? *bound.bound : -1000,
            {"hypotheses checked: rho(19,1,8) = " + std::to_string(brill_noether_rho(19, 1, 8)) +
             " <= 0 and 13 <= 19 - 8 + 2"});
    }
    add("N19", "dim of the simple-bundle moduli family for rank 2, c1^2 = 36, c2 = 14", 14,
        moduli,
        {"pairing route: 2*r*c2 - (r-1)*c1^2 - 2(r^2-1); cross-reference chi(E (x) E^) = " +
         std::to_string(mukai_moduli_dim(bundle).chi_end)});
    add("N20", "genus of the double cover D of an elliptic curve branched at 12 points", 7,
        riemann_hurwitz_double_cover(1, 12));
    add("N21", "bound for dim W^1_6(D), D nonhyperelliptic of genus 7", 3,
        martens_bound(7, 1, 6, CurveClass::NonHyperelliptic),
        {"D is bielliptic, hence not hyperelliptic"});
    {
        const ResidualSeries res = serre_residual(7, 1, 7);
        add("N22",
            "dim W^1_7(D) via residuation to W_" + std::to_string(res.degree) +
                ": symmetric products give dim = degree",
            5, res.rank == 0 ? res.degree : -1000);
    }
    {
        const ResidualSeries res = serre_residual(7, 4, 10);
        add("N23",
            "dim W^4_10(D) via residuation to W_" + std::to_string(res.degree) +
                ": symmetric products give dim = degree",
            2, res.rank == 0 ? res.degree : -1000);
    }
    return out;
}

bool all_match(const std::vector<LedgerEntry>& entries) {
    for (const auto& e : entries)
        if (!e.matches()) return false;
    return true;
}

std::string ledger_table(const std::vector<LedgerEntry>& entries) {
    std::ostringstream os;
    os << std::left << std::setw(5) << "id" << std::setw(10) << "expected" << std::setw(12)
       << "recomputed" << std::setw(10) << "status"
       << "description\n";
    for (const auto& e : entries) {
        os << std::left << std::setw(5) << e.id << std::setw(10) << e.expected_value
           << std::setw(12) << e.recomputed_value << std::setw(10)
           << (e.matches() ? "match" : "MISMATCH") << e.description << "\n";
    }
    os << (all_match(entries) ? "all entries match" : "MISMATCH PRESENT") << "\n";
    return os.str();
}

}  // namespace cliffalg
