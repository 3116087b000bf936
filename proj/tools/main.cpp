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

// Single binary with subcommands: gca, pfaff, lattice, calc, replay.
// Exit codes: 0 success/verified, 1 mathematical check failed on
// well-formed input, 2 usage error or malformed input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cliffalg/clifford.hpp"
#include "cliffalg/geomcalc.hpp"
#include "cliffalg/jsonio.hpp"
#include "cliffalg/lattice.hpp"
#include "cliffalg/ledger.hpp"
#include "cliffalg/nondegenerate.hpp"
#include "cliffalg/polymatrix.hpp"
#include "cliffalg/textio.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMathFail = 1;
constexpr int kBadInput = 2;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::string discrepancy_line(const cliffalg::VerifyDiscrepancy& d) {
    std::ostringstream os;
    os << "first discrepancy at entry (" << d.row << "," << d.col << "), monomial";
    for (int e : d.exponents) os << " " << e;
    os << ": expected " << d.expected.str() << ", got " << d.actual.str();
    return os.str();
}

// ---- gca ----------------------------------------------------------------

int run_gca_verify(const std::string& file) {
    const cliffalg::GCARep rep = cliffalg::read_representation_file(file);
    const cliffalg::VerifyReport report = cliffalg::verify_rep(rep);
    if (report.pass) {
        std::cout << "PASS: (sum x_i A_i)^" << rep.degree() << " = f * I_" << rep.dimension()
                  << "\n";
        return kOk;
    }
    std::cout << "FAIL: " << discrepancy_line(*report.first_discrepancy) << "\n";
    return kMathFail;
}

int run_gca_generate(unsigned d, unsigned n, const std::string& roots_csv,
                     const std::string& out) {
    auto field = cliffalg::CycloField::of_order(d);
    std::vector<cliffalg::FieldElem> roots;
    for (const std::string& part : split(roots_csv, ','))
        roots.push_back(cliffalg::parse_field_elem(part, field));
    const cliffalg::GCARep rep = cliffalg::generate_diagonal_rep(d, n, roots);
    const cliffalg::VerifyReport report = cliffalg::verify_rep(rep);
    if (!report.pass) {
        std::cout << "FAIL: generated representation does not verify; "
                  << discrepancy_line(*report.first_discrepancy) << "\n";
        return kMathFail;
    }
    emit(cliffalg::representation_to_json(rep), out);
    if (!out.empty())
        std::cout << "wrote " << out << " (d=" << rep.degree() << ", n=" << rep.nvars()
                  << ", m=" << rep.dimension() << ", verified)\n";
    return kOk;
}

int run_gca_irreducible(const std::string& file, unsigned max_word_len) {
    const cliffalg::GCARep rep = cliffalg::read_representation_file(file);
    const cliffalg::VerifyReport report = cliffalg::verify_rep(rep);
    if (!report.pass) {
        std::cout << "FAIL: representation does not verify; "
                  << discrepancy_line(*report.first_discrepancy) << "\n";
        return kMathFail;
    }
    const cliffalg::IrredReport ir = cliffalg::irreducible(rep, max_word_len);
    std::cout << "irreducible: " << (ir.irreducible ? "yes" : "no") << "\n"
              << "algebra dimension: " << ir.algebra_dimension << " (full is "
              << rep.dimension() * rep.dimension() << ")\n"
              << "word length reached: " << ir.word_length_reached << "\n";
    return kOk;
}

int run_gca_presentation(const std::string& file, const std::string& out) {
    const cliffalg::GCARep rep = cliffalg::read_representation_file(file);
    const cliffalg::VerifyReport report = cliffalg::verify_rep(rep);
    if (!report.pass) {
        std::cout << "FAIL: representation does not verify; "
                  << discrepancy_line(*report.first_discrepancy) << "\n";
        return kMathFail;
    }
    const cliffalg::PolyMatrix pres = cliffalg::presentation_matrix(rep);
    unsigned order = 1;
    for (const auto& a : rep.matrices())
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            for (Eigen::Index c = 0; c < a.cols(); ++c)
                order = std::max(order, a(r, c).field()->order());
    emit(cliffalg::poly_matrix_to_json(pres, order), out);
    if (!out.empty()) std::cout << "wrote " << out << " (x1 is the projection coordinate)\n";
    return kOk;
}

int run_gca_charpoly(const std::string& file) {
    const cliffalg::GCARep rep = cliffalg::read_representation_file(file);
    const cliffalg::VerifyReport report = cliffalg::verify_rep(rep);
    if (!report.pass) {
        std::cout << "FAIL: representation does not verify; "
                  << discrepancy_line(*report.first_discrepancy) << "\n";
        return kMathFail;
    }
    const cliffalg::MultiPoly det =
        cliffalg::determinant(cliffalg::presentation_matrix(rep));
    const unsigned r = cliffalg::ulrich_rank(rep);
    std::cout << "det(x1*I - sum x_{i+1} A_i) = " << det.str() << "\n"
              << "rank r = m/d = " << r << "\n";
    if (cliffalg::char_poly_identity(rep)) {
        std::cout << "PASS: determinant equals (x1^" << rep.degree() << " - f)^" << r << "\n";
        return kOk;
    }
    std::cout << "FAIL: determinant differs from (x1^" << rep.degree() << " - f)^" << r << "\n";
    return kMathFail;
}

// ---- pfaff ---------------------------------------------------------------

int run_pfaff(const std::string& file, bool with_det, bool check) {
    const cliffalg::PolyMatrix m = cliffalg::read_poly_matrix_file(file);
    // the file is well formed from here on, so premise violations (odd
    // size, not skew) are mathematical failures, not input errors
    try {
        const cliffalg::MultiPoly pf = cliffalg::pfaffian(m);
        std::cout << "pfaffian: " << pf.str() << "\n";
        if (with_det || check) {
            const cliffalg::MultiPoly det = cliffalg::determinant(m);
            std::cout << "determinant: " << det.str() << "\n";
            if (check) {
                if (pf * pf == det) {
                    std::cout << "check pf^2 == det: PASS\n";
                } else {
                    std::cout << "check pf^2 == det: FAIL\n";
                    return kMathFail;
                }
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cout << "math check failed: " << e.what() << "\n";
        return kMathFail;
    } catch (const std::domain_error& e) {
        std::cout << "math check failed: " << e.what() << "\n";
        return kMathFail;
    }
    return kOk;
}

// ---- lattice ---------------------------------------------------------------

std::shared_ptr<const cliffalg::IntLattice> lattice_by_name(const std::string& name) {
    if (name == "cliffk3") return cliffalg::IntLattice::cliffk3();
    if (name == "delpezzo2") return cliffalg::IntLattice::delpezzo2();
    throw cliffalg::ParseError("unknown lattice: " + name);
}

std::vector<std::int64_t> parse_coeff_csv(const std::string& csv, int rank) {
    std::vector<std::int64_t> out;
    for (const std::string& part : split(csv, ',')) out.push_back(std::stoll(part));
    if (static_cast<int>(out.size()) != rank)
        throw cliffalg::ParseError("expected " + std::to_string(rank) + " coefficients");
    return out;
}

int run_lattice_search(const std::string& preset, std::optional<std::int64_t> degree_target,
                       std::optional<std::int64_t> selfint_target, const std::string& bounds_csv,
                       bool nonneg_conics, const std::string& out) {
    cliffalg::ConeSearchSpec spec;
    bool expect_empty = false;
    if (preset == "prop-4.6") {
        spec = cliffalg::prop46_spec(degree_target.value_or(6), selfint_target.value_or(4));
        expect_empty = spec.preset == "prop-4.6";
        if (!bounds_csv.empty()) {
            spec.bounds.clear();
            for (const std::string& part : split(bounds_csv, ',')) {
                const auto lohi = split(part, ':');
                if (lohi.size() != 2) throw cliffalg::ParseError("bounds must be lo:hi pairs");
                spec.bounds.emplace_back(std::stoll(lohi[0]), std::stoll(lohi[1]));
            }
            spec.preset += "-custom-box";
            expect_empty = false;
        }
    } else if (preset.empty()) {
        if (!degree_target || !selfint_target || bounds_csv.empty())
            throw cliffalg::ParseError(
                "ad hoc search needs --degree-target, --selfint-target and --bounds");
        spec.lattice = cliffalg::IntLattice::cliffk3();
        spec.degree_form = cliffalg::k3_hyperplane_class();
        spec.degree_target = *degree_target;
        spec.selfint_target = *selfint_target;
        if (nonneg_conics) spec.nonneg_classes = cliffalg::conic_classes();
        for (const std::string& part : split(bounds_csv, ',')) {
            const auto lohi = split(part, ':');
            if (lohi.size() != 2) throw cliffalg::ParseError("bounds must be lo:hi pairs");
            spec.bounds.emplace_back(std::stoll(lohi[0]), std::stoll(lohi[1]));
        }
        spec.description = "D.H = " + std::to_string(spec.degree_target) +
                           ", D^2 = " + std::to_string(spec.selfint_target) +
                           (nonneg_conics ? ", D.c >= 0 for all 56 conic classes" : "");
        spec.preset = "";
    } else {
        throw cliffalg::ParseError("unknown preset: " + preset);
    }
    const cliffalg::SearchCertificate cert = cliffalg::cone_search(spec);
    emit(cliffalg::certificate_to_json(cert, spec.lattice->label()), out);
    if (!out.empty())
        std::cout << "wrote " << out << " (" << cert.candidates_checked << " candidates, "
                  << cert.solutions.size() << " solutions)\n";
    if (expect_empty && !cert.solutions.empty()) {
        std::cout << "FAIL: expected an empty solution set for preset prop-4.6\n";
        return kMathFail;
    }
    return kOk;
}

int run_lattice_pair(const std::string& lattice_name, const std::string& d1_csv,
                     const std::string& d2_csv) {
    auto lat = lattice_by_name(lattice_name);
    const cliffalg::DivisorClass d1 =
        cliffalg::make_class(lat, parse_coeff_csv(d1_csv, lat->rank()));
    const cliffalg::DivisorClass d2 =
        cliffalg::make_class(lat, parse_coeff_csv(d2_csv, lat->rank()));
    std::cout << cliffalg::pair(d1, d2) << "\n";
    return kOk;
}

int run_lattice_classes(const std::string& surface) {
    if (surface == "delpezzo2") {
        const auto classes = cliffalg::delpezzo_minus_one_curves();
        const cliffalg::DivisorClass k = cliffalg::delpezzo_canonical_class();
        std::cout << classes.size() << " classes with e^2 = -1 (pairing against -K listed)\n";
        for (const auto& e : classes) {
            for (Eigen::Index i = 0; i < e.coeffs.size(); ++i)
                std::cout << (i ? "," : "") << e.coeffs(i);
            std::cout << "  e^2=" << cliffalg::self_intersection(e)
                      << "  e.(-K)=" << -cliffalg::pair(e, k) << "\n";
        }
        return kOk;
    }
    if (surface == "cliffk3") {
        const auto classes = cliffalg::conic_classes();
        const cliffalg::DivisorClass h = cliffalg::k3_hyperplane_class();
        std::cout << classes.size() << " conic classes (pairing against H listed)\n";
        for (const auto& c : classes) {
            for (Eigen::Index i = 0; i < c.coeffs.size(); ++i)
                std::cout << (i ? "," : "") << c.coeffs(i);
            std::cout << "  c^2=" << cliffalg::self_intersection(c)
                      << "  c.H=" << cliffalg::pair(c, h) << "\n";
        }
        return kOk;
    }
    throw cliffalg::ParseError("unknown surface: " + surface);
}

// ---- replay ----------------------------------------------------------------

int run_replay(bool as_json, const std::string& out) {
    const auto entries = cliffalg::numerology_replay();
    emit(as_json ? cliffalg::ledger_to_json(entries) : cliffalg::ledger_table(entries), out);
    return cliffalg::all_match(entries) ? kOk : kMathFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for generalized Clifford algebra representations, "
                 "Pfaffian presentations, Picard-lattice searches and dimension replays"};
    app.require_subcommand(1);

    // gca
    auto* gca = app.add_subcommand("gca", "representation operations");
    gca->require_subcommand(1);
    std::string gca_file, gca_out, gca_roots;
    unsigned gca_d = 0, gca_n = 0, gca_maxlen = 0;

    auto* gca_verify = gca->add_subcommand("verify", "check (sum x_i A_i)^d = f * I");
    gca_verify->add_option("file", gca_file, "representation JSON")->required();

    auto* gca_generate = gca->add_subcommand("generate", "diagonal-form representation");
    gca_generate->add_option("--d", gca_d, "form degree")->required();
    gca_generate->add_option("--n", gca_n, "number of variables")->required();
    gca_generate->add_option("--roots", gca_roots, "comma-separated d-th roots c_i")->required();
    gca_generate->add_option("--out", gca_out, "output file");

    auto* gca_irr = gca->add_subcommand("irreducible", "word-span closure test");
    gca_irr->add_option("file", gca_file, "representation JSON")->required();
    gca_irr->add_option("--max-word-len", gca_maxlen, "budget (default m^2+1)");

    auto* gca_pres = gca->add_subcommand("presentation", "linear matrix x1*I - sum A_i x_{i+1}");
    gca_pres->add_option("file", gca_file, "representation JSON")->required();
    gca_pres->add_option("--out", gca_out, "output file");

    auto* gca_charpoly = gca->add_subcommand("charpoly", "det equals (x1^d - f)^(m/d)");
    gca_charpoly->add_option("file", gca_file, "representation JSON")->required();

    // pfaff
    auto* pfaff = app.add_subcommand("pfaff", "Pfaffian of a skew polynomial matrix");
    std::string pfaff_file;
    bool pfaff_det = false, pfaff_check = false;
    pfaff->add_option("file", pfaff_file, "polynomial matrix JSON")->required();
    pfaff->add_flag("--det", pfaff_det, "also print the determinant");
    pfaff->add_flag("--check", pfaff_check, "verify pf^2 == det");

    // lattice
    auto* lattice = app.add_subcommand("lattice", "Picard-lattice computations");
    lattice->require_subcommand(1);
    std::string lat_preset, lat_bounds, lat_out, lat_name = "cliffk3", lat_d1, lat_d2,
                lat_surface;
    std::optional<std::int64_t> lat_deg, lat_self;
    bool lat_conics = false;

    auto* lat_search = lattice->add_subcommand("search", "bounded exhaustive class search");
    lat_search->add_option("--preset", lat_preset, "named search (prop-4.6)");
    lat_search->add_option("--degree-target", lat_deg, "required D.H");
    lat_search->add_option("--selfint-target", lat_self, "required D^2");
    lat_search->add_option("--bounds", lat_bounds, "lo:hi per coordinate, comma separated");
    lat_search->add_flag("--nonneg-conics", lat_conics, "require D.c >= 0 for the 56 conics");
    lat_search->add_option("--out", lat_out, "certificate file");

    auto* lat_pair = lattice->add_subcommand("pair", "intersection pairing");
    lat_pair->add_option("--lattice", lat_name, "cliffk3 or delpezzo2");
    lat_pair->add_option("--d1", lat_d1, "coefficients of the first class")->required();
    lat_pair->add_option("--d2", lat_d2, "coefficients of the second class")->required();

    auto* lat_classes = lattice->add_subcommand("classes", "list the 56 special classes");
    lat_classes->add_option("--surface", lat_surface, "delpezzo2 or cliffk3")->required();

    // calc
    auto* calc = app.add_subcommand("calc", "closed-form calculators");
    calc->require_subcommand(1);
    long c_g = 0, c_r = 0, c_d = 0, c_k = 0, c_rank = 0, c_c1sq = 0, c_c2 = 0, c_selfint = 0,
         c_degree = 0, c_ell = 0, c_gbase = 0, c_branch = 0, c_n = 0;
    std::string c_class = "generic_nonspecial";

    auto* calc_rho = calc->add_subcommand("rho", "g - (r+1)(g+r-d)");
    calc_rho->add_option("--g", c_g)->required();
    calc_rho->add_option("--r", c_r)->required();
    calc_rho->add_option("--d", c_d)->required();

    auto* calc_genus = calc->add_subcommand("genus", "selfint/2 + 1");
    calc_genus->add_option("--selfint", c_selfint)->required();

    auto* calc_chi = calc->add_subcommand("chi", "2*rank + c1sq/2 - c2");
    calc_chi->add_option("--rank", c_rank)->required();
    calc_chi->add_option("--c1sq", c_c1sq)->required();
    calc_chi->add_option("--c2", c_c2)->required();

    auto* calc_mukai = calc->add_subcommand("mukai", "2 r c2 - (r-1) c1sq - 2(r^2-1)");
    calc_mukai->add_option("--rank", c_rank)->required();
    calc_mukai->add_option("--c1sq", c_c1sq)->required();
    calc_mukai->add_option("--c2", c_c2)->required();

    auto* calc_gon = calc->add_subcommand("gonality", "degree - max_collinear");
    calc_gon->add_option("--degree", c_degree)->required();
    calc_gon->add_option("--max-collinear", c_ell)->required();

    auto* calc_res = calc->add_subcommand("residual", "(2g-2-d, r-d+g-1)");
    calc_res->add_option("--g", c_g)->required();
    calc_res->add_option("--r", c_r)->required();
    calc_res->add_option("--d", c_d)->required();

    auto* calc_martens = calc->add_subcommand("martens", "tiered dim bound for W^r_d");
    calc_martens->add_option("--g", c_g)->required();
    calc_martens->add_option("--r", c_r)->required();
    calc_martens->add_option("--d", c_d)->required();
    calc_martens->add_option("--curve-class", c_class,
                             "hyperelliptic|nonhyperelliptic|generic_nonspecial");

    auto* calc_af = calc->add_subcommand("af-bound", "dim W^1_d <= d - k");
    calc_af->add_option("--g", c_g)->required();
    calc_af->add_option("--k", c_k)->required();
    calc_af->add_option("--d", c_d)->required();

    auto* calc_rh = calc->add_subcommand("rh", "double-cover genus");
    calc_rh->add_option("--genus-base", c_gbase)->required();
    calc_rh->add_option("--branch-points", c_branch)->required();

    auto* calc_hilb = calc->add_subcommand("hilbert", "d*r*binom(t+n-1, n-1)");
    calc_hilb->add_option("--d", c_d)->required();
    calc_hilb->add_option("--r", c_r)->required();
    calc_hilb->add_option("--n", c_n)->required();

    // replay
    auto* replay = app.add_subcommand("replay", "recompute the dimension-count ledger");
    replay->require_subcommand(1);
    auto* replay_num = replay->add_subcommand("numerology", "all entries, exit 0 iff all match");
    bool replay_json = false;
    std::string replay_out;
    replay_num->add_flag("--json", replay_json, "machine-readable output");
    replay_num->add_option("--out", replay_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "usage error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (gca_verify->parsed()) return run_gca_verify(gca_file);
        if (gca_generate->parsed()) return run_gca_generate(gca_d, gca_n, gca_roots, gca_out);
        if (gca_irr->parsed()) return run_gca_irreducible(gca_file, gca_maxlen);
        if (gca_pres->parsed()) return run_gca_presentation(gca_file, gca_out);
        if (gca_charpoly->parsed()) return run_gca_charpoly(gca_file);
        if (pfaff->parsed()) return run_pfaff(pfaff_file, pfaff_det, pfaff_check);
        if (lat_search->parsed())
            return run_lattice_search(lat_preset, lat_deg, lat_self, lat_bounds, lat_conics,
                                      lat_out);
        if (lat_pair->parsed()) return run_lattice_pair(lat_name, lat_d1, lat_d2);
        if (lat_classes->parsed()) return run_lattice_classes(lat_surface);
        if (calc_rho->parsed()) {
            std::cout << cliffalg::brill_noether_rho(c_g, c_r, c_d) << "\n";
            return kOk;
        }
        if (calc_genus->parsed()) {
            std::cout << cliffalg::adjunction_genus(c_selfint) << "\n";
            return kOk;
        }
        if (calc_chi->parsed()) {
            std::cout << cliffalg::k3_euler_char({c_rank, c_c1sq, c_c2}) << "\n";
            return kOk;
        }
        if (calc_mukai->parsed()) {
            const auto res = cliffalg::mukai_moduli_dim({c_rank, c_c1sq, c_c2});
            std::cout << res.dimension << "\n"
                      << "chi(E (x) E^) = " << res.chi_end << "\n";
            return kOk;
        }
        if (calc_gon->parsed()) {
            const auto res = cliffalg::basili_gonality(c_degree, c_ell);
            std::cout << "gonality: " << res.gonality << "\n"
                      << "clifford index: "
                      << (res.clifford_index ? std::to_string(*res.clifford_index)
                                             : std::string("unsupported (degree 9)"))
                      << "\n";
            return kOk;
        }
        if (calc_res->parsed()) {
            const auto res = cliffalg::serre_residual(c_g, c_r, c_d);
            std::cout << "degree: " << res.degree << "\n"
                      << "rank: " << res.rank << (res.rank < 0 ? " (empty)" : "") << "\n";
            return kOk;
        }
        if (calc_martens->parsed()) {
            std::cout << cliffalg::martens_bound(c_g, c_r, c_d,
                                                 cliffalg::curve_class_from_string(c_class))
                      << "\n";
            return kOk;
        }
        if (calc_af->parsed()) {
            const auto res = cliffalg::aprodu_farkas_bound(c_g, c_k, c_d);
            if (res.bound) {
                std::cout << *res.bound << "\n";
            } else {
                std::cout << "precondition failed: " << res.violated_clause << "\n";
            }
            return kOk;
        }
        if (calc_rh->parsed()) {
            std::cout << cliffalg::riemann_hurwitz_double_cover(c_gbase, c_branch) << "\n";
            return kOk;
        }
        if (calc_hilb->parsed()) {
            const auto coeffs = cliffalg::ulrich_hilbert_poly(c_d, c_r, c_n);
            bool first = true;
            for (std::size_t i = coeffs.size(); i-- > 0;) {
                if (coeffs[i].is_zero() && coeffs.size() > 1) continue;
                if (!first) std::cout << " + ";
                std::cout << coeffs[i].str();
                if (i == 1) std::cout << "*t";
                if (i > 1) std::cout << "*t^" << i;
                first = false;
            }
            std::cout << "\n";
            return kOk;
        }
        if (replay_num->parsed()) return run_replay(replay_json, replay_out);
        std::cerr << "usage error: no subcommand selected\n";
        return kBadInput;
    } catch (const cliffalg::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const cliffalg::NotSkewSymmetricError& e) {
        std::cerr << "math check failed: " << e.what() << "\n";
        return kMathFail;
    } catch (const cliffalg::WordLengthExhausted& e) {
        std::cerr << "math check incomplete: " << e.what() << "\n";
        return kMathFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
