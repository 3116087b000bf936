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

#include "cliffalg/jsonio.hpp"

#include <fstream>
#include <json.hpp>

namespace cliffalg {

using json = nlohmann::ordered_json;

namespace {

json parse_stream(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

unsigned field_order_of(const json& j) {
    if (!j.contains("field") || !j["field"].contains("order"))
        return 1;  // defaults to plain rationals
    const auto& o = j["field"]["order"];
    if (!o.is_number_unsigned() || o.get<unsigned>() == 0)
        throw ParseError("field.order must be a positive integer");
    return o.get<unsigned>();
}

unsigned get_uint(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw ParseError(std::string("missing or invalid \"") + key + "\"");
    return j[key].get<unsigned>();
}

// f is stored as an array of term strings; joining with '+' reuses the
// polynomial grammar (each term carries its own sign).
MultiPoly poly_from_terms(const json& arr, int nvars,
                          const std::shared_ptr<const CycloField>& field) {
    if (!arr.is_array() || arr.empty()) throw ParseError("expected a nonempty term array");
    MultiPoly sum = MultiPoly().with_nvars(nvars);
    for (const auto& t : arr) {
        if (!t.is_string()) throw ParseError("polynomial terms must be strings");
        sum += parse_poly(t.get<std::string>(), nvars, field);
    }
    return sum;
}

json poly_to_terms(const MultiPoly& p) {
    json arr = json::array();
    for (const auto& t : p.terms())
        arr.push_back(MultiPoly::monomial(t.coeff, t.exponents).str());
    if (arr.empty()) arr.push_back("0");
    return arr;
}

}  // namespace

GCARep read_representation(std::istream& in) {
    const json j = parse_stream(in);
    const unsigned d = get_uint(j, "d");
    const unsigned n = get_uint(j, "n");
    const unsigned m = get_uint(j, "m");
    auto field = CycloField::of_order(field_order_of(j));
    if (!j.contains("f")) throw ParseError("missing \"f\"");
    MultiPoly f = poly_from_terms(j["f"], static_cast<int>(n), field);
    if (!j.contains("matrices") || !j["matrices"].is_array() || j["matrices"].size() != n)
        throw ParseError("\"matrices\" must list one matrix per variable");
    std::vector<FieldMatrix> matrices;
    for (const auto& jm : j["matrices"]) {
        if (!jm.is_array() || jm.size() != m) throw ParseError("matrix row count mismatch");
        FieldMatrix a(m, m);
        for (unsigned r = 0; r < m; ++r) {
            const auto& row = jm[r];
            if (!row.is_array() || row.size() != m)
                throw ParseError("matrix column count mismatch");
            for (unsigned c = 0; c < m; ++c) {
                if (!row[c].is_string()) throw ParseError("matrix entries must be strings");
                a(r, c) = parse_field_elem(row[c].get<std::string>(), field);
            }
        }
        matrices.push_back(std::move(a));
    }
    try {
        return GCARep(d, n, std::move(f), std::move(matrices));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid representation: ") + e.what());
    }
}

GCARep read_representation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_representation(in);
}

std::string representation_to_json(const GCARep& rep) {
    json j;
    j["d"] = rep.degree();
    j["n"] = rep.nvars();
    j["m"] = rep.dimension();
    // canonical order: rational values serialize without the root, so only
    // genuinely cyclotomic entries pin the field
    unsigned order = 1;
    for (const FieldMatrix& a : rep.matrices())
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            for (Eigen::Index c = 0; c < a.cols(); ++c)
                if (!a(r, c).is_rational()) order = std::max(order, a(r, c).field()->order());
    for (const auto& t : rep.form().terms())
        if (!t.coeff.is_rational()) order = std::max(order, t.coeff.field()->order());
    j["field"] = json{{"order", order}};
    j["f"] = poly_to_terms(rep.form());
    json mats = json::array();
    for (const FieldMatrix& a : rep.matrices()) {
        json jm = json::array();
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(a(r, c).str());
            jm.push_back(std::move(row));
        }
        mats.push_back(std::move(jm));
    }
    j["matrices"] = std::move(mats);
    return j.dump(2) + "\n";
}

void write_representation_file(const GCARep& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << representation_to_json(rep);
}

PolyMatrix read_poly_matrix(std::istream& in) {
    const json j = parse_stream(in);
    const unsigned size = get_uint(j, "size");
    const unsigned nvars = get_uint(j, "nvars");
    auto field = CycloField::of_order(field_order_of(j));
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != size)
        throw ParseError("entry row count mismatch");
    PolyMatrix m(size, size);
    for (unsigned r = 0; r < size; ++r) {
        const auto& row = j["entries"][r];
        if (!row.is_array() || row.size() != size) throw ParseError("entry column count mismatch");
        for (unsigned c = 0; c < size; ++c) {
            if (!row[c].is_string()) throw ParseError("entries must be strings");
            m(r, c) = parse_poly(row[c].get<std::string>(), static_cast<int>(nvars), field);
        }
    }
    return m;
}

PolyMatrix read_poly_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_poly_matrix(in);
}

std::string poly_matrix_to_json(const PolyMatrix& m, unsigned field_order) {
    json j;
    j["size"] = m.rows();
    j["nvars"] = matrix_arity(m);
    j["field"] = json{{"order", field_order}};
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump(2) + "\n";
}

void write_poly_matrix_file(const PolyMatrix& m, unsigned field_order,
                            const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << poly_matrix_to_json(m, field_order);
}

std::string certificate_to_json(const SearchCertificate& cert,
                                const std::string& lattice_label) {
    json j;
    j["preset"] = cert.preset;
    j["lattice"] = lattice_label;
    j["constraints"] = cert.constraints;
    json bounds = json::array();
    for (const auto& [lo, hi] : cert.bounds) bounds.push_back(json::array({lo, hi}));
    j["bounds"] = std::move(bounds);
    j["candidates_checked"] = cert.candidates_checked;
    json sols = json::array();
    for (const DivisorClass& s : cert.solutions) {
        json v = json::array();
        for (Eigen::Index i = 0; i < s.coeffs.size(); ++i) v.push_back(s.coeffs(i));
        sols.push_back(std::move(v));
    }
    j["solutions"] = std::move(sols);
    j["wall_notes"] = cert.wall_notes;
    return j.dump(2) + "\n";
}

SearchCertificate read_certificate(std::istream& in,
                                   const std::shared_ptr<const IntLattice>& lattice) {
    const json j = parse_stream(in);
    SearchCertificate cert;
    try {
        cert.preset = j.at("preset").get<std::string>();
        cert.constraints = j.at("constraints").get<std::string>();
        for (const auto& b : j.at("bounds"))
            cert.bounds.emplace_back(b.at(0).get<std::int64_t>(), b.at(1).get<std::int64_t>());
        cert.candidates_checked = j.at("candidates_checked").get<std::uint64_t>();
        for (const auto& s : j.at("solutions")) {
            std::vector<std::int64_t> v;
            for (const auto& c : s) v.push_back(c.get<std::int64_t>());
            cert.solutions.push_back(make_class(lattice, v));
        }
        cert.wall_notes = j.value("wall_notes", "");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid certificate: ") + e.what());
    }
    return cert;
}

std::string ledger_to_json(const std::vector<LedgerEntry>& entries) {
    json j;
    json arr = json::array();
    for (const auto& e : entries) {
        json je;
        je["id"] = e.id;
        je["description"] = e.description;
        je["expected_value"] = e.expected_value;
        je["recomputed_value"] = e.recomputed_value;
        je["assumptions"] = e.assumptions;
        je["status"] = e.matches() ? "match" : "mismatch";
        arr.push_back(std::move(je));
    }
    j["entries"] = std::move(arr);
    j["all_match"] = all_match(entries);
    return j.dump(2) + "\n";
}

}  // namespace cliffalg
