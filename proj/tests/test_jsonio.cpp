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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cliffalg/jsonio.hpp>

#include <sstream>

#include "support/test_rng.hpp"

using namespace cliffalg;
using namespace cliffalg_tests;

TEST_CASE("representation JSON round trip preserves verification") {
    auto rng = make_rng(47);
    std::uniform_int_distribution<long> coord(-2, 2);
    for (unsigned d : {2u, 3u, 4u}) {
        auto field = CycloField::of_order(d);
        std::vector<FieldElem> roots;
        for (unsigned i = 0; i < 2; ++i) {
            FieldElem e(0);
            while (e.is_zero()) {
                std::vector<Rational> c(field->degree());
                for (auto& x : c) x = Rational(coord(rng));
                e = FieldElem(field, c);
            }
            roots.push_back(e);
        }
        const GCARep rep = generate_diagonal_rep(d, 2, roots);
        const std::string js = representation_to_json(rep);
        std::istringstream in(js);
        const GCARep back = read_representation(in);
        CHECK(back.degree() == rep.degree());
        CHECK(back.nvars() == rep.nvars());
        CHECK(back.dimension() == rep.dimension());
        CHECK(back.form() == rep.form());
        for (unsigned i = 0; i < rep.nvars(); ++i)
            for (Eigen::Index r = 0; r < back.matrices()[i].rows(); ++r)
                for (Eigen::Index c = 0; c < back.matrices()[i].cols(); ++c)
                    CHECK(back.matrices()[i](r, c) == rep.matrices()[i](r, c));
        CHECK(verify_rep(back).pass);
        // serialization is deterministic
        CHECK(representation_to_json(back) == js);
    }
}

TEST_CASE("malformed representation files raise ParseError") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_representation(in);
    };
    CHECK_THROWS_AS(parse("{ not json"), ParseError);
    CHECK_THROWS_AS(parse("{}"), ParseError);
    CHECK_THROWS_AS(parse(R"({"d":2,"n":2,"m":2,"f":["1*x1^2"],"matrices":[]})"), ParseError);
    // d does not divide m
    CHECK_THROWS_AS(
        parse(R"({"d":2,"n":2,"m":3,"f":["1*x1^2","1*x2^2"],
              "matrices":[[["0","0","0"],["0","0","0"],["0","0","0"]],
                          [["0","0","0"],["0","0","0"],["0","0","0"]]]})"),
        ParseError);
    // bad entry syntax
    CHECK_THROWS_AS(
        parse(R"({"d":2,"n":2,"m":2,"f":["1*x1^2","1*x2^2"],
              "matrices":[[["0","zz"],["0","0"]],[["0","0"],["0","0"]]]})"),
        ParseError);
}

TEST_CASE("polynomial matrix JSON round trip") {
    const auto q = CycloField::rationals();
    PolyMatrix m(2, 2);
    m(0, 0) = parse_poly("1*x1 - 1*x3", 3, q);
    m(0, 1) = parse_poly("-1*x2", 3, q);
    m(1, 0) = parse_poly("-1*x2", 3, q);
    m(1, 1) = parse_poly("1*x1 + 1*x3", 3, q);
    const std::string js = poly_matrix_to_json(m, 1);
    std::istringstream in(js);
    const PolyMatrix back = read_poly_matrix(in);
    REQUIRE(back.rows() == 2);
    CHECK(poly_matrix_equal(back, m));
}

TEST_CASE("certificate JSON round trip") {
    const SearchCertificate cert = cone_search(prop46_spec(4, 4));
    const std::string js = certificate_to_json(cert, "cliffk3");
    std::istringstream in(js);
    const SearchCertificate back = read_certificate(in, IntLattice::cliffk3());
    CHECK(back.preset == cert.preset);
    CHECK(back.candidates_checked == cert.candidates_checked);
    REQUIRE(back.solutions.size() == cert.solutions.size());
    for (std::size_t i = 0; i < back.solutions.size(); ++i)
        CHECK(back.solutions[i].coeffs == cert.solutions[i].coeffs);
    CHECK(back.bounds == cert.bounds);
}

TEST_CASE("ledger JSON carries every entry and the overall verdict") {
    const auto entries = numerology_replay();
    const std::string js = ledger_to_json(entries);
    CHECK(js.find("\"all_match\": true") != std::string::npos);
    CHECK(js.find("N01") != std::string::npos);
    CHECK(js.find("N23") != std::string::npos);
    CHECK(js.find("mismatch") == std::string::npos);
}
