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

#ifndef CLIFFALG_JSONIO_HPP
#define CLIFFALG_JSONIO_HPP

#include <iosfwd>
#include <string>

#include "cliffalg/clifford.hpp"
#include "cliffalg/lattice.hpp"
#include "cliffalg/ledger.hpp"
#include "cliffalg/polymatrix.hpp"
#include "cliffalg/textio.hpp"

namespace cliffalg {

/// Representation file:
/// {"d":., "n":., "m":., "field":{"order":.}, "f":[term...],
///  "matrices":[[[entry...]...]...]}
/// with f as polynomial terms in x1..xn and matrix entries in the scalar
/// text format.  Throws ParseError on malformed input.
GCARep read_representation(std::istream& in);
GCARep read_representation_file(const std::string& path);
std::string representation_to_json(const GCARep& rep);
void write_representation_file(const GCARep& rep, const std::string& path);

/// Polynomial matrix file:
/// {"size":., "nvars":., "field":{"order":.}, "entries":[[poly...]...]}
PolyMatrix read_poly_matrix(std::istream& in);
PolyMatrix read_poly_matrix_file(const std::string& path);
std::string poly_matrix_to_json(const PolyMatrix& m, unsigned field_order);
void write_poly_matrix_file(const PolyMatrix& m, unsigned field_order,
                            const std::string& path);

/// Certificate file:
/// {"preset":., "constraints":., "lattice":., "bounds":[[lo,hi]...],
///  "candidates_checked":., "solutions":[[c...]...], "wall_notes":.}
std::string certificate_to_json(const SearchCertificate& cert, const std::string& lattice_label);
SearchCertificate read_certificate(std::istream& in,
                                   const std::shared_ptr<const IntLattice>& lattice);

std::string ledger_to_json(const std::vector<LedgerEntry>& entries);

}  // namespace cliffalg

#endif
