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

#ifndef CLIFFALG_LEDGER_HPP
#define CLIFFALG_LEDGER_HPP

#include <string>
#include <vector>

namespace cliffalg {

/// One replayed dimension count: the value claimed in the source material
/// against the value recomputed here from the closed-form calculators.
/// Cohomology vanishings that are granted rather than recomputed are listed
/// as assumptions.
struct LedgerEntry {
    std::string id;
    std::string description;
    long expected_value;
    long recomputed_value;
    std::vector<std::string> assumptions;
    bool matches() const { return expected_value == recomputed_value; }
};

/// Recomputes every ledger entry.  Order is fixed by entry id.
std::vector<LedgerEntry> numerology_replay();

bool all_match(const std::vector<LedgerEntry>& entries);

/// Fixed-width table, one row per entry, ending with a summary line.
std::string ledger_table(const std::vector<LedgerEntry>& entries);

}  // namespace cliffalg

#endif
