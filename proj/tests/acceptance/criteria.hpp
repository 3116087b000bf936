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

#ifndef CLIFFALG_ACCEPTANCE_CRITERIA_HPP
#define CLIFFALG_ACCEPTANCE_CRITERIA_HPP

#include <string>
#include <vector>

namespace acceptance {

// Deliberate corruptions used by the mutation controls (criterion 10): each
// one must make its criterion fail loudly.
enum class Fault { None, PfaffianSign, ClockShift, LedgerConstant };

Fault fault_from_string(const std::string& s);

struct CriterionResult {
    int number;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
    double budget_seconds;
};

inline constexpr int kCriterionCount = 10;

/// Runs one criterion (1-based).  self_path is the path of the acceptance
/// binary itself, used by the mutation controls to respawn.
CriterionResult run_criterion(int number, Fault fault, const std::string& self_path);

}  // namespace acceptance

#endif
