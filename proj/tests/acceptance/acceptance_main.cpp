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

// Acceptance runner: one pass/fail line per criterion, exit 0 iff all the
// selected criteria pass.  --inject simulates a specific implementation bug
// for the mutation controls; --criterion restricts the run.

#include <cstring>
#include <iomanip>
#include <iostream>
#include <string>
#include <unistd.h>
#include <vector>

#include "criteria.hpp"

namespace {

std::string self_path(const char* argv0) {
    char buf[4096];
    const ssize_t n = readlink("/proc/self/exe", buf, sizeof(buf) - 1);
    if (n > 0) {
        buf[n] = '\0';
        return buf;
    }
    return argv0;
}

}  // namespace

int main(int argc, char** argv) {
    acceptance::Fault fault = acceptance::Fault::None;
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "usage error: " << arg << " needs a value\n";
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--inject") {
            try {
                fault = acceptance::fault_from_string(next());
            } catch (const std::exception& e) {
                std::cerr << "usage error: " << e.what() << "\n";
                return 2;
            }
        } else if (arg == "--criterion") {
            selected.push_back(std::stoi(next()));
        } else if (arg == "--help" || arg == "-h") {
            std::cout << "acceptance [--inject none|pfaffian-sign|clock-shift|ledger-constant]"
                         " [--criterion N]...\n";
            return 0;
        } else {
            std::cerr << "usage error: unknown argument " << arg << "\n";
            return 2;
        }
    }
    if (selected.empty())
        for (int n = 1; n <= acceptance::kCriterionCount; ++n) selected.push_back(n);

    const std::string self = self_path(argv[0]);
    int passed = 0;
    std::vector<acceptance::CriterionResult> failures;
    for (int n : selected) {
        const acceptance::CriterionResult res = acceptance::run_criterion(n, fault, self);
        std::cout << "[" << std::setw(2) << res.number << "] "
                  << (res.pass ? "PASS" : "FAIL") << "  " << res.name << ": " << res.detail
                  << "  (" << std::fixed << std::setprecision(3) << res.seconds << " s, budget "
                  << std::setprecision(0) << res.budget_seconds << " s)\n";
        if (res.pass)
            ++passed;
        else
            failures.push_back(res);
    }
    std::cout << "RESULT: " << passed << "/" << selected.size() << " criteria passed\n";
    if (!failures.empty()) {
        for (const auto& f : failures)
            std::cout << "FAILED: criterion " << f.number << " (" << f.name << ")\n";
        return 1;
    }
    return 0;
}
