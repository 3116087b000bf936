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

// End-to-end checks of the installed binary: exit-code contract and
// byte-determinism of outputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef CLIFFALG_BIN
#error "CLIFFALG_BIN must point at the cliffalg binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CLIFFALG_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/cliffalg_test_") + std::to_string(getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("gca generate + verify round trip through files") {
    const std::string rep = temp_path("pauli.json");
    const RunResult gen = run("gca generate --d 2 --n 2 --roots 1,1 --out " + rep);
    CHECK(gen.exit_code == 0);

    const RunResult verify = run("gca verify " + rep);
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("PASS") != std::string::npos);

    const RunResult irr = run("gca irreducible " + rep);
    CHECK(irr.exit_code == 0);
    CHECK(irr.output.find("irreducible: yes") != std::string::npos);

    const RunResult charpoly = run("gca charpoly " + rep);
    CHECK(charpoly.exit_code == 0);
    CHECK(charpoly.output.find("PASS") != std::string::npos);

    std::remove(rep.c_str());
}

TEST_CASE("corrupted representation file exits 2") {
    const std::string path = temp_path("corrupted.json");
    {
        std::ofstream out(path);
        out << "{\"d\": 2, \"n\": 2, \"m\"";  // truncated
    }
    const RunResult r = run("gca verify " + path);
    CHECK(r.exit_code == 2);
    std::remove(path.c_str());

    const RunResult missing = run("gca verify /nonexistent/file.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("a failing verification exits 1") {
    const std::string path = temp_path("broken.json");
    {
        std::ofstream out(path);
        // Pauli with one sign ruined
        out << R"({"d":2,"n":2,"m":2,"field":{"order":1},
                   "f":["1*x1^2","1*x2^2"],
                   "matrices":[[["0","1"],["1","0"]],[["1","0"],["0","1"]]]})";
    }
    const RunResult r = run("gca verify " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("gca").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("calc rho --g 19").exit_code == 2);
    CHECK(run("calc genus --selfint 15").exit_code == 2);  // odd self-intersection
}

TEST_CASE("named lattice search exits 0 and reports emptiness") {
    const RunResult r = run("lattice search --preset prop-4.6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"candidates_checked\": 131072") != std::string::npos);
    CHECK(r.output.find("\"solutions\": []") != std::string::npos);
}

TEST_CASE("lattice pair and classes") {
    const RunResult p =
        run("lattice pair --lattice cliffk3 --d1 3,-1,-1,-1,-1,-1,-1,-1 "
            "--d2 3,-1,-1,-1,-1,-1,-1,-1");
    CHECK(p.exit_code == 0);
    CHECK(p.output == "4\n");

    const RunResult c = run("lattice classes --surface delpezzo2");
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("56 classes") != std::string::npos);

    const RunResult k = run("lattice classes --surface cliffk3");
    CHECK(k.exit_code == 0);
    CHECK(k.output.find("56 conic classes") != std::string::npos);
}

TEST_CASE("calculator subcommands") {
    CHECK(run("calc rho --g 19 --r 1 --d 14").output == "7\n");
    CHECK(run("calc genus --selfint 16").output == "9\n");
    CHECK(run("calc chi --rank 2 --c1sq 36 --c2 14").output == "8\n");
    CHECK(run("calc mukai --rank 2 --c1sq 36 --c2 14").output.find("14") == 0);
    CHECK(run("calc gonality --degree 12 --max-collinear 4").output.find("gonality: 8") !=
          std::string::npos);
    CHECK(run("calc gonality --degree 9 --max-collinear 3").output.find("unsupported") !=
          std::string::npos);
    CHECK(run("calc residual --g 7 --r 1 --d 7").output.find("degree: 5") != std::string::npos);
    CHECK(run("calc martens --g 7 --r 1 --d 6 --curve-class nonhyperelliptic").output == "3\n");
    CHECK(run("calc af-bound --g 19 --k 8 --d 13").output == "5\n");
    CHECK(run("calc af-bound --g 19 --k 8 --d 14").output.find("precondition failed") !=
          std::string::npos);
    CHECK(run("calc rh --genus-base 1 --branch-points 12").output == "7\n");
    CHECK(run("calc hilbert --d 4 --r 2 --n 3").output == "4*t^2 + 12*t + 8\n");
}

TEST_CASE("replay numerology exits 0 with all entries matching") {
    const RunResult r = run("replay numerology");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all entries match") != std::string::npos);

    const RunResult js = run("replay numerology --json");
    CHECK(js.exit_code == 0);
    CHECK(js.output.find("\"all_match\": true") != std::string::npos);
}

TEST_CASE("pfaffian subcommand with a skew matrix file") {
    const std::string path = temp_path("skew.json");
    {
        std::ofstream out(path);
        out << R"({"size":2,"nvars":2,"field":{"order":1},
                   "entries":[["0","1*x1 + 2*x2"],["-1*x1 - 2*x2","0"]]})";
    }
    const RunResult r = run("pfaff " + path + " --check");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pfaffian: 1*x1 + 2*x2") != std::string::npos);
    CHECK(r.output.find("PASS") != std::string::npos);
    std::remove(path.c_str());

    const std::string bad = temp_path("notskew.json");
    {
        std::ofstream out(bad);
        out << R"({"size":2,"nvars":1,"field":{"order":1},
                   "entries":[["0","1*x1"],["1*x1","0"]]})";
    }
    const RunResult rb = run("pfaff " + bad);
    CHECK(rb.exit_code == 1);
    std::remove(bad.c_str());

    const std::string odd = temp_path("odd.json");
    {
        std::ofstream out(odd);
        out << R"({"size":3,"nvars":1,"field":{"order":1},
                   "entries":[["0","1*x1","0"],["-1*x1","0","0"],["0","0","0"]]})";
    }
    const RunResult ro = run("pfaff " + odd);
    CHECK(ro.exit_code == 1);  // well-formed file, odd size is a math failure
    std::remove(odd.c_str());
}

TEST_CASE("outputs are byte-identical across repeated runs") {
    for (const char* args :
         {"lattice search --preset prop-4.6", "replay numerology --json",
          "lattice classes --surface cliffk3", "calc hilbert --d 4 --r 2 --n 3"}) {
        const RunResult a = run(args);
        const RunResult b = run(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
    // generated representation files are byte-identical too
    const std::string r1 = temp_path("det1.json"), r2 = temp_path("det2.json");
    run("gca generate --d 4 --n 2 --roots '(1*w),2' --out " + r1);
    run("gca generate --d 4 --n 2 --roots '(1*w),2' --out " + r2);
    std::ifstream f1(r1), f2(r2);
    const std::string s1((std::istreambuf_iterator<char>(f1)), {});
    const std::string s2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(!s1.empty());
    CHECK(s1 == s2);
    std::remove(r1.c_str());
    std::remove(r2.c_str());
}

TEST_CASE("presentation subcommand emits a loadable matrix with linear entries") {
    const std::string rep = temp_path("cs.json"), pres = temp_path("pres.json");
    CHECK(run("gca generate --d 4 --n 2 --roots 1,1 --out " + rep).exit_code == 0);
    CHECK(run("gca presentation " + rep + " --out " + pres).exit_code == 0);
    const RunResult r = run("pfaff " + pres);
    // presentation matrix is not skew, so the pfaffian must refuse with 1
    CHECK(r.exit_code == 1);
    std::ifstream f(pres);
    const std::string body((std::istreambuf_iterator<char>(f)), {});
    CHECK(body.find("\"size\": 4") != std::string::npos);
    CHECK(body.find("\"nvars\": 3") != std::string::npos);
    std::remove(rep.c_str());
    std::remove(pres.c_str());
}
