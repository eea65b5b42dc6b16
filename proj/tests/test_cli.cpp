/*
   Copyright 2026 The cyclobez authors

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

#include "cyclobez/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cyclobez::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("phi command") {
    CHECK(run_cli({"phi", "12"}).out == "x^4 - x^2 + 1\n");
    CHECK(run_cli({"phi", "12", "--format", "text"}).out == "x^4 - x^2 + 1\n");
    CHECK(run_cli({"phi", "1", "--format", "coeffs"}).out == "-1 1\n");
    CHECK(run_cli({"phi", "12", "--format", "json"}).out ==
          "{\"n\":12,\"coeffs\":[\"1\",\"0\",\"-1\",\"0\",\"1\"]}\n");
    CHECK(run_cli({"phi", "6", "--method", "moebius"}).out ==
          run_cli({"phi", "6", "--method", "inductive"}).out);
    CHECK(run_cli({"phi", "6", "--method", "radical"}).out == "x^2 - x + 1\n");
    CHECK(run_cli({"phi", "12"}).code == 0);

    CHECK(run_cli({"phi", "0"}).code == 2);
    CHECK(run_cli({"phi", "1000001"}).code == 2);
    CHECK(run_cli({"phi", "-3"}).code == 2);
    CHECK(run_cli({"phi", "12", "--method", "bogus"}).code == 2);
    CHECK(run_cli({"phi", "12", "--format", "bogus"}).code == 2);
    CHECK(run_cli({"phi"}).code == 2);
}

TEST_CASE("k command") {
    CHECK(run_cli({"k", "6", "3"}).out == "divisor quotient=2=2^1 k=2\n");
    CHECK(run_cli({"k", "12", "2"}).out == "divisor quotient=6 k=1\n");
    CHECK(run_cli({"k", "3", "2"}).out == "non-divisor k=1\n");
    CHECK(run_cli({"k", "12", "4"}).out == "divisor quotient=3=3^1 k=3\n");
    CHECK(run_cli({"k", "32", "2"}).out == "divisor quotient=16=2^4 k=2\n");
    // unordered pair
    CHECK(run_cli({"k", "3", "6"}).out == run_cli({"k", "6", "3"}).out);

    const RunResult equal = run_cli({"k", "5", "5"});
    CHECK(equal.code == 2);
    CHECK(equal.err == "error: indices must differ\n");
    CHECK(run_cli({"k", "0", "5"}).code == 2);
    CHECK(run_cli({"k", "6"}).code == 2);
}

TEST_CASE("cert and verify round trip") {
    const std::string path = "cli_cert_roundtrip.json";
    CHECK(run_cli({"cert", "6", "3", "--out", path}).code == 0);

    const RunResult ok = run_cli({"verify", path});
    CHECK(ok.code == 0);
    CHECK(ok.out == "OK k=2\n");
    std::remove(path.c_str());

    // stdout emission matches the file emission
    const RunResult direct = run_cli({"cert", "6", "3"});
    CHECK(direct.code == 0);
    CHECK(direct.out ==
          "{\"format_version\":1,\"m\":6,\"n\":3,\"k\":2,\"a\":[\"1\",\"1\"],\"b\":[\"1\",\"-1\"]}\n");
    CHECK(run_cli({"cert", "6", "3"}).out == direct.out);
}

TEST_CASE("cert methods") {
    CHECK(run_cli({"cert", "9", "3", "--method", "lattice"}).out.find("\"k\":3") !=
          std::string::npos);
    CHECK(run_cli({"cert", "9", "3", "--method", "constructive"}).code == 0);
    CHECK(run_cli({"cert", "5", "3", "--method", "lattice"}).out.find("\"k\":1") !=
          std::string::npos);
    CHECK(run_cli({"cert", "5", "3", "--method", "constructive"}).code == 2);
    CHECK(run_cli({"cert", "5", "5"}).code == 2);
    CHECK(run_cli({"cert", "5", "5"}).err == "error: indices must differ\n");
    CHECK(run_cli({"cert", "6", "3", "--method", "bogus"}).code == 2);
}

TEST_CASE("verify failure modes") {
    const std::string tampered_path = "cli_cert_tampered.json";
    {
        std::ofstream f(tampered_path, std::ios::binary);
        f << R"({"format_version":1,"m":6,"n":3,"k":3,"a":["1","1"],"b":["1","-1"]})" << "\n";
    }
    const RunResult bad = run_cli({"verify", tampered_path});
    CHECK(bad.code == 1);
    CHECK(bad.out == "FAIL\n");
    std::remove(tampered_path.c_str());

    const std::string trunc_path = "cli_cert_trunc.json";
    {
        std::ofstream f(trunc_path, std::ios::binary);
        f << R"({"format_version":1,"m":6)";
    }
    CHECK(run_cli({"verify", trunc_path}).code == 2);
    std::remove(trunc_path.c_str());

    CHECK(run_cli({"verify", "no-such-file.json"}).code == 2);
}

TEST_CASE("table command") {
    const RunResult r = run_cli({"table", "6"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "m,n,class,k\n"
          "2,1,divisor-prime-power,2\n"
          "3,1,divisor-prime-power,3\n"
          "3,2,non-divisor,1\n"
          "4,1,divisor-prime-power,2\n"
          "4,2,divisor-prime-power,2\n"
          "4,3,non-divisor,1\n"
          "5,1,divisor-prime-power,5\n"
          "5,2,non-divisor,1\n"
          "5,3,non-divisor,1\n"
          "5,4,non-divisor,1\n"
          "6,1,divisor-composite,1\n"
          "6,2,divisor-prime-power,3\n"
          "6,3,divisor-prime-power,2\n"
          "6,4,non-divisor,1\n"
          "6,5,non-divisor,1\n");
    CHECK(run_cli({"table", "0"}).code == 2);
    CHECK(run_cli({"table"}).code == 2);
}

TEST_CASE("selftest command") {
    const RunResult r = run_cli({"selftest", "--max", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selftest: PASS\n") != std::string::npos);
    CHECK(r.out.find("theorem-vs-oracle") != std::string::npos);

    const RunResult degenerate = run_cli({"selftest", "--max", "1"});
    CHECK(degenerate.code == 0);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"phi", "twelve"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"--help"}).out.find("phi") != std::string::npos);
}
