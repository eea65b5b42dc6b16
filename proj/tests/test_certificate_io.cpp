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

#include "cyclobez/certificate_io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

using namespace cyclobez;

namespace {

const char* kGoodDoc =
    R"({"format_version":1,"m":6,"n":3,"k":2,"a":["1","1"],"b":["1","-1"]})";

}  // namespace

TEST_CASE("rendering is canonical and newline-terminated") {
    const Certificate c = certificate(6, 3);
    CHECK(render_certificate(c) == std::string(kGoodDoc) + "\n");
    CHECK(render_certificate(c) == render_certificate(c));
}

TEST_CASE("parse inverts render") {
    for (std::uint64_t m = 2; m <= 25; ++m) {
        for (std::uint64_t n = 1; n < m; ++n) {
            const Certificate c = certificate(m, n);
            const Certificate back = parse_certificate(render_certificate(c));
            CHECK(back == c);
        }
    }
}

TEST_CASE("parsing a hand-written document") {
    const Certificate c = parse_certificate(kGoodDoc);
    CHECK(c.m == 6);
    CHECK(c.n == 3);
    CHECK(c.k == 2);
    CHECK(c.a == IntPoly{1, 1});
    CHECK(c.b == IntPoly{1, -1});
    CHECK(verify(c));

    // negative and multi-digit coefficients survive exactly
    const Certificate big = parse_certificate(
        R"({"format_version":1,"m":9,"n":3,"k":3,"a":["1"],"b":["2","-2","0","1","-1"]})");
    CHECK(verify(big));
    CHECK(big.b.coeff(0) == 2);

    // arbitrary-precision coefficient strings do not overflow
    const Certificate huge = parse_certificate(
        R"({"format_version":1,"m":4,"n":3,"k":1,"a":["123456789012345678901234567890"],"b":["1"]})");
    CHECK(huge.a.coeff(0) == mpz_class("123456789012345678901234567890"));
}

TEST_CASE("malformed documents are rejected") {
    const char* bad[] = {
        "",
        "{",
        "[]",
        "42",
        R"({"format_version":2,"m":6,"n":3,"k":2,"a":["1"],"b":["1"]})",
        R"({"m":6,"n":3,"k":2,"a":["1"],"b":["1"]})",
        R"({"format_version":1,"m":6,"n":3,"k":2,"a":["1"],"b":["1"],"extra":0})",
        R"({"format_version":1,"m":0,"n":3,"k":2,"a":["1"],"b":["1"]})",
        R"({"format_version":1,"m":-6,"n":3,"k":2,"a":["1"],"b":["1"]})",
        R"({"format_version":1,"m":6.5,"n":3,"k":2,"a":["1"],"b":["1"]})",
        R"({"format_version":1,"m":"6","n":3,"k":2,"a":["1"],"b":["1"]})",
        R"({"format_version":1,"m":6,"n":3,"k":0,"a":["1"],"b":["1"]})",
        R"({"format_version":1,"m":6,"n":3,"k":2,"a":[1],"b":["1"]})",
        R"({"format_version":1,"m":6,"n":3,"k":2,"a":"1","b":["1"]})",
        R"({"format_version":1,"m":6,"n":3,"k":2,"a":["1x"],"b":["1"]})",
        R"({"format_version":1,"m":6,"n":3,"k":2,"a":[""],"b":["1"]})",
        R"({"format_version":1,"m":6,"n":3,"k":2,"a":["-"],"b":["1"]})",
        R"({"format_version":1,"m":6,"n":3,"k":2,"a":["1.5"],"b":["1"]})",
        R"({"format_version":1,"m":6,"n":3,"k":2,"a":[" 1"],"b":["1"]})",
        R"({"format_version":1,"m":6,"n":3,"k":2,"a":["1"],"b":["1"]} trailing)",
    };
    for (const char* doc : bad) {
        CAPTURE(doc);
        CHECK_THROWS_AS(parse_certificate(doc), ParseError);
    }
}

TEST_CASE("file round trip and load errors") {
    const std::string path = "cert_io_test.json";
    {
        std::ofstream f(path, std::ios::binary);
        f << render_certificate(certificate(12, 2));
    }
    const Certificate c = load_certificate(path);
    CHECK(c.m == 12);
    CHECK(c.k == 1);
    CHECK(verify(c));
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_certificate("does-not-exist.json"), ParseError);

    const std::string trunc_path = "cert_io_trunc.json";
    {
        std::ofstream f(trunc_path, std::ios::binary);
        f << R"({"format_version":1,"m":6,)";
    }
    CHECK_THROWS_AS(load_certificate(trunc_path), ParseError);
    std::remove(trunc_path.c_str());
}
