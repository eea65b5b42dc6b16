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

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "cyclobez/check.hpp"

namespace cyclobez {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

ordered_json coeff_array(const IntPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const mpz_class& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

std::uint64_t read_index(const ordered_json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_unsigned()) throw ParseError(std::string(key) + " must be a positive integer");
    const std::uint64_t x = v.get<std::uint64_t>();
    if (x == 0) throw ParseError(std::string(key) + " must be a positive integer");
    return x;
}

IntPoly read_poly(const ordered_json& j, const char* key) {
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw ParseError(std::string(key) + " must be an array of decimal strings");
    std::vector<mpz_class> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string()) throw ParseError(std::string(key) + " must be an array of decimal strings");
        const std::string s = item.get<std::string>();
        bool ok = !s.empty();
        for (std::size_t i = 0; i < s.size(); ++i) {
            const char ch = s[i];
            if (ch >= '0' && ch <= '9') continue;
            if (ch == '-' && i == 0 && s.size() > 1) continue;
            ok = false;
            break;
        }
        if (!ok) throw ParseError("malformed coefficient string in " + std::string(key));
        coeffs.emplace_back(s, 10);
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace

std::string render_certificate(const Certificate& c) {
    internal_check(c.k.fits_ulong_p(), "render_certificate: k out of document range");
    ordered_json j;
    j["format_version"] = kFormatVersion;
    j["m"] = c.m;
    j["n"] = c.n;
    j["k"] = static_cast<std::uint64_t>(c.k.get_ui());
    j["a"] = coeff_array(c.a);
    j["b"] = coeff_array(c.b);
    return j.dump() + "\n";
}

Certificate parse_certificate(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "format_version" && key != "m" && key != "n" && key != "k" && key != "a" &&
            key != "b")
            throw ParseError("unknown key: " + key);
    }
    try {
        const auto& ver = j.at("format_version");
        if (!ver.is_number_integer() || ver.get<std::int64_t>() != kFormatVersion)
            throw ParseError("unsupported format_version");
        Certificate c;
        c.m = read_index(j, "m");
        c.n = read_index(j, "n");
        c.k = mpz_class(read_index(j, "k"));
        c.a = read_poly(j, "a");
        c.b = read_poly(j, "b");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("missing or malformed field: ") + e.what());
    }
}

Certificate load_certificate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ParseError("cannot read file: " + path);
    return parse_certificate(buf.str());
}

}  // namespace cyclobez
