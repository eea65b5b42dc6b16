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

#ifndef CYCLOBEZ_CERTIFICATE_IO_HPP
#define CYCLOBEZ_CERTIFICATE_IO_HPP

#include <stdexcept>
#include <string>

#include "cyclobez/bezout.hpp"

namespace cyclobez {

/// A certificate document that cannot be decoded: bad JSON, missing or
/// unknown keys, wrong types, malformed coefficient strings, or an
/// unreadable file.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Single-line JSON document, newline-terminated:
///   {"format_version":1,"m":…,"n":…,"k":…,"a":["…",…],"b":["…",…]}
/// Coefficients are ascending-degree decimal strings, so values of any
/// size survive consumers that read JSON numbers as doubles.
std::string render_certificate(const Certificate& c);

/// Strict inverse of render_certificate: parse(render(c)) == c.
/// Throws ParseError on any deviation from the document schema.
Certificate parse_certificate(const std::string& text);

/// Reads and parses a document file. Throws ParseError if the file
/// cannot be read or does not parse.
Certificate load_certificate(const std::string& path);

}  // namespace cyclobez

#endif
