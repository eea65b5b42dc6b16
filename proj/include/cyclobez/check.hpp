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

#ifndef CYCLOBEZ_CHECK_HPP
#define CYCLOBEZ_CHECK_HPP

#include <stdexcept>

namespace cyclobez {

/// Thrown when an identity the construction itself guarantees fails to
/// hold. Escaping one of these means a bug, never bad user input.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

}  // namespace cyclobez

#endif
