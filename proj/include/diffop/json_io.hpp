/*
   Copyright 2026 diffop developers

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

#pragma once

#include <string>
#include <string_view>

#include "diffop/ore_matrix.hpp"

namespace diffop {

/* Matrix wire format:

     {"size": n, "rows": [[entry, ...], ...]}

   with n >= 1, exactly n rows of n entries, and every entry a string in the
   operator grammar.  Rejections surface as ParseError. */
std::string matrix_to_json(const OreMatrix& m);
OreMatrix matrix_from_json(std::string_view text);

/* Inputs whose first non-space byte is '{' are matrix payloads; everything
   else goes to the scalar expression parser. */
bool looks_like_matrix(std::string_view text);

}  // namespace diffop
