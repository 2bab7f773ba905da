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

#ifndef DIFFOP_PARSER_HPP
#define DIFFOP_PARSER_HPP

#include <string>
#include <string_view>

#include "diffop/ore_poly.hpp"

namespace diffop {

/*
  Expression grammar for differential operators:

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ['^' integer]
    base   := 'D' | 'x' | integer | '(' expr ')'

  'D' is the derivation, 'x' the coordinate.  '*' and '/' associate to the
  left.  'a / b' means right multiplication by the inverse of b and is only
  defined when b has order zero; otherwise parsing fails.  Whitespace is
  ignored between tokens.
*/
OrePoly parse_operator(std::string_view text);

/* Same grammar restricted to order-zero results. */
RatFunc parse_ratfunc(std::string_view text);

/* Accepts "left" or "right". */
Side parse_side(std::string_view text);

/* Canonical forms.  Operators print as a sum of c*D^i terms with orders
   decreasing; rational functions print as num/den with the denominator
   monic.  Both round-trip through the parser unchanged. */
std::string to_string(const OrePoly& a);
std::string to_string(const RatFunc& f);

}  // namespace diffop

#endif  // DIFFOP_PARSER_HPP
