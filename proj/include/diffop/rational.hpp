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

#include <gmpxx.h>

#include <string>

#include "diffop/error.hpp"

namespace diffop {

/* Exact arbitrary-precision scalars.  Rational values are kept canonical:
   gcd(|num|, den) = 1 and den > 0.  GMP's mpq maintains exactly this form,
   provided values built from raw numerator/denominator pairs go through
   make_rational. */
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw ParseError("invalid rational literal '" + text + "'", 0);
  q.canonicalize();
  return q;
}

/* "n" when the denominator is 1, "n/d" otherwise. */
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace diffop
