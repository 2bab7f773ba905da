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

#include "diffop/ratfunc.hpp"

namespace diffop {

RatFunc::RatFunc(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero())
    throw PreconditionError("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::one();
    return;
  }
  if (!den_.is_one()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  if (!den_.is_monic()) {
    Rational inv = 1 / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of the zero function");
  RatFunc out;
  out.num_ = den_;
  out.den_ = num_;
  if (!out.den_.is_monic()) {
    Rational inv = 1 / out.den_.leading();
    out.num_ *= inv;
    out.den_ *= inv;
  }
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  Poly g = gcd(den_, rhs.den_);
  Poly da = g.is_one() ? den_ : divexact(den_, g);
  Poly db = g.is_one() ? rhs.den_ : divexact(rhs.den_, g);
  num_ = num_ * db + rhs.num_ * da;
  den_ = den_ * db;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
  return *this += -rhs;
}

RatFunc operator*(const RatFunc& lhs, const RatFunc& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return RatFunc();
  // Cross-cancel before multiplying to keep intermediate degrees low.
  Poly g1 = gcd(lhs.num_, rhs.den_);
  Poly g2 = gcd(rhs.num_, lhs.den_);
  Poly n1 = g1.is_one() ? lhs.num_ : divexact(lhs.num_, g1);
  Poly d2 = g1.is_one() ? rhs.den_ : divexact(rhs.den_, g1);
  Poly n2 = g2.is_one() ? rhs.num_ : divexact(rhs.num_, g2);
  Poly d1 = g2.is_one() ? lhs.den_ : divexact(lhs.den_, g2);
  RatFunc out;
  out.num_ = n1 * n2;
  out.den_ = d1 * d2;
  out.reduce();
  return out;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  *this = *this * rhs;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by the zero function");
  return *this *= rhs.inverse();
}

RatFunc RatFunc::derivative() const {
  if (num_.is_zero()) return RatFunc();
  if (den_.is_one()) return RatFunc(num_.derivative());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(),
                 den_ * den_);
}

}  // namespace diffop
