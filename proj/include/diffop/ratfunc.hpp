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

#include "diffop/poly.hpp"

namespace diffop {

/* Element of Q(x) in canonical form: gcd(num, den) = 1, den monic and
   nonzero, and the zero element is 0/1.  Every constructor and operator
   restores the canonical form, so structural equality is value equality. */
class RatFunc {
 public:
  RatFunc() : den_(Poly::one()) {}
  explicit RatFunc(const Rational& constant)
      : num_(constant), den_(Poly::one()) {}
  explicit RatFunc(long constant) : RatFunc(Rational(constant)) {}
  explicit RatFunc(Poly numerator)
      : num_(std::move(numerator)), den_(Poly::one()) {}
  RatFunc(Poly numerator, Poly denominator);

  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RatFunc operator-() const;
  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) {
    return lhs += rhs;
  }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) {
    return lhs -= rhs;
  }
  friend RatFunc operator*(const RatFunc& lhs, const RatFunc& rhs);
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend bool operator!=(const RatFunc& lhs, const RatFunc& rhs) {
    return !(lhs == rhs);
  }

  /* d/dx by the quotient rule. */
  RatFunc derivative() const;

 private:
  void reduce();

  Poly num_;
  Poly den_;
};

}  // namespace diffop
