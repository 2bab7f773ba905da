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

#include "diffop/hermite.hpp"

namespace diffop {

/* Hermite reduction, quadratic variant.  Split off the polynomial part and
   antidifferentiate it; on the proper part A/D repeatedly pull multiple
   factors out of the denominator:

     with Dm = gcd(D, D'), Ds = D/Dm, Dm2 = gcd(Dm, Dm'), Dms = Dm/Dm2
     choose B, C with  -B * (Ds * Dm'/Dm) + C * Dms = A,  deg B < deg Dms,
     then  A/(Dm*Ds) = (B/Dm)' + (C - B' * Ds/Dms)/(Dm2*Ds).

   The loop ends with a squarefree denominator Ds. */
HermiteDecomposition hermite_reduce(const RatFunc& g) {
  HermiteDecomposition out;
  if (g.is_zero()) return out;

  auto [poly_part, num] = divrem(g.num(), g.den());
  out.integrated = RatFunc(poly_part.antiderivative());

  Poly a = num;
  Poly d = g.den();
  if (d.is_one() || a.is_zero()) {
    out.residue = RatFunc(a, d);
    return out;
  }

  Poly dm = gcd(d, d.derivative());
  Poly ds = divexact(d, dm);
  while (dm.degree() > 0) {
    Poly dm2 = gcd(dm, dm.derivative());
    Poly dms = divexact(dm, dm2);
    Poly h = divexact(ds * dm.derivative(), dm);
    auto [b, c] = solve_diophantine(-h, dms, a);
    out.integrated += RatFunc(b, dm);
    a = c - divexact(b.derivative() * ds, dms);
    dm = std::move(dm2);
  }

  RatFunc rest(a, ds);
  auto [extra_poly, proper_num] = divrem(rest.num(), rest.den());
  out.integrated += RatFunc(extra_poly.antiderivative());
  out.residue = RatFunc(proper_num, rest.den());
  return out;
}

bool is_total_derivative(const RatFunc& g) {
  return hermite_reduce(g).residue.is_zero();
}

}  // namespace diffop
