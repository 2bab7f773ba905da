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

#include "diffop/ratfunc.hpp"

namespace diffop {

/* g = integrated' + residue where residue is a proper fraction with a
   squarefree denominator.  The residue is zero exactly when g has an
   antiderivative in Q(x), which makes it a canonical representative of the
   class of g modulo derivatives. */
struct HermiteDecomposition {
  RatFunc integrated;
  RatFunc residue;
};

HermiteDecomposition hermite_reduce(const RatFunc& g);

bool is_total_derivative(const RatFunc& g);

}  // namespace diffop
