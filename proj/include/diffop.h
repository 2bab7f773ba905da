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

/*
   C interface of the diffop library.

   Conventions:
     - Every fallible call returns a diffop_status; outputs come back through
       pointers and are only written on DIFFOP_OK.
     - After a failure, diffop_last_error() describes the problem.  The
       message lives in thread local storage and stays valid until the next
       failing call on the same thread.
     - Strings returned through char** are heap allocated; release them with
       diffop_string_free.  Handles are released with their typed free.
     - Scalar operators use the expression grammar (for example
       "x*D^2 - 1/(x+1)").  Matrices use the JSON object
       {"size": n, "rows": [[entry, ...], ...]}.
     - Composite results are JSON documents whose leaves are operator
       expressions or matrix objects.
     - side is "left" or "right".
*/

#ifndef DIFFOP_H
#define DIFFOP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum diffop_status {
  DIFFOP_OK = 0,
  DIFFOP_PRECONDITION = 1,
  DIFFOP_PARSE = 2,
  DIFFOP_SEARCH = 3,
} diffop_status;

typedef struct diffop_op diffop_op;   /* scalar differential operator */
typedef struct diffop_mat diffop_mat; /* square operator matrix */

const char* diffop_last_error(void);
void diffop_string_free(char* text);

/* ----- scalar operators ----- */

diffop_status diffop_op_parse(const char* text, diffop_op** out);
diffop_status diffop_op_to_string(const diffop_op* a, char** out);
diffop_status diffop_op_adjoint(const diffop_op* a, diffop_op** out);
diffop_status diffop_op_order(const diffop_op* a, int* out); /* -1 for zero */
void diffop_op_free(diffop_op* a);

/* {"side", "d", "u", "v"} with d = u a + v b (right) or a u + b v (left). */
diffop_status diffop_gcd(const diffop_op* a, const diffop_op* b,
                         const char* side, char** json_out);

/* Full certificate {"side", "d", "u", "v", "a1", "b1"}; a1 and b1 divide
   the gcd out of a and b on the matching side. */
diffop_status diffop_bezout(const diffop_op* a, const diffop_op* b,
                            const char* side, char** json_out);

/* {"side", "m", "a1", "b1"} with m = a b1 = b a1 (right) or mirrored. */
diffop_status diffop_lcm(const diffop_op* a, const diffop_op* b,
                         const char* side, char** json_out);

/* {"side", "quotient", "remainder"}: a = q b + r (left) or a = b q + r
   (right) with order(r) < order(b). */
diffop_status diffop_divide(const diffop_op* a, const diffop_op* b,
                            const char* side, char** json_out);

/* Minimal fractional decomposition of num/den on the given side:
   {"side", "num", "den", "gcd_stripped", "bezout": {"u", "v"}}. */
diffop_status diffop_minfrac(const diffop_op* num, const diffop_op* den,
                             const char* side, char** json_out);

/* Rewrites the fraction on the opposite side, minimally:
   {"side", "num", "den"}. */
diffop_status diffop_convert(const diffop_op* num, const diffop_op* den,
                             const char* side, char** json_out);

/* Do the two fractions (given on one common side) represent one value? */
diffop_status diffop_equal(const diffop_op* num1, const diffop_op* den1,
                           const diffop_op* num2, const diffop_op* den2,
                           const char* side, int* equal_out);

/* Hermite decomposition of a rational function:
   {"integrated", "residue", "total_derivative"}. */
diffop_status diffop_hermite_ratfunc(const char* text, char** json_out);

/* Basis of polynomial kernel elements of b up to the degree bound:
   {"basis": [poly, ...]}. */
diffop_status diffop_kernel_poly(const diffop_op* b, int degree_bound,
                                 char** json_out);

/* ----- module witnesses (natural module over Q(x)) ----- */

/* Intersection witness for a left coprime pair with a x = b y:
   {"z", "trace": {"a1", "b1", "m", "u", "v", "p", "q"}}. */
diffop_status diffop_witness_thm33(const diffop_op* a, const diffop_op* b,
                                   const char* x_text, const char* y_text,
                                   char** json_out);

/* Seeded randomized replay of the witness construction:
   {"trials", "passes", "failures": [{"seed", "inputs"}, ...]}. */
diffop_status diffop_intersection_check(const diffop_op* a, const diffop_op* b,
                                        int trials, uint64_t seed,
                                        char** json_out);

/* Adjoint-pair witness with a* b = eps b* a: {"z"}. */
diffop_status diffop_witness_cor34(const diffop_op* a, const diffop_op* b,
                                   const char* x_text, const char* y_text,
                                   const char* eps_text, char** json_out);

/* Ring level skew check a* b + b* a = 0. */
diffop_status diffop_isotropy_check(const diffop_op* a, const diffop_op* b,
                                    int* skew_out);

/* Witness for the graph of a skew adjoint pair: {"z"}. */
diffop_status diffop_isotropy_witness(const diffop_op* a, const diffop_op* b,
                                      const char* y1_text, const char* y2_text,
                                      char** json_out);

/* ----- operator matrices ----- */

diffop_status diffop_mat_parse(const char* json_text, diffop_mat** out);
diffop_status diffop_mat_to_json(const diffop_mat* m, char** json_out);
diffop_status diffop_mat_adjoint(const diffop_mat* m, diffop_mat** out);
void diffop_mat_free(diffop_mat* m);

/* {"side", "d", "u", "v", "a1", "b1"} of matrices. */
diffop_status diffop_mat_bezout(const diffop_mat* a, const diffop_mat* b,
                                const char* side, char** json_out);

/* {"side", "m", "a1", "b1"} of matrices; both inputs must be regular. */
diffop_status diffop_mat_lcm(const diffop_mat* a, const diffop_mat* b,
                             const char* side, char** json_out);

/* Exact quotient {"side", "quotient"}; fails when the division leaves a
   remainder. */
diffop_status diffop_mat_divide(const diffop_mat* a, const diffop_mat* b,
                                const char* side, char** json_out);

/* Minimal matrix fraction, same shape as diffop_minfrac with matrix
   leaves. */
diffop_status diffop_mat_minfrac(const diffop_mat* num, const diffop_mat* den,
                                 const char* side, char** json_out);

diffop_status diffop_mat_convert(const diffop_mat* num, const diffop_mat* den,
                                 const char* side, char** json_out);

diffop_status diffop_mat_equal(const diffop_mat* num1, const diffop_mat* den1,
                               const diffop_mat* num2, const diffop_mat* den2,
                               const char* side, int* equal_out);

/* Dieudonne determinant degree; fails on non regular matrices. */
diffop_status diffop_mat_ddet_degree(const diffop_mat* m, int* out);

/* Row Hermite form {"h", "u", "uinv"} with u m = h, u unimodular. */
diffop_status diffop_mat_hermite(const diffop_mat* m, char** json_out);

/* Searches a shift q making a + q b (left) or a + b q (right) regular:
   {"side", "q", "value", "attempts"}.  Exhausted budgets report
   DIFFOP_SEARCH. */
diffop_status diffop_mat_regularize(const diffop_mat* a, const diffop_mat* b,
                                    const char* side, uint64_t seed,
                                    int budget, char** json_out);

/* Simultaneous shift for two pairs:
   {"side", "q", "value1", "value2", "attempts"}. */
diffop_status diffop_mat_regularize_pair(const diffop_mat* a1,
                                         const diffop_mat* b1,
                                         const diffop_mat* a2,
                                         const diffop_mat* b2,
                                         const char* side, uint64_t seed,
                                         int budget, char** json_out);

/* ----- seeded property suites ----- */

/* Runs every suite with the given per-suite trial count and returns
   {"seed", "trials", "suites": [{"name", "trials", "passes"}, ...], "ok"}.
   A failed suite also fails the call with DIFFOP_PRECONDITION; the report
   is still written in that case. */
diffop_status diffop_selftest(uint64_t seed, int trials, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DIFFOP_H */
