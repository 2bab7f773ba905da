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

#include "diffop.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "diffop/error.hpp"
#include "diffop/fraction.hpp"
#include "diffop/hermite.hpp"
#include "diffop/json_io.hpp"
#include "diffop/modules.hpp"
#include "diffop/ore_matrix.hpp"
#include "diffop/ore_poly.hpp"
#include "diffop/parser.hpp"
#include "diffop/selftest.hpp"
#include "json.hpp"

struct diffop_op {
  diffop::OrePoly value;
};

struct diffop_mat {
  diffop::OreMatrix value;
};

namespace {

using nlohmann::json;

thread_local std::string g_last_error;

diffop_status fail(diffop_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <class Body>
diffop_status guard(Body&& body) {
  try {
    return body();
  } catch (const diffop::Error& e) {
    return fail(static_cast<diffop_status>(static_cast<int>(e.status())),
                e.what());
  } catch (const std::bad_alloc&) {
    return fail(DIFFOP_PRECONDITION, "out of memory");
  } catch (const std::exception& e) {
    return fail(DIFFOP_PRECONDITION, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

diffop_status emit(char** out, const std::string& text) {
  *out = dup_string(text);
  if (*out == nullptr) return fail(DIFFOP_PRECONDITION, "out of memory");
  return DIFFOP_OK;
}

diffop_status emit(char** out, const json& doc) { return emit(out, doc.dump()); }

diffop_status null_args() {
  return fail(DIFFOP_PRECONDITION, "null argument");
}

diffop::Side side_of(const char* side) {
  if (side == nullptr)
    throw diffop::PreconditionError("side must be \"left\" or \"right\"");
  return diffop::parse_side(side);
}

const char* side_name(diffop::Side side) {
  return side == diffop::Side::left ? "left" : "right";
}

json mat_field(const diffop::OreMatrix& m) {
  return json::parse(diffop::matrix_to_json(m));
}

json fraction_json(const diffop::Fraction<diffop::OrePoly>& f) {
  return {{"side", side_name(f.side)},
          {"num", diffop::to_string(f.num)},
          {"den", diffop::to_string(f.den)}};
}

json fraction_json(const diffop::Fraction<diffop::OreMatrix>& f) {
  return {{"side", side_name(f.side)},
          {"num", mat_field(f.num)},
          {"den", mat_field(f.den)}};
}

json trace_json(const diffop::WitnessTrace& t) {
  return {{"a1", diffop::to_string(t.a1)}, {"b1", diffop::to_string(t.b1)},
          {"m", diffop::to_string(t.m)},   {"u", diffop::to_string(t.u)},
          {"v", diffop::to_string(t.v)},   {"p", diffop::to_string(t.p)},
          {"q", diffop::to_string(t.q)},   {"u_regular", t.u_regular},
          {"v_regular", t.v_regular}};
}

diffop::Rational parse_constant(const char* text) {
  if (text == nullptr)
    throw diffop::PreconditionError("the pairing constant is missing");
  diffop::RatFunc f = diffop::parse_ratfunc(text);
  if (!f.is_constant())
    throw diffop::PreconditionError(
        "the pairing constant must be a rational number");
  return f.num().constant_term();
}

template <class Ring, class ToJson>
diffop_status minfrac_impl(const Ring& num, const Ring& den, const char* side,
                           char** json_out, ToJson&& leaf) {
  diffop::Side s = side_of(side);
  auto f = diffop::make_fraction(num, den, s);
  auto dec = diffop::minimal_decomposition(f);
  json doc{{"side", side_name(dec.fraction.side)},
           {"num", leaf(dec.fraction.num)},
           {"den", leaf(dec.fraction.den)},
           {"gcd_stripped", leaf(dec.stripped)},
           {"bezout", json{{"u", leaf(dec.u)}, {"v", leaf(dec.v)}}}};
  return emit(json_out, doc);
}

}  // namespace

extern "C" {

const char* diffop_last_error(void) { return g_last_error.c_str(); }

void diffop_string_free(char* text) { std::free(text); }

/* ----- scalar operators ----- */

diffop_status diffop_op_parse(const char* text, diffop_op** out) {
  if (text == nullptr || out == nullptr)
    return null_args();
  return guard([&] {
    *out = new diffop_op{diffop::parse_operator(text)};
    return DIFFOP_OK;
  });
}

diffop_status diffop_op_to_string(const diffop_op* a, char** out) {
  if (a == nullptr || out == nullptr) return null_args();
  return guard([&] { return emit(out, diffop::to_string(a->value)); });
}

diffop_status diffop_op_adjoint(const diffop_op* a, diffop_op** out) {
  if (a == nullptr || out == nullptr) return null_args();
  return guard([&] {
    *out = new diffop_op{diffop::adjoint(a->value)};
    return DIFFOP_OK;
  });
}

diffop_status diffop_op_order(const diffop_op* a, int* out) {
  if (a == nullptr || out == nullptr) return null_args();
  *out = a->value.is_zero() ? -1 : a->value.order();
  return DIFFOP_OK;
}

void diffop_op_free(diffop_op* a) { delete a; }

diffop_status diffop_gcd(const diffop_op* a, const diffop_op* b,
                         const char* side, char** json_out) {
  if (a == nullptr || b == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::BezoutCertificate cert =
        diffop::gcd_extended(a->value, b->value, side_of(side));
    json doc{{"side", side_name(cert.side)},
             {"d", diffop::to_string(cert.d)},
             {"u", diffop::to_string(cert.u)},
             {"v", diffop::to_string(cert.v)}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_bezout(const diffop_op* a, const diffop_op* b,
                            const char* side, char** json_out) {
  if (a == nullptr || b == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::BezoutCertificate cert =
        diffop::gcd_extended(a->value, b->value, side_of(side));
    json doc{{"side", side_name(cert.side)},
             {"d", diffop::to_string(cert.d)},
             {"u", diffop::to_string(cert.u)},
             {"v", diffop::to_string(cert.v)},
             {"a1", diffop::to_string(cert.a1)},
             {"b1", diffop::to_string(cert.b1)}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_lcm(const diffop_op* a, const diffop_op* b,
                         const char* side, char** json_out) {
  if (a == nullptr || b == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::LcmCertificate cert =
        diffop::lcm(a->value, b->value, side_of(side));
    json doc{{"side", side_name(cert.side)},
             {"m", diffop::to_string(cert.m)},
             {"a1", diffop::to_string(cert.a1)},
             {"b1", diffop::to_string(cert.b1)}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_divide(const diffop_op* a, const diffop_op* b,
                            const char* side, char** json_out) {
  if (a == nullptr || b == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::DivisionResult div =
        diffop::divide(a->value, b->value, side_of(side));
    json doc{{"side", side_name(div.side)},
             {"quotient", diffop::to_string(div.quotient)},
             {"remainder", diffop::to_string(div.remainder)}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_minfrac(const diffop_op* num, const diffop_op* den,
                             const char* side, char** json_out) {
  if (num == nullptr || den == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    return minfrac_impl(num->value, den->value, side, json_out,
                        [](const diffop::OrePoly& p) {
                          return json(diffop::to_string(p));
                        });
  });
}

diffop_status diffop_convert(const diffop_op* num, const diffop_op* den,
                             const char* side, char** json_out) {
  if (num == nullptr || den == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    auto f = diffop::make_fraction(num->value, den->value, side_of(side));
    auto g = diffop::convert_side(f);
    return emit(json_out, fraction_json(g));
  });
}

diffop_status diffop_equal(const diffop_op* num1, const diffop_op* den1,
                           const diffop_op* num2, const diffop_op* den2,
                           const char* side, int* equal_out) {
  if (num1 == nullptr || den1 == nullptr || num2 == nullptr ||
      den2 == nullptr || equal_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::Side s = side_of(side);
    auto f = diffop::make_fraction(num1->value, den1->value, s);
    auto g = diffop::make_fraction(num2->value, den2->value, s);
    *equal_out = diffop::fraction_equal(f, g) ? 1 : 0;
    return DIFFOP_OK;
  });
}

diffop_status diffop_hermite_ratfunc(const char* text, char** json_out) {
  if (text == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::RatFunc g = diffop::parse_ratfunc(text);
    diffop::HermiteDecomposition dec = diffop::hermite_reduce(g);
    json doc{{"integrated", diffop::to_string(dec.integrated)},
             {"residue", diffop::to_string(dec.residue)},
             {"total_derivative", dec.residue.is_zero()}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_kernel_poly(const diffop_op* b, int degree_bound,
                                 char** json_out) {
  if (b == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    std::vector<diffop::Poly> basis =
        diffop::kernel_polynomial(b->value, degree_bound);
    json list = json::array();
    for (const diffop::Poly& p : basis)
      list.push_back(diffop::to_string(diffop::RatFunc(p)));
    return emit(json_out, json{{"basis", std::move(list)}});
  });
}

/* ----- module witnesses ----- */

diffop_status diffop_witness_thm33(const diffop_op* a, const diffop_op* b,
                                   const char* x_text, const char* y_text,
                                   char** json_out) {
  if (a == nullptr || b == nullptr || x_text == nullptr || y_text == nullptr ||
      json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::NaturalModule V;
    diffop::RatFunc x = diffop::parse_ratfunc(x_text);
    diffop::RatFunc y = diffop::parse_ratfunc(y_text);
    auto [z, trace] = diffop::thm33_witness(a->value, b->value, x, y, V);
    json doc{{"z", diffop::to_string(z)}, {"trace", trace_json(trace)}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_intersection_check(const diffop_op* a, const diffop_op* b,
                                        int trials, uint64_t seed,
                                        char** json_out) {
  if (a == nullptr || b == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    if (trials < 1)
      throw diffop::PreconditionError("trials must be at least 1");
    diffop::NaturalModule V;
    diffop::IntersectionReport report =
        diffop::intersection_check(a->value, b->value, V, trials, seed);
    json failures = json::array();
    for (const diffop::IntersectionFailure& f : report.failures)
      failures.push_back(json{{"seed", f.seed}, {"inputs", f.inputs}});
    json doc{{"trials", report.trials},
             {"passes", report.passes},
             {"failures", std::move(failures)}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_witness_cor34(const diffop_op* a, const diffop_op* b,
                                   const char* x_text, const char* y_text,
                                   const char* eps_text, char** json_out) {
  if (a == nullptr || b == nullptr || x_text == nullptr || y_text == nullptr ||
      json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::NaturalModule V;
    diffop::RatFunc x = diffop::parse_ratfunc(x_text);
    diffop::RatFunc y = diffop::parse_ratfunc(y_text);
    diffop::Rational eps = parse_constant(eps_text);
    diffop::RatFunc z = diffop::cor34_witness(a->value, b->value, x, y, eps, V);
    return emit(json_out, json{{"z", diffop::to_string(z)}});
  });
}

diffop_status diffop_isotropy_check(const diffop_op* a, const diffop_op* b,
                                    int* skew_out) {
  if (a == nullptr || b == nullptr || skew_out == nullptr)
    return null_args();
  return guard([&] {
    *skew_out = diffop::skew_pair_check(a->value, b->value) ? 1 : 0;
    return DIFFOP_OK;
  });
}

diffop_status diffop_isotropy_witness(const diffop_op* a, const diffop_op* b,
                                      const char* y1_text, const char* y2_text,
                                      char** json_out) {
  if (a == nullptr || b == nullptr || y1_text == nullptr ||
      y2_text == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::NaturalModule V;
    diffop::RatFunc y1 = diffop::parse_ratfunc(y1_text);
    diffop::RatFunc y2 = diffop::parse_ratfunc(y2_text);
    diffop::RatFunc z =
        diffop::maximal_isotropy_witness(a->value, b->value, y1, y2, V);
    return emit(json_out, json{{"z", diffop::to_string(z)}});
  });
}

/* ----- operator matrices ----- */

diffop_status diffop_mat_parse(const char* json_text, diffop_mat** out) {
  if (json_text == nullptr || out == nullptr)
    return null_args();
  return guard([&] {
    *out = new diffop_mat{diffop::matrix_from_json(json_text)};
    return DIFFOP_OK;
  });
}

diffop_status diffop_mat_to_json(const diffop_mat* m, char** json_out) {
  if (m == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] { return emit(json_out, diffop::matrix_to_json(m->value)); });
}

diffop_status diffop_mat_adjoint(const diffop_mat* m, diffop_mat** out) {
  if (m == nullptr || out == nullptr)
    return null_args();
  return guard([&] {
    *out = new diffop_mat{diffop::adjoint(m->value)};
    return DIFFOP_OK;
  });
}

void diffop_mat_free(diffop_mat* m) { delete m; }

diffop_status diffop_mat_bezout(const diffop_mat* a, const diffop_mat* b,
                                const char* side, char** json_out) {
  if (a == nullptr || b == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::MatrixBezoutCertificate cert =
        diffop::matrix_gcd(a->value, b->value, side_of(side));
    json doc{{"side", side_name(cert.side)}, {"d", mat_field(cert.d)},
             {"u", mat_field(cert.u)},       {"v", mat_field(cert.v)},
             {"a1", mat_field(cert.a1)},     {"b1", mat_field(cert.b1)}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_mat_lcm(const diffop_mat* a, const diffop_mat* b,
                             const char* side, char** json_out) {
  if (a == nullptr || b == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::MatrixLcmCertificate cert =
        diffop::matrix_lcm(a->value, b->value, side_of(side));
    json doc{{"side", side_name(cert.side)},
             {"m", mat_field(cert.m)},
             {"a1", mat_field(cert.a1)},
             {"b1", mat_field(cert.b1)}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_mat_divide(const diffop_mat* a, const diffop_mat* b,
                                const char* side, char** json_out) {
  if (a == nullptr || b == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::Side s = side_of(side);
    diffop::OreMatrix q = diffop::exact_quotient(a->value, b->value, s);
    json doc{{"side", side_name(s)}, {"quotient", mat_field(q)}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_mat_minfrac(const diffop_mat* num, const diffop_mat* den,
                                 const char* side, char** json_out) {
  if (num == nullptr || den == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    return minfrac_impl(num->value, den->value, side, json_out,
                        [](const diffop::OreMatrix& m) { return mat_field(m); });
  });
}

diffop_status diffop_mat_convert(const diffop_mat* num, const diffop_mat* den,
                                 const char* side, char** json_out) {
  if (num == nullptr || den == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    auto f = diffop::make_fraction(num->value, den->value, side_of(side));
    auto g = diffop::convert_side(f);
    return emit(json_out, fraction_json(g));
  });
}

diffop_status diffop_mat_equal(const diffop_mat* num1, const diffop_mat* den1,
                               const diffop_mat* num2, const diffop_mat* den2,
                               const char* side, int* equal_out) {
  if (num1 == nullptr || den1 == nullptr || num2 == nullptr ||
      den2 == nullptr || equal_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::Side s = side_of(side);
    auto f = diffop::make_fraction(num1->value, den1->value, s);
    auto g = diffop::make_fraction(num2->value, den2->value, s);
    *equal_out = diffop::fraction_equal(f, g) ? 1 : 0;
    return DIFFOP_OK;
  });
}

diffop_status diffop_mat_ddet_degree(const diffop_mat* m, int* out) {
  if (m == nullptr || out == nullptr)
    return null_args();
  return guard([&] {
    std::optional<int> degree = diffop::ddet_degree(m->value);
    if (!degree)
      throw diffop::PreconditionError("the matrix is not regular");
    *out = *degree;
    return DIFFOP_OK;
  });
}

diffop_status diffop_mat_hermite(const diffop_mat* m, char** json_out) {
  if (m == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::MatrixHermiteForm form = diffop::row_hermite(m->value);
    json doc{{"h", mat_field(form.h)},
             {"u", mat_field(form.u)},
             {"uinv", mat_field(form.uinv)}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_mat_regularize(const diffop_mat* a, const diffop_mat* b,
                                    const char* side, uint64_t seed,
                                    int budget, char** json_out) {
  if (a == nullptr || b == nullptr || json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::Side s = side_of(side);
    diffop::RegularizeResult res =
        diffop::regularize(a->value, b->value, s, seed, budget);
    json doc{{"side", side_name(s)},
             {"q", mat_field(res.q)},
             {"value", mat_field(res.value)},
             {"attempts", res.attempts}};
    return emit(json_out, doc);
  });
}

diffop_status diffop_selftest(uint64_t seed, int trials, char** json_out) {
  if (json_out == nullptr) return null_args();
  return guard([&]() -> diffop_status {
    if (trials < 1)
      throw diffop::PreconditionError("trials must be at least 1");
    diffop::SelftestReport report = diffop::run_selftest(seed, trials);
    json suites = json::array();
    for (const diffop::SuiteResult& suite : report.suites)
      suites.push_back(json{{"name", suite.name},
                            {"trials", suite.trials},
                            {"passes", suite.passes}});
    json doc{{"seed", report.seed},
             {"trials", report.trials},
             {"suites", std::move(suites)},
             {"ok", report.ok}};
    diffop_status emitted = emit(json_out, doc);
    if (emitted != DIFFOP_OK) return emitted;
    if (!report.ok) return fail(DIFFOP_PRECONDITION, "selftest failed");
    return DIFFOP_OK;
  });
}

diffop_status diffop_mat_regularize_pair(const diffop_mat* a1,
                                         const diffop_mat* b1,
                                         const diffop_mat* a2,
                                         const diffop_mat* b2,
                                         const char* side, uint64_t seed,
                                         int budget, char** json_out) {
  if (a1 == nullptr || b1 == nullptr || a2 == nullptr || b2 == nullptr ||
      json_out == nullptr)
    return null_args();
  return guard([&] {
    diffop::Side s = side_of(side);
    diffop::RegularizePairResult res = diffop::regularize_pair(
        a1->value, b1->value, a2->value, b2->value, s, seed, budget);
    json doc{{"side", side_name(s)},
             {"q", mat_field(res.q)},
             {"value1", mat_field(res.value1)},
             {"value2", mat_field(res.value2)},
             {"attempts", res.attempts}};
    return emit(json_out, doc);
  });
}

} /* extern "C" */
