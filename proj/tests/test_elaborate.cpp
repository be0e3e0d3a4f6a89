#include <catch_amalgamated.hpp>

#include "nl/elaborate.hpp"
#include "nl/match.hpp"
#include "nl/typing.hpp"
#include "support.hpp"

using namespace nl;
using namespace nltest;

namespace {
// Hand-built expansions, following the abbreviation table directly rather
// than the builder helpers, so shape regressions are caught.
Term hand_neg(const Term& p) { return app(app(k_nor(), p), p); }
}  // namespace

TEST_CASE("negation expands to nor p p") {
  Term p = rd("p");
  CHECK(alpha_eq(rd("~p"), app(app(k_nor(), p), p)));
}

TEST_CASE("disjunction expands to ~(nor p q)") {
  Term p = rd("p"), q = rd("q");
  Term inner = app(app(k_nor(), p), q);
  CHECK(alpha_eq(rd("p \\/ q"), app(app(k_nor(), inner), inner)));
}

TEST_CASE("conjunction and implication expand through ~ and \\/") {
  Term p = rd("p"), q = rd("q");
  CHECK(alpha_eq(rd("p /\\ q"),
                 hand_neg(rd("~p \\/ ~q"))));
  CHECK(alpha_eq(rd("p -> q"), rd("~p \\/ q")));
  CHECK(alpha_eq(rd("p <-> q"), rd("(p -> q) /\\ (q -> p)")));
}

TEST_CASE("quantifiers expand through nex") {
  // ex u:o. u  =  ~(nex (\u:o. u))
  Var u{"u", ty_o()};
  Term lam_u = lam(u, var_ref(u));
  Term expect = hand_neg(app(const_ref(Const::nex(ty_o())), lam_u));
  CHECK(alpha_eq(rd("ex u:o. u"), expect));
  CHECK(alpha_eq(rd("true"), expect));
  CHECK(alpha_eq(rd("all u:i. z u"), rd("~ ex u:i. ~(z u)")));
}

TEST_CASE("nex instance type is taken from the argument") {
  Term t = rd("nex z");
  REQUIRE(t->kind == TermKind::App);
  REQUIRE(t->fun->kind == TermKind::Const);
  CHECK(t->fun->cst.kind == ConstKind::Nex);
  CHECK(t->fun->cst.arg_ty == ty_i());
  CHECK_THROWS_AS(rd("nex"), ElabError);
  CHECK_THROWS_AS(rd("nex x"), ElabError);
}

TEST_CASE("inequality expands to the two-sided Leibniz test") {
  // s != t  =  (\u:T.\v:T. ex h:(T o). h u /\ ~(h v)) s t, here at T = i
  Var u{"u", ty_i()}, v{"v", ty_i()}, h{"h", ty_io()};
  Term leib = lam(
      u, lam(v, k_exists(h, k_and(app(var_ref(h), var_ref(u)),
                                  hand_neg(app(var_ref(h), var_ref(v)))))));
  Term expect = app(app(leib, rd("x")), rd("y"));
  CHECK(alpha_eq(rd("x != y"), expect));
  CHECK(alpha_eq(rd("x = y"), hand_neg(expect)));
  // introduced redexes are kept, not reduced
  CHECK_FALSE(reduct_steps(rd("x != y")).empty());
}

TEST_CASE("= instance selection") {
  // common structural type i o: the Leibniz variable is typed (i o) o
  Term zf = rd("z = f");
  auto e = as_eq(zf);
  REQUIRE(e.has_value());
  CHECK(e->at == ty_io());
  CHECK(is_formula(zf));
  // operands of structural type i fall to the i instance
  Term xa = rd("x = a");
  auto ei = as_eq(xa);
  REQUIRE(ei.has_value());
  CHECK(ei->at == ty_i());
  CHECK(is_formula(xa));
  // .= is always the i instance
  CHECK(alpha_eq(rd("x .= a"), rd("x = a")));
  // no common type at all
  CHECK_THROWS_AS(rd("z = p"), ElabError);
}

TEST_CASE("0 and numerals") {
  // 0 = \u:i. u .!= u, by Zero from the table
  Var u{"u", ty_i()};
  Term zero = lam(u, k_neq(var_ref(u), var_ref(u), ty_i()));
  CHECK(alpha_eq(rd("0"), zero));
  // n+1 is the successor template applied to n
  Term one = rd("1");
  REQUIRE(one->kind == TermKind::App);
  CHECK(alpha_eq(one->arg, zero));
  CHECK(alpha_eq(one->fun, k_succ_lam()));
  CHECK(alpha_eq(rd("3"), k_succ(k_succ(k_succ(zero)))));
  CHECK(alpha_eq(rd("0'"), rd("1")));
  CHECK(alpha_eq(rd("2'"), rd("3")));
}

TEST_CASE("numeral types") {
  for (const char* n : {"0", "1", "2", "3"}) {
    Term t = rd(n);
    TypeResult r = structural_type(t);
    REQUIRE(r.ok());
    CHECK(*r.type == ty_io());
    CHECK(has_type(t, ty_i()));
  }
}

TEST_CASE("equivalence arity comes from the structural type") {
  // z === f at i o: one quantified argument
  Term e = rd("z === f");
  REQUIRE(e->kind == TermKind::App);
  const Term& l = e->fun->fun;
  REQUIRE(l->kind == TermKind::Lam);
  CHECK(l->var.ty == ty_io());
  CHECK(alpha_eq(l, k_equiv_lam(ty_io())));
  CHECK(is_formula(e));
  // at type o the body is a plain iff
  Term po = rd("p === q");
  const Term& lo = po->fun->fun;
  Var xo{"x", ty_o()}, yo{"y", ty_o()};
  CHECK(alpha_eq(lo, lam(xo, lam(yo, k_iff(var_ref(xo), var_ref(yo))))));
  CHECK(alpha_eq(rd("p !== q"), hand_neg(rd("p === q"))));
}

TEST_CASE("equivalence on individuals is rejected") {
  try {
    rd("x === y");
    FAIL("expected ElabError");
  } catch (const ElabError& e) {
    CHECK(e.kind == ElabErrorKind::EquivOnIota);
  }
  CHECK_THROWS_AS(rd("z === p"), ElabError);
}

TEST_CASE("falsity is the negation of truth") {
  CHECK(alpha_eq(rd("false"), hand_neg(rd("true"))));
  CHECK(is_formula(rd("true")));
  CHECK(is_formula(rd("false")));
}

TEST_CASE("elaboration output is closed under the prelude", "[property]") {
  const char* samples[] = {
      "~p \\/ q",      "all u:i. z u -> ex v:i. z v",
      "0 = 0",         "x .= y /\\ p",
      "2' === 3",      "true -> false",
      "nex \\u:i. z u",
  };
  std::set<Var> declared;
  for (const auto& [name, v] : default_prelude().vars) declared.insert(v);
  for (const char* s : samples) {
    for (const Var& v : free_vars(rd(s))) CHECK(declared.count(v) == 1);
  }
}

TEST_CASE("abbreviation instances in formula position are formulas") {
  const char* samples[] = {"~p", "p \\/ q", "p /\\ q", "p -> q", "p <-> q",
                           "x = y", "x != y", "x .= y", "x .!= y",
                           "z === f", "z !== f", "ex u:i. z u",
                           "all u:o. u", "true", "false", "0 = 0"};
  for (const char* s : samples) {
    INFO(s);
    CHECK(is_formula(rd(s)));
  }
}
