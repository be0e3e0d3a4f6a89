#include <catch_amalgamated.hpp>

#include "nl/term.hpp"
#include "support.hpp"

using namespace nl;
using namespace nltest;

TEST_CASE("free_vars basics") {
  Var x{"x", ty_o()};
  CHECK(free_vars(var_ref(x)) == std::set<Var>{x});
  CHECK(free_vars(lam(x, var_ref(x))).empty());

  Var xi{"x", ty_i()}, z{"z", ty_io()};
  Term t = lam(xi, app(var_ref(z), var_ref(xi)));
  CHECK(free_vars(t) == std::set<Var>{z});
}

TEST_CASE("variables are identified by name and type") {
  Var xi{"x", ty_i()}, xo{"x", ty_o()};
  CHECK(xi != xo);
  // a binder of one type does not bind a same-named variable of another
  Term t = lam(xi, var_ref(xo));
  CHECK(free_vars(t) == std::set<Var>{xo});
}

TEST_CASE("substitute: direct replacement") {
  Var x{"x", ty_i()}, z{"z", ty_io()};
  Const c = Const::declared("a", ty_i());
  Term p = app(var_ref(z), var_ref(x));
  Term result = substitute(p, const_ref(c), x);
  CHECK(alpha_eq(result, app(var_ref(z), const_ref(c))));
}

TEST_CASE("substitute: capture-avoidance renames the binder") {
  // (\x:i. y x)[t/y] with t = \u:i. r u x, x free in t
  Var x{"x", ty_i()}, y{"y", ty_io()}, u{"u", ty_i()};
  Var r{"r", ty_iio()};
  Term p = lam(x, app(var_ref(y), var_ref(x)));
  Term t = lam(u, app(app(var_ref(r), var_ref(u)), var_ref(x)));
  Term got = substitute(p, t, y);

  Var x1{"x1", ty_i()};
  Term expect = lam(x1, app(t, var_ref(x1)));
  CHECK(alpha_eq(got, expect));
  // the free x of t must not be captured
  CHECK(free_vars(got).count(x) == 1);
}

TEST_CASE("substitute: identity") {
  Term p = rd("z x \\/ p");
  Var x{"x", ty_i()};
  CHECK(alpha_eq(substitute(p, var_ref(x), x), p));
}

TEST_CASE("alpha_eq basics") {
  Var x{"x", ty_o()}, y{"y", ty_o()}, xi{"x", ty_i()};
  CHECK(alpha_eq(lam(x, var_ref(x)), lam(y, var_ref(y))));
  // binder types differ: no type-preserving renaming exists
  CHECK_FALSE(alpha_eq(lam(x, var_ref(x)), lam(xi, var_ref(xi))));
  // free variables are rigid
  CHECK_FALSE(alpha_eq(var_ref(x), var_ref(y)));
}

TEST_CASE("alpha_eq handles shadowing") {
  Var x{"x", ty_o()}, y{"y", ty_o()};
  // \x. \x. x  vs  \y. \x. x
  Term a = lam(x, lam(x, var_ref(x)));
  Term b = lam(y, lam(x, var_ref(x)));
  CHECK(alpha_eq(a, b));
  // \x. \y. x  vs  \x. \y. y
  CHECK_FALSE(alpha_eq(lam(x, lam(y, var_ref(x))),
                       lam(x, lam(y, var_ref(y)))));
}

TEST_CASE("alpha_eq is an equivalence relation", "[property]") {
  TermGen gen(12001);
  for (int i = 0; i < 200; ++i) {
    Term a = gen.gen_formula(12);
    Term b = gen.gen_formula(12);
    Term c = gen.gen_formula(12);
    CHECK(alpha_eq(a, a));
    if (alpha_eq(a, b)) CHECK(alpha_eq(b, a));
    if (alpha_eq(a, b) && alpha_eq(b, c)) CHECK(alpha_eq(a, c));
    // contracting an identity redex around a term gives it back
    auto a1 = detail::step_lo(
        app(lam(Var{"h", ty_o()}, var_ref(Var{"h", ty_o()})), a));
    REQUIRE(a1.has_value());
    CHECK(alpha_eq(a, *a1));
  }
}

TEST_CASE("substitution respects alpha classes", "[property]") {
  TermGen gen(12002);
  Var hole{"hole", ty_o()};
  for (int i = 0; i < 100; ++i) {
    Term s = gen.gen_formula(10);
    Term t = gen.gen_formula(8);
    // build an alpha-variant of s by renaming through a fresh beta step
    Term s2 = substitute(s, var_ref(hole), hole);
    REQUIRE(alpha_eq(s, s2));
    CHECK(alpha_eq(substitute(s, t, hole), substitute(s2, t, hole)));
  }
}

TEST_CASE("free vars of a substitution result", "[property]") {
  TermGen gen(12003);
  Var x{"x", ty_i()};
  for (int i = 0; i < 200; ++i) {
    Term p = gen.gen_formula(10);
    Term t = gen.gen(ty_i(), 6);
    auto fv_result = free_vars(substitute(p, t, x));
    auto fv_p = free_vars(p);
    bool x_free_in_p = fv_p.count(x) > 0;
    fv_p.erase(x);
    auto fv_t = free_vars(t);
    for (const Var& v : fv_result)
      CHECK((fv_p.count(v) || fv_t.count(v)));
    if (x_free_in_p)
      for (const Var& v : fv_t) CHECK(fv_result.count(v));
  }
}

TEST_CASE("reduct_steps: single beta redex") {
  Term t = rd("(\\u:o. u) q");
  auto steps = reduct_steps(t);
  REQUIRE(steps.size() == 1);
  CHECK(alpha_eq(steps[0], rd("q")));
}

TEST_CASE("reduct_steps: eta redex") {
  // \u:i. z u  ->  z  (u not free in z)
  Term t = rd("\\u:i. z u");
  auto steps = reduct_steps(t);
  REQUIRE(steps.size() == 1);
  CHECK(alpha_eq(steps[0], rd("z")));
}

TEST_CASE("reduct_steps: eta side condition blocks when binder is free in head") {
  // \u:i. (w u) u has no eta redex: u occurs free in the head (w u)
  Term t = rd("\\u:i. w u u");
  for (const Term& s : reduct_steps(t)) CHECK_FALSE(alpha_eq(s, rd("w")));
  CHECK(reduct_steps(t).empty());
}

TEST_CASE("reduct_steps: no redex in an atom") {
  CHECK(reduct_steps(rd("q")).empty());
}

TEST_CASE("reduces_one is a single step") {
  CHECK(reduces_one(rd("(\\u:o. u) q"), rd("q")));
  // two beta steps are not one step
  CHECK_FALSE(reduces_one(rd("(\\u:o. u) ((\\v:o. v) q)"), rd("q")));
  // irreflexive on normal forms
  CHECK_FALSE(reduces_one(rd("q"), rd("q")));
}

TEST_CASE("every enumerated reduct is reachable in one step", "[property]") {
  TermGen gen(12004);
  for (int i = 0; i < 200; ++i) {
    Term t = gen.gen_formula(14);
    for (const Term& u : reduct_steps(t)) CHECK(reduces_one(t, u));
  }
}

TEST_CASE("normalize: normal form is a fixpoint") {
  Term q = rd("q");
  CHECK(alpha_eq(normalize(q, Strategy::LeftmostOutermost, 10), q));
  CHECK(alpha_eq(normalize(q, Strategy::RightmostInnermost, 10), q));
}

TEST_CASE("normalize the elaborated numeral 1") {
  // 1 = successor applied to 0; one leftmost-outermost step exposes
  // \y:i. 0 .= y before the inner instances unfold
  Term one = rd("1");
  auto first = detail::step_lo(one);
  REQUIRE(first.has_value());
  Var y{"y", ty_i()};
  Term expect = lam(y, k_ideq(rd("0"), var_ref(y)));
  CHECK(alpha_eq(*first, expect));
  // and the full normal forms of both strategies agree
  Term lo = normalize(one, Strategy::LeftmostOutermost, 10000);
  Term ri = normalize(one, Strategy::RightmostInnermost, 10000);
  CHECK(alpha_eq(lo, ri));
  CHECK(reduct_steps(lo).empty());
}

TEST_CASE("strategies agree on random well-typed terms", "[property]") {
  TermGen gen(12005);
  for (int i = 0; i < 150; ++i) {
    Term t = gen.gen_formula(16);
    Term lo = normalize(t, Strategy::LeftmostOutermost, 10000);
    Term ri = normalize(t, Strategy::RightmostInnermost, 10000);
    CHECK(alpha_eq(lo, ri));
  }
}

TEST_CASE("normalize reports fuel exhaustion on a looping ill-typed term") {
  // omega = (\u. u u)(\u. u u) is not well-typed here; build it raw
  Var u{"u", ty_io()};
  Term self = lam(u, app(var_ref(u), var_ref(u)));
  Term omega = app(self, self);
  CHECK_THROWS_AS(normalize(omega, Strategy::LeftmostOutermost, 100),
                  FuelExhausted);
}
