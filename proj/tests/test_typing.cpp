#include <catch_amalgamated.hpp>

#include "nl/typing.hpp"
#include "support.hpp"

using namespace nl;
using namespace nltest;

TEST_CASE("is_predicate_type") {
  CHECK(is_predicate_type(ty_o()));
  CHECK_FALSE(is_predicate_type(ty_i()));
  CHECK(is_predicate_type(ty_io()));
}

TEST_CASE("function types never have codomain i") {
  CHECK_THROWS_AS(Type::fun(ty_o(), ty_i()), std::invalid_argument);
  CHECK_THROWS_AS(Type::fun(ty_i(), ty_i()), std::invalid_argument);
}

TEST_CASE("structural_type of the primitive constants") {
  TypeResult r = structural_type(k_nor());
  REQUIRE(r.ok());
  CHECK(*r.type == Type::fun(ty_o(), Type::fun(ty_o(), ty_o())));

  TypeResult s = structural_type(const_ref(Const::nex(ty_io())));
  REQUIRE(s.ok());
  CHECK(*s.type == Type::fun(Type::fun(ty_io(), ty_o()), ty_o()));
}

TEST_CASE("structural_type of the elaborated zero") {
  TypeResult r = structural_type(rd("0"));
  REQUIRE(r.ok());
  CHECK(*r.type == ty_io());
}

TEST_CASE("abstraction body must be a predicate type") {
  Var x{"x", ty_i()};
  TypeResult r = structural_type(lam(x, var_ref(x)));
  CHECK_FALSE(r.ok());
  CHECK(r.error.path == std::vector<int>{0});
}

TEST_CASE("ill-typed application reports the offending path") {
  // z q : argument q has type o, expected i, and q (a free o-variable) is
  // not nominalizable
  TypeResult r = structural_type(rd("z q"));
  CHECK_FALSE(r.ok());
  CHECK(r.error.path == std::vector<int>{1});
}

TEST_CASE("is_nominalizable") {
  CHECK(is_nominalizable(rd("0")));
  // free variable of a non-i type
  CHECK_FALSE(is_nominalizable(rd("z")));
  // \u:i. y .= u : structural type i o, sole free variable y : i
  CHECK(is_nominalizable(rd("\\u:i. y .= u")));
  // a variable alone never gains type i by nominalization
  CHECK_FALSE(is_nominalizable(var_ref(Var{"x", ty_i()})));
}

TEST_CASE("has_type includes the nominalization rule") {
  Term zero = rd("0");
  CHECK(has_type(zero, ty_i()));
  CHECK(has_type(zero, ty_io()));
  CHECK_FALSE(has_type(zero, ty_o()));
  CHECK_FALSE(has_type(var_ref(Var{"x", ty_i()}), ty_o()));
}

TEST_CASE("nominalizable arguments feed i-domains") {
  // f : i o applied to the numeral 0 (structural type i o, nominalizable)
  TypeResult r = structural_type(rd("f 0"));
  REQUIRE(r.ok());
  CHECK(*r.type == ty_o());
  // but not when the argument has a free non-i variable
  Term bad = app(var_ref(Var{"f", ty_io()}), rd("z"));
  CHECK_FALSE(structural_type(bad).ok());
}

TEST_CASE("is_formula") {
  CHECK(is_formula(rd("nor p q")));
  CHECK_FALSE(is_formula(rd("0")));
  CHECK(is_formula(rd("true")));
  CHECK(is_formula(rd("false")));
}

TEST_CASE("has_type agrees with structural_type when it succeeds",
          "[property]") {
  TermGen gen(13001);
  for (int i = 0; i < 200; ++i) {
    Term t = gen.gen_formula(14);
    TypeResult r = structural_type(t);
    REQUIRE(r.ok());
    CHECK(has_type(t, *r.type));
  }
}

TEST_CASE("subject reduction", "[property]") {
  TermGen gen(13002);
  for (int i = 0; i < 150; ++i) {
    Term t = gen.gen_formula(14);
    TypeResult r = structural_type(t);
    REQUIRE(r.ok());
    for (const Term& u : reduct_steps(t)) CHECK(has_type(u, *r.type));
  }
}

TEST_CASE("typing agrees with the five-condition oracle on small terms",
          "[property]") {
  // exhaustive comparison at small size; the full size-12 sweep lives in
  // the acceptance suite
  long checked = 0;
  for (int n = 1; n <= 8; ++n)
    enum_terms(small_signature(), n, [&](const Term& t) {
      ++checked;
      auto oracle = oracle_types(t);
      auto impl = all_types(t);
      REQUIRE(same_type_set(oracle, impl));
      REQUIRE(oracle.size() <= 2);
    });
  CHECK(checked > 10000);
}
