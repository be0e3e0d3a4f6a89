#pragma once

// Shared helpers for the test suites: a small default prelude, a seeded
// generator of well-typed terms, an exhaustive term enumerator over a fixed
// signature, and an independent set-valued typing oracle that realizes the
// five typing conditions as a closure (used to cross-check the algorithmic
// typer).

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nl/elaborate.hpp"
#include "nl/syntax.hpp"
#include "nl/term.hpp"
#include "nl/typing.hpp"

namespace nltest {

using namespace nl;

inline Type ty_i() { return Type::iota(); }
inline Type ty_o() { return Type::o(); }
inline Type ty_io() { return Type::fun(Type::iota(), Type::o()); }
inline Type ty_iio() {
  return Type::fun(Type::iota(), ty_io());
}
inline Type ty_oo() { return Type::fun(Type::o(), Type::o()); }

// var p, q, r : o; var x, y : i; var z : i o; var w : i i o;
// const a, b : i; const f : i o
inline const Prelude& default_prelude() {
  static const Prelude p = [] {
    Prelude pr;
    pr.declare_var("p", ty_o());
    pr.declare_var("q", ty_o());
    pr.declare_var("r", ty_o());
    pr.declare_var("x", ty_i());
    pr.declare_var("y", ty_i());
    pr.declare_var("z", ty_io());
    pr.declare_var("w", ty_iio());
    pr.declare_const("a", ty_i());
    pr.declare_const("b", ty_i());
    pr.declare_const("f", ty_io());
    return pr;
  }();
  return p;
}

inline Term rd(const std::string& text) {
  return read_term(text, default_prelude());
}

// ---------------------------------------------------------------------------
// Random well-typed terms.

class TermGen {
 public:
  explicit TermGen(unsigned seed) : rng_(seed) {}

  // A well-typed term whose structural type is `target`; size roughly
  // bounded by the budget.
  Term gen(const Type& target, int budget) {
    std::vector<Var> scope;
    for (const auto& [name, v] : default_prelude().vars) scope.push_back(v);
    return gen_rec(target, budget, scope);
  }

  Term gen_formula(int budget) { return gen(Type::o(), budget); }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin(double p) {
    return std::uniform_real_distribution<double>(0, 1)(rng_) < p;
  }

  Type pick_arg_type() {
    switch (pick(3)) {
      case 0: return ty_i();
      case 1: return ty_o();
      default: return ty_io();
    }
  }

  Term gen_rec(const Type& target, int budget, std::vector<Var>& scope) {
    std::vector<Term> leaves;
    for (const Var& v : scope)
      if (v.ty == target) leaves.push_back(var_ref(v));
    Type nor_ty = Type::fun(ty_o(), ty_oo());
    if (target == nor_ty) leaves.push_back(k_nor());
    for (const auto& [name, c] : default_prelude().consts)
      if (c.type() == target) leaves.push_back(const_ref(c));

    if (budget <= 1) {
      if (!leaves.empty()) return leaves[pick((int)leaves.size())];
      // no leaf of this type; fall through and build the smallest term
      budget = 2;
    }

    // abstraction when the target is a function type
    if (target.is_fun() && (leaves.empty() || coin(0.55))) {
      Var x = binder(target.dom(), scope);
      scope.push_back(x);
      Term body = gen_rec(target.cod(), budget - 1, scope);
      scope.pop_back();
      return lam(x, body);
    }
    // application; this is what introduces beta-redexes. Applications can
    // never produce type i (codomains are never i), so i-targets stay leaves.
    if (target != Type::iota() && budget >= 3 &&
        (leaves.empty() || coin(0.5))) {
      Type arg_ty = pick_arg_type();
      int arg_budget = 1 + pick(std::max(1, budget / 2));
      Term f = gen_rec(Type::fun(arg_ty, target), budget - 1 - arg_budget,
                       scope);
      Term a = gen_rec(arg_ty, arg_budget, scope);
      return app(f, a);
    }
    if (!leaves.empty()) return leaves[pick((int)leaves.size())];
    // target has no leaf and is not a function type: target must be i or o;
    // build (\u:o. target-leafless) ... simplest: abstract-and-apply.
    Type arg_ty = ty_o();
    Term f = gen_rec(Type::fun(arg_ty, target), std::max(2, budget - 2),
                     scope);
    Term a = gen_rec(arg_ty, 1, scope);
    return app(f, a);
  }

  Var binder(const Type& ty, const std::vector<Var>& scope) {
    std::set<std::string> avoid;
    for (const Var& v : scope) avoid.insert(v.name);
    static const char* stems[] = {"u", "v", "s", "t"};
    return fresh_var(Var{stems[pick(4)], ty}, avoid);
  }

  std::mt19937 rng_;
};

// ---------------------------------------------------------------------------
// Exhaustive enumeration over a fixed signature.

struct Signature {
  std::vector<Term> leaves;
  std::vector<Var> binders;
};

inline const Signature& small_signature() {
  static const Signature s = [] {
    Signature sig;
    sig.leaves = {var_ref(Var{"x", ty_i()}), var_ref(Var{"w", ty_o()}),
                  k_nor()};
    sig.binders = {Var{"x", ty_i()}, Var{"w", ty_o()}};
    return sig;
  }();
  return s;
}

// Calls cb with every term of size exactly n over the signature.
inline void enum_terms(const Signature& sig, int n,
                       const std::function<void(const Term&)>& cb) {
  if (n <= 0) return;
  if (n == 1) {
    for (const Term& l : sig.leaves) cb(l);
    return;
  }
  for (const Var& b : sig.binders)
    enum_terms(sig, n - 1, [&](const Term& body) { cb(lam(b, body)); });
  for (int i = 1; i <= n - 2; ++i)
    enum_terms(sig, i, [&](const Term& f) {
      enum_terms(sig, n - 1 - i, [&](const Term& a) { cb(app(f, a)); });
    });
}

// ---------------------------------------------------------------------------
// Independent typing oracle: the set of all types derivable by the five
// conditions (var, con, app, abs, nom), computed bottom-up as a closure.

inline std::vector<Type> oracle_types(const Term& t) {
  std::vector<Type> set;
  auto add = [&](const Type& ty) {
    for (const Type& u : set)
      if (u == ty) return;
    set.push_back(ty);
  };
  switch (t->kind) {
    case TermKind::Var:
      add(t->var.ty);
      break;
    case TermKind::Const:
      add(t->cst.type());
      break;
    case TermKind::App: {
      for (const Type& tf : oracle_types(t->fun))
        if (tf.is_fun())
          for (const Type& ta : oracle_types(t->arg))
            if (ta == tf.dom()) add(tf.cod());
      break;
    }
    case TermKind::Lam: {
      for (const Type& tb : oracle_types(t->body))
        if (is_predicate_type(tb)) add(Type::fun(t->var.ty, tb));
      break;
    }
  }
  // nom: p : i if p has a predicate type and every free variable is an i
  bool has_pred = std::any_of(set.begin(), set.end(), is_predicate_type);
  if (has_pred) {
    bool all_iota = true;
    for (const Var& v : free_vars(t))
      if (v.ty != Type::iota()) {
        all_iota = false;
        break;
      }
    if (all_iota) add(Type::iota());
  }
  return set;
}

inline bool same_type_set(std::vector<Type> a, std::vector<Type> b) {
  if (a.size() != b.size()) return false;
  auto lt = [](const Type& x, const Type& y) { return compare(x, y) < 0; };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

}  // namespace nltest
