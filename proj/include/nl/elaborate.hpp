#pragma once

// Elaboration of surface syntax to kernel terms. Every defined operator is a
// definitional macro over the two constant families:
//
//   ~p        := nor p p
//   p \/ q    := ~(nor p q)
//   p /\ q    := ~(~p \/ ~q)
//   p -> q    := ~p \/ q
//   p <-> q   := (p -> q) /\ (q -> p)
//   ex x:T. p := ~(nex (\x:T. p))
//   all x:T.p := ~ ex x:T. ~p
//   s != t    := (\x:T.\y:T. ex z:(T o). z x /\ ~(z y)) s t
//   s = t     := ~(s != t)
//   .= / .!=  := = / != fixed at T = i
//   s === t   := (\x:S.\y:S. all z1 .. zn. x z1..zn <-> y z1..zn) s t
//   t'        := (\x:i.\y:i. x .= y) t
//   0         := \x:i. x .!= x        n+1 := n'
//   true      := ex x:o. x            false := ~true
//
// Redexes introduced by the definitions are kept; nothing is reduced here.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nl/syntax.hpp"
#include "nl/term.hpp"
#include "nl/typing.hpp"

namespace nl {

enum class ElabErrorKind { IllTyped, EquivOnIota, BareNex };

struct ElabError : std::runtime_error {
  ElabErrorKind kind;
  Span span;
  ElabError(ElabErrorKind k, Span s, const std::string& what)
      : std::runtime_error(what), kind(k), span(s) {}
};

// Kernel-level macro builders. These are the single source of the expansion
// shapes; the proof checker's pattern matchers reuse them.

inline Term k_nor() { return const_ref(Const::nor()); }
inline Term k_nex(const Type& tau) { return const_ref(Const::nex(tau)); }

inline Term k_neg(const Term& p) { return app(app(k_nor(), p), p); }
inline Term k_or(const Term& p, const Term& q) {
  return k_neg(app(app(k_nor(), p), q));
}
inline Term k_and(const Term& p, const Term& q) {
  return k_neg(k_or(k_neg(p), k_neg(q)));
}
inline Term k_imp(const Term& p, const Term& q) { return k_or(k_neg(p), q); }
inline Term k_iff(const Term& p, const Term& q) {
  return k_and(k_imp(p, q), k_imp(q, p));
}
inline Term k_exists(const Var& x, const Term& p) {
  return k_neg(app(k_nex(x.ty), lam(x, p)));
}
inline Term k_forall(const Var& x, const Term& p) {
  return k_neg(k_exists(x, k_neg(p)));
}

// \x:T.\y:T. ex z:(T o). z x /\ ~(z y) -- the inequality template at T.
inline Term k_neq_lam(const Type& tau) {
  Var x{"x", tau}, y{"y", tau}, z{"z", Type::fun(tau, Type::o())};
  Term body = k_and(app(var_ref(z), var_ref(x)),
                    k_neg(app(var_ref(z), var_ref(y))));
  return lam(x, lam(y, k_exists(z, body)));
}
inline Term k_neq(const Term& s, const Term& t, const Type& tau) {
  return app(app(k_neq_lam(tau), s), t);
}
inline Term k_eq(const Term& s, const Term& t, const Type& tau) {
  return k_neg(k_neq(s, t, tau));
}
inline Term k_ideq(const Term& s, const Term& t) {
  return k_eq(s, t, Type::iota());
}
inline Term k_idneq(const Term& s, const Term& t) {
  return k_neq(s, t, Type::iota());
}

// \x:S.\y:S. all z1:T1 .. zn:Tn. x z1..zn <-> y z1..zn, where
// S = T1 .. Tn o. With n = 0 the body is plain x <-> y.
inline Term k_equiv_lam(const Type& sigma) {
  Var x{"x", sigma}, y{"y", sigma};
  std::vector<Var> zs;
  Type cur = sigma;
  int n = 1;
  while (cur.is_fun()) {
    zs.push_back(Var{"z" + std::to_string(n++), cur.dom()});
    cur = cur.cod();
  }
  Term lx = var_ref(x), ly = var_ref(y);
  for (const Var& z : zs) {
    lx = app(lx, var_ref(z));
    ly = app(ly, var_ref(z));
  }
  Term body = k_iff(lx, ly);
  for (std::size_t i = zs.size(); i-- > 0;) body = k_forall(zs[i], body);
  return lam(x, lam(y, body));
}
inline Term k_equiv(const Term& s, const Term& t, const Type& sigma) {
  return app(app(k_equiv_lam(sigma), s), t);
}

inline Term k_truth() {
  Var x{"x", Type::o()};
  return k_exists(x, var_ref(x));
}
inline Term k_falsity() { return k_neg(k_truth()); }

// (\x:i.\y:i. x .= y) t
inline Term k_succ_lam() {
  Var x{"x", Type::iota()}, y{"y", Type::iota()};
  return lam(x, lam(y, k_ideq(var_ref(x), var_ref(y))));
}
inline Term k_succ(const Term& t) { return app(k_succ_lam(), t); }

inline Term k_zero() {
  Var x{"x", Type::iota()};
  return lam(x, k_idneq(var_ref(x), var_ref(x)));
}
inline Term k_numeral(unsigned long n) {
  Term t = k_zero();
  for (unsigned long i = 0; i < n; ++i) t = k_succ(t);
  return t;
}

// The type at which `=` / `!=` is instantiated for a pair of operands:
// their common structural type when the structural types agree, otherwise
// `i` when both operands have type i under the full judgment.
inline std::optional<Type> eq_instance_type(const Term& s, const Term& t) {
  TypeResult rs = structural_type(s);
  TypeResult rt = structural_type(t);
  if (rs.ok() && rt.ok() && *rs.type == *rt.type) return *rs.type;
  if (has_type(s, Type::iota()) && has_type(t, Type::iota()))
    return Type::iota();
  return std::nullopt;
}

namespace detail {

inline Term elaborate_rec(const SAstPtr& a) {
  switch (a->kind) {
    case SKind::VarRef:
      return var_ref(a->var);
    case SKind::ConstRef:
      return const_ref(a->cst);
    case SKind::NorRef:
      return k_nor();
    case SKind::NexRef:
      throw ElabError(ElabErrorKind::BareNex, a->span,
                      "nex must be applied to a predicate argument");
    case SKind::App: {
      if (a->kids[0]->kind == SKind::NexRef) {
        Term arg = elaborate_rec(a->kids[1]);
        TypeResult r = structural_type(arg);
        if (!r.ok() || !r.type->is_fun() || r.type->cod() != Type::o())
          throw ElabError(ElabErrorKind::IllTyped, a->kids[1]->span,
                          "nex argument must have a type of the form T o");
        return app(k_nex(r.type->dom()), arg);
      }
      return app(elaborate_rec(a->kids[0]), elaborate_rec(a->kids[1]));
    }
    case SKind::Lambda:
      return lam(a->var, elaborate_rec(a->kids[0]));
    case SKind::Exists:
      return k_exists(a->var, elaborate_rec(a->kids[0]));
    case SKind::Forall:
      return k_forall(a->var, elaborate_rec(a->kids[0]));
    case SKind::Neg:
      return k_neg(elaborate_rec(a->kids[0]));
    case SKind::Or:
      return k_or(elaborate_rec(a->kids[0]), elaborate_rec(a->kids[1]));
    case SKind::And:
      return k_and(elaborate_rec(a->kids[0]), elaborate_rec(a->kids[1]));
    case SKind::Imp:
      return k_imp(elaborate_rec(a->kids[0]), elaborate_rec(a->kids[1]));
    case SKind::Iff:
      return k_iff(elaborate_rec(a->kids[0]), elaborate_rec(a->kids[1]));
    case SKind::Eq:
    case SKind::Neq: {
      Term s = elaborate_rec(a->kids[0]);
      Term t = elaborate_rec(a->kids[1]);
      auto tau = eq_instance_type(s, t);
      if (!tau)
        throw ElabError(ElabErrorKind::IllTyped, a->span,
                        "operands of = / != have no common type");
      return a->kind == SKind::Eq ? k_eq(s, t, *tau) : k_neq(s, t, *tau);
    }
    case SKind::IdEq:
    case SKind::IdNeq: {
      Term s = elaborate_rec(a->kids[0]);
      Term t = elaborate_rec(a->kids[1]);
      return a->kind == SKind::IdEq ? k_ideq(s, t) : k_idneq(s, t);
    }
    case SKind::Equiv:
    case SKind::Nequiv: {
      Term s = elaborate_rec(a->kids[0]);
      Term t = elaborate_rec(a->kids[1]);
      TypeResult rs = structural_type(s);
      TypeResult rt = structural_type(t);
      if (!rs.ok() || !rt.ok() || *rs.type != *rt.type)
        throw ElabError(ElabErrorKind::IllTyped, a->span,
                        "operands of === have no common structural type");
      if (!is_predicate_type(*rs.type))
        throw ElabError(ElabErrorKind::EquivOnIota, a->span,
                        "=== needs operands of a predicate type, not i");
      Term e = k_equiv(s, t, *rs.type);
      return a->kind == SKind::Equiv ? e : k_neg(e);
    }
    case SKind::Succ:
      return k_succ(elaborate_rec(a->kids[0]));
    case SKind::Numeral:
      return k_numeral(a->num);
    case SKind::Truth:
      return k_truth();
    case SKind::Falsity:
      return k_falsity();
  }
  throw std::logic_error("elaborate: unhandled surface node");
}

}  // namespace detail

inline Term elaborate(const SAstPtr& ast, const Prelude& /*prelude*/) {
  return detail::elaborate_rec(ast);
}

// parse + elaborate in one go.
inline Term read_term(const std::string& text, const Prelude& prelude) {
  return elaborate(parse_term(text, prelude), prelude);
}

}  // namespace nl
