#pragma once

// Recognizers for the definitional macro shapes, inverse to the builders in
// elaborate.hpp. Matching is purely syntactic on kernel terms, up to alpha.

#include <optional>
#include <utility>

#include "nl/elaborate.hpp"
#include "nl/term.hpp"

namespace nl {

struct TermPair {
  Term first, second;
};

inline std::optional<TermPair> as_nor_app(const Term& t) {
  if (t->kind == TermKind::App && t->fun->kind == TermKind::App &&
      t->fun->fun->kind == TermKind::Const &&
      t->fun->fun->cst.kind == ConstKind::Nor)
    return TermPair{t->fun->arg, t->arg};
  return std::nullopt;
}

// ~p  =  nor p p
inline std::optional<Term> as_neg(const Term& t) {
  if (auto pq = as_nor_app(t); pq && alpha_eq(pq->first, pq->second))
    return pq->first;
  return std::nullopt;
}

// p \/ q  =  ~(nor p q)
inline std::optional<TermPair> as_or(const Term& t) {
  if (auto u = as_neg(t))
    if (auto pq = as_nor_app(*u)) return pq;
  return std::nullopt;
}

// p /\ q  =  ~(~p \/ ~q)
inline std::optional<TermPair> as_and(const Term& t) {
  if (auto u = as_neg(t))
    if (auto ab = as_or(*u))
      if (auto p = as_neg(ab->first))
        if (auto q = as_neg(ab->second)) return TermPair{*p, *q};
  return std::nullopt;
}

// p -> q  =  ~p \/ q
inline std::optional<TermPair> as_imp(const Term& t) {
  if (auto ab = as_or(t))
    if (auto p = as_neg(ab->first)) return TermPair{*p, ab->second};
  return std::nullopt;
}

// p <-> q  =  (p -> q) /\ (q -> p)
inline std::optional<TermPair> as_iff(const Term& t) {
  auto uv = as_and(t);
  if (!uv) return std::nullopt;
  auto f = as_imp(uv->first);
  auto b = as_imp(uv->second);
  if (f && b && alpha_eq(f->first, b->second) &&
      alpha_eq(f->second, b->first))
    return TermPair{f->first, f->second};
  return std::nullopt;
}

struct ExistsParts {
  Var binder;
  Term body;
};

// ex x:T. p  =  ~(nex (\x:T. p)), with the nex instance at the binder type.
inline std::optional<ExistsParts> as_exists(const Term& t) {
  auto u = as_neg(t);
  if (!u) return std::nullopt;
  const Term& e = *u;
  if (e->kind != TermKind::App || e->fun->kind != TermKind::Const ||
      e->fun->cst.kind != ConstKind::Nex || e->arg->kind != TermKind::Lam)
    return std::nullopt;
  if (e->fun->cst.arg_ty != e->arg->var.ty) return std::nullopt;
  return ExistsParts{e->arg->var, e->arg->body};
}

// all x:T. p  =  ~ ex x:T. ~p
inline std::optional<ExistsParts> as_forall(const Term& t) {
  auto u = as_neg(t);
  if (!u) return std::nullopt;
  auto e = as_exists(*u);
  if (!e) return std::nullopt;
  auto p = as_neg(e->body);
  if (!p) return std::nullopt;
  return ExistsParts{e->binder, *p};
}

struct EqParts {
  Term lhs, rhs;
  Type at;
};

// s != t  =  (\x:T.\y:T. ex z. z x /\ ~(z y)) s t
inline std::optional<EqParts> as_neq(const Term& t) {
  if (t->kind != TermKind::App || t->fun->kind != TermKind::App)
    return std::nullopt;
  const Term& l = t->fun->fun;
  if (l->kind != TermKind::Lam) return std::nullopt;
  Type tau = l->var.ty;
  if (!alpha_eq(l, k_neq_lam(tau))) return std::nullopt;
  return EqParts{t->fun->arg, t->arg, tau};
}

// s = t  =  ~(s != t)
inline std::optional<EqParts> as_eq(const Term& t) {
  if (auto u = as_neg(t)) return as_neq(*u);
  return std::nullopt;
}

// s === t at predicate type S
inline std::optional<EqParts> as_equiv(const Term& t) {
  if (t->kind != TermKind::App || t->fun->kind != TermKind::App)
    return std::nullopt;
  const Term& l = t->fun->fun;
  if (l->kind != TermKind::Lam) return std::nullopt;
  Type sigma = l->var.ty;
  if (!is_predicate_type(sigma)) return std::nullopt;
  if (!alpha_eq(l, k_equiv_lam(sigma))) return std::nullopt;
  return EqParts{t->fun->arg, t->arg, sigma};
}

// t'  =  (\x:i.\y:i. x .= y) t
inline std::optional<Term> as_succ(const Term& t) {
  if (t->kind == TermKind::App && t->fun->kind == TermKind::Lam &&
      alpha_eq(t->fun, k_succ_lam()))
    return t->arg;
  return std::nullopt;
}

// Numerals: 0 and iterated successor of a numeral.
inline std::optional<unsigned long> as_numeral(const Term& t) {
  if (alpha_eq(t, k_zero())) return 0;
  if (auto u = as_succ(t))
    if (auto n = as_numeral(*u)) return *n + 1;
  return std::nullopt;
}

inline bool is_truth(const Term& t) { return alpha_eq(t, k_truth()); }
inline bool is_falsity(const Term& t) { return alpha_eq(t, k_falsity()); }

}  // namespace nl
