#pragma once

// The untyped term algebra: applications, lambda abstractions, typed
// variables and typed constants. Terms are immutable shared trees; all
// operations here are pure functions.
//
// A variable is identified by its (name, type) pair; a binder binds exactly
// the occurrences with the same name and the same type. Fresh names for
// capture-avoiding renaming are drawn from a reserved namespace of
// identifiers starting with '_', which the prelude loader refuses to
// declare.

#include <cctype>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nl/type.hpp"

namespace nl {

struct Var {
  std::string name;
  Type ty;

  friend bool operator==(const Var& a, const Var& b) {
    return a.name == b.name && a.ty == b.ty;
  }
  friend bool operator!=(const Var& a, const Var& b) { return !(a == b); }
  friend bool operator<(const Var& a, const Var& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.ty < b.ty;
  }
};

enum class ConstKind { Nor, Nex, Declared };

// Nor is the single primitive connective ("neither ... nor ...") of type
// o o o; Nex(tau) is the "no ... exists" quantifier constant of type
// (tau o) o; Declared constants come from a prelude.
struct Const {
  ConstKind kind = ConstKind::Nor;
  Type arg_ty;       // Nex only
  std::string name;  // Declared only
  Type decl_ty;      // Declared only

  static Const nor() { return Const{}; }
  static Const nex(Type arg) {
    Const c;
    c.kind = ConstKind::Nex;
    c.arg_ty = std::move(arg);
    return c;
  }
  static Const declared(std::string name, Type ty) {
    Const c;
    c.kind = ConstKind::Declared;
    c.name = std::move(name);
    c.decl_ty = std::move(ty);
    return c;
  }

  Type type() const {
    switch (kind) {
      case ConstKind::Nor:
        return Type::fun(Type::o(), Type::fun(Type::o(), Type::o()));
      case ConstKind::Nex:
        return Type::fun(Type::fun(arg_ty, Type::o()), Type::o());
      case ConstKind::Declared:
        return decl_ty;
    }
    return Type::o();
  }

  friend bool operator==(const Const& a, const Const& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case ConstKind::Nor:
        return true;
      case ConstKind::Nex:
        return a.arg_ty == b.arg_ty;
      case ConstKind::Declared:
        return a.name == b.name && a.decl_ty == b.decl_ty;
    }
    return false;
  }
  friend bool operator!=(const Const& a, const Const& b) { return !(a == b); }
};

enum class TermKind { App, Lam, Var, Const };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  Term fun, arg;   // App
  Var var;         // Lam binder or Var reference
  Term body;       // Lam
  Const cst;       // Const
};

inline Term app(Term f, Term a) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::App;
  n->fun = std::move(f);
  n->arg = std::move(a);
  return n;
}

inline Term lam(Var binder, Term body) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Lam;
  n->var = std::move(binder);
  n->body = std::move(body);
  return n;
}

inline Term var_ref(Var v) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Var;
  n->var = std::move(v);
  return n;
}

inline Term const_ref(Const c) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Const;
  n->cst = std::move(c);
  return n;
}

inline std::size_t term_size(const Term& t) {
  switch (t->kind) {
    case TermKind::App:
      return 1 + term_size(t->fun) + term_size(t->arg);
    case TermKind::Lam:
      return 1 + term_size(t->body);
    default:
      return 1;
  }
}

namespace detail {
inline void collect_free(const Term& t, std::set<Var>& bound,
                         std::set<Var>& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (!bound.count(t->var)) out.insert(t->var);
      break;
    case TermKind::Const:
      break;
    case TermKind::App:
      collect_free(t->fun, bound, out);
      collect_free(t->arg, bound, out);
      break;
    case TermKind::Lam: {
      bool fresh = bound.insert(t->var).second;
      collect_free(t->body, bound, out);
      if (fresh) bound.erase(t->var);
      break;
    }
  }
}
}  // namespace detail

inline std::set<Var> free_vars(const Term& t) {
  std::set<Var> bound, out;
  detail::collect_free(t, bound, out);
  return out;
}

inline bool occurs_free(const Term& t, const Var& x) {
  switch (t->kind) {
    case TermKind::Var:
      return t->var == x;
    case TermKind::Const:
      return false;
    case TermKind::App:
      return occurs_free(t->fun, x) || occurs_free(t->arg, x);
    case TermKind::Lam:
      return t->var != x && occurs_free(t->body, x);
  }
  return false;
}

// Smallest _<stem><k> not among the avoided names, keeping the type of the
// original binder.
inline Var fresh_var(const Var& like, const std::set<std::string>& avoid) {
  std::string stem = like.name;
  while (!stem.empty() && stem.front() == '_') stem.erase(stem.begin());
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back())))
    stem.pop_back();
  if (stem.empty()) stem = "v";
  for (int k = 1;; ++k) {
    std::string cand = "_" + stem + std::to_string(k);
    if (!avoid.count(cand)) return Var{cand, like.ty};
  }
}

// p with every free occurrence of x replaced by t; binders are renamed to
// fresh variables of the same type whenever a free variable of t would be
// captured.
inline Term substitute(const Term& p, const Term& t, const Var& x) {
  switch (p->kind) {
    case TermKind::Var:
      return p->var == x ? t : p;
    case TermKind::Const:
      return p;
    case TermKind::App:
      return app(substitute(p->fun, t, x), substitute(p->arg, t, x));
    case TermKind::Lam: {
      if (p->var == x) return p;  // x is bound here, nothing to do below
      if (!occurs_free(p->body, x)) return p;
      if (occurs_free(t, p->var)) {
        std::set<std::string> avoid;
        for (const auto& v : free_vars(t)) avoid.insert(v.name);
        for (const auto& v : free_vars(p->body)) avoid.insert(v.name);
        avoid.insert(x.name);
        Var y = fresh_var(p->var, avoid);
        Term renamed = substitute(p->body, var_ref(y), p->var);
        return lam(y, substitute(renamed, t, x));
      }
      return lam(p->var, substitute(p->body, t, x));
    }
  }
  return p;
}

namespace detail {
// alpha comparison with binder levels; the maps carry the de Bruijn level of
// each currently bound variable.
inline bool alpha_eq_rec(const Term& s, const Term& t,
                         std::vector<std::pair<Var, int>>& bs,
                         std::vector<std::pair<Var, int>>& bt, int depth) {
  auto lookup = [](const std::vector<std::pair<Var, int>>& env, const Var& v)
      -> std::optional<int> {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == v) return it->second;
    return std::nullopt;
  };
  if (s->kind != t->kind) return false;
  switch (s->kind) {
    case TermKind::Var: {
      auto ls = lookup(bs, s->var);
      auto lt = lookup(bt, t->var);
      if (ls.has_value() != lt.has_value()) return false;
      if (ls) return *ls == *lt;
      return s->var == t->var;  // free variables are rigid
    }
    case TermKind::Const:
      return s->cst == t->cst;
    case TermKind::App:
      return alpha_eq_rec(s->fun, t->fun, bs, bt, depth) &&
             alpha_eq_rec(s->arg, t->arg, bs, bt, depth);
    case TermKind::Lam: {
      if (s->var.ty != t->var.ty) return false;  // renaming preserves types
      bs.emplace_back(s->var, depth);
      bt.emplace_back(t->var, depth);
      bool r = alpha_eq_rec(s->body, t->body, bs, bt, depth + 1);
      bs.pop_back();
      bt.pop_back();
      return r;
    }
  }
  return false;
}
}  // namespace detail

inline bool alpha_eq(const Term& s, const Term& t) {
  std::vector<std::pair<Var, int>> bs, bt;
  return detail::alpha_eq_rec(s, t, bs, bt, 0);
}

namespace detail {
inline bool is_beta_redex(const Term& t) {
  return t->kind == TermKind::App && t->fun->kind == TermKind::Lam;
}
inline Term contract_beta(const Term& t) {
  return substitute(t->fun->body, t->arg, t->fun->var);
}
// eta: \x. p x with x not free in p.
inline bool is_eta_redex(const Term& t) {
  return t->kind == TermKind::Lam && t->body->kind == TermKind::App &&
         t->body->arg->kind == TermKind::Var && t->body->arg->var == t->var &&
         !occurs_free(t->body->fun, t->var);
}
inline Term contract_eta(const Term& t) { return t->body->fun; }

inline void reducts_rec(const Term& t,
                        const std::function<Term(const Term&)>& rebuild,
                        std::vector<Term>& out) {
  // node redexes first, then children left to right: fixed outside-in order
  if (is_beta_redex(t)) out.push_back(rebuild(contract_beta(t)));
  if (is_eta_redex(t)) out.push_back(rebuild(contract_eta(t)));
  switch (t->kind) {
    case TermKind::App:
      reducts_rec(t->fun,
                  [&](const Term& u) { return rebuild(app(u, t->arg)); }, out);
      reducts_rec(t->arg,
                  [&](const Term& u) { return rebuild(app(t->fun, u)); }, out);
      break;
    case TermKind::Lam:
      reducts_rec(t->body,
                  [&](const Term& u) { return rebuild(lam(t->var, u)); }, out);
      break;
    default:
      break;
  }
}
}  // namespace detail

// All terms obtainable from t by contracting exactly one beta or eta redex,
// enumerated left to right, outside in.
inline std::vector<Term> reduct_steps(const Term& t) {
  std::vector<Term> out;
  detail::reducts_rec(t, [](const Term& u) { return u; }, out);
  return out;
}

// The single-step relation s > t, compared up to alpha.
inline bool reduces_one(const Term& s, const Term& t) {
  for (const Term& u : reduct_steps(s))
    if (alpha_eq(u, t)) return true;
  return false;
}

enum class Strategy { LeftmostOutermost, RightmostInnermost };

struct FuelExhausted : std::runtime_error {
  explicit FuelExhausted(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline std::optional<Term> step_lo(const Term& t) {
  if (is_beta_redex(t)) return contract_beta(t);
  if (is_eta_redex(t)) return contract_eta(t);
  switch (t->kind) {
    case TermKind::App:
      if (auto u = step_lo(t->fun)) return app(*u, t->arg);
      if (auto u = step_lo(t->arg)) return app(t->fun, *u);
      break;
    case TermKind::Lam:
      if (auto u = step_lo(t->body)) return lam(t->var, *u);
      break;
    default:
      break;
  }
  return std::nullopt;
}

inline std::optional<Term> step_ri(const Term& t) {
  switch (t->kind) {
    case TermKind::App:
      if (auto u = step_ri(t->arg)) return app(t->fun, *u);
      if (auto u = step_ri(t->fun)) return app(*u, t->arg);
      break;
    case TermKind::Lam:
      if (auto u = step_ri(t->body)) return lam(t->var, *u);
      break;
    default:
      break;
  }
  if (is_beta_redex(t)) return contract_beta(t);
  if (is_eta_redex(t)) return contract_eta(t);
  return std::nullopt;
}
}  // namespace detail

// Repeatedly contracts the strategy-selected redex until none remains.
// Throws FuelExhausted when no normal form is reached within fuel steps
// (ill-typed or adversarial input).
inline Term normalize(Term t, Strategy strategy, long fuel) {
  if (fuel <= 0) throw std::invalid_argument("normalize: fuel must be > 0");
  for (long i = 0; i < fuel; ++i) {
    auto u = strategy == Strategy::LeftmostOutermost ? detail::step_lo(t)
                                                     : detail::step_ri(t);
    if (!u) return t;
    t = *u;
  }
  if (!detail::step_lo(t)) return t;
  throw FuelExhausted("normalize: no normal form within fuel");
}

// Canonical printed form with de Bruijn-numbered binders; alpha-equivalent
// terms and only those share a key. Used for loop detection and maps.
namespace detail {
inline void canon_rec(const Term& t, std::vector<Var>& env, std::string& out) {
  switch (t->kind) {
    case TermKind::Var: {
      for (std::size_t i = env.size(); i-- > 0;) {
        if (env[i] == t->var) {
          out += "#" + std::to_string(env.size() - 1 - i);
          return;
        }
      }
      out += "v:" + t->var.name + ":" + to_string(t->var.ty);
      break;
    }
    case TermKind::Const:
      switch (t->cst.kind) {
        case ConstKind::Nor:
          out += "nor";
          break;
        case ConstKind::Nex:
          out += "nex[" + to_string(t->cst.arg_ty) + "]";
          break;
        case ConstKind::Declared:
          out += "c:" + t->cst.name + ":" + to_string(t->cst.decl_ty);
          break;
      }
      break;
    case TermKind::App:
      out += "(";
      canon_rec(t->fun, env, out);
      out += " ";
      canon_rec(t->arg, env, out);
      out += ")";
      break;
    case TermKind::Lam:
      out += "(\\:" + to_string(t->var.ty) + ".";
      env.push_back(t->var);
      canon_rec(t->body, env, out);
      env.pop_back();
      out += ")";
      break;
  }
}
}  // namespace detail

inline std::string alpha_canonical_key(const Term& t) {
  std::string out;
  std::vector<Var> env;
  detail::canon_rec(t, env, out);
  return out;
}

}  // namespace nl
