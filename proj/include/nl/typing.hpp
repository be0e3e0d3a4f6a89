#pragma once

// Algorithmic typing. Typing is context-free because every variable carries
// its type. structural_type derives the unique type obtainable without the
// nominalization rule at the root; at application arguments with expected
// domain `i` a nominalizable argument is admitted. has_type adds the
// nominalization rule at top level, so a term has at most two types: its
// structural type, plus `i` when nominalizable.

#include <optional>
#include <string>
#include <vector>

#include "nl/term.hpp"
#include "nl/type.hpp"

namespace nl {

// Path of child indices from the root to the offending node
// (App: 0 = function, 1 = argument; Lam: 0 = body).
struct TypeError {
  std::vector<int> path;
  std::string reason;
};

struct TypeResult {
  std::optional<Type> type;
  TypeError error;

  bool ok() const { return type.has_value(); }
};

inline TypeResult structural_type(const Term& t);

inline bool is_nominalizable(const Term& t) {
  TypeResult r = structural_type(t);
  if (!r.ok() || !is_predicate_type(*r.type)) return false;
  for (const Var& v : free_vars(t))
    if (v.ty != Type::iota()) return false;
  return true;
}

namespace detail {
inline TypeResult ill_typed(std::vector<int> path, std::string reason) {
  TypeResult r;
  r.error = TypeError{std::move(path), std::move(reason)};
  return r;
}

inline TypeResult structural_rec(const Term& t, std::vector<int>& path) {
  switch (t->kind) {
    case TermKind::Var: {
      TypeResult r;
      r.type = t->var.ty;
      return r;
    }
    case TermKind::Const: {
      TypeResult r;
      r.type = t->cst.type();
      return r;
    }
    case TermKind::App: {
      path.push_back(0);
      TypeResult f = structural_rec(t->fun, path);
      path.pop_back();
      if (!f.ok()) return f;
      if (!f.type->is_fun())
        return ill_typed(path, "function position has non-function type " +
                                   to_string(*f.type));
      Type dom = f.type->dom();
      path.push_back(1);
      TypeResult a = structural_rec(t->arg, path);
      path.pop_back();
      if (a.ok() && *a.type == dom) {
        TypeResult r;
        r.type = f.type->cod();
        return r;
      }
      if (dom == Type::iota() && is_nominalizable(t->arg)) {
        TypeResult r;
        r.type = f.type->cod();
        return r;
      }
      if (!a.ok()) return a;
      std::vector<int> p = path;
      p.push_back(1);
      return ill_typed(std::move(p),
                       "argument has type " + to_string(*a.type) +
                           ", expected " + to_string(dom) +
                           (dom == Type::iota() ? " (and is not nominalizable)"
                                                : ""));
    }
    case TermKind::Lam: {
      path.push_back(0);
      TypeResult b = structural_rec(t->body, path);
      path.pop_back();
      if (!b.ok()) return b;
      if (!is_predicate_type(*b.type)) {
        std::vector<int> p = path;
        p.push_back(0);
        return ill_typed(std::move(p),
                         "abstraction body has type i, not a predicate type");
      }
      TypeResult r;
      r.type = Type::fun(t->var.ty, *b.type);
      return r;
    }
  }
  return ill_typed(path, "malformed term");
}
}  // namespace detail

inline TypeResult structural_type(const Term& t) {
  std::vector<int> path;
  return detail::structural_rec(t, path);
}

// The full judgment t : tau, including the nominalization rule at the root.
inline bool has_type(const Term& t, const Type& tau) {
  TypeResult r = structural_type(t);
  if (r.ok() && *r.type == tau) return true;
  return tau == Type::iota() && is_nominalizable(t);
}

inline bool is_formula(const Term& t) { return has_type(t, Type::o()); }

// All types of t under the judgment: the structural type plus `i` when
// nominalizable.
inline std::vector<Type> all_types(const Term& t) {
  std::vector<Type> out;
  TypeResult r = structural_type(t);
  if (r.ok()) out.push_back(*r.type);
  if (is_nominalizable(t) && !(r.ok() && *r.type == Type::iota()))
    out.push_back(Type::iota());
  return out;
}

}  // namespace nl
