#pragma once

// Pretty-printer. Raw mode prints fully parenthesized kernel syntax; resugar
// mode pattern-matches the abbreviation shapes back to surface operators,
// falling back to raw printing wherever re-elaboration would not reproduce
// the term (e.g. an `=` instance whose type the operands no longer force).

#include <string>

#include "nl/elaborate.hpp"
#include "nl/match.hpp"
#include "nl/term.hpp"
#include "nl/typing.hpp"

namespace nl {

namespace detail {

inline std::string print_raw(const Term& t) {
  switch (t->kind) {
    case TermKind::Var:
      return t->var.name;
    case TermKind::Const:
      switch (t->cst.kind) {
        case ConstKind::Nor:
          return "nor";
        case ConstKind::Nex:
          return "nex";
        case ConstKind::Declared:
          return t->cst.name;
      }
      return {};
    case TermKind::App:
      return "(" + print_raw(t->fun) + " " + print_raw(t->arg) + ")";
    case TermKind::Lam:
      return "(\\" + t->var.name + ":" + to_string(t->var.ty) + ". " +
             print_raw(t->body) + ")";
  }
  return {};
}

// Grammar levels, loosest to tightest:
//   0 iff   1 imp   2 or   3 and   4 cmp   5 neg   6 app   7 app-arg   8 atom
// A binder prints without parentheses only when nothing follows it inside
// the current parenthesis context (it swallows everything to its right).
class Sugar {
 public:
  std::string print(const Term& t, int min_level, bool rightmost) {
    if (auto n = as_numeral(t)) return std::to_string(*n);
    if (is_truth(t)) return "true";
    if (is_falsity(t)) return "false";

    if (auto e = as_eq(t)) {
      if (e->at == Type::iota())
        return binary(e->lhs, ".=", e->rhs, 4, 5, 5, min_level, rightmost);
      if (auto at = eq_instance_type(e->lhs, e->rhs); at && *at == e->at)
        return binary(e->lhs, "=", e->rhs, 4, 5, 5, min_level, rightmost);
    }
    if (auto e = as_neq(t)) {
      if (e->at == Type::iota())
        return binary(e->lhs, ".!=", e->rhs, 4, 5, 5, min_level, rightmost);
      if (auto at = eq_instance_type(e->lhs, e->rhs); at && *at == e->at)
        return binary(e->lhs, "!=", e->rhs, 4, 5, 5, min_level, rightmost);
    }
    if (auto u = as_neg(t)) {
      if (auto e = as_equiv(*u); e && structural_matches(*e))
        return binary(e->lhs, "!==", e->rhs, 4, 5, 5, min_level, rightmost);
    }
    if (auto e = as_equiv(t); e && structural_matches(*e))
      return binary(e->lhs, "===", e->rhs, 4, 5, 5, min_level, rightmost);

    if (auto b = as_forall(t))
      return binder("all", b->binder, b->body, min_level, rightmost);
    if (auto b = as_exists(t))
      return binder("ex", b->binder, b->body, min_level, rightmost);

    if (auto pq = as_iff(t))
      return binary(pq->first, "<->", pq->second, 0, 1, 0, min_level,
                    rightmost);
    if (auto pq = as_imp(t))
      return binary(pq->first, "->", pq->second, 1, 2, 1, min_level,
                    rightmost);
    if (auto pq = as_and(t))
      return binary(pq->first, "/\\", pq->second, 3, 3, 4, min_level,
                    rightmost);
    if (auto pq = as_or(t))
      return binary(pq->first, "\\/", pq->second, 2, 2, 3, min_level,
                    rightmost);
    if (auto p = as_neg(t)) {
      std::string s = "~" + print(*p, 5, rightmost);
      return wrap(s, 5, min_level);
    }
    if (auto u = as_succ(t)) {
      std::string s = print(*u, 8, false) + "'";
      return wrap(s, 7, min_level);
    }

    switch (t->kind) {
      case TermKind::Var:
        return t->var.name;
      case TermKind::Const:
        return print_raw(t);
      case TermKind::App: {
        std::string s =
            print(t->fun, 6, false) + " " + print(t->arg, 7, rightmost);
        return wrap(s, 6, min_level);
      }
      case TermKind::Lam:
        return binder("\\", t->var, t->body, min_level, rightmost);
    }
    return {};
  }

 private:
  static bool structural_matches(const EqParts& e) {
    TypeResult rs = structural_type(e.lhs);
    TypeResult rt = structural_type(e.rhs);
    return rs.ok() && rt.ok() && *rs.type == e.at && *rt.type == e.at;
  }

  static std::string wrap(const std::string& s, int level, int min_level) {
    return level < min_level ? "(" + s + ")" : s;
  }

  std::string binary(const Term& l, const char* op, const Term& r, int level,
                     int llevel, int rlevel, int min_level, bool rightmost) {
    bool paren = level < min_level;
    bool rm = paren ? true : rightmost;
    std::string s = print(l, llevel, false) + " " + op + " " +
                    print(r, rlevel, rm);
    return paren ? "(" + s + ")" : s;
  }

  std::string binder(const std::string& head, const Var& v, const Term& body,
                     int min_level, bool rightmost) {
    std::string s;
    if (head == "\\")
      s = "\\" + v.name + ":" + to_string(v.ty) + ". ";
    else
      s = head + " " + v.name + ":" + to_string(v.ty) + ". ";
    s += print(body, 0, true);
    if (!rightmost) return "(" + s + ")";
    return s;
  }
};

}  // namespace detail

inline std::string print_term(const Term& t, bool resugar) {
  if (!resugar) return detail::print_raw(t);
  detail::Sugar s;
  return s.print(t, 0, true);
}

}  // namespace nl
