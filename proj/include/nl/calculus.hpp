#pragma once

// Sequents and the seven-rule proof system: the reduction axiom S, thinning
// T, exchange E, contraction C, the neither-nor rules P, the quantifier
// rules Q, and the nominalization axiom N. Sides are sequences, not
// multisets: exchange is the only reordering device. Axioms are matched
// with empty surrounding context; thinning adds at the left end of the
// antecedent and the right end of the succedent, inner positions are
// reached with exchange. All formula comparison is up to alpha.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nl/elaborate.hpp"
#include "nl/match.hpp"
#include "nl/term.hpp"
#include "nl/typing.hpp"

namespace nl {

struct Sequent {
  std::vector<Term> left, right;
};

inline bool wf_sequent(const Sequent& s) {
  for (const Term& t : s.left)
    if (!is_formula(t)) return false;
  for (const Term& t : s.right)
    if (!is_formula(t)) return false;
  return true;
}

inline bool seq_side_eq(const std::vector<Term>& a,
                        const std::vector<Term>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_eq(a[i], b[i])) return false;
  return true;
}

inline bool sequent_eq(const Sequent& a, const Sequent& b) {
  return seq_side_eq(a.left, b.left) && seq_side_eq(a.right, b.right);
}

enum class RuleName {
  S,
  ThinAddL,
  ThinAddR,
  ThinDropL,
  ThinDropR,
  ExchL,
  ExchR,
  ContrL,
  ContrR,
  PLeft,
  PRightAx,
  QLeftAx,
  QRight,
  NAx,
};

inline const char* rule_name_str(RuleName r) {
  switch (r) {
    case RuleName::S: return "S";
    case RuleName::ThinAddL: return "ThinAddL";
    case RuleName::ThinAddR: return "ThinAddR";
    case RuleName::ThinDropL: return "ThinDropL";
    case RuleName::ThinDropR: return "ThinDropR";
    case RuleName::ExchL: return "ExchL";
    case RuleName::ExchR: return "ExchR";
    case RuleName::ContrL: return "ContrL";
    case RuleName::ContrR: return "ContrR";
    case RuleName::PLeft: return "PLeft";
    case RuleName::PRightAx: return "PRightAx";
    case RuleName::QLeftAx: return "QLeftAx";
    case RuleName::QRight: return "QRight";
    case RuleName::NAx: return "NAx";
  }
  return "?";
}

inline std::optional<RuleName> rule_name_from(const std::string& s) {
  for (RuleName r : {RuleName::S, RuleName::ThinAddL, RuleName::ThinAddR,
                     RuleName::ThinDropL, RuleName::ThinDropR, RuleName::ExchL,
                     RuleName::ExchR, RuleName::ContrL, RuleName::ContrR,
                     RuleName::PLeft, RuleName::PRightAx, RuleName::QLeftAx,
                     RuleName::QRight, RuleName::NAx})
    if (s == rule_name_str(r)) return r;
  return std::nullopt;
}

inline int rule_arity(RuleName r) {
  switch (r) {
    case RuleName::S:
    case RuleName::PRightAx:
    case RuleName::QLeftAx:
    case RuleName::NAx:
      return 0;
    default:
      return 1;
  }
}

struct RuleApp {
  RuleName name = RuleName::S;
  std::optional<int> pos;    // ExchL / ExchR
  std::optional<Var> eigen;  // QRight
};

struct ProofNode {
  Sequent sequent;
  RuleApp rule;
  std::vector<ProofNode> premises;
};

enum class CheckMode { Strict, PaperBidirectional };

enum class RuleErrorKind {
  ShapeMismatch,
  EigenvariableViolation,
  ModeForbidden,
  NotAnAxiomInstance,
  ArityMismatch,
};

inline const char* rule_error_kind_str(RuleErrorKind k) {
  switch (k) {
    case RuleErrorKind::ShapeMismatch: return "ShapeMismatch";
    case RuleErrorKind::EigenvariableViolation: return "EigenvariableViolation";
    case RuleErrorKind::ModeForbidden: return "ModeForbidden";
    case RuleErrorKind::NotAnAxiomInstance: return "NotAnAxiomInstance";
    case RuleErrorKind::ArityMismatch: return "ArityMismatch";
  }
  return "?";
}

struct RuleError {
  RuleErrorKind kind;
  std::string detail;
};

// nullopt means the rule application is accepted.
using RuleResult = std::optional<RuleError>;

// When f is alpha-equivalent to an elaborated instance of the axiom
//   |- p = q <-> p .= q
// returns the operands and the type at which `=` is instantiated. The
// orientation is fixed: `=` on the left of <->, `.=` on the right.
inline std::optional<std::tuple<Term, Term, Type>> match_n_axiom(
    const Term& f) {
  auto ab = as_iff(f);
  if (!ab) return std::nullopt;
  auto eq = as_eq(ab->first);
  if (!eq) return std::nullopt;
  auto ideq = as_eq(ab->second);
  if (!ideq || ideq->at != Type::iota()) return std::nullopt;
  if (!alpha_eq(eq->lhs, ideq->lhs) || !alpha_eq(eq->rhs, ideq->rhs))
    return std::nullopt;
  if (!has_type(eq->lhs, Type::iota()) || !has_type(eq->rhs, Type::iota()))
    return std::nullopt;
  auto at = eq_instance_type(eq->lhs, eq->rhs);
  if (!at || *at != eq->at) return std::nullopt;
  return std::make_tuple(eq->lhs, eq->rhs, eq->at);
}

namespace detail {

inline RuleError shape(std::string detail) {
  return RuleError{RuleErrorKind::ShapeMismatch, std::move(detail)};
}
inline RuleError not_axiom(std::string detail) {
  return RuleError{RuleErrorKind::NotAnAxiomInstance, std::move(detail)};
}

inline bool drop_head_eq(const std::vector<Term>& with,
                         const std::vector<Term>& without) {
  if (with.size() != without.size() + 1) return false;
  for (std::size_t i = 0; i < without.size(); ++i)
    if (!alpha_eq(with[i + 1], without[i])) return false;
  return true;
}

inline bool drop_last_eq(const std::vector<Term>& with,
                         const std::vector<Term>& without) {
  if (with.size() != without.size() + 1) return false;
  for (std::size_t i = 0; i < without.size(); ++i)
    if (!alpha_eq(with[i], without[i])) return false;
  return true;
}

}  // namespace detail

inline RuleResult check_rule_app(const Sequent& conclusion,
                                 const RuleApp& rule,
                                 const std::vector<Sequent>& premises,
                                 CheckMode mode) {
  using detail::drop_head_eq;
  using detail::drop_last_eq;
  using detail::not_axiom;
  using detail::shape;

  if (static_cast<int>(premises.size()) != rule_arity(rule.name))
    return RuleError{RuleErrorKind::ArityMismatch,
                     std::string(rule_name_str(rule.name)) + " takes " +
                         std::to_string(rule_arity(rule.name)) +
                         " premise(s), got " +
                         std::to_string(premises.size())};

  switch (rule.name) {
    case RuleName::S: {
      if (conclusion.left.size() != 1 || conclusion.right.size() != 1)
        return not_axiom("S needs exactly p |- q");
      const Term& p = conclusion.left[0];
      const Term& q = conclusion.right[0];
      if (alpha_eq(p, q) || reduces_one(p, q)) return std::nullopt;
      return not_axiom("p ~ q and p > q both fail");
    }

    case RuleName::ThinAddL: {
      const Sequent& prem = premises[0];
      if (!drop_head_eq(conclusion.left, prem.left))
        return shape("antecedent is not the premise's with one formula "
                     "added at the left end");
      if (!seq_side_eq(conclusion.right, prem.right))
        return shape("succedent changed");
      return std::nullopt;
    }
    case RuleName::ThinAddR: {
      const Sequent& prem = premises[0];
      if (!drop_last_eq(conclusion.right, prem.right))
        return shape("succedent is not the premise's with one formula "
                     "added at the right end");
      if (!seq_side_eq(conclusion.left, prem.left))
        return shape("antecedent changed");
      return std::nullopt;
    }
    case RuleName::ThinDropL:
    case RuleName::ThinDropR: {
      if (mode != CheckMode::PaperBidirectional)
        return RuleError{RuleErrorKind::ModeForbidden,
                         "reverse thinning requires paper mode"};
      const Sequent& prem = premises[0];
      if (rule.name == RuleName::ThinDropL) {
        if (!drop_head_eq(prem.left, conclusion.left))
          return shape("premise antecedent must be the conclusion's with one "
                       "formula added at the left end");
        if (!seq_side_eq(conclusion.right, prem.right))
          return shape("succedent changed");
      } else {
        if (!drop_last_eq(prem.right, conclusion.right))
          return shape("premise succedent must be the conclusion's with one "
                       "formula added at the right end");
        if (!seq_side_eq(conclusion.left, prem.left))
          return shape("antecedent changed");
      }
      return std::nullopt;
    }

    case RuleName::ExchL:
    case RuleName::ExchR: {
      if (!rule.pos) return shape("exchange needs a position");
      const Sequent& prem = premises[0];
      const auto& cside =
          rule.name == RuleName::ExchL ? conclusion.left : conclusion.right;
      const auto& pside =
          rule.name == RuleName::ExchL ? prem.left : prem.right;
      const auto& cother =
          rule.name == RuleName::ExchL ? conclusion.right : conclusion.left;
      const auto& pother =
          rule.name == RuleName::ExchL ? prem.right : prem.left;
      std::size_t pos = static_cast<std::size_t>(*rule.pos);
      if (*rule.pos < 0 || pos + 1 >= cside.size())
        return shape("exchange position out of bounds");
      if (cside.size() != pside.size())
        return shape("exchange must preserve length");
      for (std::size_t i = 0; i < cside.size(); ++i) {
        std::size_t j = i == pos ? pos + 1 : i == pos + 1 ? pos : i;
        if (!alpha_eq(cside[i], pside[j]))
          return shape("not an adjacent transposition at the given position");
      }
      if (!seq_side_eq(cother, pother)) return shape("other side changed");
      return std::nullopt;
    }

    case RuleName::ContrL: {
      const Sequent& prem = premises[0];
      if (prem.left.size() != conclusion.left.size() + 1 ||
          conclusion.left.empty())
        return shape("contraction removes one duplicate at the left end");
      if (!alpha_eq(prem.left[0], prem.left[1]))
        return shape("premise does not start with a duplicate");
      if (!drop_head_eq(prem.left, conclusion.left))
        return shape("antecedent tail mismatch");
      if (!seq_side_eq(conclusion.right, prem.right))
        return shape("succedent changed");
      return std::nullopt;
    }
    case RuleName::ContrR: {
      const Sequent& prem = premises[0];
      std::size_t n = prem.right.size();
      if (n != conclusion.right.size() + 1 || conclusion.right.empty())
        return shape("contraction removes one duplicate at the right end");
      if (!alpha_eq(prem.right[n - 1], prem.right[n - 2]))
        return shape("premise does not end with a duplicate");
      if (!drop_last_eq(prem.right, conclusion.right))
        return shape("succedent prefix mismatch");
      if (!seq_side_eq(conclusion.left, prem.left))
        return shape("antecedent changed");
      return std::nullopt;
    }

    case RuleName::PLeft: {
      const Sequent& prem = premises[0];
      if (conclusion.left.empty())
        return shape("conclusion antecedent must start with nor p q");
      auto pq = as_nor_app(conclusion.left[0]);
      if (!pq) return shape("leading formula is not nor p q");
      if (prem.right.size() != conclusion.right.size() + 2)
        return shape("premise succedent must be the conclusion's plus p, q");
      std::size_t n = prem.right.size();
      if (!alpha_eq(prem.right[n - 2], pq->first) ||
          !alpha_eq(prem.right[n - 1], pq->second))
        return shape("premise succedent must end with p, q");
      for (std::size_t i = 0; i < conclusion.right.size(); ++i)
        if (!alpha_eq(prem.right[i], conclusion.right[i]))
          return shape("succedent context mismatch");
      if (!drop_head_eq(conclusion.left, prem.left))
        return shape("antecedent context mismatch");
      return std::nullopt;
    }
    case RuleName::PRightAx: {
      if (!conclusion.left.empty() || conclusion.right.size() != 3)
        return not_axiom("axiom is exactly |- p, q, nor p q");
      Term expect = app(app(k_nor(), conclusion.right[0]),
                        conclusion.right[1]);
      if (!alpha_eq(conclusion.right[2], expect))
        return not_axiom("third formula is not nor of the first two");
      return std::nullopt;
    }

    case RuleName::QLeftAx: {
      if (!conclusion.right.empty() || conclusion.left.size() != 2)
        return not_axiom("axiom is exactly nex p, p t |-");
      const Term& cp = conclusion.left[0];
      const Term& pt = conclusion.left[1];
      if (cp->kind != TermKind::App || cp->fun->kind != TermKind::Const ||
          cp->fun->cst.kind != ConstKind::Nex)
        return not_axiom("first formula is not nex applied to a predicate");
      Type tau = cp->fun->cst.arg_ty;
      const Term& p = cp->arg;
      TypeResult rp = structural_type(p);
      if (!rp.ok() || *rp.type != Type::fun(tau, Type::o()))
        return not_axiom("predicate does not have type T o at the nex type");
      if (pt->kind != TermKind::App || !alpha_eq(pt->fun, p))
        return not_axiom("second formula is not the same predicate applied");
      if (!has_type(pt->arg, tau))
        return not_axiom("witness does not have the instance type");
      return std::nullopt;
    }
    case RuleName::QRight: {
      if (!rule.eigen) return shape("Q right needs an eigenvariable");
      const Sequent& prem = premises[0];
      if (conclusion.right.empty())
        return shape("conclusion succedent must end with nex p");
      const Term& cp = conclusion.right.back();
      if (cp->kind != TermKind::App || cp->fun->kind != TermKind::Const ||
          cp->fun->cst.kind != ConstKind::Nex)
        return shape("last succedent formula is not nex applied");
      Type tau = cp->fun->cst.arg_ty;
      const Term& p = cp->arg;
      const Var& x = *rule.eigen;
      if (x.ty != tau)
        return shape("eigenvariable type differs from the nex instance type");
      if (occurs_free(p, x))
        return RuleError{RuleErrorKind::EigenvariableViolation,
                         "eigenvariable free in the predicate"};
      for (const Term& g : conclusion.left)
        if (occurs_free(g, x))
          return RuleError{RuleErrorKind::EigenvariableViolation,
                           "eigenvariable free in the antecedent"};
      for (std::size_t i = 0; i + 1 < conclusion.right.size(); ++i)
        if (occurs_free(conclusion.right[i], x))
          return RuleError{RuleErrorKind::EigenvariableViolation,
                           "eigenvariable free in the succedent"};
      if (prem.left.empty() || !alpha_eq(prem.left[0], app(p, var_ref(x))))
        return shape("premise antecedent must start with p x");
      if (!drop_head_eq(prem.left, conclusion.left))
        return shape("antecedent context mismatch");
      if (!drop_last_eq(conclusion.right, prem.right))
        return shape("succedent context mismatch");
      return std::nullopt;
    }

    case RuleName::NAx: {
      if (!conclusion.left.empty() || conclusion.right.size() != 1)
        return not_axiom("axiom is exactly |- p = q <-> p .= q");
      if (!match_n_axiom(conclusion.right[0]))
        return not_axiom("formula is not an instance of p = q <-> p .= q");
      return std::nullopt;
    }
  }
  return shape("unknown rule");
}

// ---------------------------------------------------------------------------
// Whole-tree checking.

struct NodeReport {
  std::vector<int> path;  // child indices from the root
  RuleName rule;
  bool wf = true;
  std::optional<RuleError> error;

  bool ok() const { return wf && !error; }
};

struct Report {
  bool valid = true;
  std::vector<NodeReport> nodes;
};

namespace detail {
inline void check_proof_rec(const ProofNode& node, CheckMode mode,
                            std::vector<int>& path, Report& report) {
  NodeReport nr;
  nr.path = path;
  nr.rule = node.rule.name;
  nr.wf = wf_sequent(node.sequent);
  std::vector<Sequent> prem_seqs;
  prem_seqs.reserve(node.premises.size());
  for (const ProofNode& p : node.premises) prem_seqs.push_back(p.sequent);
  nr.error = check_rule_app(node.sequent, node.rule, prem_seqs, mode);
  report.valid = report.valid && nr.ok();
  report.nodes.push_back(std::move(nr));
  for (std::size_t i = 0; i < node.premises.size(); ++i) {
    path.push_back(static_cast<int>(i));
    check_proof_rec(node.premises[i], mode, path, report);
    path.pop_back();
  }
}
}  // namespace detail

// Preorder report; the verdict of a node depends only on its sequent, rule
// and premise sequents.
inline Report check_proof(const ProofNode& root, CheckMode mode) {
  Report report;
  std::vector<int> path;
  detail::check_proof_rec(root, mode, path, report);
  return report;
}

inline std::string alpha_canonical_key(const Sequent& s) {
  std::string out = "[";
  for (const Term& t : s.left) out += alpha_canonical_key(t) + ";";
  out += "|-";
  for (const Term& t : s.right) out += ";" + alpha_canonical_key(t);
  out += "]";
  return out;
}

}  // namespace nl
