#pragma once

// Bounded backward proof search. Iterative deepening over the proof height,
// with a fixed backward rule order: axioms (S, PRightAx, QLeftAx, NAx), then
// PLeft, QRight with a fresh eigenvariable, ContrL, ContrR, ExchL, ExchR,
// and in paper mode ThinDropL / ThinDropR over formula-typed subterms of the
// goal. ThinAdd is never applied backward. Loop detection keys on
// alpha-canonical sequents along the current branch. Exhaustion is not a
// disproof.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nl/calculus.hpp"
#include "nl/term.hpp"
#include "nl/typing.hpp"

namespace nl {

struct SearchBudget {
  int depth = 6;
  long node_limit = 1000000;
};

namespace detail {

class Prover {
 public:
  Prover(SearchBudget budget, CheckMode mode) : budget_(budget), mode_(mode) {}

  std::optional<ProofNode> run(const Sequent& goal) {
    for (int d = 1; d <= budget_.depth; ++d) {
      if (out_of_nodes_) break;
      if (auto p = search(goal, d)) return p;
    }
    return std::nullopt;
  }

  long explored() const { return explored_; }

 private:
  std::optional<ProofNode> search(const Sequent& goal, int depth) {
    if (out_of_nodes_) return std::nullopt;
    if (++explored_ > budget_.node_limit) {
      out_of_nodes_ = true;
      return std::nullopt;
    }
    std::string key = alpha_canonical_key(goal);
    if (on_path_.count(key)) return std::nullopt;

    // axioms
    for (RuleName ax : {RuleName::S, RuleName::PRightAx, RuleName::QLeftAx,
                        RuleName::NAx}) {
      RuleApp app{ax, std::nullopt, std::nullopt};
      if (!check_rule_app(goal, app, {}, mode_))
        return ProofNode{goal, app, {}};
    }
    if (depth < 2) return std::nullopt;

    on_path_.insert(key);
    auto done = [&](std::optional<ProofNode> r) {
      on_path_.erase(key);
      return r;
    };

    auto attempt = [&](const RuleApp& app,
                       const Sequent& prem) -> std::optional<ProofNode> {
      if (auto sub = search(prem, depth - 1))
        return ProofNode{goal, app, {std::move(*sub)}};
      return std::nullopt;
    };

    // PLeft: nor p q, G |- D from G |- D, p, q
    if (!goal.left.empty()) {
      if (auto pq = as_nor_app(goal.left[0])) {
        Sequent prem;
        prem.left.assign(goal.left.begin() + 1, goal.left.end());
        prem.right = goal.right;
        prem.right.push_back(pq->first);
        prem.right.push_back(pq->second);
        if (auto r = attempt({RuleName::PLeft, std::nullopt, std::nullopt},
                             prem))
          return done(std::move(r));
      }
    }

    // QRight: G |- D, nex p from p x, G |- D with x fresh
    if (!goal.right.empty()) {
      const Term& cp = goal.right.back();
      if (cp->kind == TermKind::App && cp->fun->kind == TermKind::Const &&
          cp->fun->cst.kind == ConstKind::Nex) {
        Type tau = cp->fun->cst.arg_ty;
        std::set<std::string> avoid;
        for (const Term& t : goal.left)
          for (const Var& v : free_vars(t)) avoid.insert(v.name);
        for (const Term& t : goal.right)
          for (const Var& v : free_vars(t)) avoid.insert(v.name);
        Var x = fresh_var(Var{"e", tau}, avoid);
        Sequent prem;
        prem.left.push_back(app(cp->arg, var_ref(x)));
        prem.left.insert(prem.left.end(), goal.left.begin(), goal.left.end());
        prem.right.assign(goal.right.begin(), goal.right.end() - 1);
        if (auto r = attempt({RuleName::QRight, std::nullopt, x}, prem))
          return done(std::move(r));
      }
    }

    // ContrL / ContrR: duplicate the outer-end formula in the premise
    if (!goal.left.empty()) {
      Sequent prem = goal;
      prem.left.insert(prem.left.begin(), goal.left.front());
      if (auto r = attempt({RuleName::ContrL, std::nullopt, std::nullopt},
                           prem))
        return done(std::move(r));
    }
    if (!goal.right.empty()) {
      Sequent prem = goal;
      prem.right.push_back(goal.right.back());
      if (auto r = attempt({RuleName::ContrR, std::nullopt, std::nullopt},
                           prem))
        return done(std::move(r));
    }

    // ExchL / ExchR: adjacent transpositions (involutive)
    for (std::size_t pos = 0; pos + 1 < goal.left.size(); ++pos) {
      Sequent prem = goal;
      std::swap(prem.left[pos], prem.left[pos + 1]);
      if (auto r = attempt(
              {RuleName::ExchL, static_cast<int>(pos), std::nullopt}, prem))
        return done(std::move(r));
    }
    for (std::size_t pos = 0; pos + 1 < goal.right.size(); ++pos) {
      Sequent prem = goal;
      std::swap(prem.right[pos], prem.right[pos + 1]);
      if (auto r = attempt(
              {RuleName::ExchR, static_cast<int>(pos), std::nullopt}, prem))
        return done(std::move(r));
    }

    // ThinDrop, paper mode only: the premise carries one extra formula,
    // drawn from the formula-typed subterms of the goal.
    if (mode_ == CheckMode::PaperBidirectional) {
      std::vector<Term> cands = thin_candidates(goal);
      for (const Term& c : cands) {
        Sequent prem = goal;
        prem.left.insert(prem.left.begin(), c);
        if (auto r = attempt({RuleName::ThinDropL, std::nullopt, std::nullopt},
                             prem))
          return done(std::move(r));
      }
      for (const Term& c : cands) {
        Sequent prem = goal;
        prem.right.push_back(c);
        if (auto r = attempt({RuleName::ThinDropR, std::nullopt, std::nullopt},
                             prem))
          return done(std::move(r));
      }
    }

    return done(std::nullopt);
  }

  std::vector<Term> thin_candidates(const Sequent& goal) {
    std::vector<Term> out;
    std::set<std::string> seen;
    auto visit = [&](const Term& t, auto&& self) -> void {
      if (is_formula(t)) {
        std::string key = alpha_canonical_key(t);
        if (seen.insert(key).second) out.push_back(t);
      }
      switch (t->kind) {
        case TermKind::App:
          self(t->fun, self);
          self(t->arg, self);
          break;
        case TermKind::Lam:
          // open subterms under the binder are not candidates
          break;
        default:
          break;
      }
    };
    for (const Term& t : goal.left) visit(t, visit);
    for (const Term& t : goal.right) visit(t, visit);
    return out;
  }

  SearchBudget budget_;
  CheckMode mode_;
  std::set<std::string> on_path_;
  long explored_ = 0;
  bool out_of_nodes_ = false;
};

}  // namespace detail

// On success the returned tree re-checks VALID in the same mode and its root
// sequent is the goal. Identical goal, budget and mode yield an identical
// tree.
inline std::optional<ProofNode> prove(const Sequent& goal,
                                      const SearchBudget& budget,
                                      CheckMode mode) {
  if (budget.depth < 1 || budget.node_limit < 1) return std::nullopt;
  detail::Prover p(budget, mode);
  return p.run(goal);
}

}  // namespace nl
