#pragma once

// Proof files are single JSON documents:
//
//   { "prelude": "theory.nlp",            // path, relative to the proof file
//     "mode": "strict" | "paper",
//     "root": { "sequent": { "left": ["...term..."], "right": [...] },
//               "rule": { "name": "S", "pos": 0, "eigen": "x:i" },
//               "premises": [ ... ] } }
//
// Term texts are surface syntax resolved against the prelude; a QRight
// node's eigenvariable is in scope for the terms of its premise subtree.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nl/calculus.hpp"
#include "nl/elaborate.hpp"
#include "nl/print.hpp"
#include "nl/syntax.hpp"

namespace nl {

struct ProofFile {
  std::string prelude_path;
  CheckMode mode = CheckMode::Strict;
  ProofNode root;
  Prelude prelude;
};

struct ProofIoError : std::runtime_error {
  explicit ProofIoError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProofIoError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Var parse_eigen_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0)
    throw ProofIoError("eigen must be 'name:type', got '" + spec + "'");
  std::string name = spec.substr(0, colon);
  Type ty = parse_type(spec.substr(colon + 1));
  return Var{name, ty};
}

inline ProofNode load_node(const nlohmann::json& j, const Prelude& prelude) {
  if (!j.is_object()) throw ProofIoError("proof node must be an object");
  ProofNode node;
  const auto& seq = j.at("sequent");
  for (const auto& s : seq.at("left"))
    node.sequent.left.push_back(read_term(s.get<std::string>(), prelude));
  for (const auto& s : seq.at("right"))
    node.sequent.right.push_back(read_term(s.get<std::string>(), prelude));
  const auto& rule = j.at("rule");
  std::string name = rule.at("name").get<std::string>();
  auto rn = rule_name_from(name);
  if (!rn) throw ProofIoError("unknown rule name '" + name + "'");
  node.rule.name = *rn;
  if (rule.contains("pos")) node.rule.pos = rule.at("pos").get<int>();
  Prelude premise_scope = prelude;
  if (rule.contains("eigen")) {
    Var eigen = parse_eigen_spec(rule.at("eigen").get<std::string>());
    node.rule.eigen = eigen;
    premise_scope.vars.emplace(eigen.name, eigen);
  }
  if (j.contains("premises"))
    for (const auto& p : j.at("premises"))
      node.premises.push_back(load_node(p, premise_scope));
  return node;
}

inline std::string dirname(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".")
                                    : path.substr(0, slash);
}

inline nlohmann::json node_to_json(const ProofNode& node) {
  nlohmann::json j;
  j["sequent"]["left"] = nlohmann::json::array();
  for (const Term& t : node.sequent.left)
    j["sequent"]["left"].push_back(print_term(t, true));
  j["sequent"]["right"] = nlohmann::json::array();
  for (const Term& t : node.sequent.right)
    j["sequent"]["right"].push_back(print_term(t, true));
  j["rule"]["name"] = rule_name_str(node.rule.name);
  if (node.rule.pos) j["rule"]["pos"] = *node.rule.pos;
  if (node.rule.eigen)
    j["rule"]["eigen"] =
        node.rule.eigen->name + ":" + to_string(node.rule.eigen->ty);
  j["premises"] = nlohmann::json::array();
  for (const ProofNode& p : node.premises)
    j["premises"].push_back(node_to_json(p));
  return j;
}

}  // namespace detail

inline CheckMode mode_from_string(const std::string& s) {
  if (s == "strict") return CheckMode::Strict;
  if (s == "paper") return CheckMode::PaperBidirectional;
  throw ProofIoError("mode must be 'strict' or 'paper', got '" + s + "'");
}

inline std::string mode_to_string(CheckMode m) {
  return m == CheckMode::Strict ? "strict" : "paper";
}

inline ProofFile load_proof_file(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(detail::read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ProofIoError(path + ": " + e.what());
  }
  ProofFile pf;
  try {
    pf.prelude_path = j.at("prelude").get<std::string>();
    pf.mode = mode_from_string(j.at("mode").get<std::string>());
    if (!pf.prelude_path.empty()) {
      std::string ppath = pf.prelude_path;
      if (ppath.front() != '/') ppath = detail::dirname(path) + "/" + ppath;
      pf.prelude = parse_prelude(detail::read_file(ppath));
    }
    pf.root = detail::load_node(j.at("root"), pf.prelude);
  } catch (const nlohmann::json::exception& e) {
    throw ProofIoError(path + ": " + e.what());
  }
  return pf;
}

inline std::string proof_file_to_json(const ProofNode& root, CheckMode mode,
                                      const std::string& prelude_path) {
  nlohmann::json j;
  j["prelude"] = prelude_path;
  j["mode"] = mode_to_string(mode);
  j["root"] = detail::node_to_json(root);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Report rendering.

inline std::string path_string(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(path[i]);
  }
  return s;
}

inline std::string report_to_text(const Report& report) {
  std::string out;
  for (const NodeReport& n : report.nodes) {
    out += path_string(n.path);
    out += " ";
    out += rule_name_str(n.rule);
    if (n.ok()) {
      out += " ok\n";
    } else if (!n.wf) {
      out += " ERROR IllFormedSequent: a member is not a formula\n";
    } else {
      out += std::string(" ERROR ") + rule_error_kind_str(n.error->kind) +
             ": " + n.error->detail + "\n";
    }
  }
  out += report.valid ? "VALID\n" : "INVALID\n";
  return out;
}

inline std::string report_to_json(const Report& report, CheckMode mode) {
  nlohmann::json j;
  j["valid"] = report.valid;
  j["mode"] = mode_to_string(mode);
  j["nodes"] = nlohmann::json::array();
  for (const NodeReport& n : report.nodes) {
    nlohmann::json nj;
    nj["path"] = n.path;
    nj["rule"] = rule_name_str(n.rule);
    nj["wf"] = n.wf;
    nj["status"] = n.ok() ? "ok" : "error";
    if (!n.ok() && n.error) {
      nj["error"]["kind"] = rule_error_kind_str(n.error->kind);
      nj["error"]["detail"] = n.error->detail;
    }
    j["nodes"].push_back(nj);
  }
  return j.dump(2) + "\n";
}

}  // namespace nl
