// nl: command-line front end for parsing, typing, reduction, proof checking
// and bounded proof search.
//
// Exit codes: 0 success / VALID / provable, 1 checked-and-negative
// (INVALID, ill-typed, not found within budget), 2 usage, IO or syntax
// error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nl/calculus.hpp"
#include "nl/elaborate.hpp"
#include "nl/print.hpp"
#include "nl/proof_io.hpp"
#include "nl/search.hpp"
#include "nl/syntax.hpp"
#include "nl/term.hpp"
#include "nl/typing.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string read_file_or_die(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nl::Prelude load_prelude(const std::string& path) {
  if (path.empty()) return nl::Prelude{};
  return nl::parse_prelude(read_file_or_die(path));
}

void print_span_error(const std::string& what, const nl::Span& span) {
  std::cerr << "error at " << span.begin << ".." << span.end << ": " << what
            << "\n";
}

struct ParseArgs {
  std::string file;
  std::string expr;
  std::string prelude;
  bool resugar = false;
};

int cmd_parse(const ParseArgs& a) {
  nl::Prelude prelude = load_prelude(a.prelude);
  std::string text = a.expr.empty() ? read_file_or_die(a.file) : a.expr;
  nl::Term t = nl::read_term(text, prelude);
  std::cout << nl::print_term(t, a.resugar) << "\n";
  return kExitOk;
}

struct TypeArgs {
  std::string expr;
  std::string prelude;
};

int cmd_type(const TypeArgs& a) {
  nl::Prelude prelude = load_prelude(a.prelude);
  nl::Term t = nl::read_term(a.expr, prelude);
  auto types = nl::all_types(t);
  if (types.empty()) {
    nl::TypeResult r = nl::structural_type(t);
    std::cerr << "ill-typed at path " << nl::path_string(r.error.path) << ": "
              << r.error.reason << "\n";
    return kExitNegative;
  }
  for (const nl::Type& ty : types) std::cout << nl::to_string(ty) << "\n";
  return kExitOk;
}

struct ReduceArgs {
  std::string expr;
  std::string prelude;
  std::string strategy = "lo";
  long fuel = 10000;
  bool resugar = false;
};

int cmd_reduce(const ReduceArgs& a) {
  nl::Prelude prelude = load_prelude(a.prelude);
  nl::Term t = nl::read_term(a.expr, prelude);
  nl::Strategy strat = a.strategy == "ri" ? nl::Strategy::RightmostInnermost
                                          : nl::Strategy::LeftmostOutermost;
  try {
    nl::Term n = nl::normalize(t, strat, a.fuel);
    std::cout << nl::print_term(n, a.resugar) << "\n";
    return kExitOk;
  } catch (const nl::FuelExhausted& e) {
    std::cerr << e.what() << "\n";
    return kExitNegative;
  }
}

struct CheckArgs {
  std::string file;
  std::string mode_override;
  std::string report = "text";
};

int cmd_check(const CheckArgs& a) {
  nl::ProofFile pf = nl::load_proof_file(a.file);
  nl::CheckMode mode = pf.mode;
  if (!a.mode_override.empty()) mode = nl::mode_from_string(a.mode_override);
  nl::Report report = nl::check_proof(pf.root, mode);
  if (a.report == "json")
    std::cout << nl::report_to_json(report, mode);
  else
    std::cout << nl::report_to_text(report);
  return report.valid ? kExitOk : kExitNegative;
}

struct ProveArgs {
  std::string sequent;
  std::string prelude;
  int depth = 6;
  long nodes = 1000000;
  std::string mode = "strict";
  std::string emit;
};

int cmd_prove(const ProveArgs& a) {
  nl::Prelude prelude = load_prelude(a.prelude);
  nl::SurfaceSequent ss = nl::parse_sequent_text(a.sequent, prelude);
  nl::Sequent goal;
  for (const auto& s : ss.left)
    goal.left.push_back(nl::elaborate(s, prelude));
  for (const auto& s : ss.right)
    goal.right.push_back(nl::elaborate(s, prelude));
  if (!nl::wf_sequent(goal)) {
    std::cerr << "goal is not a well-formed sequent (non-formula member)\n";
    return kExitNegative;
  }
  nl::CheckMode mode = nl::mode_from_string(a.mode);
  auto proof = nl::prove(goal, nl::SearchBudget{a.depth, a.nodes}, mode);
  if (!proof) {
    std::cout << "NOT FOUND within depth " << a.depth << "\n";
    return kExitNegative;
  }
  std::cout << "PROVED (" << nl::check_proof(*proof, mode).nodes.size()
            << " nodes)\n";
  if (!a.emit.empty()) {
    std::ofstream out(a.emit, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + a.emit);
    out << nl::proof_file_to_json(*proof, mode, a.prelude);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Trusted kernel and prover for a nominalistic sequent "
               "calculus"};
  cli.require_subcommand(1);

  ParseArgs pa;
  auto* parse = cli.add_subcommand("parse", "Elaborate a term and print it");
  parse->add_option("file", pa.file, "File with a term in surface syntax");
  parse->add_option("-e,--expr", pa.expr, "Term given inline");
  parse->add_option("--prelude", pa.prelude, "Prelude file");
  parse->add_flag("--resugar", pa.resugar, "Resugar abbreviations on output");

  TypeArgs ta;
  auto* type = cli.add_subcommand("type", "Print all types of a term");
  type->add_option("expr", ta.expr, "Term in surface syntax")->required();
  type->add_option("--prelude", ta.prelude, "Prelude file");

  ReduceArgs ra;
  auto* reduce = cli.add_subcommand("reduce", "Normalize a term");
  reduce->add_option("expr", ra.expr, "Term in surface syntax")->required();
  reduce->add_option("--prelude", ra.prelude, "Prelude file");
  reduce->add_option("--strategy", ra.strategy, "lo or ri")
      ->check(CLI::IsMember({"lo", "ri"}));
  reduce->add_option("--fuel", ra.fuel, "Maximum reduction steps");
  reduce->add_flag("--resugar", ra.resugar, "Resugar abbreviations on output");

  CheckArgs ca;
  auto* check = cli.add_subcommand("check", "Check a proof file");
  check->add_option("file", ca.file, "Proof JSON file")->required();
  check->add_option("--mode", ca.mode_override, "strict or paper")
      ->check(CLI::IsMember({"strict", "paper"}));
  check->add_option("--report", ca.report, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  ProveArgs va;
  auto* prove = cli.add_subcommand("prove", "Bounded backward proof search");
  prove->add_option("sequent", va.sequent, "Sequent, e.g. \"p |- p\"")
      ->required();
  prove->add_option("--prelude", va.prelude, "Prelude file");
  prove->add_option("--depth,-d", va.depth, "Maximum proof height");
  prove->add_option("--nodes,-n", va.nodes, "Search node limit");
  prove->add_option("--mode", va.mode, "strict or paper")
      ->check(CLI::IsMember({"strict", "paper"}));
  prove->add_option("--emit", va.emit, "Write the found proof to a file");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = cli.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*parse) {
      if (pa.file.empty() == pa.expr.empty()) {
        std::cerr << "parse: give exactly one of FILE or --expr\n";
        return kExitError;
      }
      return cmd_parse(pa);
    }
    if (*type) return cmd_type(ta);
    if (*reduce) return cmd_reduce(ra);
    if (*check) return cmd_check(ca);
    if (*prove) return cmd_prove(va);
  } catch (const nl::SyntaxError& e) {
    print_span_error(e.what(), e.span);
    return kExitError;
  } catch (const nl::ElabError& e) {
    print_span_error(e.what(), e.span);
    return e.kind == nl::ElabErrorKind::IllTyped ||
                   e.kind == nl::ElabErrorKind::EquivOnIota
               ? kExitNegative
               : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
