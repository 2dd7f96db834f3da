#include "fungraph/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "fungraph/algebra.hpp"
#include "fungraph/canonical.hpp"
#include "fungraph/checks.hpp"
#include "fungraph/division.hpp"
#include "fungraph/dot.hpp"
#include "fungraph/enumerate.hpp"
#include "fungraph/parser.hpp"
#include "fungraph/report_json.hpp"
#include "fungraph/witness.hpp"

namespace fungraph::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerificationFailure = 2;
constexpr int kBoundExceeded = 3;

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::string evidence_summary(const NonDivEvidence& ev) {
  std::string s = to_string(ev.kind);
  switch (ev.kind) {
    case EvidenceKind::size_argument:
      s += " (" + std::to_string(ev.target_size) + " not a multiple of " +
           std::to_string(ev.subject_size) + ")";
      break;
    case EvidenceKind::exhaustive_search:
      s += " (" + std::to_string(ev.candidates_checked) + " candidates of size " +
           std::to_string(ev.candidate_size) + ")";
      break;
    case EvidenceKind::certificate:
      s += std::string(" (") + to_string(ev.certificate) + ")";
      break;
  }
  return s;
}

int run_witness(const std::string& expr, int bound, const std::optional<std::string>& json_path,
                const std::optional<std::string>& dot_dir, std::ostream& out) {
  const FunctionalDigraph x = eval(expr);
  const WitnessReport r = build_witness(x, bound);
  out << "branch: " << to_string(r.branch) << "\n";
  out << "subject: " << to_literal(r.subject) << "\n";
  out << "factor_a: " << to_literal(r.factor_a) << "  (" << r.factor_a.size() << " vertices)\n";
  out << "factor_b: " << to_literal(r.factor_b) << "  (" << r.factor_b.size() << " vertices)\n";
  out << "cofactor: " << to_literal(r.cofactor) << "  (" << r.cofactor.size() << " vertices)\n";
  out << "product size: " << static_cast<long long>(r.subject.size()) * r.cofactor.size() << "\n";
  out << "not divides a: " << evidence_summary(r.not_div_a) << "\n";
  out << "not divides b: " << evidence_summary(r.not_div_b) << "\n";
  out << "verified: " << (r.verified ? "true" : "false") << "\n";
  if (json_path) write_file(*json_path, report_to_json(r) + "\n");
  if (dot_dir) {
    std::filesystem::create_directories(*dot_dir);
    const std::filesystem::path dir(*dot_dir);
    write_file(dir / "subject.dot", to_dot(r.subject, "subject"));
    write_file(dir / "factor_a.dot", to_dot(r.factor_a, "factor_a"));
    write_file(dir / "factor_b.dot", to_dot(r.factor_b, "factor_b"));
    write_file(dir / "cofactor.dot", to_dot(r.cofactor, "cofactor"));
    write_file(dir / "left_product.dot", to_dot(product(r.subject, r.cofactor), "left_product"));
    write_file(dir / "right_product.dot",
               to_dot(product(r.factor_a, r.factor_b), "right_product"));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiring of functional digraphs: sums, direct products, canonical forms,\n"
               "divisibility search, and verified non-primality witnesses."};
  app.set_version_flag("--version", "fungraph 0.1.0");
  app.require_subcommand(1);

  std::string expr_a, expr_b;
  int bound = kDefaultDivisionBound;
  int enum_size = 0;
  int max_size = 0;
  bool connected = false;
  std::optional<int> cycle_len;
  std::optional<std::string> json_path, dot_dir;
  std::string strategy = "constructive";

  auto* canon = app.add_subcommand("canon", "Canonical successor-list form of an expression");
  canon->add_option("expr", expr_a, "digraph expression")->required();

  auto* eq = app.add_subcommand("eq", "Test two expressions for isomorphism");
  eq->add_option("lhs", expr_a)->required();
  eq->add_option("rhs", expr_b)->required();

  auto* prod = app.add_subcommand("prod", "Direct product of two expressions");
  prod->add_option("lhs", expr_a)->required();
  prod->add_option("rhs", expr_b)->required();

  auto* sum_cmd = app.add_subcommand("sum", "Disjoint union of two expressions");
  sum_cmd->add_option("lhs", expr_a)->required();
  sum_cmd->add_option("rhs", expr_b)->required();

  auto* div = app.add_subcommand("divides", "Does the first expression divide the second?");
  div->add_option("divisor", expr_a)->required();
  div->add_option("dividend", expr_b)->required();
  div->add_option("--bound", bound, "max quotient size to search");

  auto* quot = app.add_subcommand("quotients", "All quotients of the second expression by the first");
  quot->add_option("divisor", expr_a)->required();
  quot->add_option("dividend", expr_b)->required();
  quot->add_option("--bound", bound, "max quotient size to search");

  auto* irr = app.add_subcommand("irreducible", "Is the expression irreducible?");
  irr->add_option("expr", expr_a)->required();
  irr->add_option("--bound", bound, "max quotient size to search");

  auto* wit = app.add_subcommand("witness",
                                 "Construct and verify a non-primality witness (a, b, y) with\n"
                                 "x*y isomorphic to a*b while x divides neither a nor b");
  wit->add_option("expr", expr_a)->required();
  wit->add_option("--bound", bound, "max quotient size for exhaustive non-divisibility checks");
  wit->add_option("--json", json_path, "write the full report to this file");
  wit->add_option("--dot", dot_dir, "write one DOT file per digraph into this directory");

  auto* enu = app.add_subcommand("enumerate",
                                 "Stream all digraphs of a size, one canonical literal per line");
  enu->add_option("size", enum_size, "vertex count")->required();
  auto* conn_flag = enu->add_flag("--connected", connected, "connected digraphs only");
  enu->add_option("--cycle-len", cycle_len, "restrict to the given cycle length")
      ->needs(conn_flag);
  enu->add_option("--strategy", strategy, "constructive or brute-force")
      ->check(CLI::IsMember({"constructive", "brute-force"}));

  auto* lemmas = app.add_subcommand("check-lemmas", "Run every property suite and report per-lemma status");
  lemmas->add_option("--max-size", max_size, "override the desk-scale size knob");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (canon->parsed()) {
      out << to_literal(canonical_representative(eval(expr_a))) << "\n";
      return kOk;
    }
    if (eq->parsed()) {
      const bool same = is_isomorphic(eval(expr_a), eval(expr_b));
      out << (same ? "true" : "false") << "\n";
      return kOk;
    }
    if (prod->parsed()) {
      out << to_literal(product(eval(expr_a), eval(expr_b))) << "\n";
      return kOk;
    }
    if (sum_cmd->parsed()) {
      out << to_literal(sum(eval(expr_a), eval(expr_b))) << "\n";
      return kOk;
    }
    if (div->parsed()) {
      const Tristate t = divides(eval(expr_a), eval(expr_b), bound);
      out << t << "\n";
      return t == Tristate::unknown ? kBoundExceeded : kOk;
    }
    if (quot->parsed()) {
      const QuotientSet qs = quotients(eval(expr_a), eval(expr_b), bound);
      for (const auto& y : qs.quotients) out << to_literal(y) << "\n";
      if (!qs.exhaustive) {
        err << "bound " << bound << " exceeded: the search was not exhaustive\n";
        return kBoundExceeded;
      }
      return kOk;
    }
    if (irr->parsed()) {
      const Tristate t = is_irreducible(eval(expr_a), bound);
      out << t << "\n";
      return t == Tristate::unknown ? kBoundExceeded : kOk;
    }
    if (wit->parsed()) {
      return run_witness(expr_a, bound, json_path, dot_dir, out);
    }
    if (enu->parsed()) {
      EnumFilter f;
      f.size = enum_size;
      f.connected_only = connected;
      f.cycle_len = cycle_len;
      const EnumStrategy s = strategy == "brute-force" ? EnumStrategy::brute_force
                                                       : EnumStrategy::constructive;
      for (const auto& g : all_digraphs(f, s)) out << to_literal(g) << "\n";
      return kOk;
    }
    if (lemmas->parsed()) {
      bool all_passed = true;
      for (const auto& r : checks::run_all(max_size)) {
        if (r.passed) {
          out << "PASS " << r.name << " (" << r.cases << " cases)\n";
        } else {
          all_passed = false;
          out << "FAIL " << r.name << ": " << r.detail << "\n";
        }
      }
      return all_passed ? kOk : kVerificationFailure;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const WitnessError& e) {
    err << "witness verification failed: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace fungraph::cli
