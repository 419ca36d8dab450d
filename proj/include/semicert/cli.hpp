#pragma once

/**
 * @file cli.hpp
 * @brief Command dispatch behind the `semicert` executable.
 *
 * Exit status: 0 success, 1 a valid negative answer (refutation, ill-posed
 * functional, membership found by `witness`), 2 usage or input error,
 * 3 internal invariant violation.
 */

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "semicert/classify.hpp"
#include "semicert/io.hpp"
#include "semicert/normalize.hpp"
#include "semicert/solver.hpp"
#include "semicert/verify.hpp"

namespace semicert::cli {

enum exit_code : int { ok = 0, negative = 1, usage = 2, internal = 3 };

enum class Format { text, kv };

/// One command's output in both renderings.
struct Report {
  int status = ok;
  std::vector<std::string> text;
  std::vector<std::pair<std::string, std::string>> kv;

  void line(std::string s) { text.push_back(std::move(s)); }
  void field(std::string key, std::string value) { kv.emplace_back(std::move(key), std::move(value)); }
  /// `key = value` in text and `key=value` in kv.
  void both(const std::string& key, const std::string& value) {
    line(key + " = " + value);
    field(key, value);
  }

  void render(std::ostream& out, Format format) const {
    if (format == Format::text) {
      for (const auto& s : text) out << s << '\n';
    } else {
      for (const auto& [k, v] : kv) out << k << '=' << v << '\n';
    }
  }
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::invalid_argument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Instance load_system(const std::string& path) {
  Instance inst = parse_instance(read_file(path));
  if (!inst.b) throw error(errc::invalid_argument, "'" + path + "' has no vector block");
  return inst;
}

inline void require_valid(bool ok_, const char* what) {
  if (!ok_) throw error(errc::internal_invariant, what);
}

inline Report solve(const std::string& path) {
  const Instance inst = load_system(path);
  const CertifiedSolveResult r = membership_certified(inst.a, *inst.b);
  Report rep;
  switch (r.kind()) {
    case SolveKind::solution:
      require_valid(mat_mul(inst.a, r.w()) == *inst.b, "solution failed re-validation");
      rep.line("SOLUTION");
      rep.field("result", "solution");
      rep.both("w", to_string(r.w()));
      break;
    case SolveKind::refutation:
      require_valid(check_certificate(inst.a, *inst.b, r.certificate()), "certificate failed re-validation");
      rep.status = negative;
      rep.line("REFUTATION");
      rep.field("result", "refutation");
      rep.both("u", to_string(r.u()));
      rep.both("v", to_string(r.v()));
      break;
    case SolveKind::undecided:
      rep.line("UNDECIDED (" + std::string(to_string(r.undecided_reason())) + ")");
      rep.field("result", "undecided");
      rep.field("reason", std::string(to_string(r.undecided_reason())));
      break;
  }
  return rep;
}

inline Report witness(const std::string& path) {
  const Instance inst = load_system(path);
  const CertifiedSolveResult r = membership_certified(inst.a, *inst.b);
  Report rep;
  switch (r.kind()) {
    case SolveKind::refutation:
      require_valid(check_certificate(inst.a, *inst.b, r.certificate()), "certificate failed re-validation");
      rep.line("CERTIFICATE");
      rep.field("result", "certificate");
      rep.both("u", to_string(r.u()));
      rep.both("v", to_string(r.v()));
      break;
    case SolveKind::solution:
      require_valid(mat_mul(inst.a, r.w()) == *inst.b, "solution failed re-validation");
      rep.status = negative;
      rep.line("MEMBERSHIP DETECTED");
      rep.field("result", "membership-detected");
      rep.both("w", to_string(r.w()));
      break;
    case SolveKind::undecided:
      rep.status = negative;
      rep.line("NO CERTIFICATE (" + std::string(to_string(r.undecided_reason())) + ")");
      rep.field("result", "no-certificate");
      rep.field("reason", std::string(to_string(r.undecided_reason())));
      break;
  }
  return rep;
}

inline std::string join(const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + to_string(xs[i]);
  return out;
}

inline Report normalize_cmd(const std::string& path) {
  const Instance inst = parse_instance(read_file(path));
  const ColVec b = inst.b ? *inst.b : ColVec::zeros(inst.tag, inst.a.rows());
  const NormalizedSystem ns = normalize(inst.a, b);
  require_valid(is_column_stochastic(ns.a_norm), "normalized matrix is not column-stochastic");

  Report rep;
  rep.line("NORMALIZED");
  rep.field("result", "normalized");
  rep.both("column_stochastic", is_column_stochastic(inst.a) ? "true" : "false");
  rep.both("row_stochastic", is_row_stochastic(inst.a) ? "true" : "false");
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < ns.a_norm.rows(); ++i) rows.push_back(to_string(ns.a_norm.row(i)));
  rep.line("a_norm =");
  for (const auto& r : rows) rep.line("  " + r);
  rep.field("a_norm", to_bracket_string(ns.a_norm));
  rep.both("b_norm", to_string(ns.b_norm));
  rep.both("row_scale", join(ns.row_scale));
  rep.both("col_scale", join(ns.col_scale));
  std::string kept;
  for (std::size_t j = 0; j < ns.kept_columns.size(); ++j) kept += (j ? " " : "") + std::to_string(ns.kept_columns[j]);
  rep.both("kept_columns", kept);
  return rep;
}

inline Report extend(const std::string& path) {
  const Instance inst = load_system(path);
  const ExtensionResult r = extend_functional(inst.a, *inst.b);
  Report rep;
  switch (r.kind) {
    case ExtensionKind::extended:
      require_valid(mat_mul(inst.a, *r.alpha) == *inst.b, "extension failed re-validation");
      rep.line("EXTENDED");
      rep.field("result", "extended");
      rep.both("alpha", to_string(*r.alpha));
      break;
    case ExtensionKind::ill_posed:
      require_valid(check_certificate(inst.a, *inst.b, *r.pair), "certificate failed re-validation");
      rep.status = negative;
      rep.line("ILL-POSED");
      rep.field("result", "ill-posed");
      rep.both("u", to_string(r.pair->u));
      rep.both("v", to_string(r.pair->v));
      break;
    case ExtensionKind::inconclusive:
      rep.line("INCONCLUSIVE (" + std::string(to_string(*r.reason)) + ")");
      rep.field("result", "inconclusive");
      rep.field("reason", std::string(to_string(*r.reason)));
      break;
  }
  return rep;
}

inline Report classify_cmd(const std::string& tag_name) {
  const Tag tag = parse_tag(tag_name);
  const ExactnessVerdict v = classify(tag);
  Report rep;
  const std::string reason(to_string(v.reason));
  if (v.verdict == Exactness::left_exact) {
    rep.line("LEFT EXACT (" + reason + ")");
    rep.field("result", "left-exact");
    rep.field("reason", reason);
    return rep;
  }
  const std::string a = to_bracket_string(v.witness->first);
  const std::string b = to_bracket_string(v.witness->second);
  rep.line("NOT LEFT EXACT (" + reason + "); witness A=" + a + ", b=" + b);
  rep.field("result", "not-left-exact");
  rep.field("reason", reason);
  rep.field("witness_a", a);
  rep.field("witness_b", b);
  return rep;
}

inline Report verify_boolean(std::size_t max_dim) {
  const BooleanE2Report r = boolean_e2_exhaustive(max_dim, max_dim);
  Report rep;
  rep.line("BOOLEAN E2 EXHAUSTIVE (d, n <= " + std::to_string(max_dim) + ")");
  rep.field("result", r.total_violations == 0 ? "verified" : "violated");
  for (const auto& s : r.shapes) {
    const std::string key = "d" + std::to_string(s.d) + "n" + std::to_string(s.n);
    rep.line("d=" + std::to_string(s.d) + " n=" + std::to_string(s.n) + ": " + std::to_string(s.systems) +
             " systems, " + std::to_string(s.violations) + " violations");
    rep.field(key + "_systems", std::to_string(s.systems));
    rep.field(key + "_violations", std::to_string(s.violations));
  }
  rep.line("total: " + std::to_string(r.total_systems) + " systems, " + std::to_string(r.total_violations) +
           " violations");
  rep.field("systems", std::to_string(r.total_systems));
  rep.field("violations", std::to_string(r.total_violations));
  for (const auto& v : r.violating_instances) {
    rep.line("violation: " + v);
    rep.field("violation", v);
  }
  if (r.total_violations != 0) rep.status = internal;
  return rep;
}

inline Report verify_dichotomy(Tag tag, std::uint64_t trials, std::uint64_t seed) {
  const DichotomyReport r = randomized_dichotomy_suite(tag, trials, seed);
  Report rep;
  rep.line(std::string(to_string(tag)) + " dichotomy: " + std::to_string(r.trials) + " trials (seed " +
           std::to_string(seed) + "), " + std::to_string(r.solutions) + " solutions, " +
           std::to_string(r.refutations) + " refutations, " + std::to_string(r.failures.size()) + " failures");
  rep.field("result", r.failures.empty() ? "verified" : "failed");
  rep.field("semiring", std::string(to_string(tag)));
  rep.field("trials", std::to_string(r.trials));
  rep.field("seed", std::to_string(seed));
  rep.field("solutions", std::to_string(r.solutions));
  rep.field("refutations", std::to_string(r.refutations));
  rep.field("failures", std::to_string(r.failures.size()));
  for (const auto& f : r.failures) {
    rep.line("failure: " + f);
    rep.field("failure", f);
  }
  if (!r.failures.empty()) rep.status = internal;
  return rep;
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified linear algebra over semifields", "semicert"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "kv"}));

  std::string path;
  std::string tag_name;
  std::size_t max_dim = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;

  auto* solve = app.add_subcommand("solve", "Decide b in right-im A with a solution or a certificate");
  auto* witness = app.add_subcommand("witness", "Produce a kernel-pair certificate that b is not in right-im A");
  auto* normalize = app.add_subcommand("normalize", "Rescale to a column-stochastic system with 0/1 right side");
  auto* extend = app.add_subcommand("extend", "Extend the functional G_i -> values_i to all of S^n");
  for (auto* sub : {solve, witness, normalize, extend}) sub->add_option("file", path, "Instance file")->required();

  auto* classify = app.add_subcommand("classify", "Left exactness of a built-in semifield");
  classify->add_option("semiring", tag_name)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("semiring", tag_name)->required();
  auto* max_dim_opt = verify->add_option("--max-dim", max_dim, "Exhaustive bound for boolean (1..4)");
  auto* trials_opt = verify->add_option("--trials", trials, "Random trials");
  verify->add_option("--seed", seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  const Format format = format_name == "kv" ? Format::kv : Format::text;

  try {
    Report rep;
    if (*solve) {
      rep = detail::solve(path);
    } else if (*witness) {
      rep = detail::witness(path);
    } else if (*normalize) {
      rep = detail::normalize_cmd(path);
    } else if (*extend) {
      rep = detail::extend(path);
    } else if (*classify) {
      rep = detail::classify_cmd(tag_name);
    } else {
      const Tag tag = parse_tag(tag_name);
      const bool exhaustive = tag == Tag::boolean && (*max_dim_opt || !*trials_opt);
      rep = exhaustive ? detail::verify_boolean(*max_dim_opt ? max_dim : 3) : detail::verify_dichotomy(tag, trials, seed);
    }
    rep.render(out, format);
    return rep.status;
  } catch (const error& e) {
    err << "semicert: " << e.what() << '\n';
    return e.code() == errc::internal_invariant ? internal : usage;
  }
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace semicert::cli
