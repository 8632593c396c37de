#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gardenhose/bounds.hpp"
#include "gardenhose/evaluate.hpp"
#include "gardenhose/families.hpp"
#include "gardenhose/io.hpp"
#include "gardenhose/randomized.hpp"
#include "gardenhose/sat.hpp"
#include "gardenhose/search.hpp"
#include "gardenhose/turing.hpp"

namespace gardenhose::cli {

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsage = 2 };

/// Which errors are a property of the instance rather than of the invocation.
inline bool is_domain_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::reversibility_violation:
    case ErrorCode::nonterminating_run:
    case ErrorCode::layout_too_large:
    case ErrorCode::cap_exceeded:
    case ErrorCode::model_violates_matching:
    case ErrorCode::seed_space_too_large: return true;
    default: return false;
  }
}

namespace detail {

inline std::string with_path(const std::string& path, const std::string& what) { return path + ": " + what; }

/// Reads and parses a file, prefixing diagnostics with its path.
template <typename ParseFn>
auto load(const std::string& path, ParseFn&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw Error(e.code(), with_path(path, e.detail()));
  }
}

inline std::string side_name(Side s) { return to_string(s); }

inline std::string cell_name(Cell c) { return c == Cell::zero ? "0" : c == Cell::one ? "1" : "*"; }

inline std::string endpoint_name(const Endpoint& e) {
  if (e.side == Side::alice && e.id == kTap) return "tap";
  return side_name(e.side) + ":" + std::to_string(e.id);
}

inline std::string rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline void print_profile(std::ostream& out, const ErrorProfile& profile) {
  out << "worst_case: " << rational(profile.worst_case) << '\n';
  const Input size = static_cast<Input>(input_count(profile.n));
  for (Input x = 0; x < size; ++x) {
    for (Input y = 0; y < size; ++y) {
      if (const auto& p = profile.at(x, y)) {
        out << "cell " << to_bits(x, profile.n) << ' ' << to_bits(y, profile.n) << ": " << rational(*p) << '\n';
      }
    }
  }
}

inline void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& content) {
  if (path) {
    write_file(*path, content);
  } else {
    out << content;
  }
}

}  // namespace detail

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Garden-hose model toolkit", "ghtool"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for search, compile and verify")->check(CLI::Range(1, 256));

  // build
  auto* build = app.add_subcommand("build", "Construct a strategy for a named family");
  std::string family;
  std::optional<int> build_n;
  std::optional<std::string> build_table;
  std::optional<std::string> build_tree;
  std::optional<std::string> build_out;
  build->add_option("--family", family, "xor, eq, ip, maj, generic or protocol")
      ->required()
      ->check(CLI::IsMember({"xor", "eq", "ip", "maj", "generic", "protocol"}));
  build->add_option("--n", build_n, "Input length per party")->check(CLI::Range(1, kMaxInputBits));
  build->add_option("--table", build_table, "GHF table (generic)");
  build->add_option("--tree", build_tree, "GHP protocol tree (protocol)");
  build->add_option("--out", build_out, "Output GHS file (stdout when omitted)");

  // eval
  auto* eval = app.add_subcommand("eval", "Follow the water for one input pair");
  std::string eval_strategy;
  std::string eval_x;
  std::string eval_y;
  bool trace = false;
  eval->add_option("--strategy", eval_strategy)->required();
  eval->add_option("--x", eval_x)->required();
  eval->add_option("--y", eval_y)->required();
  eval->add_flag("--trace", trace, "Print one line per visited position");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a strategy against a truth table");
  std::string verify_strategy;
  std::string verify_table;
  verify_cmd->add_option("--strategy", verify_strategy)->required();
  verify_cmd->add_option("--table", verify_table)->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact complexity by exhaustive search");
  std::string oracle_table;
  int max_pipes = 0;
  std::optional<std::string> oracle_out;
  bool no_caps = false;
  oracle->add_option("--table", oracle_table)->required();
  oracle->add_option("--max-pipes", max_pipes)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--out", oracle_out, "Write the witness as GHS");
  oracle->add_flag("--no-caps", no_caps, "Lift the default n <= 2, s <= 7 limits");

  // sat-encode
  auto* sat_encode = app.add_subcommand("sat-encode", "Export the size-s question as DIMACS CNF");
  std::string enc_table;
  int enc_pipes = 0;
  std::string enc_out;
  std::optional<std::string> enc_varmap;
  sat_encode->add_option("--table", enc_table)->required();
  sat_encode->add_option("--pipes", enc_pipes)->required()->check(CLI::Range(1, 64));
  sat_encode->add_option("--out", enc_out)->required();
  sat_encode->add_option("--varmap", enc_varmap, "Sidecar path (default: <out>.varmap)");

  // sat-decode
  auto* sat_decode = app.add_subcommand("sat-decode", "Turn a solver model into a strategy");
  std::string dec_model;
  std::string dec_varmap;
  std::optional<std::string> dec_out;
  sat_decode->add_option("--model", dec_model)->required();
  sat_decode->add_option("--varmap", dec_varmap)->required();
  sat_decode->add_option("--out", dec_out);

  // compile-tm
  auto* compile_tm = app.add_subcommand("compile-tm", "Compile a reversible machine into a strategy");
  std::string tm_machine;
  int tm_n = 1;
  std::optional<std::string> tm_out;
  std::uint64_t tm_cap = CompileOptions{}.max_pipes;
  compile_tm->add_option("--machine", tm_machine)->required();
  compile_tm->add_option("--n", tm_n)->required()->check(CLI::Range(1, kMaxInputBits));
  compile_tm->add_option("--out", tm_out);
  compile_tm->add_option("--max-pipes", tm_cap, "Layout cap");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Lower bounds for a table");
  std::string bounds_table;
  bounds->add_option("--table", bounds_table)->required();

  // rand-error
  auto* rand_error = app.add_subcommand("rand-error", "Exact error of a randomized strategy");
  std::string re_strategy;
  std::string re_table;
  std::optional<int> majority;
  rand_error->add_option("--strategy", re_strategy)->required();
  rand_error->add_option("--table", re_table)->required();
  rand_error->add_option("--majority", majority, "Odd number of independent repetitions")->check(CLI::Range(1, 100001));

  // derandomize
  auto* derand = app.add_subcommand("derandomize", "Smallest seed that is correct everywhere");
  std::string de_strategy;
  std::string de_table;
  std::optional<std::string> de_out;
  derand->add_option("--strategy", de_strategy)->required();
  derand->add_option("--table", de_table)->required();
  derand->add_option("--out", de_out, "Write the fixed strategy as GHS");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (build->parsed()) {
      std::optional<Strategy> s;
      const auto need_n = [&] {
        if (!build_n) throw Error(ErrorCode::invalid_argument, "--n is required for family " + family);
        return *build_n;
      };
      if (family == "xor") s = build_xor(need_n());
      if (family == "eq") s = build_eq(need_n());
      if (family == "ip") s = build_ip(need_n());
      if (family == "maj") s = build_maj(need_n());
      if (family == "generic") {
        if (!build_table) throw Error(ErrorCode::invalid_argument, "--table is required for family generic");
        const TruthTable t = detail::load(*build_table, parse_ghf);
        if (build_n && *build_n != t.n()) throw Error(ErrorCode::dimension_mismatch, "--n disagrees with the table");
        s = build_generic(t);
      }
      if (family == "protocol") {
        if (!build_tree) throw Error(ErrorCode::invalid_argument, "--tree is required for family protocol");
        const ProtocolTree tree = detail::load(*build_tree, parse_ghp);
        if (build_n && *build_n != tree.n()) throw Error(ErrorCode::dimension_mismatch, "--n disagrees with the tree");
        s = build_from_protocol(tree);
      }
      detail::emit(out, build_out, format_ghs(*s));
      if (build_out) out << "family: " << family << "\nn: " << s->n() << "\npipes: " << s->pipes() << '\n';
      return kOk;
    }

    if (eval->parsed()) {
      const Strategy s = detail::load(eval_strategy, parse_ghs);
      const Input x = parse_bits(eval_x, s.n());
      const Input y = parse_bits(eval_y, s.n());
      const EvalResult r = evaluate(s, x, y);
      if (trace) {
        // One line for the start and one per hop; the last line names the exit.
        out << "start " << detail::endpoint_name(r.path.front());
        for (std::size_t i = 1; i + 1 < r.path.size(); i += 2) {
          out << "\nhop " << (i + 1) / 2 << ": " << detail::endpoint_name(r.path[i - 1]) << " -> pipe " << r.path[i].id
              << " -> " << detail::endpoint_name(r.path[i + 1]);
        }
        out << " (open), exit " << detail::side_name(r.exit_side) << '\n';
      } else {
        out << "exit: " << detail::side_name(r.exit_side) << "\nbit: " << exit_bit(r.exit_side) << "\nhops: " << r.hops << '\n';
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const Strategy s = detail::load(verify_strategy, parse_ghs);
      const TruthTable t = detail::load(verify_table, parse_ghf);
      const auto cex = verify(s, t, jobs);
      if (!cex) {
        out << "result: ok\n";
        return kOk;
      }
      out << "result: counterexample\nx: " << to_bits(cex->x, s.n()) << "\ny: " << to_bits(cex->y, s.n())
          << "\ngot: " << detail::side_name(cex->got) << "\nwant: " << detail::cell_name(cex->want) << '\n';
      return kDomainFailure;
    }

    if (oracle->parsed()) {
      const TruthTable t = detail::load(oracle_table, parse_ghf);
      SearchLimits limits;
      limits.jobs = jobs;
      if (no_caps) {
        limits.max_n = kMaxInputBits;
        limits.max_pipes = std::max(max_pipes, limits.max_pipes);
      }
      const SearchReport r = brute_force_gh(t, max_pipes, limits);
      out << "nodes: " << r.nodes << "\npruned: " << r.pruned << '\n';
      if (!r.exact) {
        out << "status: cap_exceeded\nlower_bound: " << r.lower_bound << "\nupper_bound: " << r.upper_bound << '\n';
        return kDomainFailure;
      }
      out << "status: exact\ns_min: " << r.s_min << '\n';
      if (oracle_out) write_file(*oracle_out, format_ghs(*r.witness));
      return kOk;
    }

    if (sat_encode->parsed()) {
      const TruthTable t = detail::load(enc_table, parse_ghf);
      const CNFInstance cnf = encode_sat(t, enc_pipes);
      const std::string varmap_path = enc_varmap.value_or(enc_out + ".varmap");
      write_file(enc_out, format_dimacs(cnf));
      write_file(varmap_path, format_varmap(cnf.varmap));
      out << "variables: " << cnf.variables << "\nclauses: " << cnf.clauses.size() << "\nvarmap: " << varmap_path << '\n';
      return kOk;
    }

    if (sat_decode->parsed()) {
      const VarMap vm = detail::load(dec_varmap, parse_varmap);
      const auto model = detail::load(dec_model, parse_model);
      const Strategy s = decode_sat(model, vm);
      detail::emit(out, dec_out, format_ghs(s));
      if (dec_out) out << "n: " << s.n() << "\npipes: " << s.pipes() << '\n';
      return kOk;
    }

    if (compile_tm->parsed()) {
      const TuringMachine m = detail::load(tm_machine, parse_ghtm);
      const CompiledStrategy c = compile(m, tm_n, CompileOptions{tm_cap, jobs});
      detail::emit(out, tm_out, format_ghs(c.strategy));
      if (tm_out) {
        out << "boundary_per_side: " << c.layout.boundary_count() << "\npipes: " << c.strategy.pipes() << '\n';
      }
      return kOk;
    }

    if (bounds->parsed()) {
      out << bounds_report(detail::load(bounds_table, parse_ghf)).str();
      return kOk;
    }

    if (rand_error->parsed()) {
      const RandomizedStrategy rs = detail::load(re_strategy, parse_ghr);
      const TruthTable t = detail::load(re_table, parse_ghf);
      if (rs.n() != t.n()) throw Error(ErrorCode::dimension_mismatch, "strategy and table disagree on n");
      if (majority) {
        detail::print_profile(out, majority_error(rs, t, *majority));
      } else {
        detail::print_profile(out, exact_error(rs, t));
      }
      return kOk;
    }

    if (derand->parsed()) {
      const RandomizedStrategy rs = detail::load(de_strategy, parse_ghr);
      const TruthTable t = detail::load(de_table, parse_ghf);
      if (rs.n() != t.n()) throw Error(ErrorCode::dimension_mismatch, "strategy and table disagree on n");
      const auto seed = derandomize(rs, t);
      if (!seed) {
        out << "result: not_found\n";
        return kDomainFailure;
      }
      out << "result: ok\nseed: " << *seed << '\n';
      if (de_out) write_file(*de_out, format_ghs(rs.fixed(*seed)));
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_domain_failure(e.code()) ? kDomainFailure : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gardenhose::cli
