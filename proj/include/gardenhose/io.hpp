#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gardenhose/error.hpp"
#include "gardenhose/families.hpp"
#include "gardenhose/model.hpp"
#include "gardenhose/randomized.hpp"
#include "gardenhose/sat.hpp"
#include "gardenhose/truth_table.hpp"
#include "gardenhose/turing.hpp"

namespace gardenhose {

namespace io_detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

/// Line-oriented reader that remembers positions for diagnostics.
class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines_.push_back(line);
      if (end == text.size()) break;
      start = end + 1;
    }
    while (!lines_.empty() && blank(lines_.back())) lines_.pop_back();
  }

  bool done() const { return next_ >= lines_.size(); }
  std::size_t line_number() const { return next_; }  // of the line last taken

  std::string_view take(std::string_view what) {
    if (done()) throw ParseError(lines_.size() + 1, 1, "unexpected end of input, expected " + std::string(what));
    return lines_[next_++];
  }

  std::vector<Token> take_tokens(std::string_view what) { return split(take(what)); }

  /// Like take_tokens, but a missing line at the end of input reads as blank.
  std::vector<Token> take_tokens_or_blank() {
    if (done()) {
      ++next_;
      return {};
    }
    return split(lines_[next_++]);
  }

  [[noreturn]] void fail(std::size_t column, const std::string& detail) const { throw ParseError(next_, column, detail); }
  [[noreturn]] void fail(const Token& t, const std::string& detail) const { fail(t.column, detail); }

  void expect_end() const {
    if (!done()) throw ParseError(next_ + 1, 1, "unexpected trailing content");
  }

  void expect_count(const std::vector<Token>& tokens, std::size_t count, std::string_view shape) const {
    if (tokens.size() == count) return;
    const std::size_t column = tokens.size() > count ? tokens[count].column : (tokens.empty() ? 1 : tokens.back().column);
    fail(column, "expected `" + std::string(shape) + "`");
  }

  void expect_word(const Token& t, std::string_view word) const {
    if (t.text != word) fail(t, "expected `" + std::string(word) + "`, found `" + std::string(t.text) + "`");
  }

  long long integer(const Token& t, long long low, long long high) const {
    long long value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail(t, "expected an integer, found `" + std::string(t.text) + "`");
    if (value < low || value > high) {
      fail(t, "value " + std::to_string(value) + " outside [" + std::to_string(low) + ", " + std::to_string(high) + "]");
    }
    return value;
  }

  static std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      const std::size_t begin = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      if (i > begin) out.push_back({line.substr(begin, i - begin), begin + 1});
    }
    return out;
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t'; }
  static bool blank(std::string_view line) { return split(line).empty(); }

  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

inline void check_header(Reader& r, const std::vector<Token>& tokens, std::string_view magic, std::size_t count,
                         std::string_view shape) {
  if (tokens.empty()) r.fail(1, "expected `" + std::string(shape) + "`");
  r.expect_word(tokens[0], magic);
  if (tokens.size() < 2) r.fail(tokens[0].column, "missing format version");
  r.integer(tokens[1], 1, 1);
  r.expect_count(tokens, count, shape);
}

inline std::vector<bool> bit_row(Reader& r, const Token& t, std::size_t width) {
  if (t.text.size() != width) r.fail(t, "expected " + std::to_string(width) + " bits, found " + std::to_string(t.text.size()));
  std::vector<bool> out;
  for (std::size_t i = 0; i < t.text.size(); ++i) {
    const char c = t.text[i];
    if (c != '0' && c != '1') r.fail(t.column + i, std::string("expected 0 or 1, found `") + c + "`");
    out.push_back(c == '1');
  }
  return out;
}

inline std::string bits_string(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

inline Connection pair_token(Reader& r, const Token& t, PipeId low, PipeId high) {
  const auto dash = t.text.find('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 == t.text.size()) r.fail(t, "expected a pair `a-b`");
  const Token a{t.text.substr(0, dash), t.column};
  const Token b{t.text.substr(dash + 1), t.column + dash + 1};
  return {static_cast<PipeId>(r.integer(a, low, high)), static_cast<PipeId>(r.integer(b, low, high))};
}

/// Builds the wiring and reports matching violations at the line just read.
inline Wiring checked_wiring(Reader& r, int pipes, Side side, std::vector<Connection> pairs, std::size_t column) {
  Wiring w(pipes, side, std::move(pairs));
  if (auto issue = validate_wiring(w)) r.fail(column, std::string(to_string(issue->code)) + ": " + issue->detail);
  return w;
}

inline Wiring alice_line(Reader& r, int pipes) {
  const auto tokens = r.take_tokens("an alice wiring line");
  if (tokens.empty()) r.fail(1, "alice line needs a tap partner (`-` or a pipe id)");
  std::vector<Connection> pairs;
  if (tokens[0].text != "-") pairs.push_back({kTap, static_cast<PipeId>(r.integer(tokens[0], 1, pipes))});
  for (std::size_t i = 1; i < tokens.size(); ++i) pairs.push_back(pair_token(r, tokens[i], 1, pipes));
  return checked_wiring(r, pipes, Side::alice, std::move(pairs), tokens[0].column);
}

inline Wiring bob_line(Reader& r, int pipes) {
  // Trailing blank lines are stripped on input, so empty Bob wirings at
  // the very end of a file may be absent.
  const auto tokens = r.take_tokens_or_blank();
  std::vector<Connection> pairs;
  for (const auto& t : tokens) pairs.push_back(pair_token(r, t, 1, pipes));
  return checked_wiring(r, pipes, Side::bob, std::move(pairs), 1);
}

inline Strategy strategy_body(Reader& r, int n, int pipes) {
  const std::size_t rows = input_count(n);
  {
    const auto t = r.take_tokens("`alice`");
    r.expect_count(t, 1, "alice");
    r.expect_word(t[0], "alice");
  }
  std::vector<Wiring> alice;
  for (std::size_t i = 0; i < rows; ++i) alice.push_back(alice_line(r, pipes));
  {
    const auto t = r.take_tokens("`bob`");
    r.expect_count(t, 1, "bob");
    r.expect_word(t[0], "bob");
  }
  std::vector<Wiring> bob;
  for (std::size_t i = 0; i < rows; ++i) bob.push_back(bob_line(r, pipes));
  return Strategy(n, pipes, std::move(alice), std::move(bob));
}

inline void write_body(std::ostream& out, const Strategy& s) {
  out << "alice\n";
  for (Input x = 0; x < s.inputs(); ++x) {
    const Wiring& w = s.alice(x);
    const auto tap = w.tap_partner();
    out << (tap ? std::to_string(*tap) : "-");
    for (const auto& [a, b] : w.pairs()) {
      if (a != kTap) out << ' ' << a << '-' << b;
    }
    out << '\n';
  }
  out << "bob\n";
  for (Input y = 0; y < s.inputs(); ++y) {
    bool first = true;
    for (const auto& [a, b] : s.bob(y).pairs()) {
      out << (first ? "" : " ") << a << '-' << b;
      first = false;
    }
    out << '\n';
  }
}

constexpr long long kMaxPipesInFile = 1 << 24;

}  // namespace io_detail

// ---- files ---------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::invalid_argument, "write to '" + path + "' failed");
}

// ---- GHF truth tables ------------------------------------------------------

inline std::string format_ghf(const TruthTable& table) {
  std::string out = "ghf 1 " + std::to_string(table.n()) + "\n";
  for (Input x = 0; x < table.size(); ++x) {
    for (Input y = 0; y < table.size(); ++y) {
      const Cell c = table.at(x, y);
      out.push_back(c == Cell::zero ? '0' : c == Cell::one ? '1' : '*');
    }
    out.push_back('\n');
  }
  return out;
}

inline TruthTable parse_ghf(std::string_view text) {
  io_detail::Reader r(text);
  const auto header = r.take_tokens("`ghf 1 <n>`");
  io_detail::check_header(r, header, "ghf", 3, "ghf 1 <n>");
  const int n = static_cast<int>(r.integer(header[2], 1, kMaxInputBits));
  TruthTable table(n);
  for (Input x = 0; x < table.size(); ++x) {
    const auto tokens = r.take_tokens("a table row");
    r.expect_count(tokens, 1, "one row of 0/1/* cells");
    const auto& row = tokens[0];
    if (row.text.size() != table.size()) {
      r.fail(row, "expected " + std::to_string(table.size()) + " cells, found " + std::to_string(row.text.size()));
    }
    for (Input y = 0; y < table.size(); ++y) {
      const char c = row.text[y];
      if (c == '0') {
        table.set(x, y, Cell::zero);
      } else if (c == '1') {
        table.set(x, y, Cell::one);
      } else if (c != '*') {
        r.fail(row.column + y, std::string("expected 0, 1 or *, found `") + c + "`");
      }
    }
  }
  r.expect_end();
  return table;
}

// ---- GHS strategies --------------------------------------------------------

inline std::string format_ghs(const Strategy& s) {
  std::ostringstream out;
  out << "ghs 1 " << s.n() << ' ' << s.pipes() << '\n';
  io_detail::write_body(out, s);
  return out.str();
}

inline Strategy parse_ghs(std::string_view text) {
  io_detail::Reader r(text);
  const auto header = r.take_tokens("`ghs 1 <n> <s>`");
  io_detail::check_header(r, header, "ghs", 4, "ghs 1 <n> <s>");
  const int n = static_cast<int>(r.integer(header[2], 1, kMaxInputBits));
  const int pipes = static_cast<int>(r.integer(header[3], 0, io_detail::kMaxPipesInFile));
  Strategy s = io_detail::strategy_body(r, n, pipes);
  r.expect_end();
  return s;
}

// ---- GHR randomized strategies ---------------------------------------------

inline std::string format_ghr(const RandomizedStrategy& rs) {
  std::ostringstream out;
  out << "ghr 1 " << rs.n() << ' ' << rs.pipes() << ' ' << rs.seed_bits() << '\n';
  for (std::uint64_t r = 0; r < rs.seed_count(); ++r) io_detail::write_body(out, rs.fixed(r));
  return out.str();
}

inline RandomizedStrategy parse_ghr(std::string_view text) {
  io_detail::Reader r(text);
  const auto header = r.take_tokens("`ghr 1 <n> <s> <rho>`");
  io_detail::check_header(r, header, "ghr", 5, "ghr 1 <n> <s> <rho>");
  const int n = static_cast<int>(r.integer(header[2], 1, kMaxInputBits));
  const int pipes = static_cast<int>(r.integer(header[3], 0, io_detail::kMaxPipesInFile));
  const int rho = static_cast<int>(r.integer(header[4], 0, kDefaultMaxSeedBits));
  std::vector<Strategy> seeds;
  for (std::uint64_t seed = 0; seed < (std::uint64_t{1} << rho); ++seed) seeds.push_back(io_detail::strategy_body(r, n, pipes));
  r.expect_end();
  return RandomizedStrategy(rho, std::move(seeds));
}

// ---- GHTM machines ---------------------------------------------------------

inline std::string format_ghtm(const TuringMachine& m) {
  const auto move_char = [](Move d) { return d == Move::left ? 'L' : d == Move::right ? 'R' : 'S'; };
  std::ostringstream out;
  out << "ghtm 1 " << m.states() << ' ' << m.work_cells() << '\n';
  out << "start " << m.start() << "\naccept " << m.accept() << "\nreject " << m.reject() << '\n';
  for (int q = 0; q < m.states(); ++q) {
    for (int a = 0; a < 2; ++a) {
      for (Symbol b : {Symbol::zero, Symbol::one, Symbol::blank}) {
        const auto& rule = m.rule(q, a, b);
        if (!rule) continue;
        out << q << ' ' << a << ' ' << to_char(b) << " -> " << rule->next_state << ' ' << to_char(rule->write) << ' '
            << move_char(rule->input_move) << ' ' << move_char(rule->work_move) << '\n';
      }
    }
  }
  return out.str();
}

inline TuringMachine parse_ghtm(std::string_view text) {
  io_detail::Reader r(text);
  const auto header = r.take_tokens("`ghtm 1 <states> <w>`");
  io_detail::check_header(r, header, "ghtm", 4, "ghtm 1 <states> <w>");
  const int states = static_cast<int>(r.integer(header[2], 1, 1 << 20));
  const int cells = static_cast<int>(r.integer(header[3], 1, 20));
  const auto named_state = [&](std::string_view word) {
    const auto t = r.take_tokens("`" + std::string(word) + " <q>`");
    r.expect_count(t, 2, std::string(word) + " <q>");
    r.expect_word(t[0], word);
    return static_cast<int>(r.integer(t[1], 0, states - 1));
  };
  const int start = named_state("start");
  const int accept = named_state("accept");
  const int reject = named_state("reject");
  TuringMachine m(states, cells, start, accept, reject);

  const auto symbol = [&](const io_detail::Token& t) {
    if (t.text == "0") return Symbol::zero;
    if (t.text == "1") return Symbol::one;
    if (t.text == "_") return Symbol::blank;
    r.fail(t, "expected a work symbol 0, 1 or _");
  };
  const auto move = [&](const io_detail::Token& t) {
    if (t.text == "L") return Move::left;
    if (t.text == "R") return Move::right;
    if (t.text == "S") return Move::stay;
    r.fail(t, "expected a move L, R or S");
  };
  while (!r.done()) {
    const auto t = r.take_tokens("a transition");
    r.expect_count(t, 8, "q a b -> q' b' di dw");
    r.expect_word(t[3], "->");
    const int q = static_cast<int>(r.integer(t[0], 0, states - 1));
    const int a = static_cast<int>(r.integer(t[1], 0, 1));
    const Symbol b = symbol(t[2]);
    const Rule rule{static_cast<int>(r.integer(t[4], 0, states - 1)), symbol(t[5]), move(t[6]), move(t[7])};
    if (m.rule(q, a, b)) r.fail(t[0], "second transition for (" + std::to_string(q) + ", " + std::string(t[1].text) + ", " + std::string(t[2].text) + ")");
    m.add_rule(q, a, b, rule);
  }
  return m;
}

// ---- GHP protocol trees ----------------------------------------------------

/// Internal nodes as `<transcript> <bits>` (root transcript `-`), leaves as
/// `leaf <transcript> <bits>`; bits are indexed by the sender's input (by x
/// for leaves).
inline std::string format_ghp(const ProtocolTree& tree) {
  tree.check();
  std::string out = "ghp 1 " + std::to_string(tree.n()) + " " + std::to_string(tree.depth()) + "\n";
  const Input inputs = static_cast<Input>(input_count(tree.n()));
  for (int len = 0; len < tree.depth(); ++len) {
    for (std::uint32_t b = 0; b < (1U << len); ++b) {
      const Transcript v{len, b};
      out += v.str() + " ";
      for (Input i = 0; i < inputs; ++i) out.push_back(tree.message(v, i) ? '1' : '0');
      out.push_back('\n');
    }
  }
  for (std::uint32_t b = 0; b < (1U << tree.depth()); ++b) {
    const Transcript v{tree.depth(), b};
    out += "leaf " + v.str() + " ";
    for (Input x = 0; x < inputs; ++x) out.push_back(tree.leaf(v, x) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline ProtocolTree parse_ghp(std::string_view text) {
  io_detail::Reader r(text);
  const auto header = r.take_tokens("`ghp 1 <n> <D>`");
  io_detail::check_header(r, header, "ghp", 4, "ghp 1 <n> <D>");
  const int n = static_cast<int>(r.integer(header[2], 1, kMaxInputBits));
  const int depth = static_cast<int>(r.integer(header[3], 0, 16));
  ProtocolTree tree(n, depth);
  const std::size_t width = input_count(n);
  const auto transcript = [&](const io_detail::Token& t) {
    try {
      return Transcript::parse(t.text);
    } catch (const Error&) {
      r.fail(t, "expected a transcript over {0,1} or `-`");
    }
  };
  while (!r.done()) {
    const auto t = r.take_tokens("a node line");
    try {
      if (!t.empty() && t[0].text == "leaf") {
        r.expect_count(t, 3, "leaf <transcript> <bits>");
        tree.set_leaf(transcript(t[1]), io_detail::bit_row(r, t[2], width));
      } else {
        r.expect_count(t, 2, "<transcript> <bits>");
        tree.set_message(transcript(t[0]), io_detail::bit_row(r, t[1], width));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::inconsistent_tree) throw;
      r.fail(t.front().column, e.what());
    }
  }
  return tree;
}

// ---- DIMACS, varmap sidecar, solver models ---------------------------------

namespace io_detail {

inline int index_count(VarKind kind) {
  switch (kind) {
    case VarKind::alice:
    case VarKind::bob:
    case VarKind::live: return 3;
    case VarKind::at: return 4;
    case VarKind::hop: return 5;
  }
  return 0;
}

inline VarMeaning meaning(Reader& r, const std::vector<Token>& t, std::size_t first) {
  if (t.size() <= first) r.fail(t.empty() ? 1 : t.back().column, "missing variable kind");
  VarMeaning m{VarKind::alice, {}};
  const Token& kind = t[first];
  bool known = false;
  for (VarKind k : {VarKind::alice, VarKind::bob, VarKind::at, VarKind::hop, VarKind::live}) {
    if (kind.text == to_string(k)) {
      m.kind = k;
      known = true;
    }
  }
  if (!known) r.fail(kind, "unknown variable kind `" + std::string(kind.text) + "`");
  const auto want = static_cast<std::size_t>(index_count(m.kind));
  if (t.size() != first + 1 + want) r.fail(kind, "`" + std::string(kind.text) + "` takes " + std::to_string(want) + " indices");
  for (std::size_t i = first + 1; i < t.size(); ++i) m.indices.push_back(static_cast<int>(r.integer(t[i], 0, 1 << 26)));
  return m;
}

inline std::string varmap_header(const VarMap& vm) {
  return "c ghcnf 1 " + std::to_string(vm.n) + " " + std::to_string(vm.pipes) + "\n";
}

inline void varmap_dimensions(Reader& r, const std::vector<Token>& t, VarMap& vm) {
  r.expect_count(t, 5, "c ghcnf 1 <n> <s>");
  r.integer(t[2], 1, 1);
  vm.n = static_cast<int>(r.integer(t[3], 1, kMaxInputBits));
  vm.pipes = static_cast<int>(r.integer(t[4], 0, kMaxPipesInFile));
}

}  // namespace io_detail

inline std::string format_dimacs(const CNFInstance& cnf) {
  std::string out = io_detail::varmap_header(cnf.varmap);
  for (std::size_t id = 1; id <= cnf.varmap.meanings.size(); ++id) {
    out += "c var " + std::to_string(id) + " " + cnf.varmap.meanings[id - 1].str() + "\n";
  }
  out += "p cnf " + std::to_string(cnf.variables) + " " + std::to_string(cnf.clauses.size()) + "\n";
  for (const auto& clause : cnf.clauses) {
    for (Literal l : clause) out += std::to_string(l) + " ";
    out += "0\n";
  }
  return out;
}

/// Reads a DIMACS file; `c ghcnf` and `c var` comments restore the varmap.
inline CNFInstance parse_dimacs(std::string_view text) {
  io_detail::Reader r(text);
  CNFInstance cnf;
  bool have_problem = false;
  std::size_t declared = 0;
  Clause current;
  while (!r.done()) {
    const auto t = r.take_tokens("a DIMACS line");
    if (t.empty()) continue;
    if (t[0].text == "c") {
      if (t.size() >= 2 && t[1].text == "ghcnf") io_detail::varmap_dimensions(r, t, cnf.varmap);
      if (t.size() >= 2 && t[1].text == "var") {
        if (t.size() < 3) r.fail(t[1], "expected `c var <id> <meaning>`");
        const auto id = static_cast<std::size_t>(r.integer(t[2], 1, 1LL << 30));
        if (id != cnf.varmap.meanings.size() + 1) r.fail(t[2], "variable ids must be listed in order");
        cnf.varmap.meanings.push_back(io_detail::meaning(r, t, 3));
      }
      continue;
    }
    if (t[0].text == "p") {
      if (have_problem) r.fail(t[0], "second problem line");
      r.expect_count(t, 4, "p cnf <vars> <clauses>");
      r.expect_word(t[1], "cnf");
      cnf.variables = static_cast<int>(r.integer(t[2], 0, 1LL << 30));
      declared = static_cast<std::size_t>(r.integer(t[3], 0, 1LL << 40));
      have_problem = true;
      continue;
    }
    if (!have_problem) r.fail(t[0], "clause before the `p cnf` line");
    for (const auto& tok : t) {
      const auto lit = static_cast<Literal>(r.integer(tok, -cnf.variables, cnf.variables));
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (!have_problem) throw ParseError(1, 1, "missing `p cnf` line");
  if (!current.empty()) throw ParseError(r.line_number(), 1, "last clause is not terminated by 0");
  if (cnf.clauses.size() != declared) {
    throw ParseError(r.line_number(), 1, "declared " + std::to_string(declared) + " clauses, found " + std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

/// Sidecar: `c ghcnf 1 <n> <s>`, then `<id> <kind> <indices>` per variable.
inline std::string format_varmap(const VarMap& vm) {
  std::string out = io_detail::varmap_header(vm);
  for (std::size_t id = 1; id <= vm.meanings.size(); ++id) out += std::to_string(id) + " " + vm.meanings[id - 1].str() + "\n";
  return out;
}

inline VarMap parse_varmap(std::string_view text) {
  io_detail::Reader r(text);
  VarMap vm;
  const auto header = r.take_tokens("`c ghcnf 1 <n> <s>`");
  if (header.size() < 2 || header[0].text != "c" || header[1].text != "ghcnf") r.fail(1, "expected `c ghcnf 1 <n> <s>`");
  io_detail::varmap_dimensions(r, header, vm);
  while (!r.done()) {
    const auto t = r.take_tokens("a varmap line");
    if (t.empty()) r.fail(1, "empty varmap line");
    const auto id = static_cast<std::size_t>(r.integer(t[0], 1, 1LL << 30));
    if (id != vm.meanings.size() + 1) r.fail(t[0], "variable ids must be listed in order");
    vm.meanings.push_back(io_detail::meaning(r, t, 1));
  }
  return vm;
}

/// Literal list as printed by common solvers: `v` prefixes, `s` status lines,
/// `c` comments, a bare SAT line and 0 terminators are all tolerated. An
/// UNSAT status is an error.
inline std::vector<Literal> parse_model(std::string_view text) {
  io_detail::Reader r(text);
  std::vector<Literal> out;
  while (!r.done()) {
    auto t = r.take_tokens("a model line");
    if (t.empty() || t[0].text == "c") continue;
    if (t[0].text == "s") {
      if (t.size() >= 2 && t[1].text == "UNSATISFIABLE") r.fail(t[1], "solver reported UNSATISFIABLE");
      continue;
    }
    if (t[0].text == "SAT") continue;
    if (t[0].text == "UNSAT") r.fail(t[0], "solver reported UNSAT");
    std::size_t i = t[0].text == "v" ? 1 : 0;
    for (; i < t.size(); ++i) {
      const auto lit = static_cast<Literal>(r.integer(t[i], -(1LL << 30), 1LL << 30));
      if (lit != 0) out.push_back(lit);
    }
  }
  return out;
}

}  // namespace gardenhose
