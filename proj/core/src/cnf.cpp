// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#include "edasat/cnf.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "edasat/rng.hpp"

namespace edasat {

void validate(const CnfFormula& formula) {
  if (formula.num_vars < 0) throw std::invalid_argument("num_vars must be nonnegative");
  for (const Clause& clause : formula.clauses) {
    for (const Literal lit : clause) {
      if (lit == 0) throw std::invalid_argument("literal must be nonzero");
      const long long var = std::llabs(static_cast<long long>(lit));
      if (var > formula.num_vars)
        throw std::invalid_argument("literal " + std::to_string(lit) +
                                    " out of range for num_vars=" + std::to_string(formula.num_vars));
    }
  }
}

namespace {

// Character scanner with line/column tracking. Comment lines (leading 'c')
// are skipped wherever whitespace is skipped, matching the de-facto corpus.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  int line() const { return line_; }
  int column() const { return column_; }

  bool at_end() {
    skip_space_and_comments();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }

  /// Error anchored at the most recent token read by next_int.
  [[noreturn]] void fail_at_token(const std::string& msg) const {
    throw ParseError(msg, token_line_, token_column_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect_word(std::string_view word, const std::string& what) {
    skip_space_and_comments();
    for (const char c : word) {
      if (pos_ >= text_.size() || text_[pos_] != c) fail("expected " + what);
      advance();
    }
  }

  long long next_int(const std::string& what) {
    skip_space_and_comments();
    if (pos_ >= text_.size()) fail("unexpected end of input, expected " + what);
    token_line_ = line_;
    token_column_ = column_;
    const int tok_line = line_;
    const int tok_col = column_;
    bool negative = false;
    if (text_[pos_] == '-') {
      negative = true;
      advance();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected " + what + ", found non-integer token", tok_line, tok_col);
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<std::int32_t>::max())
        throw ParseError(what + " overflows", tok_line, tok_col);
      advance();
    }
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected " + what + ", found non-integer token", tok_line, tok_col);
    return negative ? -value : value;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
      at_line_start_ = true;
    } else {
      ++column_;
      if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) at_line_start_ = false;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == 'c' && at_line_start_) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  int token_line_ = 1;
  int token_column_ = 1;
  bool at_line_start_ = true;
};

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  Scanner scan(text);

  if (scan.at_end()) scan.fail("missing 'p cnf' header");
  if (scan.peek() != 'p') scan.fail("missing 'p cnf' header");
  scan.expect_word("p", "'p cnf' header");
  scan.expect_word("cnf", "'p cnf' header");
  const long long num_vars = scan.next_int("variable count");
  const long long num_clauses = scan.next_int("clause count");
  if (num_vars < 0) scan.fail("variable count must be nonnegative");
  if (num_clauses < 0) scan.fail("clause count must be nonnegative");

  CnfFormula formula;
  formula.num_vars = static_cast<int>(num_vars);
  formula.clauses.reserve(static_cast<std::size_t>(num_clauses));

  Clause clause;
  bool in_clause = false;
  while (!scan.at_end()) {
    if (formula.num_clauses() == num_clauses && !in_clause)
      scan.fail("more clauses than the header declared (" + std::to_string(num_clauses) + ")");
    const long long lit = scan.next_int("literal");
    if (lit == 0) {
      formula.clauses.push_back(clause);
      clause.clear();
      in_clause = false;
      continue;
    }
    if (std::llabs(lit) > num_vars)
      scan.fail_at_token("literal " + std::to_string(lit) + " out of range, num_vars=" +
                         std::to_string(num_vars));
    clause.push_back(static_cast<Literal>(lit));
    in_clause = true;
  }
  if (in_clause) scan.fail("clause not terminated by 0 before end of input");
  if (formula.num_clauses() != num_clauses)
    scan.fail("header declared " + std::to_string(num_clauses) + " clauses, found " +
              std::to_string(formula.num_clauses()));
  return formula;
}

CnfFormula parse_dimacs(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return parse_dimacs(std::string_view(text));
}

std::string serialize_dimacs(const CnfFormula& formula) {
  std::string out = "p cnf " + std::to_string(formula.num_vars) + " " +
                    std::to_string(formula.num_clauses()) + "\n";
  for (const Clause& clause : formula.clauses) {
    for (const Literal lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

CnfFormula generate_random_ksat(int num_vars, int num_clauses, int clause_width,
                                std::uint64_t seed) {
  if (num_vars < 1) throw std::invalid_argument("num_vars must be positive");
  if (num_clauses < 0) throw std::invalid_argument("num_clauses must be nonnegative");
  if (clause_width < 1 || clause_width > num_vars)
    throw std::invalid_argument("clause width k must satisfy 1 <= k <= n (k=" +
                                std::to_string(clause_width) + ", n=" + std::to_string(num_vars) +
                                ")");

  Rng rng(seed);
  CnfFormula formula;
  formula.num_vars = num_vars;
  formula.clauses.reserve(static_cast<std::size_t>(num_clauses));

  std::vector<int> pool(static_cast<std::size_t>(num_vars));
  for (int v = 0; v < num_vars; ++v) pool[static_cast<std::size_t>(v)] = v + 1;

  for (int c = 0; c < num_clauses; ++c) {
    // Partial Fisher-Yates draws k distinct variables without replacement.
    Clause clause;
    clause.reserve(static_cast<std::size_t>(clause_width));
    for (int j = 0; j < clause_width; ++j) {
      const std::size_t pick =
          static_cast<std::size_t>(j) +
          static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(num_vars - j)));
      std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
      const int var = pool[static_cast<std::size_t>(j)];
      clause.push_back(rng.next_bool() ? static_cast<Literal>(var) : static_cast<Literal>(-var));
    }
    formula.clauses.push_back(std::move(clause));
  }
  return formula;
}

}  // namespace edasat
