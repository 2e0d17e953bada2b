// Copyright (c) 2026 The edasat authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDASAT_CNF_HPP
#define EDASAT_CNF_HPP

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edasat {

/// A literal is a nonzero signed integer: |value| is the 1-based variable
/// index, the sign is the polarity.
using Literal = std::int32_t;
using Clause = std::vector<Literal>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  bool operator==(const CnfFormula&) const = default;
};

/// Thrown on malformed DIMACS input; carries the 1-based line/column of the
/// offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Throws std::invalid_argument if any literal is zero or out of range for
/// num_vars, or if num_vars is negative.
void validate(const CnfFormula& formula);

/// Parses DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` header,
/// then whitespace-separated literals with each clause terminated by `0`.
/// Empty clauses are legal (they make the formula trivially unsatisfiable);
/// duplicate literals and tautological clauses pass through verbatim.
/// A clause count differing from the header is a hard error.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

/// Emits the header then one clause per line, each terminated by `0`.
/// parse_dimacs(serialize_dimacs(f)) == f.
std::string serialize_dimacs(const CnfFormula& formula);

/// Random k-SAT: m clauses, each over k distinct variables drawn uniformly
/// without replacement, each sign a fair coin. Identical seed, identical
/// formula. Throws std::invalid_argument unless 1 <= k <= n, m >= 0.
CnfFormula generate_random_ksat(int num_vars, int num_clauses, int clause_width,
                                std::uint64_t seed);

}  // namespace edasat

#endif  // EDASAT_CNF_HPP
