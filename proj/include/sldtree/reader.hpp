#pragma once

// Reader for the Prolog subset: clauses terminated by '.', '%' line comments,
// the control constructs ',' ';' '\+' 'not/1' '!' true fail false, and the
// integer comparisons < > =< >=.

#include <stdexcept>
#include <string>
#include <string_view>

#include "sldtree/program.hpp"

namespace sldtree {

struct SourcePosition {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
};

class SyntaxError : public std::runtime_error {
public:
  SyntaxError(const std::string& message, SourcePosition pos);

  const SourcePosition& position() const { return pos_; }
  const std::string& detail() const { return detail_; }

private:
  std::string detail_;
  SourcePosition pos_;
};

Program parse_program(std::string_view text);

/// Parses a goal expression, optionally terminated by '.'.
GoalSeq parse_query(std::string_view text);

/// Parses a single term, optionally terminated by '.'.
Term parse_term(std::string_view text);

/// Parses a single clause, e.g. "a(X) :- b(X).".
Clause parse_clause(std::string_view text);

}  // namespace sldtree
