#pragma once

// Most general unification without occurs-check, and fresh clause renaming.

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sldtree/program.hpp"
#include "sldtree/term.hpp"

namespace sldtree {

/// Returns an idempotent mgu, or nullopt when the terms do not unify.
/// When two unbound variables meet, the one from `left` is bound to the one
/// from `right`. Throws CyclicTermError when the only solution is an infinite
/// term (e.g. X against f(X)).
std::optional<Substitution> unify(const Term& left, const Term& right);

enum class RenameStyle { Prime, Numeric };

/// Threads fresh-name state through one tree build.
///
/// A rename picks the smallest suffix index >= next_index whose names clash
/// with nothing in `issued` or the caller's avoid set. Index 0 keeps the
/// source name, so a clause keeps its own variable names the first time they
/// are free. Prime style writes index k as k apostrophes (X', X''); numeric
/// style appends k (X1, X2).
struct RenameCounter {
  std::size_t next_index = 0;
  RenameStyle style = RenameStyle::Prime;
  std::set<std::string> issued;
};

std::string suffixed_name(std::string_view base, std::size_t index, RenameStyle style);

/// Renames one clause apart from `avoid` and from every name issued so far.
std::pair<Clause, RenameCounter> rename_clause(const Clause& c, RenameCounter ctr,
                                               std::span<const Variable> avoid);

/// Renames a predicate's clauses for one resolution step. All clauses share
/// one suffix index since they live on sibling branches; every variable still
/// gets its own fresh id.
std::pair<std::vector<Clause>, RenameCounter> rename_clauses(std::span<const Clause> clauses,
                                                             RenameCounter ctr,
                                                             std::span<const Variable> avoid);

}  // namespace sldtree
