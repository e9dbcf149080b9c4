#pragma once

// Goals, clauses and programs.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sldtree/term.hpp"

namespace sldtree {

struct Goal;
using GoalSeq = std::vector<Goal>;

/// Cut scopes are identified by the id of the tree node that owns them.
using BarrierId = std::size_t;

enum class CompareOp { Less, Greater, LessEq, GreaterEq };

std::string_view to_string(CompareOp op);
bool evaluate(CompareOp op, std::int64_t lhs, std::int64_t rhs);

struct CallGoal {
  Term term;  // callable
};

struct Disjunction {
  GoalSeq left;
  GoalSeq right;
};

struct Negation {
  GoalSeq inner;  // non-empty
};

struct CutGoal {
  // Unset until the goal is spliced into a tree; a cut in a query is scoped
  // to the root.
  std::optional<BarrierId> barrier;
};

struct TrueGoal {};

struct FailGoal {
  bool spelled_false = false;
};

struct CompareGoal {
  CompareOp op = CompareOp::Less;
  Term lhs;
  Term rhs;
};

struct Goal {
  using Kind =
      std::variant<CallGoal, Disjunction, Negation, CutGoal, TrueGoal, FailGoal, CompareGoal>;
  Kind kind;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(kind);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(kind);
  }

  static Goal call(Term t) { return Goal{CallGoal{std::move(t)}}; }
  static Goal cut() { return Goal{CutGoal{}}; }
  static Goal truth() { return Goal{TrueGoal{}}; }
  static Goal fail() { return Goal{FailGoal{}}; }

  friend bool operator==(const Goal& a, const Goal& b);
};

/// Rebuilds a goal sequence with every term mapped through fn.
GoalSeq map_terms(const GoalSeq& goals, const std::function<Term(const Term&)>& fn);

GoalSeq apply(const Substitution& s, const GoalSeq& goals);

/// Variables in goal order, first occurrence, no duplicates.
std::vector<Variable> variables_of(const GoalSeq& goals);
void collect_variables(const GoalSeq& goals, std::vector<Variable>& out);

/// Returns a copy where every unscoped cut is scoped to barrier.
GoalSeq scope_cuts(const GoalSeq& goals, BarrierId barrier);

/// Removes every cut goal (recursively through disjunctions and negations).
GoalSeq without_cuts(const GoalSeq& goals);

std::string to_string(const Goal& g);
/// Comma-joined goals, no brackets.
std::string to_string(const GoalSeq& goals);
/// One entry per goal, as rendered inside a box.
std::vector<std::string> goal_texts(const GoalSeq& goals);

struct Clause {
  Term head;     // callable
  GoalSeq body;  // empty for a fact

  bool is_fact() const { return body.empty(); }
};

std::vector<Variable> variables_of(const Clause& c);
std::string to_string(const Clause& c);

struct PredicateKey {
  std::string name;
  std::size_t arity = 0;

  friend auto operator<=>(const PredicateKey&, const PredicateKey&) = default;
};

std::string to_string(const PredicateKey& k);

class Program {
public:
  void add(Clause c);

  /// Clauses of a predicate in source order, or nullptr if undefined.
  const std::vector<Clause>* clauses(const PredicateKey& key) const;

  /// Predicates in order of first definition.
  const std::vector<PredicateKey>& predicates() const { return order_; }

  std::size_t clause_count() const;

  /// Same program with every cut goal deleted.
  Program without_cuts() const;

private:
  std::map<PredicateKey, std::vector<Clause>> table_;
  std::vector<PredicateKey> order_;
};

}  // namespace sldtree
