#pragma once

// Exhaustive SLD search tree construction.
//
// The builder expands nodes depth-first, leftmost goal first, clauses in
// source order. Every branch is kept: failed unifications become Fail
// leaves, branches discarded by a cut stay in the tree as Pruned leaves, and
// nodes past the depth or node budget become Truncated leaves.
//
// Cut scoping: expanding a Call (or a negation) at node N opens a barrier
// whose id is N. Cuts spliced in from the clause body carry that id. When a
// cut runs, every not-yet-visited sibling on the path from the cut back up to
// N, including N's own remaining children, is marked Pruned.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sldtree/program.hpp"
#include "sldtree/term.hpp"
#include "sldtree/unify.hpp"

namespace sldtree {

using NodeId = std::size_t;

enum class NodeStatus { Open, Success, Fail, Pruned, Truncated };

std::string_view to_string(NodeStatus s);
std::optional<NodeStatus> parse_status(std::string_view s);

/// Bindings shown on an edge: the selected goal's variables, in first
/// occurrence order, with their images under the step's mgu.
struct EdgeLabel {
  struct Entry {
    std::string name;
    Term term;
  };
  std::vector<Entry> bindings;

  bool empty() const { return bindings.empty(); }
  /// "X=a" strings, one per binding.
  std::vector<std::string> lines() const;
};

struct SearchNode {
  GoalSeq goals;
  NodeStatus status = NodeStatus::Open;
  std::optional<NodeId> parent;
  std::size_t depth = 0;
  EdgeLabel label;   // on the edge from the parent
  Substitution mgu;  // unifier applied on the edge from the parent
  std::vector<NodeId> children;
  std::optional<BarrierId> barrier;  // cut scope opened by expanding this node
};

struct Limits {
  std::size_t max_depth = 500;
  std::size_t max_nodes = 10000;
};

enum class UnknownPolicy { Fail, Error };

struct EngineOptions {
  UnknownPolicy unknown = UnknownPolicy::Fail;
  RenameStyle rename = RenameStyle::Prime;
};

class EngineError : public std::runtime_error {
public:
  EngineError(const std::string& message, std::string goal)
      : std::runtime_error(message + " in goal " + goal), goal_(std::move(goal)) {}
  const std::string& goal() const { return goal_; }

private:
  std::string goal_;
};

class InstantiationError : public EngineError {
public:
  using EngineError::EngineError;
};

class TypeError : public EngineError {
public:
  using EngineError::EngineError;
};

class ExistenceError : public EngineError {
public:
  using EngineError::EngineError;
};

/// Nodes are stored flat; a child always has a larger id than its parent.
struct SearchTree {
  std::vector<SearchNode> nodes;
  GoalSeq query;
  std::vector<Variable> query_vars;  // non-anonymous, first occurrence order
  bool truncated = false;

  static constexpr NodeId kRoot = 0;

  const SearchNode& root() const { return nodes.at(kRoot); }
  const SearchNode& node(NodeId id) const { return nodes.at(id); }
  std::size_t size() const { return nodes.size(); }

  /// Node ids in depth-first, left-to-right order.
  std::vector<NodeId> preorder() const;
  /// Leaf ids in depth-first, left-to-right order.
  std::vector<NodeId> leaves() const;
  std::size_t count(NodeStatus s) const;
};

struct ChildSpec {
  EdgeLabel label;
  Substitution mgu;
  GoalSeq goals;
  NodeStatus status = NodeStatus::Open;
};

struct Expansion {
  std::vector<ChildSpec> children;
  RenameCounter counter;
  std::optional<BarrierId> cut;             // set when the selected goal was a cut
  std::optional<BarrierId> opened_barrier;  // set for Call and negation steps
};

/// One resolution step on the leftmost goal of `goals`. `self` is the id the
/// node has (or will have) in its tree; it becomes the barrier for cuts that
/// this step splices in.
Expansion expand(const GoalSeq& goals, NodeId self, const Program& program, RenameCounter counter,
                 const EngineOptions& opts, std::span<const Variable> avoid);

/// Marks Pruned every unvisited branch between `cut_node` and the node that
/// owns `barrier`.
void apply_cut(SearchTree& tree, NodeId cut_node, BarrierId barrier);

SearchTree build_tree(const Program& program, const GoalSeq& query, const Limits& limits = {},
                      const EngineOptions& opts = {});

struct Answer {
  std::vector<std::pair<Variable, Term>> bindings;  // query variable order
  std::vector<std::size_t> path;                    // child indices from the root
  NodeId leaf = 0;

  /// Image of the named variable, if it is part of the answer.
  const Term* binding(std::string_view name) const;
};

/// Success leaves in depth-first order, with the query variables resolved
/// through the composition of the edge unifiers along each path.
std::vector<Answer> solutions(const SearchTree& tree, std::span<const Variable> query_vars);
std::vector<Answer> solutions(const SearchTree& tree);

/// Query variables worth reporting: non-anonymous, first occurrence order.
std::vector<Variable> answer_variables(const GoalSeq& query);

}  // namespace sldtree
