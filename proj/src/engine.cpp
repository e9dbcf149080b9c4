#include "sldtree/engine.hpp"

#include <algorithm>

namespace sldtree {

std::string_view to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::Open: return "open";
    case NodeStatus::Success: return "success";
    case NodeStatus::Fail: return "fail";
    case NodeStatus::Pruned: return "pruned";
    case NodeStatus::Truncated: return "truncated";
  }
  return "?";
}

std::optional<NodeStatus> parse_status(std::string_view s) {
  for (auto st : {NodeStatus::Open, NodeStatus::Success, NodeStatus::Fail, NodeStatus::Pruned,
                  NodeStatus::Truncated}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

std::vector<std::string> EdgeLabel::lines() const {
  std::vector<std::string> out;
  out.reserve(bindings.size());
  for (const auto& b : bindings) out.push_back(b.name + "=" + to_string(b.term));
  return out;
}

std::vector<NodeId> SearchTree::preorder() const {
  std::vector<NodeId> out;
  if (nodes.empty()) return out;
  std::vector<NodeId> stack{kRoot};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    out.push_back(id);
    const auto& ch = nodes[id].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<NodeId> SearchTree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId id : preorder()) {
    if (nodes[id].children.empty()) out.push_back(id);
  }
  return out;
}

std::size_t SearchTree::count(NodeStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      nodes.begin(), nodes.end(), [&](const SearchNode& n) { return n.status == s; }));
}

namespace {

NodeStatus status_for(const GoalSeq& goals) {
  return goals.empty() ? NodeStatus::Success : NodeStatus::Open;
}

GoalSeq concat(GoalSeq head, std::span<const Goal> tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

EdgeLabel label_for(const Term& selected, const Substitution& mgu) {
  EdgeLabel label;
  for (const auto& v : variables_of(selected)) {
    if (v.is_anonymous()) continue;
    if (const Term* image = mgu.lookup(v)) label.bindings.push_back({v.name, *image});
  }
  return label;
}

ChildSpec continue_with(std::span<const Goal> rest) {
  GoalSeq goals(rest.begin(), rest.end());
  NodeStatus st = status_for(goals);
  return ChildSpec{{}, {}, std::move(goals), st};
}

ChildSpec fail_leaf() { return ChildSpec{{}, {}, {}, NodeStatus::Fail}; }

void expand_call(const Term& t, std::span<const Goal> rest, NodeId self, const Program& program,
                 const EngineOptions& opts, std::span<const Variable> avoid, Expansion& out) {
  const auto* clauses = program.clauses({std::string(t.name()), t.arity()});
  if (!clauses) {
    if (opts.unknown == UnknownPolicy::Error) {
      throw ExistenceError("unknown procedure " + std::string(t.name()) + "/" +
                               std::to_string(t.arity()),
                           to_string(t));
    }
    out.children.push_back(fail_leaf());
    return;
  }
  auto [renamed, counter] = rename_clauses(*clauses, std::move(out.counter), avoid);
  out.counter = std::move(counter);
  out.opened_barrier = self;
  for (const auto& clause : renamed) {
    auto mgu = unify(t, clause.head);
    if (!mgu) {
      out.children.push_back(fail_leaf());
      continue;
    }
    GoalSeq goals = sldtree::apply(*mgu, concat(scope_cuts(clause.body, self), rest));
    NodeStatus st = status_for(goals);
    out.children.push_back(ChildSpec{label_for(t, *mgu), *mgu, std::move(goals), st});
  }
}

void expand_compare(const CompareGoal& cmp, std::span<const Goal> rest, const Goal& selected,
                    Expansion& out) {
  for (const Term* side : {&cmp.lhs, &cmp.rhs}) {
    if (side->is_var()) {
      throw InstantiationError("arguments are not sufficiently instantiated",
                               to_string(selected));
    }
    if (!side->is_integer()) {
      throw TypeError("integer expected, found " + to_string(*side), to_string(selected));
    }
  }
  if (evaluate(cmp.op, cmp.lhs.as_integer().value, cmp.rhs.as_integer().value)) {
    out.children.push_back(continue_with(rest));
  } else {
    out.children.push_back(fail_leaf());
  }
}

}  // namespace

Expansion expand(const GoalSeq& goals, NodeId self, const Program& program, RenameCounter counter,
                 const EngineOptions& opts, std::span<const Variable> avoid) {
  if (goals.empty()) throw std::invalid_argument("cannot expand an empty goal list");
  Expansion out;
  out.counter = std::move(counter);
  const Goal& selected = goals.front();
  std::span<const Goal> rest(goals.begin() + 1, goals.end());

  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, CallGoal>) {
          expand_call(g.term, rest, self, program, opts, avoid, out);
        } else if constexpr (std::is_same_v<T, TrueGoal>) {
          out.children.push_back(continue_with(rest));
        } else if constexpr (std::is_same_v<T, FailGoal>) {
          out.children.push_back(fail_leaf());
        } else if constexpr (std::is_same_v<T, CutGoal>) {
          out.children.push_back(continue_with(rest));
          out.cut = g.barrier.value_or(SearchTree::kRoot);
        } else if constexpr (std::is_same_v<T, Disjunction>) {
          for (const GoalSeq* branch : {&g.left, &g.right}) {
            GoalSeq next = concat(*branch, rest);
            NodeStatus st = status_for(next);
            out.children.push_back(ChildSpec{{}, {}, std::move(next), st});
          }
        } else if constexpr (std::is_same_v<T, Negation>) {
          // [G, !, fail] first; the continuation second, reached only if the
          // first branch never gets to its cut.
          GoalSeq probe = scope_cuts(g.inner, self);
          probe.push_back(Goal{CutGoal{self}});
          probe.push_back(Goal::fail());
          out.children.push_back(ChildSpec{{}, {}, std::move(probe), NodeStatus::Open});
          out.children.push_back(continue_with(rest));
          out.opened_barrier = self;
        } else {
          expand_compare(g, rest, selected, out);
        }
      },
      selected.kind);
  return out;
}

void apply_cut(SearchTree& tree, NodeId cut_node, BarrierId barrier) {
  NodeId cur = cut_node;
  while (cur != barrier) {
    auto parent = tree.nodes.at(cur).parent;
    if (!parent) break;
    auto& siblings = tree.nodes[*parent].children;
    auto pos = std::find(siblings.begin(), siblings.end(), cur);
    for (auto it = pos + 1; it < siblings.end(); ++it) tree.nodes[*it].status = NodeStatus::Pruned;
    cur = *parent;
  }
}

std::vector<Variable> answer_variables(const GoalSeq& query) {
  std::vector<Variable> out;
  for (const auto& v : variables_of(query)) {
    if (!v.is_anonymous()) out.push_back(v);
  }
  return out;
}

SearchTree build_tree(const Program& program, const GoalSeq& query, const Limits& limits,
                      const EngineOptions& opts) {
  if (query.empty()) throw std::invalid_argument("query must not be empty");
  if (limits.max_depth < 1 || limits.max_nodes < 1) {
    throw std::invalid_argument("limits must be at least 1");
  }
  SearchTree tree;
  tree.query = query;
  tree.query_vars = answer_variables(query);

  SearchNode root;
  root.goals = scope_cuts(query, SearchTree::kRoot);
  root.status = status_for(root.goals);
  tree.nodes.push_back(std::move(root));

  RenameCounter counter;
  counter.style = opts.rename;
  for (const auto& v : variables_of(query)) counter.issued.insert(v.name);

  std::vector<NodeId> stack{SearchTree::kRoot};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (tree.nodes[id].status != NodeStatus::Open) continue;
    if (tree.nodes[id].depth >= limits.max_depth) {
      tree.nodes[id].status = NodeStatus::Truncated;
      tree.truncated = true;
      continue;
    }
    std::vector<Variable> avoid = variables_of(tree.nodes[id].goals);
    avoid.insert(avoid.end(), tree.query_vars.begin(), tree.query_vars.end());
    Expansion step = expand(tree.nodes[id].goals, id, program, counter, opts, avoid);
    if (tree.nodes.size() + step.children.size() > limits.max_nodes) {
      tree.nodes[id].status = NodeStatus::Truncated;
      tree.truncated = true;
      continue;
    }
    counter = std::move(step.counter);
    tree.nodes[id].barrier = step.opened_barrier;

    std::vector<NodeId> kids;
    kids.reserve(step.children.size());
    const std::size_t depth = tree.nodes[id].depth + 1;
    for (auto& c : step.children) {
      SearchNode n;
      n.goals = std::move(c.goals);
      n.status = c.status;
      n.parent = id;
      n.depth = depth;
      n.label = std::move(c.label);
      n.mgu = std::move(c.mgu);
      kids.push_back(tree.nodes.size());
      tree.nodes.push_back(std::move(n));
    }
    tree.nodes[id].children = kids;
    if (step.cut) apply_cut(tree, id, *step.cut);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return tree;
}

const Term* Answer::binding(std::string_view name) const {
  for (const auto& [v, t] : bindings) {
    if (v.name == name) return &t;
  }
  return nullptr;
}

std::vector<Answer> solutions(const SearchTree& tree, std::span<const Variable> query_vars) {
  std::vector<Answer> out;
  for (NodeId leaf : tree.leaves()) {
    if (tree.nodes[leaf].status != NodeStatus::Success) continue;
    std::vector<NodeId> chain;
    for (std::optional<NodeId> cur = leaf; cur; cur = tree.nodes[*cur].parent) {
      chain.push_back(*cur);
    }
    std::reverse(chain.begin(), chain.end());

    Answer a;
    a.leaf = leaf;
    Substitution acc;
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const auto& sibs = tree.nodes[chain[i - 1]].children;
      a.path.push_back(static_cast<std::size_t>(
          std::find(sibs.begin(), sibs.end(), chain[i]) - sibs.begin()));
      acc = compose(acc, tree.nodes[chain[i]].mgu);
    }
    for (const auto& v : query_vars) a.bindings.emplace_back(v, apply(acc, Term::var(v)));
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Answer> solutions(const SearchTree& tree) { return solutions(tree, tree.query_vars); }

}  // namespace sldtree
