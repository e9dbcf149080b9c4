#include "sldtree/program.hpp"

#include <algorithm>

namespace sldtree {

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Less: return "<";
    case CompareOp::Greater: return ">";
    case CompareOp::LessEq: return "=<";
    case CompareOp::GreaterEq: return ">=";
  }
  return "?";
}

bool evaluate(CompareOp op, std::int64_t lhs, std::int64_t rhs) {
  switch (op) {
    case CompareOp::Less: return lhs < rhs;
    case CompareOp::Greater: return lhs > rhs;
    case CompareOp::LessEq: return lhs <= rhs;
    case CompareOp::GreaterEq: return lhs >= rhs;
  }
  return false;
}

bool operator==(const Goal& a, const Goal& b) {
  if (a.kind.index() != b.kind.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.kind);
        if constexpr (std::is_same_v<T, CallGoal>) {
          return x.term == y.term;
        } else if constexpr (std::is_same_v<T, Disjunction>) {
          return x.left == y.left && x.right == y.right;
        } else if constexpr (std::is_same_v<T, Negation>) {
          return x.inner == y.inner;
        } else if constexpr (std::is_same_v<T, CutGoal>) {
          return x.barrier == y.barrier;
        } else if constexpr (std::is_same_v<T, TrueGoal>) {
          return true;
        } else if constexpr (std::is_same_v<T, FailGoal>) {
          return x.spelled_false == y.spelled_false;
        } else {
          return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
        }
      },
      a.kind);
}

namespace {

template <typename Fn>
GoalSeq rebuild(const GoalSeq& goals, Fn&& on_goal) {
  GoalSeq out;
  out.reserve(goals.size());
  for (const auto& g : goals) on_goal(g, out);
  return out;
}

}  // namespace

GoalSeq map_terms(const GoalSeq& goals, const std::function<Term(const Term&)>& fn) {
  return rebuild(goals, [&](const Goal& g, GoalSeq& out) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, CallGoal>) {
            out.push_back(Goal{CallGoal{fn(x.term)}});
          } else if constexpr (std::is_same_v<T, Disjunction>) {
            out.push_back(Goal{Disjunction{map_terms(x.left, fn), map_terms(x.right, fn)}});
          } else if constexpr (std::is_same_v<T, Negation>) {
            out.push_back(Goal{Negation{map_terms(x.inner, fn)}});
          } else if constexpr (std::is_same_v<T, CompareGoal>) {
            out.push_back(Goal{CompareGoal{x.op, fn(x.lhs), fn(x.rhs)}});
          } else {
            out.push_back(g);
          }
        },
        g.kind);
  });
}

GoalSeq apply(const Substitution& s, const GoalSeq& goals) {
  if (s.empty()) return goals;
  return map_terms(goals, [&](const Term& t) { return apply(s, t); });
}

void collect_variables(const GoalSeq& goals, std::vector<Variable>& out) {
  for (const auto& g : goals) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, CallGoal>) {
            collect_variables(x.term, out);
          } else if constexpr (std::is_same_v<T, Disjunction>) {
            collect_variables(x.left, out);
            collect_variables(x.right, out);
          } else if constexpr (std::is_same_v<T, Negation>) {
            collect_variables(x.inner, out);
          } else if constexpr (std::is_same_v<T, CompareGoal>) {
            collect_variables(x.lhs, out);
            collect_variables(x.rhs, out);
          }
        },
        g.kind);
  }
}

std::vector<Variable> variables_of(const GoalSeq& goals) {
  std::vector<Variable> out;
  collect_variables(goals, out);
  return out;
}

GoalSeq scope_cuts(const GoalSeq& goals, BarrierId barrier) {
  return rebuild(goals, [&](const Goal& g, GoalSeq& out) {
    if (g.is<CutGoal>() && !g.as<CutGoal>().barrier) {
      out.push_back(Goal{CutGoal{barrier}});
    } else if (g.is<Disjunction>()) {
      // Cuts inside a disjunction commit the enclosing clause.
      const auto& d = g.as<Disjunction>();
      out.push_back(Goal{Disjunction{scope_cuts(d.left, barrier), scope_cuts(d.right, barrier)}});
    } else {
      // Negation bodies get their own barrier when the negation is expanded.
      out.push_back(g);
    }
  });
}

GoalSeq without_cuts(const GoalSeq& goals) {
  return rebuild(goals, [&](const Goal& g, GoalSeq& out) {
    if (g.is<CutGoal>()) return;
    if (g.is<Disjunction>()) {
      const auto& d = g.as<Disjunction>();
      out.push_back(Goal{Disjunction{without_cuts(d.left), without_cuts(d.right)}});
    } else if (g.is<Negation>()) {
      out.push_back(Goal{Negation{without_cuts(g.as<Negation>().inner)}});
    } else {
      out.push_back(g);
    }
  });
}

namespace {

bool is_simple(const Goal& g) {
  return g.is<CallGoal>() || g.is<TrueGoal>() || g.is<FailGoal>() || g.is<CutGoal>();
}

}  // namespace

std::string to_string(const Goal& g) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CallGoal>) {
          return to_string(x.term);
        } else if constexpr (std::is_same_v<T, Disjunction>) {
          return "(" + to_string(x.left) + ";" + to_string(x.right) + ")";
        } else if constexpr (std::is_same_v<T, Negation>) {
          if (x.inner.size() == 1 && is_simple(x.inner.front())) {
            return "\\+ " + to_string(x.inner.front());
          }
          return "\\+ (" + to_string(x.inner) + ")";
        } else if constexpr (std::is_same_v<T, CutGoal>) {
          return "!";
        } else if constexpr (std::is_same_v<T, TrueGoal>) {
          return "true";
        } else if constexpr (std::is_same_v<T, FailGoal>) {
          return x.spelled_false ? "false" : "fail";
        } else {
          return to_string(x.lhs) + " " + std::string(to_string(x.op)) + " " + to_string(x.rhs);
        }
      },
      g.kind);
}

std::string to_string(const GoalSeq& goals) {
  std::string out;
  for (std::size_t i = 0; i < goals.size(); ++i) {
    if (i) out += ',';
    out += to_string(goals[i]);
  }
  return out;
}

std::vector<std::string> goal_texts(const GoalSeq& goals) {
  std::vector<std::string> out;
  out.reserve(goals.size());
  for (const auto& g : goals) out.push_back(to_string(g));
  return out;
}

std::vector<Variable> variables_of(const Clause& c) {
  std::vector<Variable> out;
  collect_variables(c.head, out);
  collect_variables(c.body, out);
  return out;
}

std::string to_string(const Clause& c) {
  if (c.is_fact()) return to_string(c.head) + ".";
  return to_string(c.head) + " :- " + to_string(c.body) + ".";
}

std::string to_string(const PredicateKey& k) { return k.name + "/" + std::to_string(k.arity); }

void Program::add(Clause c) {
  PredicateKey key{std::string(c.head.name()), c.head.arity()};
  auto [it, inserted] = table_.try_emplace(key);
  if (inserted) order_.push_back(key);
  it->second.push_back(std::move(c));
}

const std::vector<Clause>* Program::clauses(const PredicateKey& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

std::size_t Program::clause_count() const {
  std::size_t n = 0;
  for (const auto& [key, cs] : table_) n += cs.size();
  return n;
}

Program Program::without_cuts() const {
  Program out;
  for (const auto& key : order_) {
    for (const auto& c : table_.at(key)) out.add(Clause{c.head, sldtree::without_cuts(c.body)});
  }
  return out;
}

}  // namespace sldtree
