#include "sldtree/unify.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace sldtree {

namespace {

// Triangular binding store used while solving; resolved at the end.
class Bindings {
public:
  Term deref(Term t) const {
    while (t.is_var()) {
      auto it = map_.find(t.as_var().id);
      if (it == map_.end()) break;
      t = it->second.second;
    }
    return t;
  }

  void bind(const Variable& v, const Term& t) {
    map_.emplace(v.id, std::pair{v, t});
    order_.push_back(v.id);
  }

  Substitution resolve() const {
    Substitution out;
    std::unordered_map<VarId, Term> done;
    std::vector<VarId> active;
    for (VarId id : order_) {
      const auto& [var, term] = map_.at(id);
      out.bind(var, full(Term::var(var), done, active));
    }
    return out;
  }

private:
  Term full(const Term& t, std::unordered_map<VarId, Term>& done,
            std::vector<VarId>& active) const {
    if (t.is_var()) {
      VarId id = t.as_var().id;
      auto it = map_.find(id);
      if (it == map_.end()) return t;
      if (auto d = done.find(id); d != done.end()) return d->second;
      if (std::find(active.begin(), active.end(), id) != active.end()) {
        throw CyclicTermError(t.as_var().name);
      }
      active.push_back(id);
      Term r = full(it->second.second, done, active);
      active.pop_back();
      done.emplace(id, r);
      return r;
    }
    if (!t.is_compound()) return t;
    const auto& c = t.as_compound();
    std::vector<Term> args;
    args.reserve(c.args.size());
    bool changed = false;
    for (const auto& a : c.args) {
      args.push_back(full(a, done, active));
      changed = changed || !args.back().same_node(a);
    }
    return changed ? Term::compound(c.functor, std::move(args)) : t;
  }

  std::unordered_map<VarId, std::pair<Variable, Term>> map_;
  std::vector<VarId> order_;
};

}  // namespace

std::optional<Substitution> unify(const Term& left, const Term& right) {
  Bindings b;
  std::vector<std::pair<Term, Term>> work{{left, right}};
  while (!work.empty()) {
    auto [l0, r0] = std::move(work.back());
    work.pop_back();
    Term l = b.deref(l0);
    Term r = b.deref(r0);
    if (l.same_node(r)) continue;
    if (l.is_var() && r.is_var()) {
      if (l.as_var() != r.as_var()) b.bind(l.as_var(), r);
      continue;
    }
    if (l.is_var()) {
      b.bind(l.as_var(), r);
      continue;
    }
    if (r.is_var()) {
      b.bind(r.as_var(), l);
      continue;
    }
    if (l.node().index() != r.node().index()) return std::nullopt;
    if (l.is_atom()) {
      if (l.as_atom().name != r.as_atom().name) return std::nullopt;
    } else if (l.is_integer()) {
      if (l.as_integer().value != r.as_integer().value) return std::nullopt;
    } else {
      const auto& lc = l.as_compound();
      const auto& rc = r.as_compound();
      if (lc.functor != rc.functor || lc.args.size() != rc.args.size()) return std::nullopt;
      // Reverse push keeps left-to-right solving order.
      for (std::size_t i = lc.args.size(); i-- > 0;) work.emplace_back(lc.args[i], rc.args[i]);
    }
  }
  return b.resolve();
}

std::string suffixed_name(std::string_view base, std::size_t index, RenameStyle style) {
  std::string out(base);
  if (index == 0 || base == "_") return out;
  if (style == RenameStyle::Prime) {
    out.append(index, '\'');
  } else {
    out += std::to_string(index);
  }
  return out;
}

std::pair<std::vector<Clause>, RenameCounter> rename_clauses(std::span<const Clause> clauses,
                                                             RenameCounter ctr,
                                                             std::span<const Variable> avoid) {
  std::vector<std::vector<Variable>> vars;
  std::vector<std::string> bases;
  for (const auto& c : clauses) {
    vars.push_back(variables_of(c));
    for (const auto& v : vars.back()) {
      if (!v.is_anonymous()) bases.push_back(v.name);
    }
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  std::set<std::string> taken = ctr.issued;
  for (const auto& v : avoid) taken.insert(v.name);

  std::size_t index = ctr.next_index;
  if (!bases.empty()) {
    auto clashes = [&](std::size_t k) {
      return std::any_of(bases.begin(), bases.end(), [&](const std::string& b) {
        return taken.count(suffixed_name(b, k, ctr.style)) > 0;
      });
    };
    while (clashes(index)) ++index;
    for (const auto& b : bases) ctr.issued.insert(suffixed_name(b, index, ctr.style));
    ctr.next_index = index + 1;
  }

  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (vars[i].empty()) {
      out.push_back(clauses[i]);
      continue;
    }
    Substitution fresh;
    for (const auto& v : vars[i]) {
      fresh.bind(v, Term::var(make_variable(suffixed_name(v.name, index, ctr.style))));
    }
    out.push_back(Clause{apply(fresh, clauses[i].head), sldtree::apply(fresh, clauses[i].body)});
  }
  return {std::move(out), std::move(ctr)};
}

std::pair<Clause, RenameCounter> rename_clause(const Clause& c, RenameCounter ctr,
                                               std::span<const Variable> avoid) {
  auto [renamed, next] = rename_clauses(std::span<const Clause>(&c, 1), std::move(ctr), avoid);
  return {std::move(renamed.front()), std::move(next)};
}

}  // namespace sldtree
