#include "sldtree/term.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace sldtree {

VarId fresh_var_id() {
  static std::atomic<VarId> next{1};
  return next.fetch_add(1, std::memory_order_relaxed);
}

Variable make_variable(std::string name) { return Variable{std::move(name), fresh_var_id()}; }

namespace {

const std::shared_ptr<const Term::Node>& nil_node() {
  static const auto node = std::make_shared<const Term::Node>(Atom{std::string(kNil)});
  return node;
}

}  // namespace

Term::Term() : node_(nil_node()) {}

Term Term::var(Variable v) { return Term(std::make_shared<const Node>(std::move(v))); }

Term Term::atom(std::string name) {
  if (name == kNil) return Term();
  return Term(std::make_shared<const Node>(Atom{std::move(name)}));
}

Term Term::integer(std::int64_t value) { return Term(std::make_shared<const Node>(Integer{value})); }

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) throw std::invalid_argument("compound term needs at least one argument");
  return Term(std::make_shared<const Node>(Compound{std::move(functor), std::move(args)}));
}

bool Term::is_atom(std::string_view name) const { return is_atom() && as_atom().name == name; }

bool Term::is_cons() const {
  return is_compound() && as_compound().functor == kCons && as_compound().args.size() == 2;
}

std::string_view Term::name() const {
  if (is_atom()) return as_atom().name;
  return as_compound().functor;
}

std::size_t Term::arity() const { return is_compound() ? as_compound().args.size() : 0; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.index() != y.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(y);
        if constexpr (std::is_same_v<T, Variable>) {
          return lhs.id == rhs.id;
        } else if constexpr (std::is_same_v<T, Atom>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, Integer>) {
          return lhs.value == rhs.value;
        } else {
          return lhs.functor == rhs.functor && lhs.args == rhs.args;
        }
      },
      x);
}

Term list_term(std::span<const Term> items, Term tail) {
  Term out = std::move(tail);
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    out = Term::compound(std::string(kCons), {*it, out});
  }
  return out;
}

std::pair<std::vector<Term>, Term> list_parts(const Term& t) {
  std::vector<Term> items;
  Term cur = t;
  while (cur.is_cons()) {
    const auto& args = cur.as_compound().args;
    items.push_back(args[0]);
    cur = args[1];
  }
  return {std::move(items), cur};
}

void collect_variables(const Term& t, std::vector<Variable>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Variable>) {
          if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
        } else if constexpr (std::is_same_v<T, Compound>) {
          for (const auto& a : n.args) collect_variables(a, out);
        }
      },
      t.node());
}

std::vector<Variable> variables_of(const Term& t) {
  std::vector<Variable> out;
  collect_variables(t, out);
  return out;
}

bool occurs_in(VarId id, const Term& t) {
  if (t.is_var()) return t.as_var().id == id;
  if (!t.is_compound()) return false;
  const auto& args = t.as_compound().args;
  return std::any_of(args.begin(), args.end(), [&](const Term& a) { return occurs_in(id, a); });
}

std::string quote_atom_if_needed(std::string_view name) {
  bool plain = !name.empty() && std::islower(static_cast<unsigned char>(name[0]));
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') plain = false;
  }
  if (plain || name == kNil) return std::string(name);
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  out += '\'';
  return out;
}

namespace {

void write_term(const Term& t, std::string& out) {
  if (t.is_cons()) {
    auto [items, tail] = list_parts(t);
    out += '[';
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ',';
      write_term(items[i], out);
    }
    if (!tail.is_atom(kNil)) {
      out += '|';
      write_term(tail, out);
    }
    out += ']';
    return;
  }
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Variable>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Atom>) {
          out += quote_atom_if_needed(n.name);
        } else if constexpr (std::is_same_v<T, Integer>) {
          out += std::to_string(n.value);
        } else {
          out += quote_atom_if_needed(n.functor);
          out += '(';
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) out += ',';
            write_term(n.args[i], out);
          }
          out += ')';
        }
      },
      t.node());
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  write_term(t, out);
  return out;
}

void Substitution::bind(const Variable& var, Term term) {
  if (term.is_var() && term.as_var().id == var.id) return;
  if (occurs_in(var.id, term)) throw CyclicTermError(var.name);
  bindings_.insert_or_assign(var.id, Binding{var, std::move(term)});
}

const Term* Substitution::lookup(VarId id) const {
  auto it = bindings_.find(id);
  return it == bindings_.end() ? nullptr : &it->second.term;
}

std::vector<Substitution::Binding> Substitution::bindings() const {
  std::vector<Binding> out;
  out.reserve(bindings_.size());
  for (const auto& [id, b] : bindings_) out.push_back(b);
  return out;
}

bool operator==(const Substitution& a, const Substitution& b) {
  if (a.bindings_.size() != b.bindings_.size()) return false;
  for (const auto& [id, binding] : a.bindings_) {
    const Term* other = b.lookup(id);
    if (!other || !(*other == binding.term)) return false;
  }
  return true;
}

Term apply(const Substitution& s, const Term& t) {
  if (s.empty()) return t;
  if (t.is_var()) {
    const Term* image = s.lookup(t.as_var());
    return image ? *image : t;
  }
  if (!t.is_compound()) return t;
  const auto& c = t.as_compound();
  std::vector<Term> args;
  args.reserve(c.args.size());
  bool changed = false;
  for (const auto& a : c.args) {
    args.push_back(apply(s, a));
    changed = changed || !args.back().same_node(a);
  }
  if (!changed) return t;
  return Term::compound(c.functor, std::move(args));
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out;
  for (const auto& b : first.bindings()) {
    Term image = apply(second, b.term);
    if (image.is_var() && image.as_var() == b.var) continue;
    out.bind(b.var, std::move(image));
  }
  for (const auto& b : second.bindings()) {
    if (!first.binds(b.var)) out.bind(b.var, b.term);
  }
  return out;
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& b : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += b.var.name + "=" + to_string(b.term);
  }
  return out + "}";
}

}  // namespace sldtree
