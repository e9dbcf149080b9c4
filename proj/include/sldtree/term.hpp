#pragma once

// Term algebra: variables, atoms, integers and compounds, plus substitutions.
// Terms are immutable values backed by shared nodes; copying a Term is cheap.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sldtree {

using VarId = std::uint64_t;

/// Raised when a binding would make a term contain itself.
class CyclicTermError : public std::runtime_error {
public:
  explicit CyclicTermError(const std::string& var)
      : std::runtime_error("cyclic term: variable " + var + " occurs in its own binding") {}
};

/// A logic variable. Identity is the id; the name is only for display.
struct Variable {
  std::string name;
  VarId id = 0;

  friend bool operator==(const Variable& a, const Variable& b) { return a.id == b.id; }
  friend auto operator<=>(const Variable& a, const Variable& b) { return a.id <=> b.id; }

  bool is_anonymous() const { return name == "_"; }
};

/// Returns a process-unique variable id. Thread-safe.
VarId fresh_var_id();

/// Creates a variable with a brand new id.
Variable make_variable(std::string name);

class Term;

struct Atom {
  std::string name;
};

struct Integer {
  std::int64_t value = 0;
};

struct Compound {
  std::string functor;
  std::vector<Term> args;  // never empty
};

class Term {
public:
  using Node = std::variant<Variable, Atom, Integer, Compound>;

  Term();  // the atom []

  static Term var(Variable v);
  static Term atom(std::string name);
  static Term integer(std::int64_t value);
  static Term compound(std::string functor, std::vector<Term> args);

  const Node& node() const { return *node_; }

  bool is_var() const { return std::holds_alternative<Variable>(*node_); }
  bool is_atom() const { return std::holds_alternative<Atom>(*node_); }
  bool is_integer() const { return std::holds_alternative<Integer>(*node_); }
  bool is_compound() const { return std::holds_alternative<Compound>(*node_); }
  bool is_callable() const { return is_atom() || is_compound(); }
  bool is_atom(std::string_view name) const;
  bool is_cons() const;

  const Variable& as_var() const { return std::get<Variable>(*node_); }
  const Atom& as_atom() const { return std::get<Atom>(*node_); }
  const Integer& as_integer() const { return std::get<Integer>(*node_); }
  const Compound& as_compound() const { return std::get<Compound>(*node_); }

  /// Functor name and arity for callable terms; undefined for others.
  std::string_view name() const;
  std::size_t arity() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline constexpr std::string_view kNil = "[]";
inline constexpr std::string_view kCons = ".";

/// Right-folds items over tail with './2'.
Term list_term(std::span<const Term> items, Term tail = Term());

/// Splits a list term into its proper items and final tail.
std::pair<std::vector<Term>, Term> list_parts(const Term& t);

/// Variables of t in first-occurrence order, without duplicates.
std::vector<Variable> variables_of(const Term& t);
void collect_variables(const Term& t, std::vector<Variable>& out);

bool occurs_in(VarId id, const Term& t);

/// Canonical writer. Lists use bracket sugar, atoms are quoted when needed.
std::string to_string(const Term& t);
std::string quote_atom_if_needed(std::string_view name);

/// Finite mapping Variable -> Term. Insertion refuses self-bindings and
/// bindings whose image contains the bound variable.
class Substitution {
public:
  struct Binding {
    Variable var;
    Term term;
  };

  Substitution() = default;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  /// Adds var -> term. Binding a variable to itself is a no-op.
  /// Throws CyclicTermError if var occurs in term.
  void bind(const Variable& var, Term term);

  const Term* lookup(VarId id) const;
  const Term* lookup(const Variable& v) const { return lookup(v.id); }
  bool binds(const Variable& v) const { return lookup(v) != nullptr; }

  /// Bindings ordered by variable id.
  std::vector<Binding> bindings() const;

  friend bool operator==(const Substitution& a, const Substitution& b);

private:
  std::map<VarId, Binding> bindings_;
};

/// Replaces every bound variable by its image; unbound variables are kept.
Term apply(const Substitution& s, const Term& t);

/// Result r satisfies apply(r, t) == apply(second, apply(first, t)).
Substitution compose(const Substitution& first, const Substitution& second);

std::string to_string(const Substitution& s);

}  // namespace sldtree
