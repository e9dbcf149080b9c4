#include <gtest/gtest.h>

#include <map>
#include <random>

#include "sldtree/reader.hpp"
#include "support/random_terms.hpp"

namespace sldtree {
namespace {

SourcePosition error_at(std::string_view text, bool program = true) {
  try {
    if (program) {
      parse_program(text);
    } else {
      parse_query(text);
    }
  } catch (const SyntaxError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no syntax error for: " << text;
  return {};
}

TEST(ParseProgram, SingleFact) {
  Program p = parse_program("loves(vincent,mia).");
  ASSERT_EQ(p.clause_count(), 1u);
  const auto* cs = p.clauses({"loves", 2});
  ASSERT_NE(cs, nullptr);
  EXPECT_TRUE((*cs)[0].is_fact());
  EXPECT_EQ(to_string((*cs)[0].head), "loves(vincent,mia)");
}

TEST(ParseProgram, SingleRule) {
  Program p = parse_program("a(X):- b(X).");
  const auto& c = p.clauses({"a", 1})->front();
  EXPECT_EQ(to_string(c.head), "a(X)");
  ASSERT_EQ(c.body.size(), 1u);
  ASSERT_TRUE(c.body[0].is<CallGoal>());
  EXPECT_EQ(to_string(c.body[0]), "b(X)");
  EXPECT_EQ(variables_of(c.head)[0], variables_of(c.body)[0]);
}

TEST(ParseProgram, EmptyBodyIsError) {
  SourcePosition pos = error_at("p :- .");
  EXPECT_EQ(pos.line, 1);
  EXPECT_EQ(pos.column, 6);
}

TEST(ParseProgram, ErrorPositionsCountLines) {
  SourcePosition pos = error_at("a.\n% comment\nb(X :- c.\n");
  EXPECT_EQ(pos.line, 3);
  EXPECT_GT(pos.column, 1);
  EXPECT_EQ(error_at("a.\nb(", true).line, 2);
  EXPECT_EQ(error_at("a :- X.").column, 6);
  EXPECT_EQ(error_at("a :- b = c.").column, 8);
}

TEST(ParseProgram, CommentsAndQuotedAtoms) {
  Program p = parse_program(
      "% header\nwitch('McConagall'). /* block\ncomment */ witch(hermione).\n"
      "name('it''s').");
  EXPECT_EQ(p.clause_count(), 3u);
  EXPECT_EQ(to_string(p.clauses({"witch", 1})->front().head), "witch('McConagall')");
  EXPECT_EQ(p.clauses({"name", 1})->front().head.as_compound().args[0].as_atom().name, "it's");
}

TEST(ParseProgram, PredicatesInDefinitionOrder) {
  Program p = parse_program("b. a. b :- a. c(1).");
  ASSERT_EQ(p.predicates().size(), 3u);
  EXPECT_EQ(p.predicates()[0].name, "b");
  EXPECT_EQ(p.predicates()[1].name, "a");
  EXPECT_EQ(p.clauses({"b", 0})->size(), 2u);
}

TEST(ParseQuery, Call) {
  GoalSeq q = parse_query("jealous(X,Y)");
  ASSERT_EQ(q.size(), 1u);
  EXPECT_TRUE(q[0].is<CallGoal>());
}

TEST(ParseQuery, NegatedConjunction) {
  GoalSeq q = parse_query("age(X,Y), \\+ (age(_,Z), Z < Y)");
  ASSERT_EQ(q.size(), 2u);
  ASSERT_TRUE(q[1].is<Negation>());
  const auto& inner = q[1].as<Negation>().inner;
  ASSERT_EQ(inner.size(), 2u);
  EXPECT_TRUE(inner[0].is<CallGoal>());
  ASSERT_TRUE(inner[1].is<CompareGoal>());
  EXPECT_EQ(inner[1].as<CompareGoal>().op, CompareOp::Less);
  // Y in the comparison is the Y bound by age(X,Y).
  EXPECT_EQ(inner[1].as<CompareGoal>().rhs, q[0].as<CallGoal>().term.as_compound().args[1]);
  EXPECT_EQ(to_string(q), "age(X,Y),\\+ (age(_,Z),Z < Y)");
}

TEST(ParseQuery, DisjunctionThenCall) {
  GoalSeq q = parse_query("(p(X);q(X)),r");
  ASSERT_EQ(q.size(), 2u);
  ASSERT_TRUE(q[0].is<Disjunction>());
  EXPECT_EQ(to_string(q[0].as<Disjunction>().left), "p(X)");
  EXPECT_EQ(to_string(q[0].as<Disjunction>().right), "q(X)");
  EXPECT_EQ(to_string(q[1]), "r");
}

TEST(ParseQuery, SemicolonIsLooserThanComma) {
  GoalSeq q = parse_query("a;b,c");
  ASSERT_EQ(q.size(), 1u);
  ASSERT_TRUE(q[0].is<Disjunction>());
  EXPECT_EQ(q[0].as<Disjunction>().left.size(), 1u);
  EXPECT_EQ(q[0].as<Disjunction>().right.size(), 2u);
}

TEST(ParseQuery, ControlConstructs) {
  GoalSeq q = parse_query("true, fail, false, !, not(p), X >= 3, 1 =< 2, 2 > 1.");
  ASSERT_EQ(q.size(), 8u);
  EXPECT_TRUE(q[0].is<TrueGoal>());
  EXPECT_TRUE(q[1].is<FailGoal>());
  EXPECT_TRUE(q[2].is<FailGoal>());
  EXPECT_TRUE(q[3].is<CutGoal>());
  EXPECT_TRUE(q[4].is<Negation>());
  EXPECT_EQ(q[5].as<CompareGoal>().op, CompareOp::GreaterEq);
  EXPECT_EQ(q[6].as<CompareGoal>().op, CompareOp::LessEq);
  EXPECT_EQ(q[7].as<CompareGoal>().op, CompareOp::Greater);
}

TEST(ParseQuery, UnsupportedOperatorsAreErrors) {
  EXPECT_THROW(parse_query("X = a"), SyntaxError);
  EXPECT_THROW(parse_query("X is 1"), SyntaxError);
  EXPECT_THROW(parse_query(""), SyntaxError);
  EXPECT_THROW(parse_query("p(X"), SyntaxError);
}

TEST(ParseTerm, Lists) {
  EXPECT_EQ(parse_term("[a,b,c]"), list_term(std::vector<Term>{Term::atom("a"), Term::atom("b"),
                                                              Term::atom("c")}));
  Term ht = parse_term("[H|T]");
  ASSERT_TRUE(ht.is_cons());
  EXPECT_TRUE(ht.as_compound().args[0].is_var());
  EXPECT_TRUE(ht.as_compound().args[1].is_var());
  EXPECT_TRUE(parse_term("[]").is_atom("[]"));
}

TEST(ParseTerm, NestedCompound) {
  Term t = parse_term("succ(succ(0))");
  ASSERT_TRUE(t.is_compound());
  EXPECT_EQ(t.name(), "succ");
  EXPECT_EQ(t.as_compound().args[0].name(), "succ");
  EXPECT_TRUE(t.as_compound().args[0].as_compound().args[0].is_integer());
}

TEST(VariableScoping, PerClause) {
  Program p = parse_program("p(X) :- q(X, Y). q(X, Y).");
  const auto& rule = p.clauses({"p", 1})->front();
  const auto& fact = p.clauses({"q", 2})->front();
  auto rule_vars = variables_of(rule);
  auto fact_vars = variables_of(fact);
  ASSERT_EQ(rule_vars.size(), 2u);
  EXPECT_EQ(rule_vars[0].name, fact_vars[0].name);
  EXPECT_NE(rule_vars[0], fact_vars[0]);
  EXPECT_NE(rule_vars[1], fact_vars[1]);
}

// Maps variables of `a` onto variables of `b` consistently, both ways.
bool same_up_to_variables(const Term& a, const Term& b, std::map<VarId, VarId>& fwd,
                          std::map<VarId, VarId>& back) {
  if (a.is_var() || b.is_var()) {
    if (!a.is_var() || !b.is_var()) return false;
    auto [it, fresh] = fwd.emplace(a.as_var().id, b.as_var().id);
    auto [jt, fresh2] = back.emplace(b.as_var().id, a.as_var().id);
    return it->second == b.as_var().id && jt->second == a.as_var().id &&
           a.as_var().name == b.as_var().name;
  }
  if (a.node().index() != b.node().index()) return false;
  if (!a.is_compound()) return a == b;
  const auto& ca = a.as_compound();
  const auto& cb = b.as_compound();
  if (ca.functor != cb.functor || ca.args.size() != cb.args.size()) return false;
  for (std::size_t i = 0; i < ca.args.size(); ++i) {
    if (!same_up_to_variables(ca.args[i], cb.args[i], fwd, back)) return false;
  }
  return true;
}

TEST(RoundTrip, PrintThenParseProperty) {
  std::mt19937 rng(3);
  testing::TermGen gen(rng, testing::var_pool({"X", "Y", "Long_name1"}));
  const std::vector<Term> specials{Term::atom("McConagall"), Term::atom("it's"),
                                   Term::atom("hello world"), Term::atom("[]"),
                                   Term::integer(-7), Term::atom("a")};
  for (int i = 0; i < 3000; ++i) {
    Term t = gen.term(4);
    if (gen.uniform(0, 3) == 0) {
      std::vector<Term> items{t, specials[gen.uniform(0, int(specials.size()) - 1)]};
      Term tail = gen.uniform(0, 1) ? Term() : gen.term(1);
      t = Term::compound("w", {list_term(items, tail), specials[gen.uniform(0, 5)]});
    }
    std::string text = to_string(t);
    Term back = parse_term(text);
    std::map<VarId, VarId> fwd, bwd;
    EXPECT_TRUE(same_up_to_variables(t, back, fwd, bwd)) << text;
    EXPECT_EQ(to_string(back), text);
  }
}

TEST(RoundTrip, ClausesAndGoals) {
  for (std::string_view src : {"youngest(X) :- age(X,Y),\\+ (age(_,Z),Z < Y).",
                               "p(X) :- (q(X);r(X),!),s.", "a :- true,fail,\\+ b."}) {
    Clause c = parse_clause(src);
    std::string printed = to_string(c);
    EXPECT_EQ(to_string(parse_clause(printed)), printed);
  }
}

}  // namespace
}  // namespace sldtree
