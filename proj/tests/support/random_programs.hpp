#pragma once

// Random small acyclic programs over the constants a, b, c. Layering keeps
// them terminating: p calls t and the fact predicates, t calls only facts.
// Every rule's first body goal binds the head variable, so all answers are
// ground.

#include <random>
#include <string>
#include <vector>

namespace sldtree::testing {

struct ProgramShape {
  bool cuts = true;
  bool negation = false;
  bool disjunction = false;
};

struct RandomProgram {
  std::string source;
  std::string query;
};

class ProgramGen {
public:
  explicit ProgramGen(std::mt19937& rng) : rng_(rng) {}

  RandomProgram next(const ProgramShape& shape) {
    std::string src;
    for (const char* f : {"q", "r", "s"}) {
      int n = uniform(0, 4);
      for (int i = 0; i < n; ++i) src += std::string(f) + "(" + constant() + ").\n";
    }
    src += predicate("t", {"q", "r", "s"}, shape);
    src += predicate("p", {"t", "q", "r", "s"}, shape);
    static const char* queries[] = {"p(X)", "p(X), q(Y)", "t(X), p(Y)", "p(X), r(X)", "p(X), !"};
    return {src, queries[uniform(0, shape.cuts ? 4 : 3)]};
  }

private:
  std::string predicate(const std::string& name, const std::vector<std::string>& callees,
                        const ProgramShape& shape) {
    std::string out;
    int clauses = uniform(1, 4);
    for (int i = 0; i < clauses; ++i) {
      if (uniform(0, 3) == 0) {
        out += name + "(" + constant() + ")";
        if (shape.cuts && uniform(0, 2) == 0) out += " :- !";
        out += ".\n";
        continue;
      }
      std::vector<std::string> body;
      body.push_back(call(callees, "X", false));
      int extra = uniform(0, 3);
      for (int k = 0; k < extra; ++k) {
        int kind = uniform(0, 9);
        if (shape.cuts && kind < 3) {
          body.push_back("!");
        } else if (shape.negation && kind == 3) {
          body.push_back("\\+ " + call(callees, "X"));
        } else if (shape.disjunction && kind == 4) {
          std::string left = call(callees, "X");
          if (shape.cuts && uniform(0, 1) == 0) left += ", !";
          body.push_back("(" + left + " ; " + call(callees, "X") + ")");
        } else {
          body.push_back(call(callees, uniform(0, 1) == 0 ? "X" : "Y"));
        }
      }
      if (shape.cuts && uniform(0, 2) == 0) {
        body.insert(body.begin() + uniform(0, int(body.size())), "!");
        if (body.front() == "!") std::swap(body[0], body[1]);
      }
      out += name + "(X) :- ";
      for (std::size_t k = 0; k < body.size(); ++k) out += (k ? ", " : "") + body[k];
      out += ".\n";
    }
    return out;
  }

  std::string call(const std::vector<std::string>& callees, const std::string& var,
                   bool allow_constant = true) {
    const std::string& f = callees[uniform(0, int(callees.size()) - 1)];
    return f + "(" + (allow_constant && uniform(0, 5) == 0 ? constant() : var) + ")";
  }

  std::string constant() {
    static const char* cs[] = {"a", "b", "c"};
    return cs[uniform(0, 2)];
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937& rng_;
};

}  // namespace sldtree::testing
