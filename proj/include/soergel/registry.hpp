#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soergel/bimodule.hpp"
#include "soergel/coxeter.hpp"
#include "soergel/expr.hpp"

namespace soergel {

/// One relation instantiated at concrete generators: lhs.terms rewrite to the
/// combination rhs, both over the local word lhs.domain.
struct RuleInstance {
  std::string rule;
  std::string label;  // generator assignment, for messages
  Expression lhs;
  LinComb rhs;
};

struct Match {
  const RuleInstance* inst = nullptr;
  std::size_t index = 0;  // chain index of the first matched term
  int shift = 0;          // added to every local offset
};

/// Every relation of the presentation, instantiated for every legal choice of
/// generators of the graph. The constructor checks each instance against the
/// oracle and throws InvariantError on a mismatch.
class Registry {
 public:
  explicit Registry(const CoxeterGraph& g);

  const CoxeterGraph& graph() const { return g_; }
  const RepCoefficients& coefficients() const { return coeff_; }
  const std::vector<RuleInstance>& instances() const { return inst_; }
  std::vector<const RuleInstance*> instances_of(const std::string& rule) const;

  struct CheckLine {
    const RuleInstance* inst;
    std::optional<Mask> failure;  // first differing basis vector
  };
  /// Oracle comparison of both sides of every instance.
  std::vector<CheckLine> check(Oracle& oracle) const;
  /// Throws InvariantError on the first mismatch.
  void verify() const;

  /// Test hook: doubles the right-hand side of every instance of `rule`.
  void corrupt(const std::string& rule);

  /// Tries inst at chain index k of e (whose running words are `words`).
  static std::optional<Match> match(const RuleInstance& inst, const Expression& e,
                                    const std::vector<Word>& words, std::size_t k);
  /// e with the matched segment replaced by the instance's right-hand side.
  static LinComb replace(const Expression& e, const Match& m);

 private:
  void build();
  void add(const std::string& rule, const std::string& label, Word w, std::vector<Term> lhs,
           std::vector<std::pair<Poly, std::vector<Term>>> rhs);

  CoxeterGraph g_;
  RepCoefficients coeff_;
  std::vector<RuleInstance> inst_;
};

/// Relation names in the order the F3 stage tries them.
const std::vector<std::string>& f3_rule_order();

/// Generic commutation: t1 applied first, then t2 on disjoint letters.
/// Returns (t2', t1') with t2' applied first, or nothing if they overlap.
std::optional<std::pair<Term, Term>> commute_terms(const Term& t1, const Term& t2);

}  // namespace soergel
