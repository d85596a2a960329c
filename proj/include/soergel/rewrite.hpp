#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soergel/expr.hpp"
#include "soergel/measures.hpp"
#include "soergel/registry.hpp"

namespace soergel {

struct TraceStep {
  std::string stage;  // F1, F2, F3, F4, F5, alpha
  std::string rule;
  std::size_t site = 0;
  std::string keys;  // measure snapshot after the step
  std::string expr;  // expression after the step
};

/// Rewrite log plus the termination audit. Violations are recorded rather
/// than thrown so that the acceptance audit can report them.
struct Trace {
  std::vector<TraceStep> steps;
  std::vector<std::string> violations;
  std::size_t f3_steps = 0;
  std::size_t f2_rounds = 0;
  std::size_t f5_rounds = 0;
  std::size_t f5_rounds_with_7 = 0;

  std::string to_string() const;
};

struct NormalizeOptions {
  std::size_t fuel_multiplier = 1;
  /// Oracle-check every stage's output against its input (slow; tests only).
  bool check_stages = false;
};

/// The fixed rewriting strategy. Holds an oracle for stage checks, so one
/// instance should not be shared across threads.
class Normalizer {
 public:
  explicit Normalizer(const Registry& reg, NormalizeOptions opt = {});

  const CoxeterGraph& graph() const { return reg_.graph(); }

  /// Pushes every X term to the bottom of the chain where it becomes a
  /// coefficient (relations f, g and commutation).
  LinComb f1(const Expression& e, Trace* tr = nullptr);
  /// Removes m-bad terms (crossings, relation 7, then f1).
  LinComb f2(const Expression& e, Trace* tr = nullptr);
  /// Relations a, b, b', c, c', e, x modulo y until none applies.
  Expression f3(const Expression& e, Trace* tr = nullptr);
  /// Reorders the moves of a good g-expression so targets decrease.
  Expression f4(const Expression& e, Trace* tr = nullptr);
  /// Removes every alpha term. Output is alpha-free and x-free.
  LinComb alpha_eliminate(const Expression& e, Trace* tr = nullptr);
  /// Repeats F2, F3, F4 until no m-bad term is left; input alpha-free, x-free.
  LinComb f5(const Expression& e, Trace* tr = nullptr);

  LinComb normalize(const Expression& e, Trace* tr = nullptr);
  LinComb normalize(const LinComb& lc, Trace* tr = nullptr);

 private:
  void f1_rec(const Poly& c, const Expression& e, LinComb& out, Trace* tr, std::size_t depth,
              std::size_t fuel);
  void check(const std::string& stage, const Expression& in, const LinComb& out);
  std::size_t fuel_for(const Expression& e) const;
  /// Applies the first instance of `rule` that matches at chain index k.
  std::optional<LinComb> apply_at(const std::string& rule, const Expression& e,
                                  const std::vector<Word>& words, std::size_t k);
  void f2_rec(const Poly& c, const Expression& e, LinComb& out, Trace* tr, std::size_t depth,
              std::size_t fuel);
  void alpha_rec(const Poly& c, const Expression& e, LinComb& out, Trace* tr);
  void f5_rec(const Poly& c, const Expression& e, LinComb& out, Trace* tr, std::size_t round,
              std::size_t fuel);

  const Registry& reg_;
  NormalizeOptions opt_;
  Oracle oracle_;
  std::map<std::string, std::vector<const RuleInstance*>> by_rule_;
};

}  // namespace soergel
