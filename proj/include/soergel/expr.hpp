#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "soergel/graph.hpp"
#include "soergel/polyring.hpp"

namespace soergel {

using Word = std::vector<Gen>;

enum class Kind : std::uint8_t { J, M, A, F, X };

/// One generator morphism tensored with identities. `pos` is the number of
/// identity strands on the left (for X: the slot, 0..n).
struct Term {
  Kind kind = Kind::M;
  Gen s = 0;
  Gen r = 0;  // second letter, F only
  int pos = 0;

  static Term j(Gen s, int i) { return {Kind::J, s, 0, i}; }
  static Term m(Gen s, int i) { return {Kind::M, s, 0, i}; }
  static Term a(Gen s, int i) { return {Kind::A, s, 0, i}; }
  static Term f(Gen s, Gen r, int i) { return {Kind::F, s, r, i}; }
  static Term x(Gen s, int i) { return {Kind::X, s, 0, i}; }

  /// Letters consumed and produced.
  int in_arity() const;
  int out_arity() const;
  Term shifted(int by) const { Term t = *this; t.pos += by; return t; }

  bool operator==(const Term& o) const {
    return kind == o.kind && s == o.s && r == o.r && pos == o.pos;
  }
  bool operator!=(const Term& o) const { return !(*this == o); }
  bool operator<(const Term& o) const;
};

/// Terms are stored first-applied-first.
struct Expression {
  Word domain;
  std::vector<Term> terms;

  bool operator==(const Expression& o) const { return domain == o.domain && terms == o.terms; }
  bool operator!=(const Expression& o) const { return !(*this == o); }
  bool operator<(const Expression& o) const;
  std::size_t size() const { return terms.size(); }
};

/// Word after applying t; throws TypeError(index, ...) on a mismatch.
Word step_codomain(const Word& w, const Term& t, const CoxeterGraph& g, std::size_t index = 0);
/// Folds step_codomain over the chain and returns the codomain.
Word typecheck(const Expression& e, const CoxeterGraph& g);
/// words[k] is the domain of term k; words[size] is the codomain.
std::vector<Word> running_words(const Expression& e, const CoxeterGraph& g);

std::size_t right_offset(const Word& w, const Term& t);
std::size_t right_offset(const Expression& e, std::size_t k, const CoxeterGraph& g);

bool has_alpha(const Expression& e);
bool has_x(const Expression& e);

/// The p and eps macros.
std::vector<Term> p_macro(Gen s, int i);
std::vector<Term> eps_macro(Gen s, int i);

std::string print_word(const Word& w, const CoxeterGraph& g);
Word parse_word(const std::string& text, const CoxeterGraph& g);
std::string print_term(const Term& t, const CoxeterGraph& g);
std::string print_terms(const std::vector<Term>& ts, const CoxeterGraph& g);
std::string print_expr(const Expression& e, const CoxeterGraph& g);
/// `word s s | j@0(s) ; m@0(s)`. Checks syntax only; call typecheck for typing.
Expression parse_expr(const std::string& text, const CoxeterGraph& g);

struct RandomOptions {
  bool allow_x = true;
  bool allow_alpha = true;
  std::size_t max_word = 8;  // cap on intermediate word length
};

/// Seeded random R-expression with at most max_len terms.
Expression random_expression(const CoxeterGraph& g, const Word& w, std::size_t max_len,
                             std::uint64_t seed, const RandomOptions& opt = {});

/// Finite Poly-weighted sum of expressions sharing domain and codomain.
class LinComb {
 public:
  LinComb() = default;
  LinComb(const Expression& e, const Poly& c = Poly(1)) { add(e, c); }

  void add(const Expression& e, const Poly& c);
  void add(const LinComb& o, const Poly& c = Poly(1));
  LinComb& operator+=(const LinComb& o) { add(o); return *this; }
  LinComb scaled(const Poly& c) const;

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Expression, Poly>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

  /// One line per expression: `<poly> * [ <terms> ]`, or `0`.
  std::string to_string(const CoxeterGraph& g) const;

 private:
  std::map<Expression, Poly> terms_;
};

}  // namespace soergel
