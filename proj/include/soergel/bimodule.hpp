#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soergel/expr.hpp"
#include "soergel/polyring.hpp"

namespace soergel {

/// Bit k of a mask says whether letter k carries x_{s_k} in its right slot.
using Mask = std::uint32_t;

/// sum over masks of coeff * (1 (x) x^{e_1} (x) ... (x) x^{e_n}), coefficients
/// pushed into slot 0.
struct BimoduleElement {
  Word word;
  std::map<Mask, Poly> coeffs;

  bool operator==(const BimoduleElement& o) const {
    return word == o.word && coeffs == o.coeffs;
  }
  void add(Mask m, const Poly& p);
  void add(const BimoduleElement& o, const Poly& c);
};

/// A left-linear map on canonical bases: column e is the image of basis vector e.
struct BimoduleMap {
  Word domain;
  Word codomain;
  std::vector<BimoduleElement> columns;  // 2^|domain| entries

  Poly entry(Mask row, Mask col) const;
  bool operator==(const BimoduleMap& o) const {
    return domain == o.domain && codomain == o.codomain && columns == o.columns;
  }
  /// Rows separated by newlines, entries by " | ", canonical Poly text.
  std::string to_string(const CoxeterGraph& g) const;
};

/// Exact evaluator. Holds memo tables, so reuse one instance per graph when
/// evaluating many expressions; it is not safe to share across threads.
class Oracle {
 public:
  explicit Oracle(const CoxeterGraph& g) : g_(g) {}

  const CoxeterGraph& graph() const { return g_; }

  BimoduleElement canonicalize(const Word& w, std::vector<Poly> slots);
  BimoduleElement basis(const Word& w, Mask m) const;
  BimoduleElement right_multiply(const BimoduleElement& el, const Poly& q);

  /// Image of a canonical basis vector of w under t.
  const BimoduleElement& term_column(const Term& t, const Word& w, Mask m);
  BimoduleElement apply(const Term& t, const BimoduleElement& el);

  BimoduleMap eval_term(const Term& t, const Word& w);
  BimoduleMap eval(const Expression& e);
  /// Needs the words because the zero combination carries none.
  BimoduleMap eval(const LinComb& lc, const Word& domain, const Word& codomain);
  BimoduleMap identity(const Word& w) const;
  BimoduleMap zero(const Word& domain, const Word& codomain) const;

 private:
  std::pair<Poly, Poly> split(Gen s, const Poly& p);

  const CoxeterGraph& g_;
  std::map<std::pair<Gen, Poly>, std::pair<Poly, Poly>> split_memo_;
  std::map<std::tuple<Word, Term, Mask>, BimoduleElement> column_memo_;
};

BimoduleMap compose(const BimoduleMap& first, const BimoduleMap& second);
BimoduleMap scale(const BimoduleMap& m, const Poly& c);

/// First basis vector (domain mask) on which the maps differ.
std::optional<Mask> first_difference(const BimoduleMap& a, const BimoduleMap& b);
std::string mask_name(Mask m, std::size_t n);

struct IndependenceResult {
  bool independent = false;
  std::size_t rank = 0;
  std::vector<std::vector<Rat>> points;  // values of y_0..y_{n-1} tried
};

/// Specializes every map at seeded random rational points and tests linear
/// independence of the resulting vectors. A positive answer at any point
/// proves independence over the polynomial ring; a negative answer at all
/// points is only inconclusive.
IndependenceResult independent(const std::vector<BimoduleMap>& maps, std::size_t nvars,
                               std::uint64_t seed, std::size_t npoints = 3);

/// Rank of a rational matrix given as rows.
std::size_t rational_rank(std::vector<std::vector<Rat>> rows);

}  // namespace soergel
