#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "soergel/graph.hpp"

namespace soergel {

using Rat = mpq_class;

/// Exponent vector packed one byte per variable, variable 0 in the top byte,
/// so plain integer comparison is lexicographic with y_0 dominant.
using Mono = std::uint64_t;

namespace mono {
inline unsigned exp(Mono m, std::size_t var) { return (m >> (8 * (7 - var))) & 0xffu; }
inline Mono unit(std::size_t var) { return Mono{1} << (8 * (7 - var)); }
unsigned degree(Mono m);
Mono mul(Mono a, Mono b);
}  // namespace mono

/// Polynomial over the rationals in the coordinates y_s.
///
/// Terms are kept sorted by increasing total degree, ties broken by
/// decreasing lex order. That is also the printing order.
class Poly {
 public:
  using Term = std::pair<Mono, Rat>;

  Poly() = default;
  Poly(const Rat& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT

  static Poly var(std::size_t i);
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant coefficient (0 when absent).
  Rat constant() const;
  unsigned degree() const;
  const std::vector<Term>& terms() const { return terms_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Total order for use as a map key; not a ring order.
  bool operator<(const Poly& o) const;

  /// Ring morphism sending y_i to images[i].
  Poly substitute(const std::vector<Poly>& images) const;

  std::string to_string(const CoxeterGraph& g) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// s acting on p via the geometric representation.
Poly act(Gen s, const Poly& p, const CoxeterGraph& g);
/// y_s minus the sum of y_t over the infinite neighbours t of s.
Poly x_form(Gen s, const CoxeterGraph& g);
/// (p + s.p) / 2
Poly p_op(Gen s, const Poly& p, const CoxeterGraph& g);
/// (p - s.p) / 2
Poly i_op(Gen s, const Poly& p, const CoxeterGraph& g);
/// (p - s.p) / (2 x_s); throws InvariantError if the division is not exact.
Poly demazure(Gen s, const Poly& p, const CoxeterGraph& g);

/// Exact quotient q / x_form(s); throws InvariantError on a nonzero remainder.
Poly divide_by_x(Gen s, const Poly& q, const CoxeterGraph& g);

/// Ring morphism evaluation; point[i] is the value of y_i.
Rat specialize(const Poly& p, const std::vector<Rat>& point);
/// Same, keyed by generator name; throws InputError for a missing variable.
Rat specialize(const Poly& p, const std::map<std::string, Rat>& point, const CoxeterGraph& g);

std::string rat_to_string(const Rat& r);

}  // namespace soergel
