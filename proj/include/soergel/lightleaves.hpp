#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soergel/expr.hpp"

namespace soergel {

enum class MoveKind { M, CH, CCH };

/// t is the target's right offset; for CH/CCH the source letter sits at right
/// offset tp + 1 and is carried rightwards to meet the target.
struct Move {
  MoveKind kind = MoveKind::M;
  std::size_t t = 0;
  std::size_t tp = 0;

  bool operator==(const Move&) const = default;
};

std::string print_move(const Move& m);
std::string print_moves(const std::vector<Move>& ms);

/// Terms realizing mv on w; throws InputError if the move is illegal there.
std::vector<Term> expand(const Move& mv, const Word& w, const CoxeterGraph& g);
Expression expand(const std::vector<Move>& moves, const Word& w, const CoxeterGraph& g);

/// Reads an expression as a sequence of moves. Fails when some F is not
/// followed by an F or J one step to the right, or on any alpha/x term.
std::optional<std::vector<Move>> parse_moves(const Expression& e, const CoxeterGraph& g);

bool is_good_order(const std::vector<Move>& moves);
/// Property (P), read on right offsets of the successive image words.
bool property_p(const Word& w, const std::vector<Move>& moves, const CoxeterGraph& g);

struct Membership {
  bool by_moves = false;    // parses, good order, (P)
  bool by_badness = false;  // parses, good order, no m-bad, no j-bad
};
Membership fl_membership(const Expression& e, const CoxeterGraph& g);
/// Both characterizations; throws InvariantError if they disagree.
bool is_member_FL(const Expression& e, const CoxeterGraph& g);

struct LightLeaf {
  Word domain;
  std::vector<Move> moves;
  Expression expression(const CoxeterGraph& g) const { return expand(moves, domain, g); }
};

/// All light leaves of w in canonical order.
std::vector<LightLeaf> enumerate_FL(const Word& w, const CoxeterGraph& g,
                                    std::size_t max_len = 10);

/// Hom(t M, N) -> Hom(M, t N): prepend an alpha and shift.
Expression curry_F(const Expression& e, Gen t, const CoxeterGraph& g);
/// Hom(M, t N) -> Hom(t M, N): shift, then merge and multiply on the left.
Expression uncurry_G(const Expression& e, Gen t, const CoxeterGraph& g);
LinComb curry_F(const LinComb& lc, Gen t, const CoxeterGraph& g);
LinComb uncurry_G(const LinComb& lc, Gen t, const CoxeterGraph& g);

/// Light leaves of Hom(w, u), obtained by currying FL(reverse(u) w).
std::vector<Expression> transported_basis(const Word& w, const Word& u, const CoxeterGraph& g);

/// Which domain letters end up merged together. Each group lists domain
/// positions in increasing order; groups are sorted by their first member.
using Partition = std::vector<std::vector<std::size_t>>;

/// Partition of an expression built from J, M and F only.
Partition strand_partition(const Expression& e, const CoxeterGraph& g);
/// The good-order move sequence that merges each group left to right and
/// multiplies it out. Throws InvariantError if a group cannot be brought
/// together.
std::vector<Move> synthesize(const Word& w, const Partition& p, const CoxeterGraph& g);

}  // namespace soergel
