#include "soergel/lightleaves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "soergel/errors.hpp"
#include "soergel/measures.hpp"

namespace soergel {

std::string print_move(const Move& m) {
  switch (m.kind) {
    case MoveKind::M: return "m(" + std::to_string(m.t) + ")";
    case MoveKind::CH: return "ch(" + std::to_string(m.t) + "<-" + std::to_string(m.tp) + ")";
    case MoveKind::CCH: return "cch(" + std::to_string(m.t) + "<-" + std::to_string(m.tp) + ")";
  }
  return "?";
}

std::string print_moves(const std::vector<Move>& ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? " " : "") + print_move(ms[i]);
  return out;
}

std::vector<Term> expand(const Move& mv, const Word& w, const CoxeterGraph& g) {
  const std::size_t L = w.size();
  std::vector<Term> terms;
  if (mv.kind == MoveKind::M) {
    if (mv.t >= L) throw InputError("move " + print_move(mv) + " out of range");
    const int i = static_cast<int>(L - 1 - mv.t);
    terms.push_back(Term::m(w[i], i));
    return terms;
  }
  if (mv.tp < mv.t || mv.tp + 2 > L) throw InputError("move " + print_move(mv) + " out of range");
  Word cur = w;
  const int a = static_cast<int>(L - 2 - mv.tp);
  const int p = static_cast<int>(L - 2 - mv.t);
  for (int k = a; k < p; ++k) {
    if (!g.commute(cur[k], cur[k + 1]))
      throw InputError("move " + print_move(mv) + " crosses non-commuting letters");
    terms.push_back(Term::f(cur[k], cur[k + 1], k));
    std::swap(cur[k], cur[k + 1]);
  }
  if (cur[p] != cur[p + 1]) throw InputError("move " + print_move(mv) + " merges distinct letters");
  terms.push_back(Term::j(cur[p], p));
  if (mv.kind == MoveKind::CCH) terms.push_back(Term::m(cur[p], p));
  return terms;
}

Expression expand(const std::vector<Move>& moves, const Word& w, const CoxeterGraph& g) {
  Expression e;
  e.domain = w;
  Word cur = w;
  for (const auto& mv : moves) {
    for (const auto& t : expand(mv, cur, g)) {
      e.terms.push_back(t);
      cur = step_codomain(cur, t, g, e.terms.size() - 1);
    }
  }
  return e;
}

std::optional<std::vector<Move>> parse_moves(const Expression& e, const CoxeterGraph& g) {
  std::vector<Move> moves;
  const auto words = running_words(e, g);
  const auto& ts = e.terms;
  std::size_t k = 0;
  while (k < ts.size()) {
    const std::size_t L = words[k].size();
    const Term& t = ts[k];
    if (t.kind == Kind::M) {
      moves.push_back({MoveKind::M, L - 1 - t.pos, L - 1 - t.pos});
      ++k;
      continue;
    }
    if (t.kind != Kind::J && t.kind != Kind::F) return std::nullopt;
    const int a = t.pos;
    int b = a;
    std::size_t q = k;
    while (ts[q].kind == Kind::F) {
      if (q + 1 >= ts.size()) return std::nullopt;
      const Term& nx = ts[q + 1];
      if (nx.pos != ts[q].pos + 1 || (nx.kind != Kind::F && nx.kind != Kind::J))
        return std::nullopt;
      ++q;
    }
    b = ts[q].pos;  // the J
    Move mv{MoveKind::CH, L - 2 - b, L - 2 - a};
    ++q;
    if (q < ts.size() && ts[q].kind == Kind::M && ts[q].pos == b) {
      mv.kind = MoveKind::CCH;
      ++q;
    }
    moves.push_back(mv);
    k = q;
  }
  return moves;
}

bool is_good_order(const std::vector<Move>& moves) {
  for (std::size_t i = 1; i < moves.size(); ++i)
    if (moves[i].t >= moves[i - 1].t) return false;
  return true;
}

bool property_p(const Word& w, const std::vector<Move>& moves, const CoxeterGraph& g) {
  Word cur = w;
  std::size_t prev = w.size();
  for (const auto& mv : moves) {
    for (std::size_t u = mv.t; u < prev && u < cur.size(); ++u) {
      const std::size_t idx = cur.size() - 1 - u;
      if (left_type_at(cur, idx, g) && !(u == mv.t && mv.kind != MoveKind::M)) return false;
    }
    for (const auto& t : expand(mv, cur, g)) cur = step_codomain(cur, t, g);
    prev = mv.t;
  }
  return true;
}

Membership fl_membership(const Expression& e, const CoxeterGraph& g) {
  Membership m;
  if (!typecheck(e, g).empty()) return m;
  auto moves = parse_moves(e, g);
  if (!moves || !is_good_order(*moves)) return m;
  m.by_moves = property_p(e.domain, *moves, g);
  auto r = stats(e, g);
  m.by_badness = r.m_bad_count == 0 && r.j_bad_count == 0;
  return m;
}

bool is_member_FL(const Expression& e, const CoxeterGraph& g) {
  auto m = fl_membership(e, g);
  if (m.by_moves != m.by_badness)
    throw InvariantError("light-leaf characterizations disagree on " + print_expr(e, g));
  return m.by_moves;
}

std::vector<LightLeaf> enumerate_FL(const Word& w, const CoxeterGraph& g, std::size_t max_len) {
  if (w.size() > max_len) throw InputError("word longer than the enumeration bound");
  std::vector<LightLeaf> out;
  std::vector<Move> moves;
  std::function<void(const Word&, std::size_t)> rec = [&](const Word& cur, std::size_t prev) {
    if (cur.empty()) {
      if (property_p(w, moves, g)) out.push_back({w, moves});
      return;
    }
    for (std::size_t t = prev; t-- > 0;) {
      for (MoveKind kind : {MoveKind::M, MoveKind::CH, MoveKind::CCH}) {
        const std::size_t lo = t, hi = kind == MoveKind::M ? t + 1 : cur.size();
        for (std::size_t tp = lo; tp < hi; ++tp) {
          Move mv{kind, t, tp};
          std::vector<Term> ts;
          try {
            ts = expand(mv, cur, g);
          } catch (const InputError&) {
            continue;
          }
          Word next = cur;
          for (const auto& x : ts) next = step_codomain(next, x, g);
          moves.push_back(mv);
          rec(next, t);
          moves.pop_back();
        }
      }
    }
  };
  rec(w, w.size());
  return out;
}

Expression curry_F(const Expression& e, Gen t, const CoxeterGraph& g) {
  if (e.domain.empty() || e.domain[0] != t)
    throw InputError("curry_F: domain does not start with " + g.name(t));
  Expression r;
  r.domain.assign(e.domain.begin() + 1, e.domain.end());
  r.terms.push_back(Term::a(t, 0));
  for (const auto& x : e.terms) r.terms.push_back(x.shifted(1));
  return r;
}

Expression uncurry_G(const Expression& e, Gen t, const CoxeterGraph& g) {
  Word cod = typecheck(e, g);
  if (cod.empty() || cod[0] != t)
    throw InputError("uncurry_G: codomain does not start with " + g.name(t));
  Expression r;
  r.domain = e.domain;
  r.domain.insert(r.domain.begin(), t);
  for (const auto& x : e.terms) r.terms.push_back(x.shifted(1));
  r.terms.push_back(Term::j(t, 0));
  r.terms.push_back(Term::m(t, 0));
  return r;
}

LinComb curry_F(const LinComb& lc, Gen t, const CoxeterGraph& g) {
  LinComb r;
  for (const auto& [e, c] : lc) r.add(curry_F(e, t, g), c);
  return r;
}

LinComb uncurry_G(const LinComb& lc, Gen t, const CoxeterGraph& g) {
  LinComb r;
  for (const auto& [e, c] : lc) r.add(uncurry_G(e, t, g), c);
  return r;
}

std::vector<Expression> transported_basis(const Word& w, const Word& u, const CoxeterGraph& g) {
  Word full(u.rbegin(), u.rend());
  full.insert(full.end(), w.begin(), w.end());
  std::vector<Expression> out;
  for (const auto& leaf : enumerate_FL(full, g)) {
    Expression e = leaf.expression(g);
    for (std::size_t k = u.size(); k-- > 0;) e = curry_F(e, u[k], g);
    out.push_back(std::move(e));
  }
  return out;
}

Partition strand_partition(const Expression& e, const CoxeterGraph& g) {
  const std::size_t n = e.domain.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<std::size_t> strand(n);  // representative domain letter per position
  std::iota(strand.begin(), strand.end(), 0);
  Word cur = e.domain;
  for (std::size_t k = 0; k < e.terms.size(); ++k) {
    const Term& t = e.terms[k];
    cur = step_codomain(cur, t, g, k);
    switch (t.kind) {
      case Kind::J:
        parent[find(strand[t.pos + 1])] = find(strand[t.pos]);
        strand.erase(strand.begin() + t.pos + 1);
        break;
      case Kind::M:
        strand.erase(strand.begin() + t.pos);
        break;
      case Kind::F:
        std::swap(strand[t.pos], strand[t.pos + 1]);
        break;
      default:
        throw InvariantError("strand_partition needs an expression without alpha or x terms");
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  Partition p;
  for (auto& kv : groups) p.push_back(std::move(kv.second));
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Move> synthesize(const Word& w, const Partition& p, const CoxeterGraph& g) {
  std::vector<int> group_of(w.size(), -1);
  std::vector<std::size_t> remaining(p.size());
  for (std::size_t gi = 0; gi < p.size(); ++gi) {
    remaining[gi] = p[gi].size();
    for (std::size_t pos : p[gi]) {
      if (w[pos] != w[p[gi][0]]) throw InvariantError("partition group mixes colours");
      group_of[pos] = static_cast<int>(gi);
    }
  }
  struct Slot {
    Gen letter;
    int group;
    bool pending;
  };
  std::vector<Slot> cur;
  for (std::size_t i = 0; i < w.size(); ++i) cur.push_back({w[i], group_of[i], false});
  std::vector<Move> moves;
  while (true) {
    std::size_t c = 0;
    while (c < cur.size() && cur[c].pending) ++c;
    if (c == cur.size()) break;
    const std::size_t L = cur.size();
    const int grp = cur[c].group;
    const bool last = --remaining[grp] == 0;
    std::size_t src = L;
    for (std::size_t i = 0; i < c; ++i)
      if (cur[i].group == grp) src = i;
    Move mv;
    mv.t = L - 1 - c;
    if (src == L) {
      if (!last) {
        cur[c].pending = true;
        continue;
      }
      mv.kind = MoveKind::M;
      mv.tp = mv.t;
    } else {
      mv.kind = last ? MoveKind::CCH : MoveKind::CH;
      mv.tp = L - 2 - src;
    }
    Word word;
    for (const auto& s : cur) word.push_back(s.letter);
    std::vector<Term> ts;
    try {
      ts = expand(mv, word, g);
    } catch (const InputError& e) {
      throw InvariantError(std::string("partition is not realizable: ") + e.what());
    }
    for (const auto& t : ts) {
      switch (t.kind) {
        case Kind::F: std::swap(cur[t.pos], cur[t.pos + 1]); break;
        case Kind::J:
          cur[t.pos].pending = true;
          cur.erase(cur.begin() + t.pos + 1);
          break;
        case Kind::M: cur.erase(cur.begin() + t.pos); break;
        default: break;
      }
    }
    moves.push_back(mv);
  }
  if (!cur.empty()) throw InvariantError("partition leaves strands unresolved");
  return moves;
}

}  // namespace soergel
