#include "soergel/registry.hpp"

#include "soergel/errors.hpp"

namespace soergel {

namespace {

using Side = std::vector<std::pair<Poly, std::vector<Term>>>;

}  // namespace

Registry::Registry(const CoxeterGraph& g) : g_(g), coeff_(g_) {
  build();
  verify();
}

void Registry::add(const std::string& rule, const std::string& label, Word w,
                   std::vector<Term> lhs, Side rhs) {
  RuleInstance inst;
  inst.rule = rule;
  inst.label = label;
  inst.lhs.domain = w;
  inst.lhs.terms = std::move(lhs);
  for (auto& [c, ts] : rhs) {
    Expression e;
    e.domain = w;
    e.terms = std::move(ts);
    inst.rhs.add(e, c);
  }
  inst_.push_back(std::move(inst));
}

void Registry::build() {
  const Gen n = static_cast<Gen>(g_.size());
  auto nm = [&](std::initializer_list<Gen> gs) {
    std::string s;
    for (Gen x : gs) s += (s.empty() ? "" : ",") + g_.name(x);
    return s;
  };
  const Poly one(1);
  using T = Term;

  for (Gen r = 0; r < n; ++r) {
    const std::string L = nm({r});
    add("1", L, {}, {T::a(r, 0), T::m(r, 1)}, {{one, {T::a(r, 0), T::m(r, 0)}}});
    add("2", L, {r}, {T::a(r, 0), T::j(r, 1)}, {{one, {T::a(r, 1), T::j(r, 0)}}});
    add("3", L, {r}, {T::a(r, 0), T::j(r, 1), T::m(r, 1)}, {{one, {}}});
    add("4", L, {r}, {T::a(r, 1), T::j(r, 0), T::m(r, 0)}, {{one, {}}});
    add("5", L, {r, r, r}, {T::j(r, 1), T::j(r, 0)}, {{one, {T::j(r, 0), T::j(r, 0)}}});
    add("6", L, {}, {T::a(r, 0), T::j(r, 0)}, {});
    add("7", L, {r, r}, {T::m(r, 1)},
        {{one, {T::m(r, 0)}}, {one, {T::j(r, 0), T::x(r, 1)}}, {-one, {T::j(r, 0), T::x(r, 0)}}});
    add("8", L, {r, r}, {T::x(r, 1), T::j(r, 0)},
        {{one, {T::m(r, 0)}}, {-one, {T::j(r, 0), T::x(r, 0)}}});
    add("N5", L, {r}, {T::a(r, 0), T::j(r, 1), T::m(r, 0)}, {{one, {}}});
    add("N5", L, {r}, {T::a(r, 0), T::j(r, 1), T::m(r, 1)}, {{one, {}}});
    add("N6", L, {r}, {T::a(r, 1), T::m(r, 1), T::j(r, 0)}, {{one, {}}});
    add("N6", L, {r}, {T::a(r, 0), T::m(r, 0), T::j(r, 0)}, {{one, {}}});
    add("N7", L, {r, r}, {T::a(r, 0), T::j(r, 1), T::j(r, 1)},
        {{one, {T::j(r, 0), T::a(r, 0), T::j(r, 1)}}});
    add("N7", L, {r, r}, {T::a(r, 1), T::j(r, 2), T::j(r, 0)},
        {{one, {T::j(r, 0), T::a(r, 0), T::j(r, 1)}}});
    for (Gen u = 0; u < n; ++u) {
      const Rat& mu = coeff_.mu(r, u);
      Side rhs;
      if (mu != 0) {
        rhs.push_back({Poly(mu), {T::m(r, 0)}});
        rhs.push_back({Poly(-mu), {T::j(r, 0), T::x(r, 0)}});
      }
      for (Gen v = 0; v < n; ++v) {
        const Rat& lam = coeff_.lambda(r, u)[v];
        if (lam != 0) rhs.push_back({Poly(lam), {T::j(r, 0), T::x(v, 0)}});
      }
      add("g", nm({r, u}), {r, r}, {T::x(u, 1), T::j(r, 0)}, rhs);
    }
  }

  for (Gen s = 0; s < n; ++s)
    for (Gen r = 0; r < n; ++r) {
      if (!g_.commute(s, r)) continue;
      const std::string L = nm({s, r});
      add("a", L, {s, r}, {T::f(s, r, 0), T::f(r, s, 0)}, {{one, {}}});
      add("b", L, {s, r}, {T::f(s, r, 0), T::m(r, 0)}, {{one, {T::m(r, 1)}}});
      add("b'", L, {r, s}, {T::f(r, s, 0), T::m(r, 1)}, {{one, {T::m(r, 0)}}});
      add("c", L, {s, r, s}, {T::f(r, s, 1), T::j(s, 0)},
          {{one, {T::f(s, r, 0), T::j(s, 1), T::f(r, s, 0)}}});
      add("c'", L, {s, s, r}, {T::f(s, r, 1), T::f(s, r, 0), T::j(s, 1)},
          {{one, {T::j(s, 0), T::f(s, r, 0)}}});
      add("d", L, {r}, {T::a(s, 0), T::f(s, r, 1)}, {{one, {T::a(s, 1), T::f(r, s, 0)}}});
      add("N1", L, {r}, {T::a(s, 1), T::f(r, s, 0), T::f(r, s, 1)}, {{one, {T::a(s, 0)}}});
      add("N2", L, {s, r, s}, {T::f(s, r, 0), T::j(s, 1)},
          {{one, {T::f(r, s, 1), T::j(s, 0), T::f(s, r, 0)}}});
      add("N3", L, {r, s}, {T::a(s, 1), T::j(s, 2), T::f(r, s, 0), T::f(r, s, 1)},
          {{one, {T::f(r, s, 0), T::a(s, 0), T::j(s, 1)}}});
      add("N4", L, {r}, {T::a(s, 1), T::m(s, 1), T::f(r, s, 0)}, {{one, {T::a(s, 0), T::m(s, 0)}}});
      for (Gen u = 0; u < n; ++u) {
        Side rhs;
        for (Gen v = 0; v < n; ++v) {
          const Rat& lam = coeff_.lambda(s, u)[v];
          if (lam != 0) rhs.push_back({Poly(lam), {T::f(s, r, 0), T::x(v, 0)}});
        }
        const Rat& mu = coeff_.mu(s, u);
        if (mu != 0) rhs.push_back({Poly(mu), {T::f(s, r, 0), T::x(s, 2)}});
        add("f", nm({s, r, u}), {s, r}, {T::x(u, 1), T::f(s, r, 0)}, rhs);

        // crossings past a disjoint multiplication or merge
        const std::string L3 = nm({s, r, u});
        add("x", L3, {s, r, u}, {T::f(s, r, 0), T::m(u, 2)}, {{one, {T::m(u, 2), T::f(s, r, 0)}}});
        add("x", L3, {u, s, r}, {T::f(s, r, 1), T::m(u, 0)}, {{one, {T::m(u, 0), T::f(s, r, 0)}}});
        add("x", L3, {s, r, u, u}, {T::f(s, r, 0), T::j(u, 2)},
            {{one, {T::j(u, 2), T::f(s, r, 0)}}});
        add("x", L3, {u, u, s, r}, {T::f(s, r, 2), T::j(u, 0)},
            {{one, {T::j(u, 0), T::f(s, r, 1)}}});
        for (Gen t = 0; t < n; ++t) {
          if (g_.commute(u, t))
            add("y", nm({s, r, u, t}), {s, r, u, t}, {T::f(s, r, 0), T::f(u, t, 2)},
                {{one, {T::f(u, t, 2), T::f(s, r, 0)}}});
          if (g_.commute(s, t) && g_.commute(r, t) && u == 0 && t != s && t != r)
            add("e", nm({s, r, t}), {s, r, t},
                {T::f(r, t, 1), T::f(s, t, 0), T::f(s, r, 1)},
                {{one, {T::f(s, r, 0), T::f(s, t, 1), T::f(r, t, 0)}}});
        }
      }
    }

  // Generic commutation of terms acting on disjoint letters, sampled on all
  // words of length at most 2.
  std::vector<Word> words{{}};
  for (Gen a = 0; a < n; ++a) {
    words.push_back({a});
    for (Gen b = 0; b < n; ++b) words.push_back({a, b});
  }
  auto legal = [&](const Word& w) {
    std::vector<Term> ts;
    const int len = static_cast<int>(w.size());
    for (int i = 0; i < len; ++i) ts.push_back(T::m(w[i], i));
    for (int i = 0; i + 1 < len; ++i) {
      if (w[i] == w[i + 1]) ts.push_back(T::j(w[i], i));
      if (g_.commute(w[i], w[i + 1])) ts.push_back(T::f(w[i], w[i + 1], i));
    }
    for (int i = 0; i <= len; ++i)
      for (Gen s = 0; s < n; ++s) {
        ts.push_back(T::x(s, i));
        if (len < 2) ts.push_back(T::a(s, i));
      }
    return ts;
  };
  for (const auto& w : words)
    for (const auto& t1 : legal(w)) {
      Word w1 = step_codomain(w, t1, g_);
      for (const auto& t2 : legal(w1)) {
        auto sw = commute_terms(t1, t2);
        if (!sw) continue;
        if (t1.kind == Kind::X && t2.kind == Kind::X) continue;
        add("comm", print_word(w, g_), w, {t1, t2}, {{one, {sw->first, sw->second}}});
      }
    }
}

std::vector<const RuleInstance*> Registry::instances_of(const std::string& rule) const {
  std::vector<const RuleInstance*> out;
  for (const auto& i : inst_)
    if (i.rule == rule) out.push_back(&i);
  return out;
}

std::vector<Registry::CheckLine> Registry::check(Oracle& oracle) const {
  std::vector<CheckLine> out;
  for (const auto& inst : inst_) {
    Word cod = typecheck(inst.lhs, g_);
    for (const auto& [e, c] : inst.rhs)
      if (typecheck(e, g_) != cod)
        throw InvariantError("rule " + inst.rule + " " + inst.label + ": sides have different codomains");
    auto lhs = oracle.eval(inst.lhs);
    auto rhs = oracle.eval(inst.rhs, inst.lhs.domain, cod);
    out.push_back({&inst, first_difference(lhs, rhs)});
  }
  return out;
}

void Registry::verify() const {
  Oracle oracle(g_);
  for (const auto& line : check(oracle))
    if (line.failure)
      throw InvariantError("relation " + line.inst->rule + " (" + line.inst->label +
                           ") fails the oracle at " +
                           mask_name(*line.failure, line.inst->lhs.domain.size()));
}

void Registry::corrupt(const std::string& rule) {
  for (auto& i : inst_)
    if (i.rule == rule) {
      if (i.rhs.empty()) {
        i.rhs.add(i.lhs, Poly(1));
      } else {
        i.rhs = i.rhs.scaled(Poly(2));
      }
    }
}

std::optional<Match> Registry::match(const RuleInstance& inst, const Expression& e,
                                     const std::vector<Word>& words, std::size_t k) {
  const auto& lhs = inst.lhs.terms;
  if (lhs.empty() || k + lhs.size() > e.terms.size()) return std::nullopt;
  const int b = e.terms[k].pos - lhs[0].pos;
  if (b < 0) return std::nullopt;
  for (std::size_t j = 0; j < lhs.size(); ++j)
    if (e.terms[k + j] != lhs[j].shifted(b)) return std::nullopt;
  const Word& w = words[k];
  const auto& lw = inst.lhs.domain;
  if (static_cast<std::size_t>(b) + lw.size() > w.size()) return std::nullopt;
  for (std::size_t j = 0; j < lw.size(); ++j)
    if (w[b + j] != lw[j]) return std::nullopt;
  return Match{&inst, k, b};
}

LinComb Registry::replace(const Expression& e, const Match& m) {
  LinComb out;
  const std::size_t r = m.inst->lhs.terms.size();
  for (const auto& [rhs, c] : m.inst->rhs) {
    Expression ne;
    ne.domain = e.domain;
    ne.terms.assign(e.terms.begin(), e.terms.begin() + m.index);
    for (const auto& t : rhs.terms) ne.terms.push_back(t.shifted(m.shift));
    ne.terms.insert(ne.terms.end(), e.terms.begin() + m.index + r, e.terms.end());
    out.add(ne, c);
  }
  return out;
}

const std::vector<std::string>& f3_rule_order() {
  static const std::vector<std::string> order{"a", "b", "b'", "c", "c'", "e", "x"};
  return order;
}

std::optional<std::pair<Term, Term>> commute_terms(const Term& t1, const Term& t2) {
  const int p = t1.pos, q = t2.pos;
  if (q + t2.in_arity() <= p) {
    Term a = t2, b = t1;
    b.pos = p - t2.in_arity() + t2.out_arity();
    return std::make_pair(a, b);
  }
  if (q >= p + t1.out_arity()) {
    Term a = t2, b = t1;
    a.pos = q - t1.out_arity() + t1.in_arity();
    return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace soergel
