#include "soergel/rewrite.hpp"

#include <algorithm>
#include <sstream>

#include "soergel/errors.hpp"
#include "soergel/lightleaves.hpp"

namespace soergel {

std::string Trace::to_string() const {
  std::ostringstream os;
  for (const auto& s : steps) {
    os << s.stage << " " << s.rule << " @" << s.site;
    if (!s.keys.empty()) os << " " << s.keys;
    os << " :: " << s.expr << "\n";
  }
  for (const auto& v : violations) os << "VIOLATION " << v << "\n";
  return os.str();
}

Normalizer::Normalizer(const Registry& reg, NormalizeOptions opt)
    : reg_(reg), opt_(opt), oracle_(reg.graph()) {
  for (const auto& inst : reg_.instances()) by_rule_[inst.rule].push_back(&inst);
}

std::size_t Normalizer::fuel_for(const Expression& e) const {
  const std::size_t L = std::max<std::size_t>(e.terms.size(), 1);
  return opt_.fuel_multiplier * 10 * L * L;
}

void Normalizer::check(const std::string& stage, const Expression& in, const LinComb& out) {
  if (!opt_.check_stages) return;
  const CoxeterGraph& g = graph();
  Word cod = typecheck(in, g);
  auto a = oracle_.eval(in);
  auto b = oracle_.eval(out, in.domain, cod);
  if (auto d = first_difference(a, b))
    throw InvariantError(stage + " changed the morphism of " + print_expr(in, g) + " at " +
                         mask_name(*d, in.domain.size()));
}

std::optional<LinComb> Normalizer::apply_at(const std::string& rule, const Expression& e,
                                            const std::vector<Word>& words, std::size_t k) {
  auto it = by_rule_.find(rule);
  if (it == by_rule_.end()) return std::nullopt;
  for (const RuleInstance* inst : it->second)
    if (auto m = Registry::match(*inst, e, words, k)) return Registry::replace(e, *m);
  return std::nullopt;
}

namespace {

void log(Trace* tr, const std::string& stage, const std::string& rule, std::size_t site,
         const std::string& keys, const Expression& e, const CoxeterGraph& g) {
  if (tr) tr->steps.push_back({stage, rule, site, keys, print_expr(e, g)});
}

void violation(Trace* tr, const std::string& what) {
  if (tr) tr->violations.push_back(what);
}

}  // namespace

// ---------------------------------------------------------------- F1

LinComb Normalizer::f1(const Expression& e, Trace* tr) {
  LinComb out;
  f1_rec(Poly(1), e, out, tr, 0, fuel_for(e));
  check("F1", e, out);
  return out;
}

void Normalizer::f1_rec(const Poly& c0, const Expression& e0, LinComb& out, Trace* tr,
                        std::size_t depth, std::size_t fuel) {
  const CoxeterGraph& g = graph();
  Poly c = c0;
  Expression e = e0;
  while (true) {
    std::size_t k = e.terms.size();
    for (std::size_t i = e.terms.size(); i-- > 0;)
      if (e.terms[i].kind == Kind::X) {
        k = i;
        break;
      }
    if (k == e.terms.size()) {
      out.add(e, c);
      return;
    }
    if (++depth > fuel) throw FuelExhausted("F1", print_expr(e, g));
    const Term x = e.terms[k];
    if (x.pos == 0) {
      // left multiplication commutes with every left-linear map
      c = c * x_form(x.s, g);
      e.terms.erase(e.terms.begin() + k);
      log(tr, "F1", "coefficient", k + 1, "", e, g);
      continue;
    }
    if (k + 1 == e.terms.size())
      throw InvariantError("x term in a nonzero slot at the end of an R-expression");
    if (auto sw = commute_terms(x, e.terms[k + 1])) {
      e.terms[k] = sw->first;
      e.terms[k + 1] = sw->second;
      continue;
    }
    const Kind below = e.terms[k + 1].kind;
    const std::string rule = below == Kind::J ? "g" : below == Kind::F ? "f" : "";
    auto words = running_words(e, g);
    auto res = rule.empty() ? std::nullopt : apply_at(rule, e, words, k);
    if (!res) throw InvariantError("F1: x term blocked by " + print_term(e.terms[k + 1], g));
    for (const auto& [ne, nc] : *res) {
      log(tr, "F1", rule, k + 1, "", ne, g);
      f1_rec(c * nc, ne, out, tr, depth, fuel);
    }
    return;
  }
}

// ---------------------------------------------------------------- F2

LinComb Normalizer::f2(const Expression& e, Trace* tr) {
  LinComb out;
  f2_rec(Poly(1), e, out, tr, 0, fuel_for(e));
  check("F2", e, out);
  return out;
}

void Normalizer::f2_rec(const Poly& c, const Expression& e, LinComb& out, Trace* tr,
                        std::size_t depth, std::size_t fuel) {
  const CoxeterGraph& g = graph();
  const MeasureRecord st = stats(e, g);
  if (st.m_bad_count == 0) {
    out.add(e, c);
    return;
  }
  if (++depth > fuel) throw FuelExhausted("F2", print_expr(e, g));
  if (tr) ++tr->f2_rounds;
  const auto words = running_words(e, g);
  const std::size_t k = st.min_m_bad - 1;
  const Term mt = e.terms[k];
  const Word& w = words[k];
  const int i = mt.pos;
  int p = i - 1;
  while (p >= 0 && w[p] != mt.s) --p;
  if (p < 0) throw InvariantError("F2: m-bad term without a partner");

  // carry the letter leftwards until it sits next to its partner
  Expression mid;
  mid.domain = e.domain;
  mid.terms.assign(e.terms.begin(), e.terms.begin() + k);
  for (int q = i - 1; q > p; --q) mid.terms.push_back(Term::f(w[q], mt.s, q));
  const std::size_t site = mid.terms.size();
  mid.terms.push_back(Term::m(mt.s, p + 1));
  mid.terms.insert(mid.terms.end(), e.terms.begin() + k + 1, e.terms.end());
  if (i - 1 > p) log(tr, "F2", "b^-1", k + 1, "", mid, g);

  auto mid_words = running_words(mid, g);
  auto res = apply_at("7", mid, mid_words, site);
  if (!res) throw InvariantError("F2: relation 7 does not match");
  const F2Key before = f2_key(st);
  for (const auto& [ne, nc] : *res) {
    log(tr, "F2", "7", site + 1, key_string(f2_key(ne, g)), ne, g);
    LinComb extracted;
    f1_rec(Poly(1), ne, extracted, tr, 0, fuel_for(ne));
    for (const auto& [fe, fc] : extracted) {
      const MeasureRecord fs = stats(fe, g);
      if (fs.m_bad_count > 0 && !(f2_key(fs) < before))
        violation(tr, "F2 key " + key_string(f2_key(fs)) + " not below " + key_string(before) +
                          " for " + print_expr(fe, g));
      f2_rec(c * nc * fc, fe, out, tr, depth, fuel);
    }
  }
}

// ---------------------------------------------------------------- F3

namespace {

struct Site {
  Expression next;
  std::string rule;
  std::size_t index;
};

/// Strict dependency order of a run of crossings (by run-relative index).
std::vector<std::vector<bool>> run_order(const Expression& e, std::size_t lo, std::size_t hi) {
  const std::size_t n = hi - lo;
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      bool dep = std::abs(e.terms[lo + i].pos - e.terms[lo + j].pos) <= 1;
      for (std::size_t m = i + 1; m < j && !dep; ++m)
        dep = less[i][m] && std::abs(e.terms[lo + m].pos - e.terms[lo + j].pos) <= 1;
      less[i][j] = dep;
    }
  return less;
}

/// Linear extension of the run with S consecutive: elements not above S,
/// then S, then elements above S. Empty if S is not convex (or, when
/// `upset`, if anything lies above S).
std::optional<std::vector<std::size_t>> linearize(const std::vector<std::vector<bool>>& less,
                                                  const std::vector<std::size_t>& S, bool upset) {
  const std::size_t n = less.size();
  std::vector<bool> in_s(n, false), above(n, false), below(n, false);
  for (auto s : S) in_s[s] = true;
  for (std::size_t z = 0; z < n; ++z) {
    if (in_s[z]) continue;
    for (auto s : S) {
      if (less[s][z]) above[z] = true;
      if (less[z][s]) below[z] = true;
    }
    if (above[z] && below[z]) return std::nullopt;
    if (above[z] && upset) return std::nullopt;
  }
  std::vector<std::size_t> order;
  for (std::size_t z = 0; z < n; ++z)
    if (!in_s[z] && !above[z]) order.push_back(z);
  for (auto s : S) order.push_back(s);
  for (std::size_t z = 0; z < n; ++z)
    if (above[z]) order.push_back(z);
  return order;
}

}  // namespace

Expression Normalizer::f3(const Expression& e, Trace* tr) {
  const CoxeterGraph& g = graph();
  Expression cur = e;
  const std::size_t fuel = fuel_for(e);
  std::size_t steps = 0;
  while (true) {
    const std::size_t n = cur.terms.size();
    std::optional<Site> found;
    for (std::size_t k1 = 0; k1 < n && !found; ++k1) {
      if (cur.terms[k1].kind != Kind::F) continue;
      std::size_t lo = k1, hi = k1;
      while (lo > 0 && cur.terms[lo - 1].kind == Kind::F) --lo;
      while (hi < n && cur.terms[hi].kind == Kind::F) ++hi;
      const auto less = run_order(cur, lo, hi);
      const std::size_t a = k1 - lo, m = hi - lo;
      const Kind after = hi < n ? cur.terms[hi].kind : Kind::A;

      auto attempt = [&](const std::string& rule, std::vector<std::size_t> S,
                         bool tail) -> std::optional<Site> {
        auto order = linearize(less, S, tail);
        if (!order) return std::nullopt;
        Expression re;
        re.domain = cur.domain;
        re.terms.assign(cur.terms.begin(), cur.terms.begin() + lo);
        for (auto z : *order) re.terms.push_back(cur.terms[lo + z]);
        re.terms.insert(re.terms.end(), cur.terms.begin() + hi, cur.terms.end());
        // equal crossings may repeat within a run, so locate S by index
        const std::size_t idx =
            lo + static_cast<std::size_t>(std::find(order->begin(), order->end(), S[0]) -
                                          order->begin());
        if (rule == "x") {
          auto sw = commute_terms(re.terms[idx], re.terms[idx + 1]);
          if (!sw) return std::nullopt;
          re.terms[idx] = sw->first;
          re.terms[idx + 1] = sw->second;
          return Site{re, rule, idx};
        }
        auto words = running_words(re, g);
        auto res = apply_at(rule, re, words, idx);
        if (!res) return std::nullopt;
        if (res->empty()) return Site{Expression{cur.domain, {}}, rule, idx};  // not expected
        return Site{res->begin()->first, rule, idx};
      };

      for (const auto& rule : f3_rule_order()) {
        if (found) break;
        if (rule == "a") {
          for (std::size_t b = a + 1; b < m && !found; ++b) found = attempt(rule, {a, b}, false);
        } else if (rule == "e") {
          for (std::size_t b = a + 1; b < m && !found; ++b)
            for (std::size_t c = b + 1; c < m && !found; ++c) found = attempt(rule, {a, b, c}, false);
        } else if (rule == "c'") {
          if (after != Kind::J) continue;
          for (std::size_t b = a + 1; b < m && !found; ++b) found = attempt(rule, {a, b}, true);
        } else if (rule == "b" || rule == "b'") {
          if (after == Kind::M) found = attempt(rule, {a}, true);
        } else if (rule == "c") {
          if (after == Kind::J) found = attempt(rule, {a}, true);
        } else if (rule == "x") {
          if (after == Kind::M || after == Kind::J) found = attempt(rule, {a}, true);
        }
      }
    }
    if (!found) break;
    if (++steps > fuel) throw FuelExhausted("F3", print_expr(cur, g));
    if (tr) ++tr->f3_steps;
    const F3Key before = f3_key(cur, g);
    const F3Key after = f3_key(found->next, g);
    if (!(after < before))
      violation(tr, "F3 key " + key_string(after) + " not below " + key_string(before) +
                        " after " + found->rule);
    log(tr, "F3", found->rule, found->index + 1, key_string(after), found->next, g);
    cur = std::move(found->next);
  }
  if (!parse_moves(cur, g))
    throw InvariantError("F3 output is not a good g-expression: " + print_expr(cur, g));
  check("F3", e, LinComb(cur));
  return cur;
}

// ---------------------------------------------------------------- F4

Expression Normalizer::f4(const Expression& e, Trace* tr) {
  const CoxeterGraph& g = graph();
  auto moves = parse_moves(e, g);
  if (!moves) throw InputError("F4 needs a good g-expression: " + print_expr(e, g));
  if (is_good_order(*moves)) return e;
  auto sorted = synthesize(e.domain, strand_partition(e, g), g);
  Expression out = expand(sorted, e.domain, g);
  log(tr, "F4", "reorder", 0, print_moves(sorted), out, g);
  check("F4", e, LinComb(out));
  return out;
}

// ---------------------------------------------------------------- F5

LinComb Normalizer::f5(const Expression& e, Trace* tr) {
  LinComb out;
  f5_rec(Poly(1), e, out, tr, 0, fuel_for(e));
  check("F5", e, out);
  return out;
}

void Normalizer::f5_rec(const Poly& c, const Expression& e, LinComb& out, Trace* tr,
                        std::size_t round, std::size_t fuel) {
  const CoxeterGraph& g = graph();
  if (++round > fuel) throw FuelExhausted("F5", print_expr(e, g));
  if (tr) ++tr->f5_rounds;
  const MeasureRecord st = stats(e, g);
  const bool fires = st.m_bad_count > 0;
  if (fires && tr) ++tr->f5_rounds_with_7;
  LinComb l2 = fires ? f2(e, tr) : LinComb(e);
  for (const auto& [e2, c2] : l2) {
    Expression e4 = f4(f3(e2, tr), tr);
    const MeasureRecord s4 = stats(e4, g);
    if (fires && !(f5_key(s4) < f5_key(st)))
      violation(tr, "F5 key " + std::to_string(f5_key(s4)) + " not below " +
                        std::to_string(f5_key(st)) + " for " + print_expr(e4, g));
    log(tr, "F5", fires ? "round" : "pass", round, "f5=" + std::to_string(f5_key(s4)), e4, g);
    if (s4.m_bad_count > 0)
      f5_rec(c * c2, e4, out, tr, round, fuel);
    else
      out.add(e4, c * c2);
  }
}

// ---------------------------------------------------------------- alpha

LinComb Normalizer::alpha_eliminate(const Expression& e, Trace* tr) {
  LinComb out;
  alpha_rec(Poly(1), e, out, tr);
  check("alpha", e, out);
  return out;
}

void Normalizer::alpha_rec(const Poly& c, const Expression& e, LinComb& out, Trace* tr) {
  const CoxeterGraph& g = graph();
  if (has_x(e)) {
    LinComb l;
    f1_rec(Poly(1), e, l, tr, 0, fuel_for(e));
    for (const auto& [ne, nc] : l) alpha_rec(c * nc, ne, out, tr);
    return;
  }
  std::size_t k = e.terms.size();
  for (std::size_t i = e.terms.size(); i-- > 0;)
    if (e.terms[i].kind == Kind::A) {
      k = i;
      break;
    }
  if (k == e.terms.size()) {
    out.add(e, c);
    return;
  }
  const auto words = running_words(e, g);
  const Term alpha = e.terms[k];
  const std::size_t a = static_cast<std::size_t>(alpha.pos);
  Expression below{words[k + 1], {e.terms.begin() + k + 1, e.terms.end()}};
  for (const auto& [leaf, lc] : f5(below, tr)) {
    Partition part = strand_partition(leaf, g);
    // fuse the two groups joined by the cup
    Partition fused;
    std::vector<std::size_t> joined;
    bool same = false;
    for (const auto& grp : part) {
      bool has1 = std::find(grp.begin(), grp.end(), a) != grp.end();
      bool has2 = std::find(grp.begin(), grp.end(), a + 1) != grp.end();
      if (has1 && has2) same = true;
      std::vector<std::size_t> mapped;
      for (auto q : grp) {
        if (q == a || q == a + 1) continue;
        mapped.push_back(q < a ? q : q - 2);
      }
      if (has1 || has2)
        joined.insert(joined.end(), mapped.begin(), mapped.end());
      else
        fused.push_back(std::move(mapped));
    }
    if (same) {
      log(tr, "alpha", "6", k + 1, "", leaf, g);
      continue;
    }
    Poly coef = c * lc;
    Expression ne;
    ne.domain = e.domain;
    ne.terms.assign(e.terms.begin(), e.terms.begin() + k);
    if (joined.empty()) {
      ne.terms.push_back(Term::x(alpha.s, alpha.pos));
      coef = coef * Rat(2);
    } else {
      std::sort(joined.begin(), joined.end());
      fused.push_back(std::move(joined));
    }
    std::sort(fused.begin(), fused.end());
    auto moves = synthesize(words[k], fused, g);
    Expression tail = expand(moves, words[k], g);
    ne.terms.insert(ne.terms.end(), tail.terms.begin(), tail.terms.end());
    log(tr, "alpha", joined.empty() ? "bubble" : "fuse", k + 1, "", ne, g);
    alpha_rec(coef, ne, out, tr);
  }
}

// ---------------------------------------------------------------- pipeline

LinComb Normalizer::normalize(const Expression& e, Trace* tr) {
  const CoxeterGraph& g = graph();
  if (!typecheck(e, g).empty()) throw InputError("normalize needs an expression ending in R");
  LinComb out;
  for (const auto& [ae, ac] : alpha_eliminate(e, tr))
    for (const auto& [fe, fc] : f5(ae, tr)) out.add(fe, ac * fc);
  for (const auto& [fe, fc] : out)
    if (!is_member_FL(fe, g))
      throw InvariantError("normal form outside the light leaves: " + print_expr(fe, g));
  check("normalize", e, out);
  return out;
}

LinComb Normalizer::normalize(const LinComb& lc, Trace* tr) {
  LinComb out;
  for (const auto& [e, c] : lc) out.add(normalize(e, tr), c);
  return out;
}

}  // namespace soergel
