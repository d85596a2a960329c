#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "soergel/bimodule.hpp"
#include "soergel/coxeter.hpp"
#include "soergel/errors.hpp"
#include "soergel/lightleaves.hpp"
#include "soergel/measures.hpp"
#include "soergel/registry.hpp"
#include "soergel/rewrite.hpp"

using namespace soergel;

namespace {

const Gen s = 0, r = 1;

NormalizeOptions checked() {
  NormalizeOptions o;
  o.check_stages = true;
  return o;
}

bool same_map(Oracle& o, const Expression& e, const LinComb& lc, const CoxeterGraph& g) {
  return o.eval(e) == o.eval(lc, e.domain, typecheck(e, g));
}

}  // namespace

TEST_CASE("relation instances quoted as examples") {
  auto g = graph_a1();
  Registry reg(g);
  Oracle o(g);
  // relation 6 sends j o alpha to zero
  bool found6 = false;
  for (const auto* inst : reg.instances_of("6")) {
    CHECK(inst->lhs.terms == std::vector<Term>{Term::a(s, 0), Term::j(s, 0)});
    CHECK(inst->rhs.empty());
    found6 = true;
  }
  CHECK(found6);

  // relation 7 on (s,s)
  LinComb seven;
  seven.add({{s, s}, {Term::m(s, 0)}}, Poly(1));
  seven.add({{s, s}, {Term::j(s, 0), Term::x(s, 1)}}, Poly(1));
  seven.add({{s, s}, {Term::j(s, 0), Term::x(s, 0)}}, Poly(-1));
  CHECK(o.eval(Expression{{s, s}, {Term::m(s, 1)}}) == o.eval(seven, {s, s}, {s}));

  // relation g with the infinite neighbour, built from the coefficients
  auto inf = graph_inf_dihedral();
  RepCoefficients c(inf);
  Oracle oi(inf);
  Expression lhs{{r, r}, {Term::x(s, 1), Term::j(r, 0)}};
  LinComb rhs;
  rhs.add({{r, r}, {Term::m(r, 0)}}, Poly(c.mu(r, s)));
  for (Gen u = 0; u < inf.size(); ++u)
    rhs.add({{r, r}, {Term::j(r, 0), Term::x(u, 0)}}, Poly(c.lambda(r, s)[u]));
  // r.x_s = P_r(x_s) - I_r(x_s) lands in the left slot
  rhs.add({{r, r}, {Term::j(r, 0), Term::x(r, 0)}}, Poly(-c.mu(r, s)));
  CHECK(oi.eval(lhs) == oi.eval(rhs, {r, r}, {r}));
}

TEST_CASE("F1 takes out x terms") {
  auto g = graph_a1();
  Registry reg(g);
  Normalizer nz(reg, checked());
  Poly xs = x_form(s, g);
  LinComb want({{s}, {Term::m(s, 0)}}, xs);
  CHECK(nz.f1({{s}, {Term::x(s, 0), Term::m(s, 0)}}) == want);
  CHECK(nz.f1({{s}, {Term::x(s, 1), Term::m(s, 0)}}) == want);
  Oracle o(g);
  Expression mid{{s, s}, {Term::x(s, 1), Term::j(s, 0), Term::m(s, 0)}};
  auto out = nz.f1(mid);
  CHECK(same_map(o, mid, out, g));
  for (const auto& [e, c] : out) CHECK(!has_x(e));
}

TEST_CASE("F2 removes m-bad terms") {
  auto g = graph_a1();
  Registry reg(g);
  Normalizer nz(reg, checked());
  Oracle o(g);
  Expression bad{{s, s}, {Term::m(s, 1), Term::m(s, 0)}};
  Trace tr;
  auto out = nz.f2(bad, &tr);
  CHECK(out == LinComb({{s, s}, {Term::m(s, 0), Term::m(s, 0)}}));
  CHECK(tr.violations.empty());
  Expression good{{s, s}, {Term::j(s, 0), Term::m(s, 0)}};
  CHECK(nz.f2(good) == LinComb(good));

  auto two = graph_a1xa1();
  Registry reg2(two);
  Normalizer nz2(reg2, checked());
  Oracle o2(two);
  Expression far{{s, r, s}, {Term::m(s, 2), Term::m(r, 1), Term::m(s, 0)}};
  Trace tr2;
  auto out2 = nz2.f2(far, &tr2);
  CHECK(same_map(o2, far, out2, two));
  for (const auto& [e, c] : out2) CHECK(stats(e, two).m_bad_count == 0);
  CHECK(tr2.violations.empty());
}

TEST_CASE("F3 examples") {
  auto g = graph_a1xa1();
  Registry reg(g);
  Normalizer nz(reg, checked());
  Expression dbl{{s, r}, {Term::f(s, r, 0), Term::f(r, s, 0), Term::m(s, 0), Term::m(r, 0)}};
  auto a = nz.f3(dbl);
  CHECK(stats(a, g).f_count == 0);

  Expression cross{{s, r}, {Term::f(s, r, 0), Term::m(r, 0), Term::m(s, 0)}};
  CHECK(nz.f3(cross) == Expression{{s, r}, {Term::m(r, 1), Term::m(s, 0)}});

  Expression fixed{{s, r}, {Term::m(r, 1), Term::m(s, 0)}};
  CHECK(nz.f3(fixed) == fixed);
}

TEST_CASE("alpha elimination") {
  auto g = graph_a1();
  Registry reg(g);
  Normalizer nz(reg, checked());
  CHECK(nz.alpha_eliminate({{}, {Term::a(s, 0), Term::j(s, 0), Term::m(s, 0)}}).empty());
  auto eps = nz.alpha_eliminate({{}, {Term::a(s, 0), Term::m(s, 0), Term::m(s, 0)}});
  CHECK(eps == LinComb(Expression{{}, {}}, Poly(2) * x_form(s, g)));
  std::vector<Term> jp = p_macro(s, 0);
  jp.push_back(Term::j(s, 0));
  jp.push_back(Term::m(s, 0));
  CHECK(nz.alpha_eliminate({{s}, jp}).empty());
}

TEST_CASE("F4 puts moves in good order") {
  auto g = graph_a1();
  Registry reg(g);
  Normalizer nz(reg, checked());
  Expression up = expand({{MoveKind::M, 0, 0}, {MoveKind::M, 0, 0}}, {s, s}, g);
  auto fixed = nz.f4(up);
  CHECK(*parse_moves(fixed, g) == std::vector<Move>{{MoveKind::M, 1, 1}, {MoveKind::M, 0, 0}});
  Expression ok = expand({{MoveKind::CCH, 0, 0}}, {s, s}, g);
  CHECK(nz.f4(ok) == ok);
  Expression late = expand({{MoveKind::CCH, 0, 0}, {MoveKind::M, 0, 0}}, {s, s, s}, g);
  auto moves = parse_moves(nz.f4(late), g);
  REQUIRE(moves);
  CHECK(is_good_order(*moves));
}

TEST_CASE("normalize examples") {
  auto g = graph_a1();
  Registry reg(g);
  Normalizer nz(reg, checked());
  CHECK(nz.normalize(Expression{{s, s}, {Term::m(s, 1), Term::m(s, 0)}}) ==
        LinComb({{s, s}, {Term::m(s, 0), Term::m(s, 0)}}));
  CHECK(nz.normalize(Expression{{}, {Term::a(s, 0), Term::j(s, 0), Term::m(s, 0)}}).empty());
  Expression leaf{{s, s}, {Term::j(s, 0), Term::m(s, 0)}};
  CHECK(nz.normalize(leaf) == LinComb(leaf));
  CHECK_THROWS_AS(nz.normalize(Expression{{s}, {}}), InputError);
}

TEST_CASE("normalize on fuzzed input: sound, in FL, idempotent, audited") {
  for (const auto& g : {graph_a1xa1(), graph_inf_dihedral(), graph_mixed()}) {
    Registry reg(g);
    Normalizer nz(reg, checked());
    Oracle o(g);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      Word w(seed % 4);
      for (std::size_t k = 0; k < w.size(); ++k) w[k] = static_cast<Gen>((seed / 4 + k) % g.size());
      auto e = random_expression(g, w, 9, seed);
      Trace tr;
      auto nf = nz.normalize(e, &tr);
      CHECK(same_map(o, e, nf, g));
      for (const auto& [x, c] : nf) CHECK(is_member_FL(x, g));
      CHECK(nz.normalize(nf) == nf);
      CHECK(tr.violations.empty());
    }
  }
}

TEST_CASE("fuel exhaustion is reported") {
  auto g = graph_a1();
  Registry reg(g);
  NormalizeOptions none;
  none.fuel_multiplier = 0;
  Normalizer nz(reg, none);
  CHECK_THROWS_AS(nz.normalize(Expression{{s, s}, {Term::m(s, 1), Term::m(s, 0)}}), FuelExhausted);
}

TEST_CASE("corrupted relations are caught") {
  auto g = graph_a1();
  Registry reg(g);
  reg.corrupt("3");
  Oracle o(g);
  std::size_t bad = 0;
  for (const auto& line : reg.check(o)) bad += line.failure.has_value();
  CHECK(bad > 0);
  CHECK_THROWS_AS(reg.verify(), InvariantError);
}

TEST_CASE("commute_terms") {
  auto sw = commute_terms(Term::m(s, 2), Term::j(r, 0));
  REQUIRE(sw);
  CHECK(sw->first == Term::j(r, 0));
  CHECK(sw->second == Term::m(s, 1));
  CHECK(!commute_terms(Term::j(s, 0), Term::m(s, 0)));
  auto past = commute_terms(Term::m(s, 0), Term::j(r, 0));
  REQUIRE(past);
  CHECK(past->first == Term::j(r, 1));
  CHECK(past->second == Term::m(s, 0));
  auto up = commute_terms(Term::a(s, 0), Term::m(r, 3));
  REQUIRE(up);
  CHECK(up->first == Term::m(r, 1));
  CHECK(up->second == Term::a(s, 0));
}
