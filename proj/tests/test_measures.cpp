#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "soergel/coxeter.hpp"
#include "soergel/measures.hpp"
#include "soergel/registry.hpp"

using namespace soergel;

namespace {
const Gen s = 0, r = 1, t = 2;
}

TEST_CASE("left type") {
  auto two = graph_a1xa1();
  auto inf = graph_inf_dihedral();
  CHECK(is_left_type({r, s, r}, 3, two));
  CHECK(!is_left_type({r, s, r}, 3, inf));
  CHECK(!is_left_type({r}, 1, two));
  CHECK(is_left_type({s, s}, 2, two));
  CHECK(!is_left_type({s, s}, 1, two));
  CHECK(left_type_at({s, s}, 1, two));
}

TEST_CASE("stats on the basic examples") {
  auto g = graph_a1();
  auto mm = stats({{s, s}, {Term::m(s, 0), Term::m(s, 0)}}, g);
  CHECK(mm.m_bad_count == 0);
  CHECK(mm.min_m_bad == 0);

  auto bad = stats({{s, s}, {Term::m(s, 1), Term::m(s, 0)}}, g);
  CHECK(bad.m_bad_count == 1);
  CHECK(bad.min_m_bad == 1);
  CHECK(bad.mj_after_min_m_bad == 1);
  CHECK(bad.fn_of_m_bads == std::make_pair<std::size_t, std::size_t>(1, 1));
  CHECK(bad.mj_equal_to_left == 1);

  auto jm = stats({{s, s}, {Term::j(s, 0), Term::m(s, 0)}}, g);
  CHECK(jm.j_bad_count == 0);
  CHECK(jm.j_positions == std::vector<std::size_t>{1});
  CHECK(jm.depth_mj == 3);
  CHECK(jm.m_far_from_bottom == 0);
}

TEST_CASE("crossing statistics") {
  auto g = graph_a1xa1();
  auto st = stats({{s, r}, {Term::f(s, r, 0), Term::m(r, 0), Term::m(s, 0)}}, g);
  CHECK(st.f_count == 1);
  CHECK(st.f_to_right == 0);
  CHECK(st.m_bad_count == 0);
  CHECK(st.m_far_from_bottom == 1);
}

TEST_CASE("f3 keys across single relation instances") {
  auto g = graph_mixed();
  Registry reg(g);
  // relation a removes two crossings
  Expression aa{{s, r}, {Term::f(s, r, 0), Term::f(r, s, 0)}};
  CHECK(f3_key(Expression{{s, r}, {}}, g) < f3_key(aa, g));

  // relation y (disjoint crossings swap) leaves the key unchanged
  auto ys = reg.instances_of("y");
  REQUIRE(!ys.empty());
  for (const auto* inst : ys) {
    const auto& rhs = inst->rhs.begin()->first;
    CHECK(f3_key(rhs, g) == f3_key(inst->lhs, g));
  }

  // relation x on (s,r,t): F(s,r)@0 then M(t)@2 against the swapped order
  Expression before{{s, r, t}, {Term::f(s, r, 0), Term::m(t, 2)}};
  Expression after{{s, r, t}, {Term::m(t, 2), Term::f(s, r, 0)}};
  auto kb = f3_key(before, g), ka = f3_key(after, g);
  CHECK(std::get<0>(ka) == std::get<0>(kb));
  CHECK(std::get<2>(ka) == std::get<2>(kb));
  CHECK(std::get<3>(ka) < std::get<3>(kb));
  CHECK(ka < kb);

  // every x instance in the registry decreases the key
  for (const auto* inst : reg.instances_of("x"))
    CHECK(f3_key(inst->rhs.begin()->first, g) < f3_key(inst->lhs, g));
}

TEST_CASE("record printing") {
  auto g = graph_a1();
  auto text = stats({{s, s}, {Term::m(s, 1), Term::m(s, 0)}}, g).to_string();
  CHECK(text.find("m_bad_count: 1") != std::string::npos);
  CHECK(text.find("min_m_bad: 1") != std::string::npos);
}
