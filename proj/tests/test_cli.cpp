#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using soergel::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check") {
  CHECK(call({"check", "a1"}).code == 0);
  auto mixed = call({"check", "mixed"});
  CHECK(mixed.code == 0);
  CHECK(mixed.out.find("failures: 0") != std::string::npos);
  auto bad = call({"check", "a1", "--corrupt", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL e") != std::string::npos);
}

TEST_CASE("normalize") {
  auto zero = call({"normalize", "inf", "word | a@0(r) ; j@0(r) ; m@0(r)"});
  CHECK(zero.code == 0);
  CHECK(zero.out == "0\n");
  auto mm = call({"normalize", "a1", "word s s | m@1(s) ; m@0(s)"});
  CHECK(mm.code == 0);
  CHECK(mm.out == "1 * [ m@0(s) ; m@0(s) ]\n");
  auto traced = call({"normalize", "a1", "word s s | m@1(s) ; m@0(s)", "--trace"});
  CHECK(traced.out.find("trace:\nF2 7") != std::string::npos);
  auto ill = call({"normalize", "a1", "word s | m@0(s) ; m@0(s)"});
  CHECK(ill.code == 2);
  CHECK(ill.err.find("term 1") != std::string::npos);
  CHECK(call({"normalize", "a1", "word s | j@0(s"}).code == 2);
  CHECK(call({"normalize", "a1", "word s s | j@0(s)"}).code == 2);
  CHECK(call({"--fuel", "0", "normalize", "a1", "word s s | m@1(s) ; m@0(s)"}).code == 3);
}

TEST_CASE("basis") {
  auto ss = call({"basis", "a1", "s", "s"});
  CHECK(ss.code == 0);
  CHECK(ss.out == "word s s | m@0(s) ; m@0(s)\nword s s | j@0(s) ; m@0(s)\ncount: 2\n");
  auto v = call({"basis", "mixed", "s", "t", "s", "--verify-independence"});
  CHECK(v.code == 0);
  CHECK(v.out.find("independent: yes") != std::string::npos);
}

TEST_CASE("eval and stats") {
  auto e = call({"eval", "a1", "word s | m@0(s)"});
  CHECK(e.code == 0);
  CHECK(e.out.find("y_s") != std::string::npos);
  auto st = call({"stats", "a1", "word s s | m@1(s) ; m@0(s)"});
  CHECK(st.out.find("m_bad_count: 1") != std::string::npos);
}

TEST_CASE("fuzz") {
  auto a1 = call({"fuzz", "a1", "--count", "100", "--seed", "0"});
  CHECK(a1.code == 0);
  CHECK(a1.out.find("failures: 0") != std::string::npos);
  CHECK(call({"fuzz", "mixed", "--count", "500", "--seed", "0"}).code == 0);
}

TEST_CASE("input errors and determinism") {
  CHECK(call({"check", "nonexistent-graph"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  auto a = call({"fuzz", "inf", "--count", "50", "--seed", "17"});
  auto b = call({"fuzz", "inf", "--count", "50", "--seed", "17"});
  CHECK(a.out == b.out);
}
