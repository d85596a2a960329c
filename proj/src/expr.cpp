#include "soergel/expr.hpp"

#include <cctype>
#include <random>
#include <sstream>
#include <tuple>

#include "soergel/errors.hpp"

namespace soergel {

int Term::in_arity() const {
  switch (kind) {
    case Kind::J: return 2;
    case Kind::M: return 1;
    case Kind::F: return 2;
    default: return 0;
  }
}

int Term::out_arity() const {
  switch (kind) {
    case Kind::J: return 1;
    case Kind::M: return 0;
    case Kind::A: return 2;
    case Kind::F: return 2;
    default: return 0;
  }
}

bool Term::operator<(const Term& o) const {
  return std::tie(kind, pos, s, r) < std::tie(o.kind, o.pos, o.s, o.r);
}

bool Expression::operator<(const Expression& o) const {
  if (domain != o.domain) return domain < o.domain;
  if (terms.size() != o.terms.size()) return terms.size() < o.terms.size();
  return terms < o.terms;
}

Word step_codomain(const Word& w, const Term& t, const CoxeterGraph& g, std::size_t index) {
  const int n = static_cast<int>(w.size());
  auto letter = [&](int i) -> std::string {
    return i < n ? g.name(w[i]) : std::string("<end>");
  };
  auto expect = [&](int i, Gen s) {
    if (i < 0 || i >= n || w[i] != s)
      throw TypeError(index, "expected " + g.name(s) + " at letter " + std::to_string(i) +
                                 ", found " + letter(i));
  };
  if (t.s >= g.size() || (t.kind == Kind::F && t.r >= g.size()))
    throw TypeError(index, "unknown generator");
  Word out = w;
  switch (t.kind) {
    case Kind::J:
      expect(t.pos, t.s);
      expect(t.pos + 1, t.s);
      out.erase(out.begin() + t.pos);
      break;
    case Kind::M:
      expect(t.pos, t.s);
      out.erase(out.begin() + t.pos);
      break;
    case Kind::A:
      if (t.pos < 0 || t.pos > n) throw TypeError(index, "alpha slot out of range");
      out.insert(out.begin() + t.pos, 2, t.s);
      break;
    case Kind::F:
      if (!g.commute(t.s, t.r))
        throw TypeError(index, "crossing needs m(" + g.name(t.s) + "," + g.name(t.r) + ")=2");
      expect(t.pos, t.s);
      expect(t.pos + 1, t.r);
      std::swap(out[t.pos], out[t.pos + 1]);
      break;
    case Kind::X:
      if (t.pos < 0 || t.pos > n) throw TypeError(index, "x slot out of range");
      break;
  }
  return out;
}

Word typecheck(const Expression& e, const CoxeterGraph& g) {
  Word w = e.domain;
  for (Gen a : w)
    if (a >= g.size()) throw TypeError(0, "domain letter out of range");
  for (std::size_t k = 0; k < e.terms.size(); ++k) w = step_codomain(w, e.terms[k], g, k);
  return w;
}

std::vector<Word> running_words(const Expression& e, const CoxeterGraph& g) {
  std::vector<Word> ws;
  ws.reserve(e.terms.size() + 1);
  ws.push_back(e.domain);
  for (std::size_t k = 0; k < e.terms.size(); ++k)
    ws.push_back(step_codomain(ws.back(), e.terms[k], g, k));
  return ws;
}

std::size_t right_offset(const Word& w, const Term& t) {
  return w.size() - static_cast<std::size_t>(t.pos) - static_cast<std::size_t>(t.in_arity());
}

std::size_t right_offset(const Expression& e, std::size_t k, const CoxeterGraph& g) {
  Word w = e.domain;
  for (std::size_t i = 0; i < k; ++i) w = step_codomain(w, e.terms[i], g, i);
  return right_offset(w, e.terms.at(k));
}

bool has_alpha(const Expression& e) {
  for (const auto& t : e.terms)
    if (t.kind == Kind::A) return true;
  return false;
}

bool has_x(const Expression& e) {
  for (const auto& t : e.terms)
    if (t.kind == Kind::X) return true;
  return false;
}

std::vector<Term> p_macro(Gen s, int i) { return {Term::a(s, i), Term::j(s, i + 1)}; }
std::vector<Term> eps_macro(Gen s, int i) { return {Term::a(s, i), Term::m(s, i)}; }

std::string print_word(const Word& w, const CoxeterGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += g.name(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text, const CoxeterGraph& g) {
  std::string t = text;
  for (auto& c : t)
    if (c == ',' || c == '(' || c == ')') c = ' ';
  std::istringstream is(t);
  Word w;
  std::string n;
  while (is >> n) w.push_back(g.index(n));
  return w;
}

std::string print_term(const Term& t, const CoxeterGraph& g) {
  static const char* kNames[] = {"j", "m", "a", "f", "x"};
  std::string out = kNames[static_cast<int>(t.kind)];
  out += "@" + std::to_string(t.pos) + "(" + g.name(t.s);
  if (t.kind == Kind::F) out += "," + g.name(t.r);
  return out + ")";
}

std::string print_terms(const std::vector<Term>& ts, const CoxeterGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += " ; ";
    out += print_term(ts[i], g);
  }
  return out;
}

std::string print_expr(const Expression& e, const CoxeterGraph& g) {
  std::string out = "word";
  if (!e.domain.empty()) out += " " + print_word(e.domain, g);
  out += " |";
  if (!e.terms.empty()) out += " " + print_terms(e.terms, g);
  return out;
}

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool done() { skip(); return p_ >= s_.size(); }
  bool peek(char c) { skip(); return p_ < s_.size() && s_[p_] == c; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++p_;
  }
  std::string ident() {
    skip();
    std::size_t b = p_;
    while (p_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_' || s_[p_] == '\''))
      ++p_;
    if (b == p_) fail("expected a name");
    return s_.substr(b, p_ - b);
  }
  int number() {
    skip();
    std::size_t b = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (b == p_) fail("expected an offset");
    return std::stoi(s_.substr(b, p_ - b));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("syntax error at position " + std::to_string(p_) + ": " + why);
  }

 private:
  const std::string& s_;
  std::size_t p_ = 0;
};

}  // namespace

Expression parse_expr(const std::string& text, const CoxeterGraph& g) {
  Lexer lx(text);
  Expression e;
  if (lx.ident() != "word") lx.fail("expected 'word'");
  while (!lx.peek('|')) {
    if (lx.done()) lx.fail("expected '|'");
    std::string n = lx.ident();
    if (!g.has(n)) lx.fail("unknown generator '" + n + "'");
    e.domain.push_back(g.index(n));
  }
  lx.expect('|');
  if (lx.done()) return e;
  while (true) {
    std::string k = lx.ident();
    lx.expect('@');
    int i = lx.number();
    lx.expect('(');
    auto gen = [&] {
      std::string n = lx.ident();
      if (!g.has(n)) lx.fail("unknown generator '" + n + "'");
      return g.index(n);
    };
    Gen s = gen();
    Gen r = 0;
    if (k == "f") {
      lx.expect(',');
      r = gen();
    }
    lx.expect(')');
    if (k == "j") e.terms.push_back(Term::j(s, i));
    else if (k == "m") e.terms.push_back(Term::m(s, i));
    else if (k == "a") e.terms.push_back(Term::a(s, i));
    else if (k == "f") e.terms.push_back(Term::f(s, r, i));
    else if (k == "x") e.terms.push_back(Term::x(s, i));
    else if (k == "p") for (auto t : p_macro(s, i)) e.terms.push_back(t);
    else if (k == "eps") for (auto t : eps_macro(s, i)) e.terms.push_back(t);
    else lx.fail("unknown term '" + k + "'");
    if (lx.done()) break;
    lx.expect(';');
  }
  return e;
}

Expression random_expression(const CoxeterGraph& g, const Word& w, std::size_t max_len,
                             std::uint64_t seed, const RandomOptions& opt) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  Expression e;
  e.domain = w;
  Word cur = w;
  if (cur.size() > max_len) throw InputError("word longer than the chain budget");
  for (std::size_t step = 0; step < max_len; ++step) {
    const std::size_t left = max_len - step - 1;  // steps after this one
    const int n = static_cast<int>(cur.size());
    if (n == 0 && rng() % 3 == 0) break;
    std::vector<Term> reducing, other;
    for (int i = 0; i < n; ++i) reducing.push_back(Term::m(cur[i], i));
    for (int i = 0; i + 1 < n; ++i) {
      if (cur[i] == cur[i + 1]) reducing.push_back(Term::j(cur[i], i));
      if (g.commute(cur[i], cur[i + 1])) other.push_back(Term::f(cur[i], cur[i + 1], i));
    }
    if (left >= cur.size()) {
      for (int i = 0; i <= n; ++i)
        for (Gen s = 0; s < g.size(); ++s) {
          if (opt.allow_x && rng() % 4 == 0) other.push_back(Term::x(s, i));
          if (opt.allow_alpha && left >= cur.size() + 2 && cur.size() + 2 <= opt.max_word &&
              rng() % 4 == 0)
            other.push_back(Term::a(s, i));
        }
    }
    if (left < cur.size() || other.empty() || (!reducing.empty() && rng() % 2 == 0)) {
      if (reducing.empty()) break;
      e.terms.push_back(reducing[pick(reducing.size())]);
    } else {
      e.terms.push_back(other[pick(other.size())]);
    }
    cur = step_codomain(cur, e.terms.back(), g, e.terms.size() - 1);
  }
  // the budget argument above guarantees this, but keep the contract explicit
  while (!cur.empty()) {
    e.terms.push_back(Term::m(cur[0], 0));
    cur.erase(cur.begin());
  }
  return e;
}

void LinComb::add(const Expression& e, const Poly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LinComb::add(const LinComb& o, const Poly& c) {
  for (const auto& [e, p] : o.terms_) add(e, p * c);
}

LinComb LinComb::scaled(const Poly& c) const {
  LinComb r;
  r.add(*this, c);
  return r;
}

std::string LinComb::to_string(const CoxeterGraph& g) const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [e, p] : terms_)
    out += p.to_string(g) + " * [ " + print_terms(e.terms, g) + " ]\n";
  return out;
}

}  // namespace soergel
