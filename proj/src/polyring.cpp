#include "soergel/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "soergel/errors.hpp"

namespace soergel {

namespace mono {

unsigned degree(Mono m) {
  unsigned d = 0;
  for (std::size_t i = 0; i < 8; ++i) d += exp(m, i);
  return d;
}

Mono mul(Mono a, Mono b) {
  for (std::size_t i = 0; i < 8; ++i)
    if (exp(a, i) + exp(b, i) > 0xffu) throw InvariantError("monomial exponent overflow");
  return a + b;
}

}  // namespace mono

namespace {

bool term_less(Mono a, Mono b) {
  unsigned da = mono::degree(a), db = mono::degree(b);
  if (da != db) return da < db;
  return a > b;
}

}  // namespace

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.emplace_back(Mono{0}, c);
}

Poly Poly::var(std::size_t i) {
  if (i >= CoxeterGraph::kMaxGens) throw InvariantError("variable index out of range");
  Poly p;
  p.terms_.emplace_back(mono::unit(i), Rat(1));
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return term_less(a.first, b.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.second == 0; }),
            out.end());
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rat Poly::constant() const {
  if (!terms_.empty() && terms_[0].first == 0) return terms_[0].second;
  return Rat(0);
}

unsigned Poly::degree() const {
  return terms_.empty() ? 0 : mono::degree(terms_.back().first);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && term_less(a->first, b->first))) {
      out.push_back(std::move(*a++));
    } else if (a == ae || term_less(b->first, a->first)) {
      out.push_back(*b++);
    } else {
      Rat c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b * a.terms_[0].second;
  if (b.is_constant()) return a * b.terms_[0].second;
  std::unordered_map<Mono, Rat> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[mono::mul(x.first, y.first)] += x.second * y.second;
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& kv : acc)
    if (kv.second != 0) terms.emplace_back(kv.first, std::move(kv.second));
  Poly r;
  r.terms_ = std::move(terms);
  r.normalize();
  return r;
}

bool Poly::operator<(const Poly& o) const {
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (terms_[i].first != o.terms_[i].first) return term_less(terms_[i].first, o.terms_[i].first);
    if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
  }
  return terms_.size() < o.terms_.size();
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  // powers[i][k] = images[i]^k, built lazily
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(Poly(1));
    while (v.size() <= k) v.push_back(v.back() * images[i]);
    return v[k];
  };
  Poly r;
  for (const auto& t : terms_) {
    Poly m(t.second);
    for (std::size_t i = 0; i < 8; ++i) {
      unsigned e = mono::exp(t.first, i);
      if (e == 0) continue;
      if (i >= images.size()) throw InvariantError("substitution misses a variable");
      m = m * power(i, e);
    }
    r += m;
  }
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Poly::to_string(const CoxeterGraph& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < 8; ++i) {
      unsigned e = mono::exp(m, i);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "y_" + (i < g.size() ? g.name(static_cast<Gen>(i)) : std::to_string(i));
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      os << rat_to_string(a);
    } else if (a == 1) {
      os << vars;
    } else {
      os << rat_to_string(a) << "*" << vars;
    }
  }
  return os.str();
}

namespace {

std::vector<Poly> reflection_images(Gen s, const CoxeterGraph& g) {
  std::vector<Poly> img;
  for (std::size_t i = 0; i < g.size(); ++i) img.push_back(Poly::var(i));
  Poly ys = -Poly::var(s);
  for (std::size_t t = 0; t < g.size(); ++t)
    if (g.infinite(s, static_cast<Gen>(t))) ys += Poly::var(t) * Rat(2);
  img[s] = ys;
  return img;
}

}  // namespace

Poly act(Gen s, const Poly& p, const CoxeterGraph& g) {
  if (s >= g.size()) throw InputError("unknown generator index");
  if (p.is_constant()) return p;
  return p.substitute(reflection_images(s, g));
}

Poly x_form(Gen s, const CoxeterGraph& g) {
  Poly x = Poly::var(s);
  for (std::size_t t = 0; t < g.size(); ++t)
    if (g.infinite(s, static_cast<Gen>(t))) x -= Poly::var(t);
  return x;
}

Poly p_op(Gen s, const Poly& p, const CoxeterGraph& g) {
  return (p + act(s, p, g)) * Rat(1, 2);
}

Poly i_op(Gen s, const Poly& p, const CoxeterGraph& g) {
  return (p - act(s, p, g)) * Rat(1, 2);
}

Poly divide_by_x(Gen s, const Poly& q, const CoxeterGraph& g) {
  // x_s has leading variable y_s with coefficient 1; peel off y_s-degree from the top.
  Poly x = x_form(s, g);
  Poly rest = x - Poly::var(s);  // x_s = y_s + rest
  std::map<Mono, Rat> work;
  for (const auto& t : q.terms()) work[t.first] = t.second;
  std::vector<Poly::Term> quot;
  const Mono ys = mono::unit(s);
  while (true) {
    // pick the term with the largest y_s exponent
    auto best = work.end();
    unsigned best_e = 0;
    for (auto it = work.begin(); it != work.end(); ++it) {
      unsigned e = mono::exp(it->first, s);
      if (e > best_e) {
        best_e = e;
        best = it;
      }
    }
    if (best == work.end()) break;
    Mono m = best->first - ys;
    Rat c = best->second;
    work.erase(best);
    quot.emplace_back(m, c);
    for (const auto& t : rest.terms()) {
      Mono mm = mono::mul(m, t.first);
      Rat& slot = work[mm];
      slot -= c * t.second;
      if (slot == 0) work.erase(mm);
    }
  }
  if (!work.empty()) throw InvariantError("inexact division by x_" + g.name(s));
  return Poly::from_terms(std::move(quot));
}

Poly demazure(Gen s, const Poly& p, const CoxeterGraph& g) {
  if (p.is_constant()) return Poly();
  return divide_by_x(s, i_op(s, p, g), g);
}

Rat specialize(const Poly& p, const std::vector<Rat>& point) {
  Rat r = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat v = c;
    for (std::size_t i = 0; i < 8; ++i) {
      unsigned e = mono::exp(m, i);
      if (e == 0) continue;
      if (i >= point.size()) throw InputError("specialization point misses a variable");
      Rat pw = 1;
      for (unsigned k = 0; k < e; ++k) pw *= point[i];
      v *= pw;
    }
    r += v;
  }
  return r;
}

Rat specialize(const Poly& p, const std::map<std::string, Rat>& point, const CoxeterGraph& g) {
  std::vector<Rat> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto it = point.find(g.name(static_cast<Gen>(i)));
    if (it == point.end()) {
      // only variables that occur need a value
      bool used = false;
      for (const auto& t : p.terms())
        if (mono::exp(t.first, i) != 0) used = true;
      if (used) throw InputError("no value for y_" + g.name(static_cast<Gen>(i)));
      continue;
    }
    v[i] = it->second;
  }
  return specialize(p, v);
}

}  // namespace soergel
