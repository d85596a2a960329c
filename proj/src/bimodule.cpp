#include "soergel/bimodule.hpp"

#include <random>
#include <sstream>

#include "soergel/errors.hpp"

namespace soergel {

void BimoduleElement::add(Mask m, const Poly& p) {
  if (p.is_zero()) return;
  auto it = coeffs.find(m);
  if (it == coeffs.end()) {
    coeffs.emplace(m, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) coeffs.erase(it);
}

void BimoduleElement::add(const BimoduleElement& o, const Poly& c) {
  if (c.is_zero()) return;
  for (const auto& [m, p] : o.coeffs) add(m, p * c);
}

Poly BimoduleMap::entry(Mask row, Mask col) const {
  const auto& c = columns.at(col).coeffs;
  auto it = c.find(row);
  return it == c.end() ? Poly() : it->second;
}

std::string mask_name(Mask m, std::size_t n) {
  std::string s = "e";
  for (std::size_t k = 0; k < n; ++k) s += (m >> k) & 1u ? '1' : '0';
  return s;
}

std::string BimoduleMap::to_string(const CoxeterGraph& g) const {
  std::ostringstream os;
  const Mask rows = Mask{1} << codomain.size();
  const Mask cols = Mask{1} << domain.size();
  for (Mask r = 0; r < rows; ++r) {
    for (Mask c = 0; c < cols; ++c) {
      if (c) os << " | ";
      os << entry(r, c).to_string(g);
    }
    os << "\n";
  }
  return os.str();
}

std::pair<Poly, Poly> Oracle::split(Gen s, const Poly& p) {
  auto key = std::make_pair(s, p);
  auto it = split_memo_.find(key);
  if (it != split_memo_.end()) return it->second;
  auto val = std::make_pair(p_op(s, p, g_), demazure(s, p, g_));
  split_memo_.emplace(std::move(key), val);
  return val;
}

BimoduleElement Oracle::canonicalize(const Word& w, std::vector<Poly> slots) {
  const std::size_t n = w.size();
  if (slots.size() != n + 1) throw InvariantError("slot count does not match word length");
  struct State {
    Mask mask;
    std::vector<Poly> slots;
  };
  std::vector<State> states{{0, std::move(slots)}};
  for (std::size_t k = n; k >= 1; --k) {
    std::vector<State> next;
    for (auto& st : states) {
      Poly p = std::move(st.slots[k]);
      st.slots.pop_back();
      if (p.is_zero()) continue;
      if (p.is_constant()) {
        st.slots[k - 1] *= p.constant();
        next.push_back(std::move(st));
        continue;
      }
      auto [inv, dd] = split(w[k - 1], p);
      if (!dd.is_zero()) {
        State b{st.mask | (Mask{1} << (k - 1)), st.slots};
        b.slots[k - 1] = b.slots[k - 1] * dd;
        next.push_back(std::move(b));
      }
      if (!inv.is_zero()) {
        st.slots[k - 1] = st.slots[k - 1] * inv;
        next.push_back(std::move(st));
      }
    }
    states = std::move(next);
  }
  BimoduleElement el;
  el.word = w;
  for (auto& st : states) el.add(st.mask, st.slots[0]);
  return el;
}

BimoduleElement Oracle::basis(const Word& w, Mask m) const {
  BimoduleElement el;
  el.word = w;
  el.coeffs.emplace(m, Poly(1));
  return el;
}

namespace {

std::vector<Poly> basis_slots(const Word& w, Mask m, const CoxeterGraph& g) {
  std::vector<Poly> slots(w.size() + 1, Poly(1));
  for (std::size_t k = 0; k < w.size(); ++k)
    if ((m >> k) & 1u) slots[k + 1] = x_form(w[k], g);
  return slots;
}

}  // namespace

BimoduleElement Oracle::right_multiply(const BimoduleElement& el, const Poly& q) {
  BimoduleElement out;
  out.word = el.word;
  for (const auto& [m, c] : el.coeffs) {
    auto slots = basis_slots(el.word, m, g_);
    slots[0] = c;
    slots.back() = slots.back() * q;
    out.add(canonicalize(el.word, std::move(slots)), Poly(1));
  }
  return out;
}

const BimoduleElement& Oracle::term_column(const Term& t, const Word& w, Mask m) {
  auto key = std::make_tuple(w, t, m);
  auto it = column_memo_.find(key);
  if (it != column_memo_.end()) return it->second;

  const Word out_word = step_codomain(w, t, g_);
  auto slots = basis_slots(w, m, g_);
  const std::size_t i = static_cast<std::size_t>(t.pos);
  std::vector<std::vector<Poly>> images;
  auto splice = [&](std::size_t from, std::size_t count, std::vector<Poly> mid) {
    std::vector<Poly> r(slots.begin(), slots.begin() + from);
    r.insert(r.end(), mid.begin(), mid.end());
    r.insert(r.end(), slots.begin() + from + count, slots.end());
    return r;
  };
  switch (t.kind) {
    case Kind::J:
      images.push_back(splice(i, 3, {slots[i] * demazure(t.s, slots[i + 1], g_), slots[i + 2]}));
      break;
    case Kind::M:
      images.push_back(splice(i, 2, {slots[i] * slots[i + 1]}));
      break;
    case Kind::A: {
      Poly x = x_form(t.s, g_);
      images.push_back(splice(i, 1, {slots[i] * x, Poly(1), Poly(1)}));
      images.push_back(splice(i, 1, {slots[i], Poly(1), x}));
      break;
    }
    case Kind::F: {
      Poly x = x_form(t.s, g_);
      auto [inv, dd] = split(t.s, slots[i + 1]);
      images.push_back(splice(i, 3, {slots[i] * dd, Poly(1), x * slots[i + 2]}));
      images.push_back(splice(i, 3, {slots[i] * inv, Poly(1), slots[i + 2]}));
      break;
    }
    case Kind::X: {
      auto s = slots;
      s[i] = s[i] * x_form(t.s, g_);
      images.push_back(std::move(s));
      break;
    }
  }
  BimoduleElement col;
  col.word = out_word;
  for (auto& im : images) col.add(canonicalize(out_word, std::move(im)), Poly(1));
  return column_memo_.emplace(std::move(key), std::move(col)).first->second;
}

BimoduleElement Oracle::apply(const Term& t, const BimoduleElement& el) {
  BimoduleElement out;
  out.word = step_codomain(el.word, t, g_);
  for (const auto& [m, c] : el.coeffs) out.add(term_column(t, el.word, m), c);
  return out;
}

BimoduleMap Oracle::eval_term(const Term& t, const Word& w) {
  BimoduleMap map;
  map.domain = w;
  map.codomain = step_codomain(w, t, g_);
  for (Mask m = 0; m < (Mask{1} << w.size()); ++m) map.columns.push_back(term_column(t, w, m));
  return map;
}

BimoduleMap Oracle::eval(const Expression& e) {
  BimoduleMap map;
  map.domain = e.domain;
  map.codomain = typecheck(e, g_);
  for (Mask m = 0; m < (Mask{1} << e.domain.size()); ++m) {
    BimoduleElement el = basis(e.domain, m);
    for (const auto& t : e.terms) {
      el = apply(t, el);
      if (el.coeffs.empty()) break;
    }
    el.word = map.codomain;
    map.columns.push_back(std::move(el));
  }
  return map;
}

BimoduleMap Oracle::zero(const Word& domain, const Word& codomain) const {
  BimoduleMap map;
  map.domain = domain;
  map.codomain = codomain;
  BimoduleElement z;
  z.word = codomain;
  map.columns.assign(Mask{1} << domain.size(), z);
  return map;
}

BimoduleMap Oracle::identity(const Word& w) const {
  BimoduleMap map = zero(w, w);
  for (Mask m = 0; m < map.columns.size(); ++m) map.columns[m].add(m, Poly(1));
  return map;
}

BimoduleMap Oracle::eval(const LinComb& lc, const Word& domain, const Word& codomain) {
  BimoduleMap map = zero(domain, codomain);
  for (const auto& [e, c] : lc) {
    if (e.domain != domain) throw InvariantError("linear combination with mixed domains");
    BimoduleMap em = eval(e);
    if (em.codomain != codomain) throw InvariantError("linear combination with mixed codomains");
    for (std::size_t k = 0; k < map.columns.size(); ++k) map.columns[k].add(em.columns[k], c);
  }
  return map;
}

BimoduleMap compose(const BimoduleMap& first, const BimoduleMap& second) {
  if (first.codomain != second.domain) throw InvariantError("composition of mismatched maps");
  BimoduleMap map;
  map.domain = first.domain;
  map.codomain = second.codomain;
  for (const auto& col : first.columns) {
    BimoduleElement el;
    el.word = second.codomain;
    for (const auto& [m, c] : col.coeffs) el.add(second.columns.at(m), c);
    map.columns.push_back(std::move(el));
  }
  return map;
}

BimoduleMap scale(const BimoduleMap& m, const Poly& c) {
  BimoduleMap r = m;
  for (auto& col : r.columns) {
    BimoduleElement el;
    el.word = col.word;
    el.add(col, c);
    col = std::move(el);
  }
  return r;
}

std::optional<Mask> first_difference(const BimoduleMap& a, const BimoduleMap& b) {
  if (a.domain != b.domain || a.codomain != b.codomain) return Mask{0};
  for (Mask m = 0; m < a.columns.size(); ++m)
    if (!(a.columns[m].coeffs == b.columns[m].coeffs)) return m;
  return std::nullopt;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rat f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

IndependenceResult independent(const std::vector<BimoduleMap>& maps, std::size_t nvars,
                               std::uint64_t seed, std::size_t npoints) {
  IndependenceResult res;
  if (maps.empty()) {
    res.independent = true;
    return res;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < npoints; ++attempt) {
    std::vector<Rat> pt;
    for (std::size_t i = 0; i < nvars; ++i) {
      pt.emplace_back(static_cast<long>(rng() % 97) - 48, static_cast<long>(rng() % 13) + 1);
      pt.back().canonicalize();  // the two-argument constructor does not reduce
    }
    res.points.push_back(pt);
    std::vector<std::vector<Rat>> rows;
    for (const auto& m : maps) {
      std::vector<Rat> v;
      const Mask nrows = Mask{1} << m.codomain.size();
      for (Mask c = 0; c < m.columns.size(); ++c)
        for (Mask r = 0; r < nrows; ++r) v.push_back(specialize(m.entry(r, c), pt));
      rows.push_back(std::move(v));
    }
    std::size_t rk = rational_rank(std::move(rows));
    res.rank = std::max(res.rank, rk);
    if (rk == maps.size()) res.independent = true;
  }
  return res;
}

}  // namespace soergel
