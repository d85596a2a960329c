#include "soergel/coxeter.hpp"

#include <fstream>
#include <sstream>

#include "soergel/errors.hpp"

namespace soergel {

CoxeterGraph::CoxeterGraph(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxGens)
    throw InputError("at most " + std::to_string(kMaxGens) + " generators are supported");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate generator '" + names_[i] + "'");
  inf_.assign(names_.size(), std::vector<bool>(names_.size(), false));
}

void CoxeterGraph::add_infinite(Gen a, Gen b) {
  if (a == b) throw InputError("self-pair '" + name(a) + "'");
  inf_.at(a).at(b) = true;
  inf_.at(b).at(a) = true;
}

bool CoxeterGraph::has(const std::string& n) const {
  for (const auto& x : names_)
    if (x == n) return true;
  return false;
}

Gen CoxeterGraph::index(const std::string& n) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return static_cast<Gen>(i);
  throw InputError("unknown generator '" + n + "'");
}

RepCoefficients::RepCoefficients(const CoxeterGraph& g) {
  const std::size_t n = g.size();
  mu_.assign(n, std::vector<Rat>(n));
  lambda_.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n)));
  for (Gen t = 0; t < n; ++t) {
    Poly xt = x_form(t, g);
    for (Gen s = 0; s < n; ++s) {
      Poly xs = x_form(s, g);
      Poly mu_poly = demazure(t, xs, g);
      if (!mu_poly.is_constant()) throw InvariantError("I_t(x_s) is not a multiple of x_t");
      mu_[t][s] = mu_poly.constant();
      // P_t(x_s) = x_s - mu x_t
      auto& lam = lambda_[t][s];
      if (s != t) {
        lam[s] += 1;
        lam[t] -= mu_[t][s];
      }
      Poly p;
      for (Gen r = 0; r < n; ++r) p += x_form(r, g) * lam[r];
      if (p != p_op(t, xs, g)) throw InvariantError("lambda identity fails");
      if (xt * mu_[t][s] != i_op(t, xs, g)) throw InvariantError("mu identity fails");
    }
  }
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

CoxeterGraph parse_graph(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  bool have_gens = false;
  CoxeterGraph g;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto words = split_ws(line);
    if (words.empty()) continue;
    auto where = "line " + std::to_string(lineno) + ": ";
    if (words[0] == "gens:") {
      if (have_gens) throw InputError(where + "second gens line");
      g = CoxeterGraph(std::vector<std::string>(words.begin() + 1, words.end()));
      have_gens = true;
    } else if (words[0] == "inf:") {
      if (!have_gens) throw InputError(where + "inf before gens");
      if (words.size() != 3) throw InputError(where + "inf needs exactly two names");
      try {
        g.add_infinite(g.index(words[1]), g.index(words[2]));
      } catch (const InputError& e) {
        throw InputError(where + e.what());
      }
    } else {
      throw InputError(where + "expected 'gens:' or 'inf:'");
    }
  }
  if (!have_gens) throw InputError("missing gens line");
  return g;
}

std::string print_graph(const CoxeterGraph& g) {
  std::string out = "gens:";
  for (const auto& n : g.names()) out += " " + n;
  out += "\n";
  for (Gen a = 0; a < g.size(); ++a)
    for (Gen b = a + 1; b < g.size(); ++b)
      if (g.infinite(a, b)) out += "inf: " + g.name(a) + " " + g.name(b) + "\n";
  return out;
}

CoxeterGraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

CoxeterGraph graph_a1() { return parse_graph("gens: s\n"); }
CoxeterGraph graph_a1xa1() { return parse_graph("gens: s r\n"); }
CoxeterGraph graph_inf_dihedral() { return parse_graph("gens: s r\ninf: s r\n"); }
CoxeterGraph graph_mixed() { return parse_graph("gens: s r t\ninf: r t\ninf: s t\n"); }

}  // namespace soergel
