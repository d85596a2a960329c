#pragma once

#include <string>
#include <vector>

#include "soergel/graph.hpp"
#include "soergel/polyring.hpp"

namespace soergel {

/// Scalars describing how t acts on x_s:
///   P_t(x_s) = sum_r lambda(t,s)[r] x_r,   I_t(x_s) = mu(t,s) x_t.
class RepCoefficients {
 public:
  explicit RepCoefficients(const CoxeterGraph& g);

  const Rat& mu(Gen t, Gen s) const { return mu_[t][s]; }
  /// lambda(t,s)[r], indexed by generator.
  const std::vector<Rat>& lambda(Gen t, Gen s) const { return lambda_[t][s]; }

 private:
  std::vector<std::vector<Rat>> mu_;
  std::vector<std::vector<std::vector<Rat>>> lambda_;
};

/// Parses `gens: a b c` followed by `inf: a b` lines; `#` starts a comment.
CoxeterGraph parse_graph(const std::string& text);
std::string print_graph(const CoxeterGraph& g);
CoxeterGraph load_graph(const std::string& path);

/// The four systems used throughout the tests.
CoxeterGraph graph_a1();
CoxeterGraph graph_a1xa1();
CoxeterGraph graph_inf_dihedral();
CoxeterGraph graph_mixed();

}  // namespace soergel
