#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "soergel/coxeter.hpp"
#include "soergel/expr.hpp"

namespace soergel::cli {

enum Exit { kOk = 0, kFailure = 1, kInputError = 2, kFuel = 3 };

/// A graph file, or one of the built-in names a1, a1xa1, inf, mixed.
CoxeterGraph resolve_graph(const std::string& arg);

struct FuzzShape {
  std::size_t max_word = 6;   // domain and intermediate words
  std::size_t max_chain = 8;
  bool allow_x = true;
  bool allow_alpha = true;
};

/// Case `index` of a fuzz run.
Expression fuzz_case(const CoxeterGraph& g, std::uint64_t seed, std::size_t index,
                     const FuzzShape& shape = {});

/// Whole command line; writes to out/err and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace soergel::cli
