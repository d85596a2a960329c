#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace soergel {

using Gen = std::uint8_t;

/// A right-angled Coxeter graph: every pair of distinct generators either
/// commutes (m = 2) or is free (m = infinity).
class CoxeterGraph {
 public:
  static constexpr std::size_t kMaxGens = 8;

  CoxeterGraph() = default;
  explicit CoxeterGraph(std::vector<std::string> names);

  void add_infinite(Gen a, Gen b);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Gen g) const { return names_.at(g); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a generator name; throws InputError when unknown.
  Gen index(const std::string& name) const;
  bool has(const std::string& name) const;

  bool infinite(Gen a, Gen b) const { return a != b && inf_[a][b]; }
  /// True when m(a,b) = 2.
  bool commute(Gen a, Gen b) const { return a != b && !inf_[a][b]; }

  bool operator==(const CoxeterGraph& o) const {
    return names_ == o.names_ && inf_ == o.inf_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> inf_;
};

}  // namespace soergel
