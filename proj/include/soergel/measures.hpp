#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "soergel/expr.hpp"

namespace soergel {

/// True when letter i (1-based) has an earlier equal letter separated from
/// it only by letters commuting with it.
bool is_left_type(const Word& w, std::size_t i, const CoxeterGraph& g);
/// 0-based variant.
bool left_type_at(const Word& w, std::size_t idx, const CoxeterGraph& g);

struct MeasureRecord {
  std::size_t m_bad_count = 0;
  std::size_t j_bad_count = 0;
  std::vector<std::size_t> j_positions;
  std::size_t f_count = 0;
  std::size_t f_to_right = 0;
  std::size_t depth_mj = 0;
  std::size_t m_far_from_bottom = 0;
  std::size_t min_m_bad = 0;  // 1-based chain index, 0 = none
  std::size_t mj_after_min_m_bad = 0;
  std::pair<std::size_t, std::size_t> fn_of_m_bads{0, 0};
  std::size_t max_j_bad = 0;  // 1-based chain index, 0 = none
  std::size_t mj_equal_to_left = 0;

  bool operator==(const MeasureRecord&) const = default;
  /// `key: value` lines.
  std::string to_string() const;
};

/// Badness of an M or J term is judged on its own domain word.
MeasureRecord stats(const Expression& e, const CoxeterGraph& g);

using F3Key = std::tuple<std::vector<std::size_t>, std::size_t, std::size_t, std::size_t>;
using F2Key = std::pair<std::size_t, std::size_t>;

F3Key f3_key(const MeasureRecord& r);
F2Key f2_key(const MeasureRecord& r);
std::size_t f5_key(const MeasureRecord& r);

F3Key f3_key(const Expression& e, const CoxeterGraph& g);
F2Key f2_key(const Expression& e, const CoxeterGraph& g);
std::size_t f5_key(const Expression& e, const CoxeterGraph& g);

std::string key_string(const F3Key& k);
std::string key_string(const F2Key& k);

}  // namespace soergel
