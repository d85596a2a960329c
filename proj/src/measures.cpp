#include "soergel/measures.hpp"

#include <sstream>

namespace soergel {

bool left_type_at(const Word& w, std::size_t idx, const CoxeterGraph& g) {
  for (std::size_t j = idx; j-- > 0;) {
    if (w[j] == w[idx]) return true;
    if (!g.commute(w[j], w[idx])) return false;
  }
  return false;
}

bool is_left_type(const Word& w, std::size_t i, const CoxeterGraph& g) {
  return i >= 1 && i <= w.size() && left_type_at(w, i - 1, g);
}

MeasureRecord stats(const Expression& e, const CoxeterGraph& g) {
  MeasureRecord r;
  const auto words = running_words(e, g);
  const std::size_t len = e.terms.size();
  std::vector<std::size_t> mj_index;  // 1-based indices of M/J terms
  for (std::size_t k = 0; k < len; ++k) {
    const Term& t = e.terms[k];
    const Word& w = words[k];
    const std::size_t k1 = k + 1;
    const auto i = static_cast<std::size_t>(t.pos);
    if (t.kind == Kind::F) {
      ++r.f_count;
      r.f_to_right += i;
    }
    if (t.kind != Kind::M && t.kind != Kind::J) continue;
    mj_index.push_back(k1);
    r.depth_mj += k1;
    for (std::size_t q = 0; q < i; ++q)
      if (w[q] == t.s) ++r.mj_equal_to_left;
    const bool bad = left_type_at(w, i, g);
    if (t.kind == Kind::M) {
      r.m_far_from_bottom += len - k1;
      if (bad) {
        ++r.m_bad_count;
        if (r.min_m_bad == 0) {
          r.min_m_bad = k1;
          r.fn_of_m_bads.second = i;
        }
      }
    } else {
      r.j_positions.push_back(k1 + right_offset(w, t));
      if (bad) {
        ++r.j_bad_count;
        r.max_j_bad = k1;
      }
    }
  }
  for (std::size_t k1 : mj_index)
    if (k1 > r.min_m_bad) ++r.mj_after_min_m_bad;
  r.fn_of_m_bads.first = r.mj_after_min_m_bad;
  return r;
}

std::string MeasureRecord::to_string() const {
  std::ostringstream os;
  os << "m_bad_count: " << m_bad_count << "\n";
  os << "j_bad_count: " << j_bad_count << "\n";
  os << "j_positions: (";
  for (std::size_t i = 0; i < j_positions.size(); ++i) os << (i ? ", " : "") << j_positions[i];
  os << ")\n";
  os << "f_count: " << f_count << "\n";
  os << "f_to_right: " << f_to_right << "\n";
  os << "depth_mj: " << depth_mj << "\n";
  os << "m_far_from_bottom: " << m_far_from_bottom << "\n";
  os << "min_m_bad: " << min_m_bad << "\n";
  os << "mj_after_min_m_bad: " << mj_after_min_m_bad << "\n";
  os << "fn_of_m_bads: (" << fn_of_m_bads.first << ", " << fn_of_m_bads.second << ")\n";
  os << "max_j_bad: " << max_j_bad << "\n";
  os << "mj_equal_to_left: " << mj_equal_to_left << "\n";
  return os.str();
}

F3Key f3_key(const MeasureRecord& r) {
  return {r.j_positions, r.f_count, r.f_to_right, r.depth_mj};
}
F2Key f2_key(const MeasureRecord& r) { return r.fn_of_m_bads; }
std::size_t f5_key(const MeasureRecord& r) { return r.mj_equal_to_left; }

F3Key f3_key(const Expression& e, const CoxeterGraph& g) { return f3_key(stats(e, g)); }
F2Key f2_key(const Expression& e, const CoxeterGraph& g) { return f2_key(stats(e, g)); }
std::size_t f5_key(const Expression& e, const CoxeterGraph& g) { return f5_key(stats(e, g)); }

std::string key_string(const F3Key& k) {
  std::ostringstream os;
  os << "((";
  const auto& jp = std::get<0>(k);
  for (std::size_t i = 0; i < jp.size(); ++i) os << (i ? "," : "") << jp[i];
  os << ")," << std::get<1>(k) << "," << std::get<2>(k) << "," << std::get<3>(k) << ")";
  return os.str();
}

std::string key_string(const F2Key& k) {
  return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
}

}  // namespace soergel
