#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qweyl/field.hpp"

namespace qweyl::detail {

// Incremental row-echelon span of exact vectors. Rows keep their leading
// entry normalized to 1 and are ordered by pivot column, so membership
// reduction is a single ascending sweep.
class EchelonSpan {
 public:
  bool insert(std::vector<FieldElem> v) {
    reduce(v);
    std::size_t piv = leading(v);
    if (piv == v.size()) return false;
    FieldElem lead = v[piv];
    for (auto& x : v) x /= lead;
    auto pos = rows_.begin();
    while (pos != rows_.end() && pos->first < piv) ++pos;
    rows_.insert(pos, {piv, std::move(v)});
    return true;
  }

  bool contains(std::vector<FieldElem> v) const {
    reduce(v);
    return leading(v) == v.size();
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  void reduce(std::vector<FieldElem>& v) const {
    for (const auto& [piv, row] : rows_) {
      if (v[piv].is_zero()) continue;
      FieldElem f = v[piv];
      for (std::size_t j = piv; j < v.size(); ++j) v[j] -= f * row[j];
    }
  }

  static std::size_t leading(const std::vector<FieldElem>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) return i;
    return v.size();
  }

  std::vector<std::pair<std::size_t, std::vector<FieldElem>>> rows_;
};

}  // namespace qweyl::detail
