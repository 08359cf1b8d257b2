#pragma once

#include <map>
#include <optional>

#include "nalab/rational.hpp"

namespace nalab {

/// Exact row-echelon accumulator over sparse rational rows. Pivot rows are
/// monic at their pivot column and carry no support below it; insertion fully
/// reduces against existing pivots, so residuals have no support on pivot
/// columns at all. Optionally tracks every pivot row as an exact combination
/// of the source rows that produced it.
template <class Col>
class Echelon {
 public:
  using Row = std::map<Col, Rational>;
  using Combo = std::map<int, Rational>;  // source id -> coefficient

  explicit Echelon(bool track = false) : track_(track) {}

  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Fully reduces `r` in place. When tracking, `used` accumulates source
  /// coefficients so that r_in = r_out + sum used[src] * source_row(src).
  void reduce(Row& r, Combo* used = nullptr) const {
    auto it = r.begin();
    while (it != r.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const Rational coef = it->second;
      const Col col = it->first;
      for (const auto& [c, v] : p->second.row) {
        auto [jt, ins] = r.try_emplace(c, 0);
        jt->second -= coef * v;
        if (jt->second == 0) r.erase(jt);
      }
      if (used && track_) accumulate(*used, p->second.combo, coef);
      it = r.upper_bound(col);
    }
  }

  /// Returns true when the row enlarged the span.
  bool insert(Row r, int id = -1) {
    Combo used;
    reduce(r, track_ ? &used : nullptr);
    if (r.empty()) return false;
    Entry e;
    const Rational lead = r.begin()->second;
    for (auto& [c, v] : r) e.row.emplace(c, v / lead);
    if (track_) {
      // residual = source(id) - sum used; make monic
      Combo combo;
      combo.emplace(id, 1);
      accumulate(combo, used, Rational(-1));
      for (auto& [s, v] : combo) v /= lead;
      e.combo = std::move(combo);
    }
    pivots_.emplace(r.begin()->first, std::move(e));
    return true;
  }

  /// When `r` lies in the row space, returns coefficients over source ids
  /// with r = sum coeff[src] * source_row(src). Requires tracking.
  std::optional<Combo> membership(Row r) const {
    Combo used;
    reduce(r, &used);
    if (!r.empty()) return std::nullopt;
    return used;
  }

  /// Linear functional phi with phi(row space) = 0 and phi(residual) =
  /// residual's leading coefficient; `residual` must be fully reduced and
  /// nonempty. Returned as a sparse covector.
  Row separating_functional(const Row& residual) const {
    Row phi;
    phi.emplace(residual.begin()->first, 1);
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Rational acc = 0;
      for (const auto& [c, v] : it->second.row) {
        auto f = phi.find(c);
        if (f != phi.end()) acc += v * f->second;
      }
      if (acc != 0) phi.emplace(it->first, -acc);  // pivot entry is 1
    }
    return phi;
  }

  template <class Fn>
  void for_each_pivot(Fn&& fn) const {
    for (const auto& [c, e] : pivots_) fn(c, e.row);
  }

 private:
  struct Entry {
    Row row;
    Combo combo;
  };

  static void accumulate(Combo& into, const Combo& what, const Rational& coef) {
    for (const auto& [src, v] : what) {
      auto [jt, ins] = into.try_emplace(src, 0);
      jt->second += coef * v;
      if (jt->second == 0) into.erase(jt);
    }
  }

  std::map<Col, Entry> pivots_;
  bool track_ = false;
};

}  // namespace nalab
