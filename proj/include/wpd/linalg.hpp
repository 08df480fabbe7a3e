#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wpd/field.hpp"

namespace wpd {

template <class F> using Vec = std::vector<F>;
template <class F> using Mat = std::vector<Vec<F>>; // row major

// Reduced row echelon accumulator. Rows are kept fully reduced with pivot
// entries 1, ordered by pivot column, so reduce() yields a canonical residual.
// Optional tags express every stored row as a combination of the vectors
// handed to insert(), which is how membership certificates fall out.
template <class F> class Echelon {
public:
  explicit Echelon(std::size_t width, bool track = false)
      : width_(width), track_(track) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t> &pivots() const { return pivots_; }
  const std::vector<Vec<F>> &rows() const { return rows_; }

  bool is_pivot(std::size_t col) const {
    for (std::size_t p : pivots_)
      if (p == col)
        return true;
    return false;
  }

  // columns without a pivot, ascending
  std::vector<std::size_t> free_columns() const {
    std::vector<char> used(width_, 0);
    for (std::size_t p : pivots_)
      used[p] = 1;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < width_; ++j)
      if (!used[j])
        out.push_back(j);
    return out;
  }

  // residual of v modulo the row space; tag_out (if requested) gives the
  // combination of inserted vectors that was subtracted
  Vec<F> reduce(Vec<F> v, Vec<F> *tag_out = nullptr) const {
    Vec<F> tag;
    if (track_)
      tag.assign(ntags_, F(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F &c = v[pivots_[r]];
      if (wpd::is_zero(c))
        continue;
      F f = c; // pivot entries are 1
      for (std::size_t j = 0; j < width_; ++j)
        if (!wpd::is_zero(rows_[r][j]))
          v[j] -= f * rows_[r][j];
      if (track_)
        for (std::size_t j = 0; j < ntags_; ++j)
          if (!wpd::is_zero(tags_[r][j]))
            tag[j] += f * tags_[r][j];
    }
    if (tag_out)
      *tag_out = std::move(tag);
    return v;
  }

  bool contains(const Vec<F> &v, Vec<F> *tag_out = nullptr) const {
    Vec<F> r = reduce(v, tag_out);
    for (const F &c : r)
      if (!wpd::is_zero(c))
        return false;
    return true;
  }

  // returns true when v enlarged the span
  bool insert(Vec<F> v) {
    Vec<F> tag;
    if (track_) {
      tag.assign(ntags_ + 1, F(0));
      tag[ntags_] = F(1);
      ++ntags_;
      for (auto &t : tags_)
        t.push_back(F(0));
    }
    Vec<F> vtag;
    Vec<F> r = reduce(std::move(v), track_ ? &vtag : nullptr);
    if (track_)
      for (std::size_t j = 0; j + 1 < tag.size(); ++j)
        tag[j] -= vtag[j];
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j)
      if (!wpd::is_zero(r[j])) {
        p = j;
        break;
      }
    if (p == width_)
      return false;
    F inv = F(1) / r[p];
    for (auto &c : r)
      c *= inv;
    if (track_)
      for (auto &c : tag)
        c *= inv;
    // eliminate the new pivot from the stored rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const F c = rows_[i][p];
      if (wpd::is_zero(c))
        continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (!wpd::is_zero(r[j]))
          rows_[i][j] -= c * r[j];
      if (track_)
        for (std::size_t j = 0; j < tag.size(); ++j)
          if (!wpd::is_zero(tag[j]))
            tags_[i][j] -= c * tag[j];
    }
    // keep rows ordered by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p)
      ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    if (track_)
      tags_.insert(tags_.begin() + static_cast<std::ptrdiff_t>(pos),
                   std::move(tag));
    return true;
  }

private:
  std::size_t width_;
  bool track_;
  std::size_t ntags_ = 0;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec<F>> tags_;
};

template <class F> std::size_t rank(const Mat<F> &m) {
  if (m.empty())
    return 0;
  Echelon<F> e(m[0].size());
  for (const auto &row : m)
    e.insert(row);
  return e.rank();
}

// basis of { x : M x = 0 }, M given as rows over the unknowns
template <class F> Mat<F> kernel_basis(const Mat<F> &m, std::size_t unknowns) {
  Echelon<F> e(unknowns);
  for (const auto &row : m)
    e.insert(row);
  Mat<F> out;
  for (std::size_t fc : e.free_columns()) {
    Vec<F> k(unknowns, F(0));
    k[fc] = F(1);
    for (std::size_t r = 0; r < e.rank(); ++r)
      k[e.pivots()[r]] = -e.rows()[r][fc];
    out.push_back(std::move(k));
  }
  return out;
}

} // namespace wpd
