#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

namespace hitalg::gf2 {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

// Bit vector with trailing zero words trimmed away.  Logical width is
// whatever the surrounding Echelon says; storage stops at the lead bit.
class Vec {
 public:
  Vec() = default;

  bool test(int i) const {
    std::size_t wi = static_cast<std::size_t>(i) / kWordBits;
    if (wi >= w_.size()) return false;
    return (w_[wi] >> (i % kWordBits)) & 1u;
  }

  void flip(int i) {
    std::size_t wi = static_cast<std::size_t>(i) / kWordBits;
    if (wi >= w_.size()) w_.resize(wi + 1, 0);
    w_[wi] ^= Word{1} << (i % kWordBits);
    if (wi + 1 == w_.size()) trim();
  }

  // Highest set bit, -1 when zero.
  int lead() const {
    if (w_.empty()) return -1;
    std::size_t wi = w_.size() - 1;
    return static_cast<int>(wi) * kWordBits + (kWordBits - 1) -
           std::countl_zero(w_[wi]);
  }

  bool zero() const { return w_.empty(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word x : w_) c += std::popcount(x);
    return c;
  }

  Vec& operator^=(const Vec& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
  }

  bool operator==(const Vec& o) const { return w_ == o.w_; }

  template <class Fn>
  void for_each_bit(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      Word x = w_[wi];
      while (x) {
        int b = std::countr_zero(x);
        fn(static_cast<int>(wi) * kWordBits + b);
        x &= x - 1;
      }
    }
  }

  std::vector<int> bits() const {
    std::vector<int> out;
    for_each_bit([&](int i) { out.push_back(i); });
    return out;
  }

  void clear() { w_.clear(); }

 private:
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }

  std::vector<Word> w_;
};

// Streaming row echelon over GF(2) with the pivot at the maximal column.
// insert() keeps the row set in echelon form; finalize() converts to a
// reduced form projected onto the free columns, after which reduce() is a
// single sparse pass and the wide rows are released.
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols), pivot_(ncols, -1) {}

  // Returns the claimed pivot column, or -1 if the row was absorbed.
  int insert(Vec v) {
    for (;;) {
      int l = v.lead();
      if (l < 0) return -1;
      int& pr = pivot_[l];
      if (pr < 0) {
        pr = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        ++rank_;
        return l;
      }
      // Keep the sparser of the two rows as the pivot.
      if (v.count() < rows_[pr].count()) std::swap(v, rows_[pr]);
      v ^= rows_[pr];
    }
  }

  int rank() const { return rank_; }
  int ncols() const { return ncols_; }
  bool is_pivot(int col) const { return pivot_[col] >= 0; }

  std::vector<int> free_cols() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
      if (pivot_[c] < 0) out.push_back(c);
    return out;
  }

  // Reduced row echelon projected onto the free columns.  Row fr(p) holds
  // the free-column part of the unique RREF row with pivot p.
  void finalize() {
    if (finalized_) return;
    free_ = free_cols();
    freeidx_.assign(ncols_, -1);
    for (std::size_t i = 0; i < free_.size(); ++i) freeidx_[free_[i]] = static_cast<int>(i);
    fr_.assign(ncols_, Vec{});
    for (int p = 0; p < ncols_; ++p) {
      if (pivot_[p] < 0) continue;
      Vec& row = rows_[pivot_[p]];
      Vec out;
      row.for_each_bit([&](int c) {
        if (c == p) return;
        if (freeidx_[c] >= 0)
          out.flip(freeidx_[c]);
        else
          out ^= fr_[c];  // c < p: already in reduced form
      });
      fr_[p] = std::move(out);
      row.clear();
    }
    rows_.clear();
    rows_.shrink_to_fit();
    finalized_ = true;
  }

  bool finalized() const { return finalized_; }

  // Normal form of v over the free columns (coordinates in free_cols order).
  Vec reduce(const Vec& v) const {
    Vec out;
    v.for_each_bit([&](int c) {
      if (freeidx_[c] >= 0)
        out.flip(freeidx_[c]);
      else if (pivot_[c] >= 0)
        out ^= fr_[c];
    });
    return out;
  }

  const std::vector<int>& free_cols_cached() const { return free_; }

  // Position of col within the free-column list, -1 for pivot columns.
  int free_index(int col) const { return freeidx_[col]; }

  // Normal form of v modulo the row space, in the original column space.
  Vec normal_form(const Vec& v) const {
    Vec f = reduce(v);
    Vec out;
    f.for_each_bit([&](int fi) { out.flip(free_[fi]); });
    return out;
  }

  // All kernel vectors of the inserted row system.
  std::vector<Vec> kernel_basis() const {
    std::vector<Vec> out;
    out.reserve(free_.size());
    for (std::size_t fi = 0; fi < free_.size(); ++fi)
      out.push_back(kernel_vector(static_cast<int>(fi)));
    return out;
  }

  // Kernel basis vector attached to free column free_[fi], over all columns.
  Vec kernel_vector(int fi) const {
    Vec out;
    out.flip(free_[fi]);
    for (int p = 0; p < ncols_; ++p)
      if (pivot_[p] >= 0 && fr_[p].test(fi)) out.flip(p);
    return out;
  }

 private:
  int ncols_;
  int rank_ = 0;
  bool finalized_ = false;
  std::vector<int> pivot_;
  std::vector<Vec> rows_;
  std::vector<int> free_;
  std::vector<int> freeidx_;
  std::vector<Vec> fr_;
};

// Echelon that remembers, for every inserted vector, its expression over
// the previously inserted ones.  Insertion order indexes the combinations.
class Tracked {
 public:
  explicit Tracked(int ncols) : pivot_(ncols, -1) {}

  // Reduce v against the stored rows without inserting.  Returns the
  // combination (bits = insertion indices) and whether v reduced to zero.
  std::pair<Vec, bool> express(Vec v) const {
    Vec combo;
    while (!v.zero()) {
      int l = v.lead();
      if (pivot_[l] < 0) return {std::move(combo), false};
      v ^= rows_[pivot_[l]].first;
      combo ^= rows_[pivot_[l]].second;
    }
    return {std::move(combo), true};
  }

  // Insert v; its combination gets the next insertion index as its own bit.
  // Returns false when v was absorbed (dependent).
  bool insert(Vec v) {
    Vec combo;
    combo.flip(count_);
    while (!v.zero()) {
      int l = v.lead();
      if (pivot_[l] < 0) {
        pivot_[l] = static_cast<int>(rows_.size());
        rows_.emplace_back(std::move(v), std::move(combo));
        ++count_;
        return true;
      }
      v ^= rows_[pivot_[l]].first;
      combo ^= rows_[pivot_[l]].second;
    }
    ++count_;
    return false;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::pair<Vec, Vec>> rows_;
  std::vector<int> pivot_;
  int count_ = 0;
};

// Rank of a plain list of rows; used where no quotient structure is needed.
inline int rank_of(std::vector<Vec> rows, int ncols) {
  Echelon e(ncols);
  for (auto& r : rows) e.insert(std::move(r));
  return e.rank();
}

// Rows of the matrix whose columns are given.
inline std::vector<Vec> transpose(const std::vector<Vec>& cols, int nrows) {
  std::vector<Vec> rows(nrows);
  for (std::size_t j = 0; j < cols.size(); ++j)
    cols[j].for_each_bit([&](int r) { rows[r].flip(static_cast<int>(j)); });
  return rows;
}

}  // namespace hitalg::gf2
