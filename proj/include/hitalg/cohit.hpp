#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gf2.hpp"
#include "poly.hpp"

namespace hitalg {

inline constexpr std::size_t kDefaultColumnCap = 200000;

// Thrown when a computation would exceed the configured column budget and
// force was not given.
struct CapacityError : std::runtime_error {
  std::size_t columns;
  std::size_t cap;
  CapacityError(std::size_t cols, std::size_t c)
      : std::runtime_error("instance needs " + std::to_string(cols) +
                           " columns, cap is " + std::to_string(c) +
                           " (pass force to override)"),
        columns(cols),
        cap(c) {}
};

struct ExpsHash {
  std::size_t operator()(const Exps& e) const {
    std::size_t s = 1469598103934665603ull;
    for (int a : e) {
      s ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull + (s << 6) + (s >> 2);
    }
    return s;
  }
};

// Echelonized span of the Steenrod-decomposable polynomials of degree n in
// h variables.  Columns are the degree-n monomials in (weight, lex) order
// with pivots at the maximal monomial of each relation, so the non-pivot
// columns are exactly the admissible monomials.
class HitSpace {
 public:
  HitSpace(int h, int n, std::size_t column_cap = kDefaultColumnCap, bool force = false)
      : h_(h), n_(n), monos_(canonical_monomials(n, h)), ech_(static_cast<int>(monos_.size())) {
    if (!force && monos_.size() > column_cap) throw CapacityError(monos_.size(), column_cap);
    index_.reserve(monos_.size() * 2);
    for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = static_cast<int>(i);
    // The whole Steenrod ideal is generated by the Sq^{2^j} images.
    for (int k = 1; k <= n; k <<= 1) {
      for (const auto& m : homogeneous_monomials(n - k, h)) {
        gf2::Vec v = to_vec(sq(k, m));
        if (!v.zero()) ech_.insert(std::move(v));
      }
    }
    ech_.finalize();
  }

  int h() const { return h_; }
  int n() const { return n_; }
  const std::vector<Exps>& monomials() const { return monos_; }

  int column(const Exps& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("monomial not of this degree");
    return it->second;
  }

  gf2::Vec to_vec(const Poly& f) const {
    gf2::Vec v;
    for (const auto& m : f) v.flip(column(m));
    return v;
  }

  bool is_hit(const Poly& f) const { return ech_.reduce(to_vec(f)).zero(); }

  int rank() const { return ech_.rank(); }
  int dim() const { return static_cast<int>(monos_.size()) - ech_.rank(); }
  const gf2::Echelon& echelon() const { return ech_; }

 private:
  int h_, n_;
  std::vector<Exps> monos_;
  std::unordered_map<Exps, int, ExpsHash> index_;
  gf2::Echelon ech_;
};

struct WeightComponent {
  int dim_total = 0;
  int dim_zero = 0;      // classes of monomials with some zero exponent
  int dim_positive = 0;  // all exponents positive
  std::vector<int> members;  // admissible indices
};

// Admissible-monomial basis of the degree-n cohit quotient, grouped by
// weight vector.
class CohitBasis {
 public:
  CohitBasis(int h, int n, std::size_t column_cap = kDefaultColumnCap, bool force = false)
      : hs_(h, n, column_cap, force) {
    const auto& free = hs_.echelon().free_cols_cached();
    admissibles_.reserve(free.size());
    for (int c : free) admissibles_.push_back(hs_.monomials()[c]);
    for (std::size_t i = 0; i < admissibles_.size(); ++i) {
      auto w = weight_vector(admissibles_[i]);
      if (by_weight_.empty() || by_weight_.back().first != w)
        by_weight_.emplace_back(std::move(w), std::vector<int>{});
      by_weight_.back().second.push_back(static_cast<int>(i));
    }
  }

  int h() const { return hs_.h(); }
  int n() const { return hs_.n(); }
  int dim() const { return static_cast<int>(admissibles_.size()); }
  const std::vector<Exps>& admissibles() const { return admissibles_; }
  const HitSpace& space() const { return hs_; }

  // Coordinates of [f] over the admissible basis.
  gf2::Vec reduce(const Poly& f) const { return hs_.echelon().reduce(hs_.to_vec(f)); }

  bool is_hit(const Poly& f) const { return hs_.is_hit(f); }

  Poly representative(const gf2::Vec& coords) const {
    Poly f;
    coords.for_each_bit([&](int i) { f.insert(admissibles_.at(i)); });
    return f;
  }

  // Distinct weight vectors in ascending order with their member classes.
  const std::vector<std::pair<std::vector<int>, std::vector<int>>>& by_weight() const {
    return by_weight_;
  }

  WeightComponent weight_component(const std::vector<int>& w) const {
    if (omega_degree(w) != n()) throw std::invalid_argument("weight vector degree mismatch");
    WeightComponent out;
    for (const auto& [wv, members] : by_weight_) {
      if (wv != w) continue;
      out.members = members;
      out.dim_total = static_cast<int>(members.size());
      for (int i : members) {
        bool positive = true;
        for (int a : admissibles_[i])
          if (a == 0) positive = false;
        (positive ? out.dim_positive : out.dim_zero)++;
      }
    }
    return out;
  }

  // Count of admissibles with all exponents positive, over every weight.
  int dim_positive() const {
    int c = 0;
    for (const auto& m : admissibles_) {
      bool positive = true;
      for (int a : m)
        if (a == 0) positive = false;
      c += positive;
    }
    return c;
  }

 private:
  HitSpace hs_;
  std::vector<Exps> admissibles_;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> by_weight_;
};

}  // namespace hitalg
