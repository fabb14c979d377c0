#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf2.hpp"
#include "poly.hpp"

namespace hitalg {

// A word in the mod-2 lambda algebra: the index sequence of its factors.
using LambdaWord = std::vector<int>;
// GF(2)-set of words of equal length and degree.
using LambdaElement = std::set<LambdaWord>;

// Each index at most double its predecessor.
inline bool lambda_admissible(const LambdaWord& w) {
  for (std::size_t m = 0; m + 1 < w.size(); ++m)
    if (w[m + 1] > 2 * w[m]) return false;
  return true;
}

inline LambdaElement operator^(LambdaElement a, const LambdaElement& b) {
  for (const auto& w : b) toggle(a, w);
  return a;
}

// Rewrite toward the admissible basis: the pair lambda_i lambda_j with
// j >= 2i+1 expands as sum over jj of binom(j-2i-2-jj, jj)
// lambda_{j-i-1-jj} lambda_{2i+1+jj}.
inline LambdaElement adem_normalize(const LambdaElement& e) {
  LambdaElement out;
  std::set<LambdaWord> work(e.begin(), e.end());
  while (!work.empty()) {
    LambdaWord w = *work.begin();
    work.erase(work.begin());
    std::size_t m = 0;
    bool adm = true;
    for (; m + 1 < w.size(); ++m)
      if (w[m + 1] > 2 * w[m]) {
        adm = false;
        break;
      }
    if (adm) {
      toggle(out, w);
      continue;
    }
    const int i = w[m];
    const int n = w[m + 1] - 2 * i - 1;
    for (int jj = 0; 2 * jj <= n - 1; ++jj) {
      if (!binom_odd(n - jj - 1, jj)) continue;
      LambdaWord nw = w;
      nw[m] = i + n - jj;
      nw[m + 1] = 2 * i + 1 + jj;
      auto it = work.find(nw);
      if (it == work.end())
        work.insert(std::move(nw));
      else
        work.erase(it);
    }
  }
  return out;
}

inline LambdaElement lambda_mul(const LambdaElement& a, const LambdaElement& b) {
  LambdaElement prod;
  for (const auto& u : a)
    for (const auto& v : b) {
      LambdaWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      toggle(prod, w);
    }
  return adem_normalize(prod);
}

// Images of a single generator under the differential.
inline std::vector<LambdaWord> differential_gen(int t) {
  std::vector<LambdaWord> out;
  for (int j = 1; 2 * j <= t; ++j)
    if (binom_odd(t - j, j)) out.push_back({t - j, j - 1});
  return out;
}

// Derivation extension, normalized.
inline LambdaElement differential(const LambdaElement& e) {
  LambdaElement formal;
  for (const auto& w : e)
    for (std::size_t m = 0; m < w.size(); ++m)
      for (const auto& g : differential_gen(w[m])) {
        LambdaWord nw;
        nw.reserve(w.size() + 1);
        nw.insert(nw.end(), w.begin(), w.begin() + m);
        nw.insert(nw.end(), g.begin(), g.end());
        nw.insert(nw.end(), w.begin() + m + 1, w.end());
        toggle(formal, nw);
      }
  return adem_normalize(formal);
}

// The Sq^0 endomorphism on a formal word: indices j -> 2j+1.
inline LambdaWord sq0_lambda(const LambdaWord& w) {
  LambdaWord out(w.size());
  for (std::size_t m = 0; m < w.size(); ++m) out[m] = 2 * w[m] + 1;
  return out;
}

// All admissible words of length s and degree t, ascending lexicographic.
inline std::vector<LambdaWord> lambda_basis(int s, int t) {
  std::vector<LambdaWord> out;
  if (s < 0 || t < 0) return out;
  if (s == 0) {
    if (t == 0) out.push_back({});
    return out;
  }
  LambdaWord cur;
  auto rec = [&](auto&& self, int depth, int rem, int cap) -> void {
    if (depth == s) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    int slots = s - depth - 1;
    for (int j = 0; j <= std::min(rem, cap); ++j) {
      // the remaining indices can sum to at most (2^{slots+1} - 2) * j
      long long mx = ((2ll << slots) - 2) * j;
      if (rem - j > mx) continue;
      cur.push_back(j);
      self(self, depth + 1, rem - j, 2 * j);
      cur.pop_back();
    }
  };
  rec(rec, 0, t, t);
  return out;
}

// Homology of the lambda complex in one bidegree: cycles of Lambda^{s,t}
// modulo boundaries from Lambda^{s-1,t+1}.
class ExtGroup {
 public:
  ExtGroup(int s, int t) : s_(s), t_(t), basis_(lambda_basis(s, t)), bech_(ncols()), reps_ech_(ncols()) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
    for (const auto& w : lambda_basis(s - 1, t + 1)) {
      gf2::Vec b = to_vec(differential(LambdaElement{w}));
      if (!b.zero()) bech_.insert(std::move(b));
    }
    bech_.finalize();
    // kernel of the differential out of this bidegree
    std::vector<LambdaWord> next = lambda_basis(s + 1, t - 1);
    std::map<LambdaWord, int> nidx;
    for (std::size_t i = 0; i < next.size(); ++i) nidx[next[i]] = static_cast<int>(i);
    std::vector<gf2::Vec> cols;
    cols.reserve(basis_.size());
    for (const auto& w : basis_) {
      gf2::Vec c;
      for (const auto& dw : differential(LambdaElement{w})) c.flip(nidx.at(dw));
      cols.push_back(std::move(c));
    }
    gf2::Echelon dech(ncols());
    auto rows = gf2::transpose(cols, static_cast<int>(next.size()));
    for (auto& r : rows)
      if (!r.zero()) dech.insert(std::move(r));
    dech.finalize();
    for (const auto& z : dech.kernel_basis()) {
      gf2::Vec nf = bech_.normal_form(z);
      if (nf.zero()) continue;
      auto [combo, absorbed] = reps_ech_.express(nf);
      if (absorbed) continue;
      reps_ech_.insert(nf);
      reps_.push_back(to_element(nf));
    }
  }

  int s() const { return s_; }
  int t() const { return t_; }
  int dim() const { return static_cast<int>(reps_.size()); }
  const std::vector<LambdaWord>& basis() const { return basis_; }
  const std::vector<LambdaElement>& representatives() const { return reps_; }

  struct Classification {
    bool is_cycle = false;
    bool is_boundary = false;
    gf2::Vec coords;  // over representatives(), for cycles
  };

  Classification classify(const LambdaElement& z) const {
    LambdaElement nz = adem_normalize(z);
    Classification c;
    if (nz.empty()) {
      c.is_cycle = true;
      c.is_boundary = true;
      return c;
    }
    if (!differential(nz).empty()) return c;
    c.is_cycle = true;
    gf2::Vec nf = bech_.normal_form(to_vec(nz));
    if (nf.zero()) {
      c.is_boundary = true;
      return c;
    }
    auto [combo, absorbed] = reps_ech_.express(nf);
    if (!absorbed) throw std::logic_error("cycle outside the computed homology basis");
    c.coords = std::move(combo);
    return c;
  }

  gf2::Vec to_vec(const LambdaElement& e) const {
    gf2::Vec v;
    for (const auto& w : e) {
      auto it = index_.find(w);
      if (it == index_.end()) throw std::invalid_argument("word not in this bidegree");
      v.flip(it->second);
    }
    return v;
  }

  LambdaElement to_element(const gf2::Vec& v) const {
    LambdaElement e;
    v.for_each_bit([&](int i) { e.insert(basis_[i]); });
    return e;
  }

 private:
  int ncols() const { return static_cast<int>(basis_.size()); }

  int s_, t_;
  std::vector<LambdaWord> basis_;
  std::map<LambdaWord, int> index_;
  gf2::Echelon bech_;
  gf2::Tracked reps_ech_;
  std::vector<LambdaElement> reps_;
};

// Name a homology class when it matches a product of the length-1 cycle
// classes; empty string otherwise.
inline std::string h_product_name(const ExtGroup& eg, const gf2::Vec& coords) {
  std::vector<int> is;
  auto rec = [&](auto&& self, int minIdx, int rem, int slots) -> bool {
    if (slots == 0) {
      if (rem != 0) return false;
      LambdaWord word;
      for (int i : is) word.push_back((1 << i) - 1);
      auto cls = eg.classify(LambdaElement{word});
      return cls.is_cycle && !cls.is_boundary && cls.coords == coords;
    }
    for (int i = minIdx; (1 << i) - 1 <= rem; ++i) {
      is.push_back(i);
      if (self(self, i, rem - ((1 << i) - 1), slots - 1)) return true;
      is.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0, eg.t(), eg.s())) return "";
  std::string out;
  for (std::size_t k = 0; k < is.size();) {
    std::size_t r = k;
    while (r < is.size() && is[r] == is[k]) ++r;
    out += "h" + std::to_string(is[k]);
    if (r - k > 1) out += "^" + std::to_string(r - k);
    k = r;
  }
  return out;
}

}  // namespace hitalg
