#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "actions.hpp"
#include "cohit.hpp"
#include "gf2.hpp"
#include "lambda.hpp"
#include "poly.hpp"

namespace hitalg {

// Elements of the dual of the polynomial algebra, written in the divided
// power basis: a GF(2)-set of exponent tuples, x_1^(a_1)...x_h^(a_h).
using DualElement = std::set<Exps>;

// Right Steenrod action on a divided power monomial:
// (x_1^(a_1)...)Sq^k = sum over k_1+...+k_h = k of
// prod binom(a_j - k_j, k_j) x_j^(a_j - k_j).
// The binomial form is kept at the 2k_j = a_j boundary; the adjointness
// property test pins this choice down.
inline DualElement dual_sq(int k, const Exps& m) {
  DualElement out;
  if (k < 0) return out;
  const int h = static_cast<int>(m.size());
  std::vector<int> cap(h + 1, 0);  // cap[j] = max k absorbable by factors j..h-1
  for (int j = h - 1; j >= 0; --j) cap[j] = cap[j + 1] + m[j] / 2;
  Exps cur(m.begin(), m.end());
  auto rec = [&](auto&& self, int j, int rem) -> void {
    if (j == h) {
      if (rem == 0) toggle(out, cur);
      return;
    }
    if (rem > cap[j]) return;
    const int a = m[j];
    for (int kj = 0; kj <= std::min(rem, a / 2); ++kj) {
      if (!binom_odd(a - kj, kj)) continue;
      cur[j] = a - kj;
      self(self, j + 1, rem - kj);
    }
    cur[j] = a;
  };
  rec(rec, 0, k);
  return out;
}

inline DualElement dual_sq(int k, const DualElement& xi) {
  if (k == 0) return xi;
  DualElement out;
  for (const auto& m : xi)
    for (const auto& r : dual_sq(k, m)) toggle(out, r);
  return out;
}

// True when every Sq^{2^i} with 2^{i+1} <= n kills xi.  Larger squares
// vanish for degree reasons: the per-factor constraints 2k_j <= a_j sum
// to 2k <= n, so the check set generates everything that can act.
inline bool annihilated(const DualElement& xi, int n) {
  for (int k = 1; 2 * k <= n; k <<= 1)
    if (!dual_sq(k, xi).empty()) return false;
  return true;
}

// Kernel of the positive-degree Steenrod action on the degree-n part of
// the dual, as vectors over the canonical monomial order.
struct AnnihilatedSpace {
  int h = 0, n = 0;
  std::vector<Exps> monomials;
  std::vector<gf2::Vec> basis;

  int dim() const { return static_cast<int>(basis.size()); }

  DualElement element(const gf2::Vec& v) const {
    DualElement e;
    v.for_each_bit([&](int i) { e.insert(monomials[i]); });
    return e;
  }
};

inline AnnihilatedSpace annihilated_space(int h, int n, std::size_t column_cap = kDefaultColumnCap,
                                          bool force = false) {
  AnnihilatedSpace out;
  out.h = h;
  out.n = n;
  out.monomials = canonical_monomials(n, h);
  if (!force && out.monomials.size() > column_cap) throw CapacityError(out.monomials.size(), column_cap);
  const int ncols = static_cast<int>(out.monomials.size());
  gf2::Echelon ech(ncols);
  for (int k = 1; 2 * k <= n; k <<= 1) {
    std::vector<Exps> tgt = canonical_monomials(n - k, h);
    std::unordered_map<Exps, int, ExpsHash> tidx;
    for (std::size_t i = 0; i < tgt.size(); ++i) tidx.emplace(tgt[i], static_cast<int>(i));
    std::vector<gf2::Vec> cols(out.monomials.size());
    for (std::size_t c = 0; c < out.monomials.size(); ++c)
      for (const auto& r : dual_sq(k, out.monomials[c])) cols[c].flip(tidx.at(r));
    for (auto& row : gf2::transpose(cols, static_cast<int>(tgt.size())))
      if (!row.zero()) ech.insert(std::move(row));
  }
  ech.finalize();
  out.basis = ech.kernel_basis();
  return out;
}

inline std::vector<DualElement> annihilated_basis(int h, int n, std::size_t column_cap = kDefaultColumnCap,
                                                  bool force = false) {
  AnnihilatedSpace sp = annihilated_space(h, n, column_cap, force);
  std::vector<DualElement> out;
  out.reserve(sp.basis.size());
  for (const auto& v : sp.basis) out.push_back(sp.element(v));
  return out;
}

// Kronecker pairing between polynomials and duals of the same bidegree:
// the parity of the shared exponent tuples.
inline int pairing(const Poly& f, const DualElement& xi) {
  if (f.empty() || xi.empty()) return 0;
  if (f.begin()->size() != xi.begin()->size() || degree(*f.begin()) != degree(*xi.begin()))
    throw std::invalid_argument("pairing needs matching variable count and degree");
  int par = 0;
  const bool fs = f.size() < xi.size();
  const auto& small = fs ? f : xi;
  const auto& big = fs ? xi : f;
  for (const auto& m : small) par ^= big.count(m);
  return par & 1;
}

namespace detail {

// Formal (unnormalized) word expansion of psi on one monomial, XOR-collapsed.
inline const LambdaElement& psi_words(const Exps& m, std::map<Exps, LambdaElement>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  LambdaElement out;
  if (m.empty()) {
    out.insert(LambdaWord{});
  } else if (m.size() == 1) {
    out.insert(LambdaWord{m[0]});
  } else {
    Exps prefix(m.begin(), m.end() - 1);
    const int jh = m.back();
    const int pd = degree(prefix);
    for (int k = jh; k <= jh + pd / 2; ++k)
      for (const auto& p : dual_sq(k - jh, prefix))
        for (const auto& w : psi_words(p, memo)) {
          LambdaWord nw = w;
          nw.push_back(k);
          toggle(out, nw);
        }
  }
  return memo.emplace(m, std::move(out)).first->second;
}

}  // namespace detail

// Chon-Ha chain-level representation of the transfer:
// psi_1(x^(j)) = lambda_j and
// psi_h(x_1^(j_1)...x_h^(j_h)) = sum_{k >= j_h} psi_{h-1}((prefix)Sq^{k-j_h}) lambda_k,
// the sum capped at k <= j_h + deg(prefix)/2 where the right action dies.
// One normalization at the very end.
inline LambdaElement psi(const DualElement& xi) {
  std::map<Exps, LambdaElement> memo;
  LambdaElement formal;
  for (const auto& m : xi)
    for (const auto& w : detail::psi_words(m, memo)) toggle(formal, w);
  return adem_normalize(formal);
}

struct TransferImage {
  bool cycle = true;
  int ext_dim = 0;
  std::string class_name;  // "zero", a product of the h_i, or "nonzero"
  gf2::Vec coords;         // over the homology representatives
  LambdaElement image;     // normalized psi
};

inline TransferImage transfer_image(const DualElement& xi, const ExtGroup& eg) {
  const int h = eg.s(), n = eg.t();
  for (const auto& m : xi)
    if (static_cast<int>(m.size()) != h || degree(m) != n)
      throw std::invalid_argument("element does not live in the requested bidegree");
  if (!annihilated(xi, n)) throw std::domain_error("element is not annihilated by the Steenrod action");
  TransferImage out;
  out.ext_dim = eg.dim();
  out.image = psi(xi);
  auto cls = eg.classify(out.image);
  if (!cls.is_cycle) throw std::logic_error("psi image fails the cycle invariant");
  if (cls.is_boundary) {
    out.class_name = "zero";
    return out;
  }
  out.coords = cls.coords;
  std::string name = h_product_name(eg, out.coords);
  out.class_name = name.empty() ? "nonzero" : name;
  return out;
}

inline TransferImage transfer_image(const DualElement& xi, int h, int n) {
  return transfer_image(xi, ExtGroup(h, n));
}

struct Coinvariants {
  int dim = 0;
  // Paired as a dual basis against the computed invariant basis upstairs.
  std::vector<DualElement> representatives;
};

inline Coinvariants coinvariants(int h, int n, std::size_t column_cap = kDefaultColumnCap,
                                 bool force = false) {
  AnnihilatedSpace ann = annihilated_space(h, n, column_cap, force);
  const int ncols = static_cast<int>(ann.monomials.size());
  std::unordered_map<Exps, int, ExpsHash> idx;
  for (int i = 0; i < ncols; ++i) idx.emplace(ann.monomials[i], i);

  // Span of (theta_j^T + id) over the annihilated space; the transpose of
  // the substitution matrix acts on duals row-by-row.
  gf2::Echelon uech(ncols);
  for (int j = 1; j <= h; ++j) {
    VariableMap map = theta(j, h);
    std::vector<gf2::Vec> cols(ann.monomials.size());
    for (int c = 0; c < ncols; ++c)
      for (const auto& r : substitute(map, Poly{ann.monomials[c]})) cols[c].flip(idx.at(r));
    std::vector<gf2::Vec> rows = gf2::transpose(cols, ncols);
    for (const auto& a : ann.basis) {
      gf2::Vec u = a;
      a.for_each_bit([&](int r) { u ^= rows[r]; });
      if (!u.zero()) uech.insert(std::move(u));
    }
  }
  Coinvariants out;
  out.dim = ann.dim() - uech.rank();

  CohitBasis cb(h, n, column_cap, force);
  std::vector<gf2::Vec> inv = invariants(cb, Group::GL);
  if (static_cast<int>(inv.size()) != out.dim)
    throw std::logic_error("coinvariant and invariant dimensions disagree");
  if (out.dim == 0) return out;

  // A complement of the reduced-away span inside the annihilated space.
  std::vector<gf2::Vec> comp;
  for (const auto& a : ann.basis) {
    if (static_cast<int>(comp.size()) == out.dim) break;
    if (uech.insert(a) >= 0) comp.push_back(a);
  }
  const int g = out.dim;
  // P[i][j] = <invariant_i, comp_j>; representatives are P^{-T} comp.
  std::vector<gf2::Vec> paug(g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      int par = 0;
      inv[i].for_each_bit([&](int a) { par ^= comp[j].test(idx.at(cb.admissibles()[a])); });
      if (par) paug[i].flip(j);
    }
    paug[i].flip(g + i);
  }
  for (int col = 0; col < g; ++col) {
    int piv = -1;
    for (int r = col; r < g; ++r)
      if (paug[r].test(col)) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("pairing between invariants and coinvariants is degenerate");
    std::swap(paug[col], paug[piv]);
    for (int r = 0; r < g; ++r)
      if (r != col && paug[r].test(col)) paug[r] ^= paug[col];
  }
  for (int i = 0; i < g; ++i) {
    gf2::Vec rho;
    for (int j = 0; j < g; ++j)
      if (paug[j].test(g + i)) rho ^= comp[j];  // Q[j][i] with Q = P^{-1}
    out.representatives.push_back(ann.element(rho));
  }
  return out;
}

}  // namespace hitalg
