#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace hitalg {

// A monomial in h variables is its exponent tuple.
using Exps = std::vector<int>;
// GF(2) polynomial as the set of monomials with coefficient 1.
using Poly = std::set<Exps>;

inline int degree(const Exps& e) {
  int n = 0;
  for (int a : e) n += a;
  return n;
}

inline int alpha(long long n) { return n < 0 ? -1 : std::popcount(static_cast<std::uint64_t>(n)); }

// binom(m, r) mod 2 by Lucas: odd iff the bits of r sit inside m.
inline bool binom_odd(long long m, long long r) {
  if (r < 0 || m < 0 || r > m) return false;
  return (r & ~m) == 0;
}

inline void toggle(Poly& p, const Exps& m) {
  auto it = p.find(m);
  if (it == p.end())
    p.insert(m);
  else
    p.erase(it);
}

// omega_i(t) counts variables with bit i-1 set in their exponent; trailing
// zeros are dropped so equal-degree monomials can still differ in length.
inline std::vector<int> weight_vector(const Exps& e) {
  std::vector<int> w;
  int mx = 0;
  for (int a : e) mx = std::max(mx, a);
  for (int bit = 0; (1 << bit) <= mx; ++bit) {
    int c = 0;
    for (int a : e)
      if ((a >> bit) & 1) ++c;
    w.push_back(c);
  }
  return w;
}

inline int omega_degree(const std::vector<int>& w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i) n += w[i] << i;
  return n;
}

// Total order used everywhere: weight vector first, then exponents, both
// left-lexicographic.
inline bool mono_less(const Exps& a, const Exps& b) {
  auto wa = weight_vector(a), wb = weight_vector(b);
  if (wa != wb) return wa < wb;
  return a < b;
}

// Least number of spikes summing to n.
inline int mu(int n) {
  for (int r = 0;; ++r)
    if (alpha(n + r) <= r) return r;
}

// The minimal spike of degree n in h variables: exponents 2^{d_1}-1 >= ...
// >= 2^{d_r}-1 with r = mu(n), greedily maximal.
inline Exps minimal_spike(int h, int n) {
  int r = mu(n);
  if (r > h) throw std::invalid_argument("degree needs more spike factors than variables");
  Exps out(h, 0);
  int rem = n;
  for (int i = 0; i < r; ++i) {
    int left = r - i - 1;
    int d = 1;
    while ((1 << (d + 1)) - 1 <= rem - left) ++d;
    out[i] = (1 << d) - 1;
    rem -= out[i];
  }
  return out;
}

// Sq^k on a monomial.  Per variable the only summands with odd binomial
// coefficient are the bit-subsets of the exponent, capped by what is left.
inline Poly sq(int k, const Exps& e) {
  const int h = static_cast<int>(e.size());
  std::vector<int> suffix(h + 1, 0);
  for (int j = h - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + e[j];
  Poly out;
  Exps acc(h, 0);
  auto rec = [&](auto&& self, int j, int rem) -> void {
    if (j == h) {
      if (rem == 0) toggle(out, acc);
      return;
    }
    if (rem > suffix[j]) return;
    int a = e[j];
    int kj = a;
    for (;;) {
      if (kj <= rem) {
        acc[j] = a + kj;
        self(self, j + 1, rem - kj);
      }
      if (kj == 0) break;
      kj = (kj - 1) & a;
    }
    acc[j] = a;
  };
  rec(rec, 0, k);
  return out;
}

inline Poly sq(int k, const Poly& p) {
  Poly out;
  for (const auto& m : p)
    for (const auto& t : sq(k, m)) toggle(out, t);
  return out;
}

inline Poly mul(const Poly& p, const Poly& q) {
  Poly out;
  for (const auto& a : p)
    for (const auto& b : q) {
      Exps m(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
      toggle(out, m);
    }
  return out;
}

// A linear substitution: each source variable goes to a sum of target
// variables.  Source and target variable counts may differ.
struct VariableMap {
  int src_vars = 0;
  int dst_vars = 0;
  std::vector<std::vector<int>> img;  // img[j] = target variable indices (0-based)
};

inline VariableMap identity_map(int h) {
  VariableMap m{h, h, {}};
  m.img.resize(h);
  for (int j = 0; j < h; ++j) m.img[j] = {j};
  return m;
}

// theta_j for j < h swaps t_j and t_{j+1}; theta_h sends t_1 to t_1 + t_2.
inline VariableMap theta(int j, int h) {
  if (j < 1 || j > h) throw std::out_of_range("theta: generator index");
  VariableMap m = identity_map(h);
  if (j < h) {
    m.img[j - 1] = {j};
    m.img[j] = {j - 1};
  } else {
    m.img[0] = {0, 1};
  }
  return m;
}

// Embedding of h-1 variables into h skipping slot l.
inline VariableMap q_map(int l, int h) {
  if (l < 1 || l > h) throw std::out_of_range("q_map: slot index");
  VariableMap m{h - 1, h, {}};
  m.img.resize(h - 1);
  for (int j = 0; j < h - 1; ++j) m.img[j] = {j < l - 1 ? j : j + 1};
  return m;
}

// Merge of slots u < v onto target slot v-1: variables below u are fixed,
// t_u goes to t_{v-1}, everything above u shifts down.
inline VariableMap phi_uv(int u, int v, int h) {
  if (!(1 <= u && u < v && v <= h)) throw std::out_of_range("phi_uv: slot indices");
  VariableMap m{h, h - 1, {}};
  m.img.resize(h);
  for (int j = 1; j <= h; ++j) {
    if (j < u)
      m.img[j - 1] = {j - 1};
    else if (j == u)
      m.img[j - 1] = {v - 2};
    else
      m.img[j - 1] = {j - 2};
  }
  return m;
}

// Substitute a linear map into a monomial: expand each (sum)^a by picking a
// bit-subset split per summand pair, which is exactly the odd part of the
// multinomial expansion mod 2.
inline Poly substitute(const VariableMap& map, const Exps& e) {
  if (static_cast<int>(e.size()) != map.src_vars)
    throw std::invalid_argument("substitute: variable count mismatch");
  Poly cur;
  cur.insert(Exps(map.dst_vars, 0));
  for (int j = 0; j < map.src_vars; ++j) {
    int a = e[j];
    if (a == 0) continue;
    const auto& vs = map.img[j];
    Poly nxt;
    if (vs.size() == 1) {
      for (const auto& m : cur) {
        Exps t = m;
        t[vs[0]] += a;
        toggle(nxt, t);
      }
    } else {
      // (t_x + t_y)^a = sum over bit-subsets i of a of t_x^i t_y^{a-i}
      for (const auto& m : cur) {
        int i = a;
        for (;;) {
          Exps t = m;
          t[vs[0]] += i;
          t[vs[1]] += a - i;
          toggle(nxt, t);
          if (i == 0) break;
          i = (i - 1) & a;
        }
      }
    }
    cur = std::move(nxt);
  }
  return cur;
}

inline Poly substitute(const VariableMap& map, const Poly& p) {
  Poly out;
  for (const auto& m : p)
    for (const auto& t : substitute(map, m)) toggle(out, t);
  return out;
}

// All degree-n monomials in h variables.
inline std::vector<Exps> homogeneous_monomials(int n, int h) {
  std::vector<Exps> out;
  Exps cur(h, 0);
  auto rec = [&](auto&& self, int j, int rem) -> void {
    if (j == h - 1) {
      cur[j] = rem;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= rem; ++a) {
      cur[j] = a;
      self(self, j + 1, rem - a);
    }
  };
  if (h == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, n);
  return out;
}

// Same set, sorted by (weight vector, exponents).  This is the column order
// every matrix in the library uses.
inline std::vector<Exps> canonical_monomials(int n, int h) {
  auto ms = homogeneous_monomials(n, h);
  std::vector<std::pair<std::vector<int>, Exps>> keyed;
  keyed.reserve(ms.size());
  for (auto& m : ms) keyed.emplace_back(weight_vector(m), std::move(m));
  std::sort(keyed.begin(), keyed.end());
  std::vector<Exps> out;
  out.reserve(keyed.size());
  for (auto& [w, m] : keyed) out.push_back(std::move(m));
  return out;
}

}  // namespace hitalg
