#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cohit.hpp"
#include "gf2.hpp"
#include "poly.hpp"

namespace hitalg {

// Exponent-halving on a monomial: defined when every exponent is odd.
inline std::optional<Exps> kameko_down_mono(const Exps& t) {
  Exps out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] % 2 == 0) return std::nullopt;
    out[j] = (t[j] - 1) / 2;
  }
  return out;
}

inline Exps kameko_up_mono(const Exps& t) {
  Exps out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = 2 * t[j] + 1;
  return out;
}

inline Poly kameko_down(const Poly& f) {
  Poly out;
  for (const auto& m : f)
    if (auto d = kameko_down_mono(m)) toggle(out, *d);
  return out;
}

inline Poly kameko_up(const Poly& f) {
  Poly out;
  for (const auto& m : f) toggle(out, kameko_up_mono(m));
  return out;
}

// The squaring-root map between the two cohit spaces, as a matrix over
// their admissible bases.
struct KamekoPair {
  int h = 0;
  int n = 0;
  std::vector<gf2::Vec> down_cols;  // coordinates in the target basis
  int src_dim = 0;
  int dst_dim = 0;

  gf2::Vec apply(const gf2::Vec& v) const {
    gf2::Vec out;
    v.for_each_bit([&](int j) { out ^= down_cols[j]; });
    return out;
  }
};

inline KamekoPair kameko_pair(const CohitBasis& src, const CohitBasis& dst) {
  if (src.h() != dst.h() || src.n() != 2 * dst.n() + src.h())
    throw std::invalid_argument("kameko_pair: target degree must be (n - h)/2");
  KamekoPair kp;
  kp.h = src.h();
  kp.n = src.n();
  kp.src_dim = src.dim();
  kp.dst_dim = dst.dim();
  kp.down_cols.reserve(src.dim());
  for (const auto& adm : src.admissibles()) {
    auto d = kameko_down_mono(adm);
    kp.down_cols.push_back(d ? dst.reduce(Poly{*d}) : gf2::Vec{});
  }
  return kp;
}

inline int kameko_rank(const KamekoPair& kp) {
  return gf2::rank_of(kp.down_cols, kp.dst_dim);
}

inline std::vector<gf2::Vec> kameko_kernel(const KamekoPair& kp) {
  gf2::Echelon ech(kp.src_dim);
  auto rows = gf2::transpose(kp.down_cols, kp.dst_dim);
  for (auto& r : rows)
    if (!r.zero()) ech.insert(std::move(r));
  ech.finalize();
  return ech.kernel_basis();
}

// Composite of successive squaring-root maps along a chain of bases
// n, (n-h)/2, ...; returns the matrix columns over the first basis.
inline std::vector<gf2::Vec> kameko_iterate(const std::vector<const CohitBasis*>& chain) {
  if (chain.empty()) throw std::invalid_argument("kameko_iterate: empty chain");
  std::vector<gf2::Vec> cols(chain.front()->dim());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j].flip(static_cast<int>(j));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    KamekoPair kp = kameko_pair(*chain[i], *chain[i + 1]);
    for (auto& c : cols) c = kp.apply(c);
  }
  return cols;
}

}  // namespace hitalg
