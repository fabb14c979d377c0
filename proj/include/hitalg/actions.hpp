#pragma once

#include <stdexcept>
#include <vector>

#include "cohit.hpp"
#include "gf2.hpp"
#include "poly.hpp"

namespace hitalg {

// Matrix of a variable substitution on cohit coordinates.  Column j is the
// class of the map applied to the j-th admissible monomial.
struct InducedEndo {
  std::vector<gf2::Vec> cols;

  int dim() const { return static_cast<int>(cols.size()); }

  gf2::Vec apply(const gf2::Vec& v) const {
    gf2::Vec out;
    v.for_each_bit([&](int j) { out ^= cols[j]; });
    return out;
  }
};

inline InducedEndo induced_endo(const VariableMap& map, const CohitBasis& cb) {
  if (map.src_vars != cb.h() || map.dst_vars != cb.h())
    throw std::invalid_argument("induced_endo: map must preserve the variable count");
  InducedEndo e;
  e.cols.reserve(cb.dim());
  for (const auto& adm : cb.admissibles()) e.cols.push_back(cb.reduce(substitute(map, adm)));
  return e;
}

enum class Group { S, GL };

// Solutions of theta_j(v) = v over the given generator range, as cohit
// coordinate vectors.
inline std::vector<gf2::Vec> invariants(const CohitBasis& cb, Group g) {
  const int h = cb.h();
  const int d = cb.dim();
  const int gens = g == Group::S ? h - 1 : h;
  gf2::Echelon ech(d);
  for (int j = 1; j <= gens; ++j) {
    InducedEndo m = induced_endo(theta(j, h), cb);
    auto rows = gf2::transpose(m.cols, d);
    for (int r = 0; r < d; ++r) {
      rows[r].flip(r);
      if (!rows[r].zero()) ech.insert(std::move(rows[r]));
    }
  }
  ech.finalize();
  return ech.kernel_basis();
}

// Same system restricted to one weight layer of the cohit space.  The
// substitution never raises the weight of a class, so dropping the
// lower-weight part of the reduced image is the induced action on the layer.
inline std::vector<gf2::Vec> invariants_weight(const CohitBasis& cb, const std::vector<int>& w,
                                               Group g) {
  const int h = cb.h();
  WeightComponent comp = cb.weight_component(w);
  const int d = comp.dim_total;
  std::vector<int> pos(cb.dim(), -1);
  for (int i = 0; i < d; ++i) pos[comp.members[i]] = i;
  gf2::Echelon ech(d);
  const int gens = g == Group::S ? h - 1 : h;
  for (int j = 1; j <= gens; ++j) {
    VariableMap th = theta(j, h);
    std::vector<gf2::Vec> cols(d);
    for (int i = 0; i < d; ++i) {
      gf2::Vec full = cb.reduce(substitute(th, cb.admissibles()[comp.members[i]]));
      full.for_each_bit([&](int c) {
        if (pos[c] >= 0) cols[i].flip(pos[c]);
      });
    }
    auto rows = gf2::transpose(cols, d);
    for (int r = 0; r < d; ++r) {
      rows[r].flip(r);
      if (!rows[r].zero()) ech.insert(std::move(rows[r]));
    }
  }
  ech.finalize();
  return ech.kernel_basis();
}

}  // namespace hitalg
