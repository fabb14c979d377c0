#include "doctest.h"
#include "hitalg/cohit.hpp"

#include <algorithm>
#include <random>

using namespace hitalg;

TEST_CASE("one variable: everything above the spikes is decomposable") {
    HitSpace hs(1, 2);
    CHECK(hs.monomials().size() == 1);
    CHECK(hs.rank() == 1);
    CHECK(hs.dim() == 0);
    CHECK(hs.is_hit(Poly{{2}}));
    // spike degrees survive
    CHECK(CohitBasis(1, 3).dim() == 1);
    CHECK(CohitBasis(1, 7).dim() == 1);
    CHECK(CohitBasis(1, 6).dim() == 0);
}

TEST_CASE("two variables in degree three") {
    CohitBasis cb(2, 3);
    CHECK(cb.dim() == 3);
    const auto& adm = cb.admissibles();
    CHECK(std::count(adm.begin(), adm.end(), Exps{3, 0}) == 1);
    CHECK(std::count(adm.begin(), adm.end(), Exps{0, 3}) == 1);
}

TEST_CASE("product of squares is decomposable") {
    CohitBasis cb(2, 4);
    CHECK(cb.is_hit(Poly{{2, 2}}));
    CHECK_FALSE(cb.is_hit(Poly{{3, 1}}));
}

TEST_CASE("spikes are never hit") {
    for (auto [h, n] : {std::pair{2, 3}, {3, 9}, {3, 7}, {4, 11}}) {
        CohitBasis cb(h, n);
        CHECK_FALSE(cb.is_hit(Poly{minimal_spike(h, n)}));
    }
}

TEST_CASE("images of positive squares reduce to zero") {
    std::mt19937 rng(101);
    CohitBasis cb(3, 9);
    for (int trial = 0; trial < 25; ++trial) {
        int k = 1 << (rng() % 3);  // 1, 2, 4
        Poly f;
        auto ms = homogeneous_monomials(9 - k, 3);
        for (int t = 0; t < 3; ++t) toggle(f, ms[rng() % ms.size()]);
        CHECK(cb.is_hit(sq(k, f)));
        CHECK(cb.reduce(sq(k, f)).zero());
    }
}

TEST_CASE("reduce is a projection onto the admissible basis") {
    std::mt19937 rng(103);
    CohitBasis cb(3, 8);
    for (int trial = 0; trial < 25; ++trial) {
        Poly f;
        auto ms = homogeneous_monomials(8, 3);
        for (int t = 0; t < 4; ++t) toggle(f, ms[rng() % ms.size()]);
        auto v = cb.reduce(f);
        Poly rep = cb.representative(v);
        // f and its representative agree modulo the hit subspace
        Poly diff = f;
        for (const auto& m : rep) toggle(diff, m);
        CHECK(cb.is_hit(diff));
        CHECK(cb.reduce(rep) == v);
    }
    // admissibles are their own representatives
    for (int i = 0; i < cb.dim(); ++i) {
        auto v = cb.reduce(Poly{cb.admissibles()[i]});
        CHECK(v.count() == 1);
        CHECK(v.test(i));
    }
}

TEST_CASE("vanishing matches the spike-count threshold") {
    for (int h = 1; h <= 3; ++h)
        for (int n = 1; n <= 20; ++n) {
            CohitBasis cb(h, n);
            CHECK((cb.dim() == 0) == (mu(n) > h));
        }
}

TEST_CASE("six variables in degree eight, with weight layers") {
    CohitBasis cb(6, 8);
    CHECK(cb.dim() == 489);
    auto w23 = cb.weight_component({2, 3});
    CHECK(w23.dim_total == 84);
    auto w42 = cb.weight_component({4, 2});
    CHECK(w42.dim_total == 189);
    auto w211 = cb.weight_component({2, 1, 1});
    CHECK(w211.dim_total == 210);
    int total = 0, pos = 0;
    for (const auto& [w, members] : cb.by_weight()) {
        auto comp = cb.weight_component(w);
        CHECK(comp.dim_total == int(members.size()));
        CHECK(comp.dim_zero + comp.dim_positive == comp.dim_total);
        total += comp.dim_total;
        pos += comp.dim_positive;
    }
    CHECK(total == cb.dim());
    CHECK(pos == cb.dim_positive());
    CHECK_THROWS_AS(cb.weight_component({1, 1}), std::invalid_argument);
}

TEST_CASE("column budget guard") {
    CHECK_THROWS_AS(CohitBasis(2, 3, 2, false), CapacityError);
    try {
        CohitBasis cb(2, 3, 2, false);
    } catch (const CapacityError& e) {
        CHECK(e.columns == 4);
        CHECK(e.cap == 2);
    }
    CohitBasis forced(2, 3, 2, true);
    CHECK(forced.dim() == 3);
}

TEST_CASE("column lookup rejects foreign monomials") {
    HitSpace hs(2, 4);
    CHECK_THROWS_AS(hs.column(Exps{1, 1}), std::invalid_argument);
    CHECK(hs.column(Exps{3, 1}) >= 0);
}
