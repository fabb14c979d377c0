#include "doctest.h"
#include "hitalg/actions.hpp"
#include "hitalg/kameko.hpp"

#include <random>

using namespace hitalg;

TEST_CASE("monomial halving and doubling") {
    CHECK(kameko_down_mono(Exps{3, 5, 7}) == Exps{1, 2, 3});
    CHECK_FALSE(kameko_down_mono(Exps{2, 3}).has_value());
    CHECK(kameko_up_mono(Exps{1, 2, 3}) == Exps{3, 5, 7});
    CHECK(kameko_up_mono(Exps{0, 0}) == Exps{1, 1});
}

TEST_CASE("halving after doubling is the identity") {
    std::mt19937 rng(301);
    for (int trial = 0; trial < 30; ++trial) {
        Poly f;
        for (int t = 0; t < 4; ++t) {
            Exps m(3);
            for (auto& a : m) a = int(rng() % 6);
            toggle(f, m);
        }
        CHECK(kameko_down(kameko_up(f)) == f);
    }
}

TEST_CASE("pair construction guards the degree relation") {
    CohitBasis src(3, 9), good(3, 3), bad(3, 2);
    CHECK_NOTHROW(kameko_pair(src, good));
    CHECK_THROWS_AS(kameko_pair(src, bad), std::invalid_argument);
}

TEST_CASE("rank and kernel satisfy rank-nullity") {
    CohitBasis src(3, 9), dst(3, 3);
    KamekoPair kp = kameko_pair(src, dst);
    CHECK(kp.src_dim == src.dim());
    CHECK(kp.dst_dim == dst.dim());
    CHECK(kameko_rank(kp) + int(kameko_kernel(kp).size()) == kp.src_dim);
    for (const auto& k : kameko_kernel(kp)) CHECK(kp.apply(k).zero());
}

TEST_CASE("the map splits: halving a doubled class gives it back") {
    CohitBasis src(3, 9), dst(3, 3);
    KamekoPair kp = kameko_pair(src, dst);
    for (int i = 0; i < dst.dim(); ++i) {
        Poly up = kameko_up(Poly{dst.admissibles()[i]});
        gf2::Vec img = kp.apply(src.reduce(up));
        gf2::Vec e;
        e.flip(i);
        CHECK(img == e);
    }
}

TEST_CASE("halving is an isomorphism at the spike threshold") {
    // degrees where the spike count equals the variable count
    for (auto [h, n] : {std::pair{2, 6}, {3, 9}, {3, 17}}) {
        CohitBasis src(h, n), dst(h, (n - h) / 2);
        KamekoPair kp = kameko_pair(src, dst);
        CHECK(src.dim() == dst.dim());
        CHECK(kameko_rank(kp) == src.dim());
        CHECK(kameko_kernel(kp).empty());
    }
}

TEST_CASE("halving commutes with the group action") {
    CohitBasis src(3, 9), dst(3, 3);
    KamekoPair kp = kameko_pair(src, dst);
    for (int j = 1; j <= 3; ++j) {
        InducedEndo up = induced_endo(theta(j, 3), src);
        InducedEndo dn = induced_endo(theta(j, 3), dst);
        for (int i = 0; i < src.dim(); ++i) {
            gf2::Vec e;
            e.flip(i);
            CHECK(kp.apply(up.apply(e)) == dn.apply(kp.apply(e)));
        }
    }
}

TEST_CASE("iterated halving composes the pair matrices") {
    CohitBasis a(3, 17), b(3, 7), c(3, 2);
    auto one = kameko_iterate({&a});
    for (int i = 0; i < a.dim(); ++i) {
        gf2::Vec e;
        e.flip(i);
        CHECK(one[i] == e);
    }
    auto two = kameko_iterate({&a, &b});
    KamekoPair ab = kameko_pair(a, b);
    for (int i = 0; i < a.dim(); ++i) CHECK(two[i] == ab.down_cols[i]);
    auto three = kameko_iterate({&a, &b, &c});
    KamekoPair bc = kameko_pair(b, c);
    for (int i = 0; i < a.dim(); ++i) CHECK(three[i] == bc.apply(ab.down_cols[i]));
    CHECK(gf2::rank_of(three, c.dim()) <= kameko_rank(ab));
    CHECK_THROWS_AS(kameko_iterate({}), std::invalid_argument);
}

TEST_CASE("six-variable kernels in degrees eight and twelve") {
    CohitBasis s8(6, 8), d8(6, 1);
    CHECK(kameko_kernel(kameko_pair(s8, d8)).size() == 483);
    CohitBasis s12(6, 12), d12(6, 3);
    CHECK(s12.dim() == 1001);
    CHECK(kameko_kernel(kameko_pair(s12, d12)).size() == 960);
}
