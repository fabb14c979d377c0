#include "doctest.h"
#include "hitalg/lambda.hpp"

#include <random>

using namespace hitalg;

TEST_CASE("admissibility: each index at most double its predecessor") {
    CHECK(lambda_admissible({}));
    CHECK(lambda_admissible({5}));
    CHECK(lambda_admissible({1, 2}));
    CHECK_FALSE(lambda_admissible({1, 3}));
    CHECK(lambda_admissible({3, 6, 12}));
    CHECK_FALSE(lambda_admissible({3, 6, 13}));
    CHECK(lambda_admissible({0, 0, 0}));
}

TEST_CASE("adem rewriting") {
    CHECK(adem_normalize({{1, 15}}) == LambdaElement{{9, 7}, {13, 3}});
    // already admissible terms pass through
    CHECK(adem_normalize({{2, 1}}) == LambdaElement{{2, 1}});
    CHECK(adem_normalize({}) == LambdaElement{});
    // idempotent
    std::mt19937 rng(401);
    for (int trial = 0; trial < 40; ++trial) {
        LambdaWord w(2 + rng() % 2);
        for (auto& j : w) j = int(rng() % 12);
        auto n1 = adem_normalize({w});
        CHECK(adem_normalize(n1) == n1);
        for (const auto& u : n1) CHECK(lambda_admissible(u));
        // degree and length are preserved
        for (const auto& u : n1) {
            CHECK(u.size() == w.size());
            int dw = 0, du = 0;
            for (int j : w) dw += j;
            for (int j : u) du += j;
            CHECK(du == dw);
        }
    }
}

TEST_CASE("multiplication is associative with the empty word as unit") {
    LambdaElement one{LambdaWord{}};
    std::mt19937 rng(409);
    for (int trial = 0; trial < 25; ++trial) {
        auto rnd = [&](int len) {
            LambdaWord w(len);
            for (auto& j : w) j = int(rng() % 9);
            return LambdaElement{w};
        };
        auto a = rnd(1), b = rnd(1 + rng() % 2), c = rnd(1);
        CHECK(lambda_mul(a, one) == adem_normalize(a));
        CHECK(lambda_mul(one, a) == adem_normalize(a));
        CHECK(lambda_mul(lambda_mul(a, b), c) == lambda_mul(a, lambda_mul(b, c)));
    }
}

TEST_CASE("differential on generators") {
    CHECK(differential(LambdaElement{{0}}) == LambdaElement{});
    CHECK(differential(LambdaElement{{2}}) == LambdaElement{{1, 0}});
    CHECK(differential(LambdaElement{{3}}) == LambdaElement{});
    CHECK(differential(LambdaElement{{5}}) == LambdaElement{{3, 1}});
    CHECK(differential(LambdaElement{{15}}) == LambdaElement{});
}

TEST_CASE("differential squares to zero") {
    for (int s = 1; s <= 3; ++s)
        for (int t = 0; t <= 24; ++t)
            for (const auto& w : lambda_basis(s, t))
                CHECK(differential(differential(LambdaElement{w})) == LambdaElement{});
}

TEST_CASE("differential is a derivation") {
    std::mt19937 rng(419);
    for (int trial = 0; trial < 30; ++trial) {
        LambdaWord u(1 + rng() % 2), v(1 + rng() % 2);
        for (auto& j : u) j = int(rng() % 10);
        for (auto& j : v) j = int(rng() % 10);
        LambdaElement a{u}, b{v};
        auto lhs = differential(lambda_mul(a, b));
        auto rhs = lambda_mul(differential(a), adem_normalize(b)) ^
                   lambda_mul(adem_normalize(a), differential(b));
        CHECK(lhs == adem_normalize(rhs));
    }
}

TEST_CASE("index doubling is a chain map") {
    for (int s = 1; s <= 3; ++s)
        for (int t = 0; t <= 16; ++t)
            for (const auto& w : lambda_basis(s, t)) {
                LambdaElement dbl{sq0_lambda(w)};
                LambdaElement lhs = differential(dbl);
                LambdaElement rhs;
                for (const auto& dw : differential(LambdaElement{w})) toggle(rhs, sq0_lambda(dw));
                CHECK(lhs == adem_normalize(rhs));
            }
}

TEST_CASE("admissible word bases") {
    auto b23 = lambda_basis(2, 3);
    CHECK(b23.size() == 3);
    for (const auto& w : b23) CHECK(lambda_admissible(w));
    CHECK(lambda_basis(3, 10).size() == 25);
    CHECK(lambda_basis(4, 20).size() == 362);
    CHECK(lambda_basis(0, 0).size() == 1);
    CHECK(lambda_basis(0, 3).empty());
    CHECK(lambda_basis(-1, 2).empty());
    // every admissible word of the bidegree appears exactly once
    for (const auto& w : lambda_basis(3, 12)) {
        int t = 0;
        for (int j : w) t += j;
        CHECK(t == 12);
        CHECK(w.size() == 3);
    }
}

TEST_CASE("first filtration detects exactly the doubling family") {
    for (int n = 0; n <= 40; ++n) {
        int expect = (n == 0 || n == 1 || n == 3 || n == 7 || n == 15 || n == 31) ? 1 : 0;
        CHECK(ExtGroup(1, n).dim() == expect);
    }
}

TEST_CASE("small cohomology dimensions and product names") {
    {
        ExtGroup eg(1, 0);
        CHECK(eg.dim() == 1);
        gf2::Vec e;
        e.flip(0);
        CHECK(h_product_name(eg, e) == "h0");
    }
    {
        ExtGroup eg(2, 2);
        CHECK(eg.dim() == 1);
        gf2::Vec e;
        e.flip(0);
        CHECK(h_product_name(eg, e) == "h1^2");
    }
    {
        ExtGroup eg(3, 7);
        CHECK(eg.dim() == 1);
        gf2::Vec e;
        e.flip(0);
        CHECK(h_product_name(eg, e) == "h0^2h3");
    }
    {
        ExtGroup eg(2, 6);
        CHECK(eg.dim() == 1);
        gf2::Vec e;
        e.flip(0);
        CHECK(h_product_name(eg, e) == "h2^2");
    }
    {
        ExtGroup eg(3, 14);
        CHECK(eg.dim() == 1);
        gf2::Vec e;
        e.flip(0);
        CHECK(h_product_name(eg, e) == "h0h3^2");
    }
    CHECK(ExtGroup(4, 8).dim() == 0);
}

TEST_CASE("classification separates cycles, boundaries and homology") {
    ExtGroup eg(4, 38);
    auto z = adem_normalize({{0, 0, 7, 31}});
    CHECK(z.size() == 27);
    auto c = eg.classify(z);
    CHECK(c.is_cycle);
    CHECK_FALSE(c.is_boundary);
    CHECK(c.coords.count() >= 1);
    // a boundary classifies as such
    auto b = differential(LambdaElement{{13, 13, 13}});
    if (!b.empty()) {
        auto cb = eg.classify(b);
        CHECK(cb.is_cycle);
        CHECK(cb.is_boundary);
    }
    // zero element
    auto cz = eg.classify({});
    CHECK(cz.is_cycle);
    CHECK(cz.is_boundary);
    // non-cycles are flagged
    ExtGroup small(2, 4);
    auto cn = small.classify({{3, 1}});
    if (!differential(LambdaElement{{3, 1}}).empty()) CHECK_FALSE(cn.is_cycle);
}

TEST_CASE("representatives are independent non-boundary cycles") {
    for (auto [s, t] : {std::pair{4, 18}, {3, 14}, {4, 38}}) {
        ExtGroup eg(s, t);
        for (int i = 0; i < eg.dim(); ++i) {
            const auto& r = eg.representatives()[i];
            CHECK(differential(r) == LambdaElement{});
            auto c = eg.classify(r);
            CHECK(c.is_cycle);
            CHECK_FALSE(c.is_boundary);
            gf2::Vec e;
            e.flip(i);
            CHECK(c.coords == e);
        }
    }
    CHECK(ExtGroup(4, 18).dim() == 2);
}

TEST_CASE("words of a foreign bidegree are rejected") {
    ExtGroup eg(2, 4);
    CHECK_THROWS_AS(eg.to_vec({{1, 2}}), std::invalid_argument);
}
