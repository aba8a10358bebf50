#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "skc/grid_sets.hpp"
#include "skc/oracles.hpp"

using namespace skc;

namespace {

GridSet grid_from_mask(int n, std::uint64_t mask) {
    GridSet s(n);
    for (int i = 0; i < n * n; ++i)
        if (mask >> i & 1) s.insert(i % n + 1, i / n + 1);
    return s;
}

TriSet tri_from_mask(int n, std::uint64_t mask) {
    const TriSet full = TriSet::full(n);
    TriSet s(n);
    for (std::size_t i = 0; i < full.points().size(); ++i)
        if (mask >> i & 1) s.insert(full.points()[i]);
    return s;
}

TriSet random_skew_tri_free(int n, std::mt19937_64& rng) {
    const TriSet full = TriSet::full(n);
    auto pts = full.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    TriSet s(n);
    for (const auto& p : pts) {
        TriSet cand = s;
        cand.insert(p);
        if (is_skew_corner_free_tri(cand)) s = cand;
    }
    return s;
}

}  // namespace

TEST_CASE("GridSet container basics") {
    GridSet s(3);
    CHECK(s.empty());
    s.insert(2, 3);
    s.insert(1, 1);
    s.insert(2, 1);
    CHECK(s.size() == 3);
    CHECK(s.contains(2, 3));
    CHECK(!s.contains(3, 3));
    CHECK_THROWS_AS(s.insert(0, 1), std::out_of_range);
    CHECK_THROWS_AS(s.insert(1, 4), std::out_of_range);
    auto pts = s.points();
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    GridSet t = s.transpose();
    CHECK(t.contains(3, 2));
    CHECK(t.contains(1, 2));
    CHECK(t.size() == 3);
}

TEST_CASE("TriSet container basics") {
    TriSet s(4);
    s.insert(4, 0, 0);
    s.insert(1, 2, 1);
    CHECK(s.size() == 2);
    CHECK(s.contains(1, 2, 1));
    CHECK_THROWS_AS(s.insert(1, 1, 1), std::out_of_range);   // sum != 4
    CHECK_THROWS_AS(s.insert(-1, 5, 0), std::out_of_range);  // negative
    CHECK(TriSet::full(4).size() == 15);                     // (n+1)(n+2)/2
    TriSet p = s.permuted({1, 2, 0});
    CHECK(p.contains(2, 1, 1));
    CHECK(p.contains(0, 0, 4));
}

TEST_CASE("skew grid predicate: hand examples") {
    // A full column is free: only one occupied column.
    GridSet col(6);
    for (int y = 1; y <= 6; ++y) col.insert(1, y);
    CHECK(is_skew_corner_free_grid(col));

    // Full [2]^2 fails with gap 1.
    GridSet sq = grid_from_mask(2, 0b1111);
    Violation v;
    CHECK(!is_skew_corner_free_grid(sq, &v));
    CHECK(v.kind == ViolationKind::SkewCorner);
    CHECK(std::abs(v.gap) == 1);

    CHECK(is_skew_corner_free_grid(GridSet(5)));  // empty set
}

TEST_CASE("bi-skew predicate: hand examples") {
    GridSet row(5);
    for (int x = 1; x <= 5; ++x) row.insert(x, 1);
    CHECK(is_bi_skew_corner_free(row));  // one occupied row; rows 1+-d empty

    GridSet bad(3);
    bad.insert(1, 1);
    bad.insert(2, 1);
    bad.insert(1, 2);
    CHECK(!is_bi_skew_corner_free(bad));
    CHECK(is_bi_skew_corner_free(GridSet(4)));
}

TEST_CASE("skew grid is orientation-sensitive, bi-skew is transpose-invariant") {
    GridSet s(5);
    s.insert(1, 1);
    s.insert(1, 2);
    s.insert(2, 5);
    CHECK(!is_skew_corner_free_grid(s));           // column 1 gap 1, column 2 occupied
    CHECK(is_skew_corner_free_grid(s.transpose()));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        GridSet r = grid_from_mask(4, rng() & 0xffff);
        CHECK(is_bi_skew_corner_free(r) == is_bi_skew_corner_free(r.transpose()));
    }
}

TEST_CASE("triangular predicates: hand examples") {
    // One full side line of Delta_{n+1}.
    TriSet side(5);
    for (int b = 0; b <= 5; ++b) side.insert(0, b, 5 - b);
    CHECK(is_skew_corner_free_tri(side));

    // All three points of Delta_2 violate both predicates.
    TriSet d2 = TriSet::full(1);
    CHECK(!is_skew_corner_free_tri(d2));
    CHECK(!is_corner_free_tri(d2));

    TriSet single(3);
    single.insert(1, 1, 1);
    CHECK(is_corner_free_tri(single));
    CHECK(is_skew_corner_free_tri(single));
}

TEST_CASE("grid predicates agree with naive oracles on all small subsets") {
    for (int n = 1; n <= 3; ++n) {
        for (std::uint64_t mask = 0; mask < (1ull << (n * n)); ++mask) {
            GridSet s = grid_from_mask(n, mask);
            auto pts = s.points();
            CHECK(is_skew_corner_free_grid(s) == oracle::skew_grid_free_naive(pts, n));
            CHECK(is_bi_skew_corner_free(s) == oracle::bi_skew_free_naive(pts, n));
        }
    }
}

TEST_CASE("grid predicates agree with naive oracles on random n=4 subsets") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100000; ++trial) {
        GridSet s = grid_from_mask(4, rng() & 0xffff);
        auto pts = s.points();
        CHECK(is_skew_corner_free_grid(s) == oracle::skew_grid_free_naive(pts, 4));
        CHECK(is_bi_skew_corner_free(s) == oracle::bi_skew_free_naive(pts, 4));
    }
}

TEST_CASE("triangular predicates agree with naive oracles") {
    for (int n = 0; n <= 3; ++n) {
        std::size_t cells = TriSet::full(n).size();
        for (std::uint64_t mask = 0; mask < (1ull << cells); ++mask) {
            TriSet s = tri_from_mask(n, mask);
            CHECK(is_skew_corner_free_tri(s) == oracle::skew_tri_free_naive(s.points()));
            CHECK(is_corner_free_tri(s) == oracle::corner_tri_free_naive(s.points()));
        }
    }
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20000; ++trial) {
        TriSet s = tri_from_mask(5, rng() & ((1ull << 21) - 1));
        CHECK(is_skew_corner_free_tri(s) == oracle::skew_tri_free_naive(s.points()));
        CHECK(is_corner_free_tri(s) == oracle::corner_tri_free_naive(s.points()));
    }
}

TEST_CASE("freeness is closed under subsets") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        GridSet s = grid_from_mask(5, rng() & ((1ull << 25) - 1));
        if (!is_skew_corner_free_grid(s)) continue;
        auto pts = s.points();
        if (pts.empty()) continue;
        std::size_t drop = rng() % pts.size();
        GridSet sub(5);
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (i != drop) sub.insert(pts[i].x, pts[i].y);
        CHECK(is_skew_corner_free_grid(sub));
    }
    std::mt19937_64 rng2(6);
    for (int trial = 0; trial < 300; ++trial) {
        TriSet s = random_skew_tri_free(6, rng2);
        auto pts = s.points();
        if (pts.empty()) continue;
        std::size_t drop = rng2() % pts.size();
        TriSet sub(6);
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (i != drop) sub.insert(pts[i]);
        CHECK(is_skew_corner_free_tri(sub));
    }
}

TEST_CASE("coordinate permutations preserve the triangular predicates") {
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        TriSet s = tri_from_mask(5, rng() & ((1ull << 21) - 1));
        bool skew = is_skew_corner_free_tri(s);
        bool corner = is_corner_free_tri(s);
        for (const auto& perm : perms) {
            TriSet p = s.permuted(perm);
            CHECK(is_skew_corner_free_tri(p) == skew);
            CHECK(is_corner_free_tri(p) == corner);
        }
    }
}

TEST_CASE("violation reporting is deterministic") {
    GridSet s = grid_from_mask(3, 0b111111111);
    Violation v1, v2;
    CHECK(!is_skew_corner_free_grid(s, &v1));
    CHECK(!is_skew_corner_free_grid(s, &v2));
    CHECK(v1.witness == v2.witness);
    CHECK(v1.gap == v2.gap);
    for (const auto& p : v1.witness) {
        REQUIRE(p.size() == 2);
        CHECK(s.contains(p[0], p[1]));
    }
}

TEST_CASE("projection to the grid") {
    TriSet one(7);
    one.insert(0, 0, 7);
    GridSet img = project_tri_to_grid(one);
    CHECK(img.size() == 1);
    CHECK(img.contains(1, 1));

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        TriSet s = tri_from_mask(5, rng() & ((1ull << 21) - 1));
        CHECK(project_tri_to_grid(s).size() == s.size());  // injective on Delta
    }
    for (int trial = 0; trial < 100; ++trial) {
        TriSet s = random_skew_tri_free(7, rng);
        CHECK(is_skew_corner_free_grid(project_tri_to_grid(s)));
    }
}
