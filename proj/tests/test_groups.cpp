#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "skc/constructions.hpp"
#include "skc/groups.hpp"
#include "skc/oracles.hpp"

using namespace skc;

namespace {

ElemSet random_subset(const AbelianGroup& g, std::mt19937_64& rng, double p = 0.4) {
    std::vector<std::int64_t> idx;
    std::uniform_real_distribution<double> u(0, 1);
    for (std::int64_t i = 0; i < g.order(); ++i)
        if (u(rng) < p) idx.push_back(i);
    return ElemSet(idx);
}

std::vector<std::int64_t> to_vec(const ElemSet& s) { return s.indices(); }

std::int64_t brute_count(const GroupTriple& t) {
    std::int64_t c = 0;
    for (auto a : t.A.indices())
        for (auto b : t.B.indices())
            for (auto cc : t.C.indices())
                if (t.group.add(t.group.add(a, b), cc) == 0) ++c;
    return c;
}

}  // namespace

TEST_CASE("group literals parse and round-trip") {
    CHECK(AbelianGroup::parse("Z6").order() == 6);
    CHECK(AbelianGroup::parse("Z2xZ3").factors() == std::vector<std::int64_t>{2, 3});
    CHECK(AbelianGroup::parse("Z7^4").factors() ==
          std::vector<std::int64_t>{7, 7, 7, 7});
    CHECK(AbelianGroup::parse("Z1").order() == 1);
    for (const char* lit : {"Z6", "Z2xZ3", "Z2xZ2xZ5"}) {
        AbelianGroup g = AbelianGroup::parse(lit);
        CHECK(AbelianGroup::parse(g.literal()) == g);
    }
    CHECK_THROWS_AS(AbelianGroup::parse("Q8"), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup::parse("Z"), std::invalid_argument);
}

TEST_CASE("group arithmetic") {
    AbelianGroup z6 = AbelianGroup::cyclic(6);
    CHECK(z6.add(4, 5) == 3);
    CHECK(z6.neg(0) == 0);
    CHECK(z6.sub(1, 5) == 2);
    CHECK(z6.scale(-1, 2) == 4);

    AbelianGroup g = AbelianGroup::parse("Z2xZ3");
    std::int64_t e = g.index({1, 2});
    CHECK(g.residues(g.add(e, e)) == std::vector<std::int64_t>{0, 1});
    for (std::int64_t a = 0; a < g.order(); ++a) {
        CHECK(g.add(a, g.neg(a)) == 0);
        for (std::int64_t b = 0; b < g.order(); ++b)
            CHECK(g.add(a, b) == g.add(b, a));
    }

    GroupElem x{g, {1, 2}}, y{g, {1, 1}};
    CHECK(add(x, y).res == std::vector<std::int64_t>{0, 0});
    CHECK(neg(zero(g)).res == zero(g).res);
    GroupElem wrong{AbelianGroup::cyclic(5), {3}};
    CHECK_THROWS_AS(add(x, wrong), std::invalid_argument);
}

TEST_CASE("zero-sum triple counting") {
    AbelianGroup z7 = AbelianGroup::cyclic(7);
    std::vector<std::int64_t> all7(7);
    for (int i = 0; i < 7; ++i) all7[i] = i;
    GroupTriple t{z7, ElemSet({0}), ElemSet(all7), ElemSet(all7)};
    CHECK(count_zero_sum_triples(t) == 7);

    GroupTriple empty{z7, ElemSet(), ElemSet(all7), ElemSet(all7)};
    CHECK(count_zero_sum_triples(empty) == 0);

    std::mt19937_64 rng(3);
    AbelianGroup z10 = AbelianGroup::cyclic(10);
    for (int trial = 0; trial < 200; ++trial) {
        GroupTriple r{z10, random_subset(z10, rng), random_subset(z10, rng),
                      random_subset(z10, rng)};
        std::int64_t c = count_zero_sum_triples(r);
        CHECK(c == brute_count(r));
        CHECK(c == oracle::convolution_solution_count(r));
    }
}

TEST_CASE("trapezoid-freeness: hand examples and oracle agreement") {
    AbelianGroup z7 = AbelianGroup::cyclic(7);
    std::vector<std::int64_t> all7{0, 1, 2, 3, 4, 5, 6};
    CHECK(is_trapezoid_free({z7, ElemSet({0}), ElemSet(all7), ElemSet(all7)}));

    AbelianGroup z4 = AbelianGroup::cyclic(4);
    std::vector<std::int64_t> all4{0, 1, 2, 3};
    CHECK(!is_trapezoid_free({z4, ElemSet(all4), ElemSet(all4), ElemSet(all4)}));

    std::mt19937_64 rng(17);
    for (const char* lit : {"Z5", "Z8", "Z2xZ3", "Z10", "Z3xZ3"}) {
        AbelianGroup g = AbelianGroup::parse(lit);
        for (int trial = 0; trial < 120; ++trial) {
            GroupTriple t{g, random_subset(g, rng), random_subset(g, rng),
                          random_subset(g, rng)};
            CHECK(is_trapezoid_free(t) ==
                  oracle::group_trapezoid_free_naive(g, to_vec(t.A), to_vec(t.B),
                                                     to_vec(t.C)));
        }
    }
}

TEST_CASE("trapezoid-free count obeys the extremal bound") {
    std::mt19937_64 rng(23);
    AbelianGroup g = AbelianGroup::parse("Z12");
    for (int trial = 0; trial < 200; ++trial) {
        GroupTriple t{g, random_subset(g, rng), random_subset(g, rng),
                      random_subset(g, rng)};
        std::int64_t c = count_zero_sum_triples(t);
        std::int64_t a = t.A.size(), b = t.B.size(), cc = t.C.size();
        CHECK(c <= std::min({a * b, b * cc, a * cc}));
        if (is_trapezoid_free(t)) {
            double nmax = static_cast<double>(std::max({a, b, cc}));
            CHECK(static_cast<double>(c) <= nmax * std::sqrt(nmax) + 1e-9);
        }
    }
}

TEST_CASE("triforce-freeness matches the corner check on the solution set") {
    std::mt19937_64 rng(29);
    int n = 6;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> A, B, C;
        for (int v = 0; v <= n; ++v) {
            if (rng() % 2) A.push_back(v);
            if (rng() % 2) B.push_back(v);
            if (rng() % 2) C.push_back(v);
        }
        TriSet sols(n);
        for (int a : A)
            for (int b : B)
                for (int c : C)
                    if (a + b + c == n && !sols.contains(a, b, c)) sols.insert(a, b, c);
        CHECK(is_triforce_free_triple(A, B, C, n) == is_corner_free_tri(sols));
    }
    // a constant first part can never realize a != a'
    std::vector<int> full{0, 1, 2, 3, 4, 5, 6};
    CHECK(is_triforce_free_triple({0}, full, full, 6));
}

TEST_CASE("hypergraph builders") {
    Hypergraph3 xg = build_XG(AbelianGroup::cyclic(3));
    CHECK(xg.part_sizes == std::array<std::size_t, 3>{3, 3, 3});
    CHECK(xg.triangles.size() == 9);

    Hypergraph3 m = build_Mpqr(2, 2, 2);
    CHECK(m.part_sizes == std::array<std::size_t, 3>{4, 4, 4});
    CHECK(m.triangles.size() == 8);
    CHECK(build_Mpqr(1, 1, 1).triangles.size() == 1);

    CHECK_THROWS_AS(build_XG(AbelianGroup::cyclic(3), 2), std::length_error);
    CHECK_THROWS_AS(build_Mpqr(0, 1, 1), std::invalid_argument);
}

TEST_CASE("extremal conditions") {
    for (int k = 1; k <= 4; ++k) {
        Hypergraph3 m = build_Mpqr(k, k, k);
        CHECK(check_extremal_conditions(m));
        // k^3 triangles meet N^{3/2} with N = k^2 exactly
        CHECK(m.triangles.size() == static_cast<std::size_t>(k) * k * k);
    }
    CHECK(!check_extremal_conditions(build_XG(AbelianGroup::cyclic(3))));
    CHECK(check_extremal_conditions(Hypergraph3{}));
    CHECK(check_extremal_conditions(build_Mpqr(2, 3, 4)));
}

TEST_CASE("triple product and cyclic shift closure") {
    std::mt19937_64 rng(31);
    AbelianGroup g = AbelianGroup::parse("Z6"), h = AbelianGroup::parse("Z2xZ2");
    int done = 0;
    while (done < 60) {
        GroupTriple t1{g, random_subset(g, rng), random_subset(g, rng),
                       random_subset(g, rng)};
        GroupTriple t2{h, random_subset(h, rng), random_subset(h, rng),
                       random_subset(h, rng)};
        if (!is_trapezoid_free(t1) || !is_trapezoid_free(t2)) continue;
        ++done;

        GroupTriple prod = triple_product(t1, t2);
        CHECK(prod.group.order() == g.order() * h.order());
        CHECK(is_trapezoid_free(prod));
        CHECK(count_zero_sum_triples(prod) ==
              count_zero_sum_triples(t1) * count_zero_sum_triples(t2));

        GroupTriple s = cyclic_shift(t1);
        CHECK(is_trapezoid_free(s));
        CHECK(count_zero_sum_triples(s) == count_zero_sum_triples(t1));
        GroupTriple s3 = cyclic_shift(cyclic_shift(s));
        CHECK(s3.A == t1.A);
        CHECK(s3.B == t1.B);
        CHECK(s3.C == t1.C);
    }
}

TEST_CASE("induced matching from a 3AP-free set") {
    InducedMatching m1 = induced_matching_from_3apfree(5, ElemSet({0}));
    CHECK(m1.matching_size == 1);

    InducedMatching m3 = induced_matching_from_3apfree(13, ElemSet({1, 2, 4}));
    CHECK(m3.matching_size == 3);
    CHECK(count_zero_sum_triples(m3.triple) == 3);

    CHECK_THROWS_AS(induced_matching_from_3apfree(7, ElemSet({0, 1, 2})),
                    std::invalid_argument);
}
