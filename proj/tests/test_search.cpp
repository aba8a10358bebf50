#include <cmath>
#include <stdexcept>
#include <variant>

#include "doctest.h"
#include "skc/oracles.hpp"
#include "skc/search.hpp"

using namespace skc;

TEST_CASE("hand-checked small optima") {
    CHECK(max_skew_grid_exact(1).best_value == 1);
    CHECK(max_skew_grid_exact(2).best_value == 2);
    CHECK(max_skew_tri_exact(0, Symmetry::None).best_value == 1);
    CHECK(max_bi_skew_exact(1).best_value == 1);
    CHECK(val_plane_exact(0).best_value == 1);
    for (int n = 1; n <= 4; ++n) CHECK(max_skew_grid_exact(n).status == SearchStatus::Optimal);
}

TEST_CASE("exact searches match the exhaustive oracles on small instances") {
    for (int n = 1; n <= 4; ++n) {
        SearchResult r = max_skew_grid_exact(n);
        CHECK(r.best_value == oracle::max_skew_grid_value(n));
        CHECK(check_search_result(r));
    }
    for (int n = 0; n <= 5; ++n) {
        for (Symmetry sym : {Symmetry::None, Symmetry::S3}) {
            SearchResult r = max_skew_tri_exact(n, sym);
            CHECK(r.best_value == oracle::max_skew_tri_value(n, sym));
            CHECK(check_search_result(r));
        }
    }
    for (int n = 1; n <= 3; ++n) {
        SearchResult r = max_bi_skew_exact(n);
        CHECK(r.best_value == oracle::max_bi_skew_value(n));
        CHECK(check_search_result(r));
    }
    for (int n = 0; n <= 4; ++n) {
        SearchResult r = val_plane_exact(n);
        CHECK(r.best_value == oracle::val_plane_value(n));
        CHECK(check_search_result(r));
    }
    for (const char* lit : {"Z4", "Z5", "Z2xZ2"}) {
        AbelianGroup g = AbelianGroup::parse(lit);
        SearchResult r = val_group_exact(g);
        CHECK(r.best_value == oracle::val_group_value(g));
        CHECK(check_search_result(r));
    }
}

TEST_CASE("value bounds") {
    for (int n = 1; n <= 6; ++n) CHECK(val_plane_exact(n).best_value >= n + 1);
    for (const char* lit : {"Z3", "Z6", "Z2xZ2"}) {
        AbelianGroup g = AbelianGroup::parse(lit);
        SearchResult r = val_group_exact(g);
        CHECK(r.best_value >= g.order());
        CHECK(static_cast<double>(r.best_value) <=
              std::pow(static_cast<double>(g.order()), 1.5) + 1e-9);
    }
    // bi-skew optimum never beats the one-directional skew optimum
    CHECK(max_bi_skew_exact(5).best_value <= max_skew_grid_exact(5).best_value);
}

TEST_CASE("symmetric optimum never beats the unrestricted one") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(max_skew_tri_exact(n, Symmetry::S3).best_value <=
              max_skew_tri_exact(n, Symmetry::None).best_value);
    }
}

TEST_CASE("greedy heuristic") {
    SearchResult g = greedy_heuristic(Objective::MaxSkewGrid, 10, 1, 5);
    CHECK(g.status == SearchStatus::LowerBoundOnly);
    CHECK(check_search_result(g));
    CHECK(g.best_value <= 24);  // never beats the optimum
    CHECK(g.best_value >= 10);  // at least the trivial full column

    SearchResult again = greedy_heuristic(Objective::MaxSkewGrid, 10, 1, 5);
    CHECK(again.best_value == g.best_value);  // deterministic given the seed

    for (Objective obj : {Objective::MaxSkewTri, Objective::MaxBiSkew,
                          Objective::ValPlane, Objective::ValGroup}) {
        SearchResult r = greedy_heuristic(obj, 7, 3, 3);
        CHECK(check_search_result(r));
    }
}

TEST_CASE("budget exhaustion degrades status, not correctness") {
    Budget tiny_nodes;
    tiny_nodes.max_nodes = 16;
    SearchResult r1 = max_skew_tri_exact(10, Symmetry::None, tiny_nodes);
    CHECK(r1.status == SearchStatus::LowerBoundOnly);
    CHECK(check_search_result(r1));

    Budget tiny_time;
    tiny_time.max_secs = 1e-9;
    SearchResult r2 = max_skew_grid_exact(12, tiny_time);
    CHECK(r2.status == SearchStatus::TimedOut);
    CHECK(check_search_result(r2));

    Budget bad;
    bad.max_nodes = 0;
    CHECK_THROWS_AS(max_skew_grid_exact(3, bad), std::invalid_argument);
    Budget bad2;
    bad2.workers = 0;
    CHECK_THROWS_AS(val_plane_exact(3, bad2), std::invalid_argument);
}

TEST_CASE("parallel runs match single-worker values") {
    Budget par;
    par.workers = 4;
    CHECK(max_skew_grid_exact(8, par).best_value == max_skew_grid_exact(8).best_value);
    CHECK(max_skew_tri_exact(10, Symmetry::S3, par).best_value ==
          max_skew_tri_exact(10, Symmetry::S3).best_value);
    CHECK(max_bi_skew_exact(4, par).best_value == max_bi_skew_exact(4).best_value);
}

TEST_CASE("range guards") {
    CHECK_THROWS_AS(max_skew_grid_exact(0), std::invalid_argument);
    CHECK_THROWS_AS(max_skew_tri_exact(-1, Symmetry::None), std::invalid_argument);
    CHECK_THROWS_AS(val_group_exact(AbelianGroup::cyclic(24)), std::invalid_argument);
}

TEST_CASE("search results are reproducible") {
    SearchResult a = max_skew_grid_exact(6);
    SearchResult b = max_skew_grid_exact(6);
    CHECK(a.best_value == b.best_value);
    CHECK(a.nodes == b.nodes);
    CHECK(std::get<GridSet>(a.witness).points() ==
          std::get<GridSet>(b.witness).points());
}
