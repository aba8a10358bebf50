#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "skc/constructions.hpp"
#include "skc/grid_sets.hpp"
#include "skc/groups.hpp"

namespace skc {

enum class Objective { MaxSkewGrid, MaxSkewTri, MaxBiSkew, ValPlane, ValGroup };
enum class Symmetry { None, S3 };
enum class SearchStatus { Optimal, LowerBoundOnly, TimedOut };

const char* objective_name(Objective o);
const char* symmetry_name(Symmetry s);
const char* search_status_name(SearchStatus s);

struct Budget {
    std::int64_t max_nodes = 100'000'000;
    double max_secs = 600.0;
    int workers = 1;
    std::uint64_t seed = 0;
};

using Witness = std::variant<std::monostate, GridSet, TriSet, LineTriple, GroupTriple>;

struct SearchResult {
    Objective objective{};
    int n = 0;                  // grid side / triangle level / line size
    std::string group;          // group literal for ValGroup
    Symmetry symmetry = Symmetry::None;
    std::int64_t best_value = 0;
    Witness witness;
    SearchStatus status = SearchStatus::LowerBoundOnly;
    std::int64_t nodes = 0;
    double seconds = 0.0;
};

// Branch and bound over column-occupancy patterns: the optimum decomposes as
// a sum of per-column maximum row sets whose pairwise gaps avoid occupied
// columns, so only the 2^n occupancy patterns need exploring.
SearchResult max_skew_grid_exact(int n, const Budget& budget = Budget{});

// Orbit-based branch and bound over Delta_{n+1} (S3 orbits when symmetry is
// requested, single points otherwise) with incremental per-direction line
// state and a live-orbit admissible bound.
SearchResult max_skew_tri_exact(int n, Symmetry symmetry, const Budget& budget = Budget{});

// Cell-by-cell branch and bound interleaving row and column gap constraints.
SearchResult max_bi_skew_exact(int n, const Budget& budget = Budget{});

// Exact maximization of the number of a+b+c = n solutions over
// trapezoid-free triples in {0..n}; enumerates {A,B} up to the part
// symmetry, then searches C with a representation-count bound.
SearchResult val_plane_exact(int n, const Budget& budget = Budget{});

inline constexpr std::int64_t kValGroupOrderCap = 16;

// As val_plane_exact over a group; uses the translation symmetry
// (A+g, B+h, C-g-h) to pin 0 into A and B.  Throws std::invalid_argument
// above the order cap.
SearchResult val_group_exact(const AbelianGroup& g, const Budget& budget = Budget{},
                             std::int64_t order_cap = kValGroupOrderCap);

// Randomized greedy insertion with remove-k / reinsert exchange rounds.
// Always returns a feasible witness; status LowerBoundOnly.
SearchResult greedy_heuristic(Objective objective, int n, std::uint64_t seed,
                              int restarts);

// True if the witness passes the predicate matching the objective and its
// size (or solution count) equals best_value.
bool check_search_result(const SearchResult& r);

}  // namespace skc
