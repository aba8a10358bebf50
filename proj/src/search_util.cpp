#include <stdexcept>

#include "search_common.hpp"
#include "skc/search.hpp"

namespace skc {

const char* objective_name(Objective o) {
    switch (o) {
        case Objective::MaxSkewGrid: return "max-skew-grid";
        case Objective::MaxSkewTri: return "max-skew-tri";
        case Objective::MaxBiSkew: return "max-bi-skew";
        case Objective::ValPlane: return "val-plane";
        case Objective::ValGroup: return "val-group";
    }
    return "?";
}

const char* symmetry_name(Symmetry s) { return s == Symmetry::S3 ? "s3" : "none"; }

const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Optimal: return "Optimal";
        case SearchStatus::LowerBoundOnly: return "LowerBoundOnly";
        case SearchStatus::TimedOut: return "TimedOut";
    }
    return "?";
}

namespace detail {

void validate_budget(const Budget& b) {
    if (b.max_nodes <= 0 || b.max_secs <= 0 || b.workers < 1)
        throw std::invalid_argument("budget: need positive node/time limits and >= 1 worker");
}

}  // namespace detail

bool check_search_result(const SearchResult& r) {
    switch (r.objective) {
        case Objective::MaxSkewGrid: {
            const auto* w = std::get_if<GridSet>(&r.witness);
            return w && is_skew_corner_free_grid(*w) &&
                   static_cast<std::int64_t>(w->size()) == r.best_value;
        }
        case Objective::MaxBiSkew: {
            const auto* w = std::get_if<GridSet>(&r.witness);
            return w && is_bi_skew_corner_free(*w) &&
                   static_cast<std::int64_t>(w->size()) == r.best_value;
        }
        case Objective::MaxSkewTri: {
            const auto* w = std::get_if<TriSet>(&r.witness);
            if (!w || !is_skew_corner_free_tri(*w) ||
                static_cast<std::int64_t>(w->size()) != r.best_value)
                return false;
            if (r.symmetry == Symmetry::S3) {
                for (const auto& perm :
                     {std::array<int, 3>{0, 2, 1}, std::array<int, 3>{1, 0, 2},
                      std::array<int, 3>{2, 1, 0}, std::array<int, 3>{1, 2, 0},
                      std::array<int, 3>{2, 0, 1}})
                    if (w->permuted(perm).points() != w->points()) return false;
            }
            return true;
        }
        case Objective::ValPlane: {
            const auto* w = std::get_if<LineTriple>(&r.witness);
            return w && is_line_trapezoid_free(*w) && solution_count(*w) == r.best_value;
        }
        case Objective::ValGroup: {
            const auto* w = std::get_if<GroupTriple>(&r.witness);
            return w && is_trapezoid_free(*w) && count_zero_sum_triples(*w) == r.best_value;
        }
    }
    return false;
}

}  // namespace skc
