#pragma once

#include <cstdint>
#include <vector>

#include "skc/grid_sets.hpp"
#include "skc/groups.hpp"
#include "skc/search.hpp"

namespace skc::oracle {

// Reference implementations used to cross-check the optimized predicates and
// searches.  Everything here works straight from the definitions with plain
// loops; nothing below shares code with the main implementations.

bool skew_grid_free_naive(const std::vector<Point2>& pts, int n);
bool bi_skew_free_naive(const std::vector<Point2>& pts, int n);
bool skew_tri_free_naive(const std::vector<Point3>& pts);
bool corner_tri_free_naive(const std::vector<Point3>& pts);
bool line_trapezoid_free_naive(int n, const std::vector<int>& A, const std::vector<int>& B,
                               const std::vector<int>& C);
bool group_trapezoid_free_naive(const AbelianGroup& g, const std::vector<std::int64_t>& A,
                                const std::vector<std::int64_t>& B,
                                const std::vector<std::int64_t>& C);

// Exhaustive maximizations by subset enumeration with only two sound cuts:
// infeasible partial sets (freeness is closed under subsets) and branches
// that cannot exceed the incumbent.  Seeding the incumbent with v-1 turns
// a run into a certificate that the optimum equals v whenever the returned
// best equals v.  Seed -1 computes the plain optimum.
std::int64_t max_skew_grid_value(int n, std::int64_t seed_incumbent = -1);
std::int64_t max_bi_skew_value(int n, std::int64_t seed_incumbent = -1);
std::int64_t max_skew_tri_value(int n, Symmetry symmetry, std::int64_t seed_incumbent = -1);
std::int64_t val_plane_value(int n, std::int64_t seed_incumbent = -1);
std::int64_t val_group_value(const AbelianGroup& g, std::int64_t seed_incumbent = -1);

// Zero-sum triple count through an explicit representation-count
// convolution over the group.
std::int64_t convolution_solution_count(const GroupTriple& t);
std::int64_t convolution_second_moment(const GroupTriple& t);

// omega from a single STPP triple: 3 ln|G| / ln(|S||T||U|), clamped to [2,3].
double omega_single_closed_form(std::int64_t group_order, std::int64_t product);

}  // namespace skc::oracle
