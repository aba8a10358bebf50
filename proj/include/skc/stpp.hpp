#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skc/constructions.hpp"
#include "skc/groups.hpp"

namespace skc {

// Verification verdict carrying a counterexample when Invalid.
struct Verdict {
    enum State { Unchecked, Valid, Invalid } state = Unchecked;
    std::string witness;  // human-readable description of the violation

    bool valid() const { return state == Valid; }
};

struct StppTriple {
    ElemSet S, T, U;
};

struct StppFamily {
    AbelianGroup group;
    std::vector<StppTriple> triples;
    Verdict verified;
};

struct SdppPair {
    ElemSet A, B;
};

struct SdppFamily {
    AbelianGroup group;
    std::vector<SdppPair> pairs;
    Verdict verified;
};

// Triple product property: (s-s') + (t-t') + (u-u') = 0 forces s=s', t=t',
// u=u'.  Checked through difference sets when the sets are large, by direct
// six-fold loop otherwise; both are exact.
bool verify_tpp(const AbelianGroup& g, const ElemSet& S, const ElemSet& T, const ElemSet& U,
                std::string* counterexample = nullptr);

// Condition (1) per triple via verify_tpp, condition (2) across index
// triples via the derived sets S_i - T_i, T_j - U_j, U_k - S_k.
Verdict verify_stpp(StppFamily& f);

// SDPP: per pair, a - a' = b - b' only trivially; across pairs,
// a_i - a_j' + b_j - b_k' = 0 implies i = k.
Verdict verify_sdpp(SdppFamily& f);

struct PackingReport {
    std::int64_t st = 0, tu = 0, us = 0;  // the three pair-product sums
    std::int64_t group_order = 0;
    bool holds = false;
    std::int64_t slack() const { return group_order - std::max({st, tu, us}); }
};

// sum |S_i||T_i| <= |G| and the two symmetric sums; requires a Valid family
// and throws std::logic_error if a Valid family violates the bound.
PackingReport packing_bound_check(const StppFamily& f);

struct OmegaBound {
    double value = 3.0;      // the bound on omega, in [2, 3]
    bool improves = false;   // false: no bound better than 3
    double residual = 0.0;   // |sum (.)^{value/3} - |G|| at the returned value
};

// Solves sum_i (|S_i||T_i||U_i|)^{omega/3} = |G| for omega by bisection to
// absolute tolerance 1e-9 and clamps to [2, 3].  Abelian groups only, so
// the right-hand side is |G|.
OmegaBound omega_bound(const StppFamily& f);

// log_n(|G| / k): the bound from k disjoint induced copies of M_n in X_G.
double naive_omega_from_packing(std::int64_t group_order, std::int64_t k, std::int64_t n);

// The SDPP -> STPP lift: for each v = (v1,v2,v3) in the corner-free index
// set, S_v = A_{v1} x {0} x B_{v3}, T_v = B_{v1} x A_{v2} x {0},
// U_v = {0} x B_{v2} x A_{v3}, all in G^3.  Requires f Valid, s corner-free,
// and pairs indexed 0..s.n().
StppFamily lift_sdpp_to_stpp(const SdppFamily& f, const TriSet& s);

// (U_i S_i - T_i, U_i T_i - U_i, U_i U_i - S_i), the unions of the per-triple
// difference sets; asserts trapezoid-freeness and count = sum |S_i||T_i||U_i|.
GroupTriple stpp_to_trapezoid_witness(const StppFamily& f);

// Image of an STPP family under the mixed-radix cyclic embedding.
StppFamily embed_stpp(const StppFamily& f);

std::int64_t stpp_size_product_sum(const StppFamily& f);

}  // namespace skc
