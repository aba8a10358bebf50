#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skc/grid_sets.hpp"

namespace skc {

// A finite abelian group given as a factor list Z_{m1} x ... x Z_{mk}.
// Elements are addressed both as residue vectors and as mixed-radix flat
// indices in [0, order).
class AbelianGroup {
  public:
    AbelianGroup() = default;  // trivial group
    explicit AbelianGroup(std::vector<std::int64_t> factors);

    static AbelianGroup cyclic(std::int64_t n) { return AbelianGroup({n}); }
    // Parses literals like "Z6", "Z2xZ3", "Z7^4", "Z1".
    static AbelianGroup parse(const std::string& literal);

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::int64_t order() const { return order_; }
    std::size_t rank() const { return factors_.size(); }
    std::string literal() const;

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }
    std::int64_t zero() const { return 0; }
    // a added to itself k times (k may be negative).
    std::int64_t scale(std::int64_t k, std::int64_t a) const;

    std::vector<std::int64_t> residues(std::int64_t idx) const;
    std::int64_t index(const std::vector<std::int64_t>& residues) const;

    static AbelianGroup product(const AbelianGroup& g, const AbelianGroup& h);

  private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
};

// Element as a residue vector tied to its group.
struct GroupElem {
    AbelianGroup group;
    std::vector<std::int64_t> res;

    std::int64_t index() const { return group.index(res); }
    static GroupElem of(const AbelianGroup& g, std::int64_t idx) {
        return {g, g.residues(idx)};
    }
};

GroupElem add(const GroupElem& a, const GroupElem& b);
GroupElem neg(const GroupElem& a);
GroupElem zero(const AbelianGroup& g);

// A set of group elements, stored as sorted flat indices.
class ElemSet {
  public:
    ElemSet() = default;
    explicit ElemSet(std::vector<std::int64_t> indices);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    bool contains(std::int64_t i) const;
    void insert(std::int64_t i);
    const std::vector<std::int64_t>& indices() const { return idx_; }

    bool operator==(const ElemSet& o) const { return idx_ == o.idx_; }

  private:
    std::vector<std::int64_t> idx_;  // sorted, unique
};

ElemSet negated(const AbelianGroup& g, const ElemSet& s);
ElemSet translated(const AbelianGroup& g, const ElemSet& s, std::int64_t t);
// {a - b : a in s, b in t}.
ElemSet difference_set(const AbelianGroup& g, const ElemSet& s, const ElemSet& t);

struct GroupTriple {
    AbelianGroup group;
    ElemSet A, B, C;
};

// |{(a,b,c) in A x B x C : a+b+c = 0}|.
std::int64_t count_zero_sum_triples(const GroupTriple& t);

// Equilateral trapezoid-freeness: the subhypergraph of X_G induced by
// (A,B,C) is linear (automatic in X_G) and any two vertices from different
// parts have at most one common triangle-neighbor in the third part.
bool is_trapezoid_free(const GroupTriple& t, Violation* out = nullptr);

// Integer analogue over {0..n} with target sum n instead of 0; used by the
// triforce predicate and by module `constructions`.
bool is_triforce_free_triple(const std::vector<int>& A, const std::vector<int>& B,
                             const std::vector<int>& C, int n);

// Tripartite 3-uniform hypergraph with explicit parts and triangles.
struct Hypergraph3 {
    std::array<std::size_t, 3> part_sizes{};
    std::vector<std::array<std::int64_t, 3>> triangles;
};

inline constexpr std::int64_t kDefaultTriangleCap = 1'000'000;

// X_G: one part per copy of G, triangles are the zero-sum triples.
Hypergraph3 build_XG(const AbelianGroup& g,
                     std::int64_t triangle_cap = kDefaultTriangleCap);
// M_{p,q,r}: parts [p]x[q], [q]x[r], [r]x[p]; ((i,j),(k,l),(m,n)) is a
// triangle iff j=k, l=m, n=i.
Hypergraph3 build_Mpqr(int p, int q, int r,
                       std::int64_t triangle_cap = kDefaultTriangleCap);

// Linearity + the common-neighbor condition; when both hold, also asserts
// the triangle count is at most N^{3/2} for N the largest part.
bool check_extremal_conditions(const Hypergraph3& h);

GroupTriple triple_product(const GroupTriple& t1, const GroupTriple& t2);
GroupTriple cyclic_shift(const GroupTriple& t);  // (A,B,C) -> (B,C,A)

struct InducedMatching {
    GroupTriple triple;           // (A, A, -2A) in Z_n
    std::int64_t matching_size;   // equals |A| on success
};

// Requires A 3AP-free in Z_n and x -> -2x injective on A; verifies the
// induced subhypergraph of X_{Z_n} is a perfect matching of size |A|.
// Throws std::invalid_argument otherwise.
InducedMatching induced_matching_from_3apfree(std::int64_t n, const ElemSet& A);

}  // namespace skc
