#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skc/grid_sets.hpp"
#include "skc/groups.hpp"

namespace skc {

// Three subsets of {0..n}; the associated solution set is
// {(a,b,c) in A x B x C : a+b+c = n}, a subset of Delta_{n+1}.
struct LineTriple {
    int n = 0;
    std::vector<int> A, B, C;  // sorted, unique, in range
};

LineTriple make_line_triple(int n, std::vector<int> A, std::vector<int> B,
                            std::vector<int> C);

// Integer analogue of is_trapezoid_free with target sum n.
bool is_line_trapezoid_free(const LineTriple& t, Violation* out = nullptr);

// Materializes the solution set in Delta_{n+1}.
TriSet solutions(const LineTriple& t);

std::int64_t solution_count(const LineTriple& t);

// Embeds (A+2n, B, C) into Z_{3n}; preserves trapezoid-freeness and the
// solution count.
GroupTriple line_triple_to_cyclic(const LineTriple& t);

// Splits the zero-sum solutions of a trapezoid-free triple in Z_n between
// the targets a+b+c = n and a+b+c = 2n and returns the majority side as a
// LineTriple; its count is at least (count-1)/2.  Throws if the input is
// not trapezoid-free.
LineTriple cyclic_to_line(const GroupTriple& t);

// 3AP-free subset of [1, n] via sphere layers of a digit expansion; the
// digit base is swept over a small range and the largest layer kept.
std::vector<std::int64_t> behrend_3ap_free(std::int64_t n);

// No x + z = 2y with x, y, z distinct (over the integers, or mod `modulus`).
bool is_3ap_free(const std::vector<std::int64_t>& s,
                 std::optional<std::int64_t> modulus = std::nullopt);

enum class PrimitiveStrategy { HalfInterval, FixedPrimeCount, BestOf };

struct PrimitiveSpec {
    PrimitiveStrategy strategy = PrimitiveStrategy::BestOf;
    int prime_count = 2;  // k for FixedPrimeCount
};

// A set in [1, n] with no element dividing another.
std::vector<std::int64_t> primitive_set(std::int64_t n, const PrimitiveSpec& spec);
bool is_primitive(const std::vector<std::int64_t>& s);

// Petrov's skew corner-free construction: {(a, ka) : a in A, 1 <= k <= n/a}
// for a primitive set A.
GridSet petrov_construction(std::int64_t n,
                            const PrimitiveSpec& spec = PrimitiveSpec{});

struct InequalityCheck {
    std::string name;
    double lhs = 0, rhs = 0;
    bool holds = false;
};

struct AvgbadReport {
    std::int64_t n = 0;
    std::int64_t modulus = 0;            // 100 n^2
    std::int64_t size_a = 0, size_b = 0, size_c = 0;
    std::int64_t solution_count = 0;     // sum_c r(A,B,-c)
    std::int64_t second_moment = 0;      // sum_c r(A,B,-c)^2
    InequalityCheck moment_inequality;   // second_moment <= |A||B|
};

// The averaging counterexample A = B = [3n^2, 4n^2] u U_{x in S}[xn, xn+n/2],
// C = -{2xn + y} in Z_{100 n^2}, with S a 3AP-free subset of [n].
// Intervals are closed with integer endpoints; y ranges over {1..n}.
std::pair<GroupTriple, AvgbadReport> avgbad_construction(std::int64_t n);

// |{(a,b) in A x B : a + b = target}| in Z_m.
std::int64_t representation_count(const AbelianGroup& g, const ElemSet& A,
                                  const ElemSet& B, std::int64_t target);

// Mixed-radix embedding of Z_{m1} x ... x Z_{mk} into Z_{prod 3 m_i}:
// (x_1,...,x_k) -> x_1 + (3 m_1) x_2 + (3 m_1)(3 m_2) x_3 + ...
// Sums of up to three elements collide in the target only when they collide
// in the source, so trapezoid-freeness and STPP validity are preserved.
class CyclicEmbedding {
  public:
    explicit CyclicEmbedding(const AbelianGroup& g);

    const AbelianGroup& target() const { return target_; }
    std::int64_t map_index(std::int64_t src_idx) const;
    ElemSet map_set(const ElemSet& s) const;
    GroupTriple map_triple(const GroupTriple& t) const;

  private:
    AbelianGroup source_;
    AbelianGroup target_;
};

}  // namespace skc
