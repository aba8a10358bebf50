#include "skc/constructions.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace skc {

namespace {
using Bits = boost::dynamic_bitset<>;
}

LineTriple make_line_triple(int n, std::vector<int> A, std::vector<int> B,
                            std::vector<int> C) {
    if (n < 0) throw std::invalid_argument("LineTriple: n must be nonnegative");
    auto norm = [n](std::vector<int>& s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (int v : s)
            if (v < 0 || v > n) throw std::out_of_range("LineTriple: element out of range");
    };
    norm(A);
    norm(B);
    norm(C);
    return LineTriple{n, std::move(A), std::move(B), std::move(C)};
}

namespace {

// Codegree check for the sum-to-n incidence structure, one choice of the
// fixed pair.  left/right are the parts of the fixed pair; for each common
// neighbor m in the remaining part the two forced third elements must lie
// in `opp_l` resp. `opp_r`.
bool line_codegree_ok(int n, const std::vector<int>& left, const std::vector<int>& right,
                      const std::vector<int>& mid, const Bits& opp_l, const Bits& opp_r,
                      const Bits& in_mid, std::array<int, 4>* bad) {
    const std::size_t w = static_cast<std::size_t>(n) + 1;
    std::vector<Bits> ln(left.size(), Bits(w)), rn(right.size(), Bits(w));
    for (std::size_t i = 0; i < left.size(); ++i)
        for (int m : mid) {
            int o = n - left[i] - m;
            if (o >= 0 && o <= n && opp_l.test(o)) ln[i].set(m);
        }
    for (std::size_t j = 0; j < right.size(); ++j)
        for (int m : mid) {
            int o = n - right[j] - m;
            if (o >= 0 && o <= n && opp_r.test(o)) rn[j].set(m);
        }
    (void)in_mid;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            Bits common = ln[i] & rn[j];
            if (common.count() > 1) {
                if (bad) {
                    int m1 = static_cast<int>(common.find_first());
                    int m2 = static_cast<int>(common.find_next(m1));
                    *bad = {left[i], right[j], m1, m2};
                }
                return false;
            }
        }
    return true;
}

Bits line_bits(int n, const std::vector<int>& s) {
    Bits b(static_cast<std::size_t>(n) + 1);
    for (int v : s) b.set(v);
    return b;
}

}  // namespace

bool is_line_trapezoid_free(const LineTriple& t, Violation* out) {
    Bits inA = line_bits(t.n, t.A), inB = line_bits(t.n, t.B), inC = line_bits(t.n, t.C);
    std::array<int, 4> bad{};
    // fixed (a', b'), common c
    if (!line_codegree_ok(t.n, t.A, t.B, t.C, inB, inA, inC, out ? &bad : nullptr)) {
        if (out)
            *out = Violation{ViolationKind::Trapezoid,
                             {{bad[0]}, {bad[1]}, {bad[2]}, {bad[3]}},
                             bad[3] - bad[2]};
        return false;
    }
    // fixed (a', c'), common b
    if (!line_codegree_ok(t.n, t.A, t.C, t.B, inC, inA, inB, out ? &bad : nullptr)) {
        if (out)
            *out = Violation{ViolationKind::Trapezoid,
                             {{bad[0]}, {bad[1]}, {bad[2]}, {bad[3]}},
                             bad[3] - bad[2]};
        return false;
    }
    // fixed (b', c'), common a
    if (!line_codegree_ok(t.n, t.B, t.C, t.A, inC, inB, inA, out ? &bad : nullptr)) {
        if (out)
            *out = Violation{ViolationKind::Trapezoid,
                             {{bad[0]}, {bad[1]}, {bad[2]}, {bad[3]}},
                             bad[3] - bad[2]};
        return false;
    }
    return true;
}

TriSet solutions(const LineTriple& t) {
    TriSet s(t.n);
    Bits inC = line_bits(t.n, t.C);
    for (int a : t.A)
        for (int b : t.B) {
            int c = t.n - a - b;
            if (c >= 0 && inC.test(c)) s.insert(a, b, c);
        }
    return s;
}

std::int64_t solution_count(const LineTriple& t) {
    std::int64_t count = 0;
    Bits inC = line_bits(t.n, t.C);
    for (int a : t.A)
        for (int b : t.B) {
            int c = t.n - a - b;
            if (c >= 0 && inC.test(c)) ++count;
        }
    return count;
}

GroupTriple line_triple_to_cyclic(const LineTriple& t) {
    if (t.n < 1) throw std::invalid_argument("line_triple_to_cyclic: n must be >= 1");
    AbelianGroup g = AbelianGroup::cyclic(3 * std::int64_t(t.n));
    std::vector<std::int64_t> a, b, c;
    for (int v : t.A) a.push_back(v + 2 * std::int64_t(t.n));
    for (int v : t.B) b.push_back(v);
    for (int v : t.C) c.push_back(v);
    return GroupTriple{g, ElemSet(std::move(a)), ElemSet(std::move(b)), ElemSet(std::move(c))};
}

LineTriple cyclic_to_line(const GroupTriple& t) {
    if (t.group.rank() > 1)
        throw std::invalid_argument("cyclic_to_line: group must be cyclic");
    if (!is_trapezoid_free(t))
        throw std::invalid_argument("cyclic_to_line: input is not trapezoid-free");
    const std::int64_t m = t.group.order();
    std::int64_t count_m = 0, count_2m = 0;
    for (auto a : t.A.indices())
        for (auto b : t.B.indices())
            for (auto c : t.C.indices()) {
                std::int64_t s = a + b + c;
                if (s == m) ++count_m;
                else if (s == 2 * m) ++count_2m;
            }
    std::int64_t target = count_m >= count_2m ? m : 2 * m;
    std::vector<int> A, B, C;
    for (auto a : t.A.indices()) A.push_back(static_cast<int>(a));
    for (auto b : t.B.indices()) B.push_back(static_cast<int>(b));
    for (auto c : t.C.indices()) C.push_back(static_cast<int>(c));
    LineTriple out = make_line_triple(static_cast<int>(target), A, B, C);
    if (!is_line_trapezoid_free(out))
        throw std::logic_error("cyclic_to_line: split triple is not line-trapezoid-free");
    return out;
}

namespace {

std::vector<std::int64_t> behrend_layer(std::int64_t n, std::int64_t base) {
    int max_digit = static_cast<int>((base - 1) / 2);
    if (max_digit < 1) return {};
    // all x in [1, n] with base-`base` digits in [0, max_digit], keyed by
    // the digit norm sum d_i^2
    std::vector<std::pair<int, std::int64_t>> all = {{0, 0}};
    for (std::int64_t power = 1; power <= n; power *= base) {
        std::size_t prev = all.size();
        for (std::size_t i = 0; i < prev; ++i) {
            auto [norm, value] = all[i];
            for (int d = 1; d <= max_digit; ++d) {
                std::int64_t v = value + d * power;
                if (v > n) break;
                all.emplace_back(norm + d * d, v);
            }
        }
    }
    all.erase(all.begin());  // drop 0
    std::sort(all.begin(), all.end());
    std::vector<std::int64_t> best;
    std::size_t i = 0;
    while (i < all.size()) {
        std::size_t j = i;
        while (j < all.size() && all[j].first == all[i].first) ++j;
        if (j - i > best.size()) {
            best.clear();
            for (std::size_t k = i; k < j; ++k) best.push_back(all[k].second);
        }
        i = j;
    }
    return best;
}

}  // namespace

std::vector<std::int64_t> behrend_3ap_free(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("behrend_3ap_free: n must be >= 1");
    if (n == 1) return {1};
    std::vector<std::int64_t> best = {1, 2};  // always 3AP-free
    for (std::int64_t base = 3; base <= std::min<std::int64_t>(2 * n + 1, 80); ++base) {
        auto layer = behrend_layer(n, base);
        if (layer.size() > best.size()) best = layer;
    }
    std::sort(best.begin(), best.end());
    return best;
}

bool is_3ap_free(const std::vector<std::int64_t>& s, std::optional<std::int64_t> modulus) {
    std::unordered_set<std::int64_t> in(s.begin(), s.end());
    for (auto x : s)
        for (auto z : s) {
            if (x == z) continue;
            if (modulus) {
                for (auto y : s)
                    if (y != x && y != z &&
                        ((2 * y) % *modulus + *modulus) % *modulus ==
                            ((x + z) % *modulus + *modulus) % *modulus)
                        return false;
            } else {
                if ((x + z) % 2 != 0) continue;
                std::int64_t y = (x + z) / 2;
                if (y != x && y != z && in.count(y)) return false;
            }
        }
    return true;
}

namespace {

// prime-factor counts with multiplicity, 0..n
std::vector<std::uint8_t> big_omega_sieve(std::int64_t n) {
    std::vector<std::int32_t> spf(n + 1, 0);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (spf[i] == 0)
            for (std::int64_t j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
    }
    std::vector<std::uint8_t> omega(n + 1, 0);
    for (std::int64_t i = 2; i <= n; ++i)
        omega[i] = static_cast<std::uint8_t>(omega[i / spf[i]] + 1);
    return omega;
}

double reciprocal_sum(const std::vector<std::int64_t>& s) {
    double acc = 0;
    for (auto a : s) acc += 1.0 / static_cast<double>(a);
    return acc;
}

}  // namespace

std::vector<std::int64_t> primitive_set(std::int64_t n, const PrimitiveSpec& spec) {
    if (n < 1) throw std::invalid_argument("primitive_set: n must be >= 1");
    switch (spec.strategy) {
        case PrimitiveStrategy::HalfInterval: {
            std::vector<std::int64_t> out;
            for (std::int64_t a = n / 2 + 1; a <= n; ++a) out.push_back(a);
            return out;
        }
        case PrimitiveStrategy::FixedPrimeCount: {
            auto omega = big_omega_sieve(n);
            std::vector<std::int64_t> out;
            for (std::int64_t a = 1; a <= n; ++a)
                if (omega[a] == spec.prime_count) out.push_back(a);
            return out;
        }
        case PrimitiveStrategy::BestOf: {
            auto best = primitive_set(n, {PrimitiveStrategy::HalfInterval, 0});
            double best_sum = reciprocal_sum(best);
            auto omega = big_omega_sieve(n);
            for (int k = 1; k <= 13; ++k) {
                std::vector<std::int64_t> cand;
                for (std::int64_t a = 1; a <= n; ++a)
                    if (omega[a] == k) cand.push_back(a);
                double s = reciprocal_sum(cand);
                if (s > best_sum) {
                    best_sum = s;
                    best = std::move(cand);
                }
            }
            return best;
        }
    }
    throw std::invalid_argument("primitive_set: unknown strategy");
}

bool is_primitive(const std::vector<std::int64_t>& s) {
    if (s.empty()) return true;
    std::int64_t mx = *std::max_element(s.begin(), s.end());
    if (*std::min_element(s.begin(), s.end()) < 1) return false;
    std::vector<char> in(mx + 1, 0);
    for (auto a : s) in[a] = 1;
    for (auto a : s)
        for (std::int64_t b = 2 * a; b <= mx; b += a)
            if (in[b]) return false;
    return true;
}

GridSet petrov_construction(std::int64_t n, const PrimitiveSpec& spec) {
    auto A = primitive_set(n, spec);
    if (!is_primitive(A))
        throw std::logic_error("petrov_construction: strategy produced a non-primitive set");
    GridSet s(static_cast<int>(n));
    for (auto a : A)
        for (std::int64_t k = 1; k * a <= n; ++k)
            s.insert(static_cast<int>(a), static_cast<int>(k * a));
    return s;
}

std::pair<GroupTriple, AvgbadReport> avgbad_construction(std::int64_t n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("avgbad_construction: n must be even and >= 4");
    auto S = behrend_3ap_free(n);
    const std::int64_t m = 100 * n * n;
    AbelianGroup g = AbelianGroup::cyclic(m);
    std::vector<std::int64_t> ab;
    for (std::int64_t v = 3 * n * n; v <= 4 * n * n; ++v) ab.push_back(v);
    for (auto x : S)
        for (std::int64_t y = 0; y <= n / 2; ++y) ab.push_back(x * n + y);
    ElemSet A(ab), B(ab);
    std::vector<std::int64_t> cs;
    for (auto x : S)
        for (std::int64_t y = 1; y <= n; ++y) cs.push_back(g.neg(2 * x * n + y));
    ElemSet C(std::move(cs));

    AvgbadReport rep;
    rep.n = n;
    rep.modulus = m;
    rep.size_a = static_cast<std::int64_t>(A.size());
    rep.size_b = static_cast<std::int64_t>(B.size());
    rep.size_c = static_cast<std::int64_t>(C.size());
    for (auto c : C.indices()) {
        std::int64_t r = representation_count(g, A, B, g.neg(c));
        rep.solution_count += r;
        rep.second_moment += r * r;
    }
    rep.moment_inequality = {"sum r^2 <= |A||B|", static_cast<double>(rep.second_moment),
                             static_cast<double>(rep.size_a) * rep.size_b,
                             rep.second_moment <= rep.size_a * rep.size_b};
    return {GroupTriple{g, std::move(A), std::move(B), std::move(C)}, rep};
}

std::int64_t representation_count(const AbelianGroup& g, const ElemSet& A, const ElemSet& B,
                                  std::int64_t target) {
    std::int64_t count = 0;
    for (auto a : A.indices())
        if (B.contains(g.sub(target, a))) ++count;
    return count;
}

CyclicEmbedding::CyclicEmbedding(const AbelianGroup& g) : source_(g) {
    std::int64_t prod = 1;
    for (auto m : g.factors()) {
        if (prod > (std::int64_t(1) << 42) / (3 * m))
            throw std::invalid_argument("CyclicEmbedding: target order too large");
        prod *= 3 * m;
    }
    target_ = g.rank() == 0 ? AbelianGroup() : AbelianGroup::cyclic(prod);
}

std::int64_t CyclicEmbedding::map_index(std::int64_t src_idx) const {
    auto res = source_.residues(src_idx);
    std::int64_t out = 0, stride = 1;
    for (std::size_t i = 0; i < res.size(); ++i) {
        out += res[i] * stride;
        stride *= 3 * source_.factors()[i];
    }
    return out;
}

ElemSet CyclicEmbedding::map_set(const ElemSet& s) const {
    std::vector<std::int64_t> out;
    out.reserve(s.size());
    for (auto i : s.indices()) out.push_back(map_index(i));
    return ElemSet(std::move(out));
}

GroupTriple CyclicEmbedding::map_triple(const GroupTriple& t) const {
    if (!(t.group == source_)) throw std::invalid_argument("CyclicEmbedding: group mismatch");
    return GroupTriple{target_, map_set(t.A), map_set(t.B), map_set(t.C)};
}

}  // namespace skc
