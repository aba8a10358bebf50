#include "skc/groups.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <charconv>
#include <stdexcept>
#include <unordered_set>

namespace skc {

AbelianGroup::AbelianGroup(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
    for (auto m : factors_) {
        if (m < 2) throw std::invalid_argument("AbelianGroup: factors must be >= 2");
        if (order_ > (std::int64_t(1) << 42) / m)
            throw std::invalid_argument("AbelianGroup: order too large");
        order_ *= m;
    }
}

AbelianGroup AbelianGroup::parse(const std::string& literal) {
    std::vector<std::int64_t> factors;
    std::size_t pos = 0;
    while (pos < literal.size()) {
        if (literal[pos] != 'Z') throw std::invalid_argument("bad group literal: " + literal);
        ++pos;
        std::int64_t m = 0, k = 1;
        auto [p1, ec1] = std::from_chars(literal.data() + pos, literal.data() + literal.size(), m);
        if (ec1 != std::errc{}) throw std::invalid_argument("bad group literal: " + literal);
        pos = p1 - literal.data();
        if (pos < literal.size() && literal[pos] == '^') {
            ++pos;
            auto [p2, ec2] =
                std::from_chars(literal.data() + pos, literal.data() + literal.size(), k);
            if (ec2 != std::errc{} || k < 0)
                throw std::invalid_argument("bad group literal: " + literal);
            pos = p2 - literal.data();
        }
        if (m < 1) throw std::invalid_argument("bad group literal: " + literal);
        if (m > 1)
            for (std::int64_t i = 0; i < k; ++i) factors.push_back(m);
        if (pos < literal.size()) {
            if (literal[pos] != 'x') throw std::invalid_argument("bad group literal: " + literal);
            ++pos;
        }
    }
    return AbelianGroup(factors);
}

std::string AbelianGroup::literal() const {
    if (factors_.empty()) return "Z1";
    std::string out;
    std::size_t i = 0;
    while (i < factors_.size()) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!out.empty()) out += 'x';
        out += 'Z' + std::to_string(factors_[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::int64_t AbelianGroup::add(std::int64_t a, std::int64_t b) const {
    if (factors_.size() <= 1) return order_ == 1 ? 0 : (a + b) % order_;
    std::int64_t out = 0, stride = 1;
    for (auto m : factors_) {
        std::int64_t ra = (a / stride) % m, rb = (b / stride) % m;
        out += ((ra + rb) % m) * stride;
        stride *= m;
    }
    return out;
}

std::int64_t AbelianGroup::neg(std::int64_t a) const {
    if (factors_.size() <= 1) return a == 0 ? 0 : order_ - a;
    std::int64_t out = 0, stride = 1;
    for (auto m : factors_) {
        std::int64_t r = (a / stride) % m;
        out += (r == 0 ? 0 : m - r) * stride;
        stride *= m;
    }
    return out;
}

std::int64_t AbelianGroup::scale(std::int64_t k, std::int64_t a) const {
    std::int64_t out = 0, stride = 1;
    for (auto m : factors_) {
        std::int64_t r = ((a / stride) % m * (k % m)) % m;
        if (r < 0) r += m;
        out += r * stride;
        stride *= m;
    }
    return out;
}

std::vector<std::int64_t> AbelianGroup::residues(std::int64_t idx) const {
    std::vector<std::int64_t> r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        r[i] = idx % factors_[i];
        idx /= factors_[i];
    }
    return r;
}

std::int64_t AbelianGroup::index(const std::vector<std::int64_t>& residues) const {
    if (residues.size() != factors_.size())
        throw std::invalid_argument("residue vector has wrong rank");
    std::int64_t out = 0, stride = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (residues[i] < 0 || residues[i] >= factors_[i])
            throw std::invalid_argument("residue out of range");
        out += residues[i] * stride;
        stride *= factors_[i];
    }
    return out;
}

AbelianGroup AbelianGroup::product(const AbelianGroup& g, const AbelianGroup& h) {
    std::vector<std::int64_t> f = g.factors();
    f.insert(f.end(), h.factors().begin(), h.factors().end());
    return AbelianGroup(f);
}

GroupElem add(const GroupElem& a, const GroupElem& b) {
    if (!(a.group == b.group)) throw std::invalid_argument("group mismatch");
    return GroupElem::of(a.group, a.group.add(a.index(), b.index()));
}

GroupElem neg(const GroupElem& a) { return GroupElem::of(a.group, a.group.neg(a.index())); }

GroupElem zero(const AbelianGroup& g) { return GroupElem::of(g, 0); }

ElemSet::ElemSet(std::vector<std::int64_t> indices) : idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

bool ElemSet::contains(std::int64_t i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

void ElemSet::insert(std::int64_t i) {
    auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
    if (it == idx_.end() || *it != i) idx_.insert(it, i);
}

ElemSet negated(const AbelianGroup& g, const ElemSet& s) {
    std::vector<std::int64_t> out;
    out.reserve(s.size());
    for (auto i : s.indices()) out.push_back(g.neg(i));
    return ElemSet(std::move(out));
}

ElemSet translated(const AbelianGroup& g, const ElemSet& s, std::int64_t t) {
    std::vector<std::int64_t> out;
    out.reserve(s.size());
    for (auto i : s.indices()) out.push_back(g.add(i, t));
    return ElemSet(std::move(out));
}

ElemSet difference_set(const AbelianGroup& g, const ElemSet& s, const ElemSet& t) {
    std::vector<std::int64_t> out;
    out.reserve(s.size() * t.size());
    for (auto a : s.indices())
        for (auto b : t.indices()) out.push_back(g.sub(a, b));
    return ElemSet(std::move(out));
}

std::int64_t count_zero_sum_triples(const GroupTriple& t) {
    std::int64_t count = 0;
    for (auto a : t.A.indices())
        for (auto b : t.B.indices())
            if (t.C.contains(t.group.neg(t.group.add(a, b)))) ++count;
    return count;
}

namespace {

using Bits = boost::dynamic_bitset<>;

Bits member_bits(std::int64_t order, const ElemSet& s) {
    Bits b(static_cast<std::size_t>(order));
    for (auto i : s.indices()) b.set(static_cast<std::size_t>(i));
    return b;
}

std::vector<int> elem_witness(const AbelianGroup& g, std::int64_t idx) {
    std::vector<int> out;
    for (auto r : g.residues(idx)) out.push_back(static_cast<int>(r));
    if (out.empty()) out.push_back(0);
    return out;
}

// Common-neighbor check for one pair of parts.  `left`/`right` are the two
// fixed parts and `mid` the part in which common triangle-neighbors live;
// in_third(l, m) / in_third_r(r, m) test whether (l, m) resp. (r, m) extend
// to a triangle (membership of the forced third element).
template <typename FL, typename FR>
bool codegree_ok(const std::vector<std::int64_t>& left, const std::vector<std::int64_t>& right,
                 const std::vector<std::int64_t>& mid, FL in_third_l, FR in_third_r,
                 std::pair<std::int64_t, std::int64_t>* bad_pair,
                 std::pair<std::int64_t, std::int64_t>* bad_mid) {
    const std::size_t w = mid.size();
    std::vector<Bits> ln(left.size(), Bits(w)), rn(right.size(), Bits(w));
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t m = 0; m < w; ++m)
            if (in_third_l(left[i], mid[m])) ln[i].set(m);
    for (std::size_t j = 0; j < right.size(); ++j)
        for (std::size_t m = 0; m < w; ++m)
            if (in_third_r(right[j], mid[m])) rn[j].set(m);
    Bits common(w);
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            common = ln[i] & rn[j];
            if (common.count() > 1) {
                if (bad_pair) {
                    *bad_pair = {left[i], right[j]};
                    std::size_t m1 = common.find_first();
                    std::size_t m2 = common.find_next(m1);
                    *bad_mid = {mid[m1], mid[m2]};
                }
                return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_trapezoid_free(const GroupTriple& t, Violation* out) {
    const AbelianGroup& g = t.group;
    Bits inA = member_bits(g.order(), t.A);
    Bits inB = member_bits(g.order(), t.B);
    Bits inC = member_bits(g.order(), t.C);
    auto third = [&](std::int64_t x, std::int64_t y) { return g.neg(g.add(x, y)); };

    const auto& A = t.A.indices();
    const auto& B = t.B.indices();
    const auto& C = t.C.indices();
    std::pair<std::int64_t, std::int64_t> pr, md;

    // pair (a, c), common neighbors b
    if (!codegree_ok(
            A, C, B, [&](std::int64_t a, std::int64_t b) { return inC.test(third(a, b)); },
            [&](std::int64_t c, std::int64_t b) { return inA.test(third(b, c)); },
            out ? &pr : nullptr, out ? &md : nullptr)) {
        if (out)
            *out = Violation{ViolationKind::Trapezoid,
                             {elem_witness(g, pr.first), elem_witness(g, pr.second),
                              elem_witness(g, md.first), elem_witness(g, md.second)},
                             static_cast<int>(g.sub(md.second, md.first))};
        return false;
    }
    // pair (a, b), common neighbors c
    if (!codegree_ok(
            A, B, C, [&](std::int64_t a, std::int64_t c) { return inB.test(third(a, c)); },
            [&](std::int64_t b, std::int64_t c) { return inA.test(third(b, c)); },
            out ? &pr : nullptr, out ? &md : nullptr)) {
        if (out)
            *out = Violation{ViolationKind::Trapezoid,
                             {elem_witness(g, pr.first), elem_witness(g, pr.second),
                              elem_witness(g, md.first), elem_witness(g, md.second)},
                             static_cast<int>(g.sub(md.second, md.first))};
        return false;
    }
    // pair (b, c), common neighbors a
    if (!codegree_ok(
            B, C, A, [&](std::int64_t b, std::int64_t a) { return inC.test(third(a, b)); },
            [&](std::int64_t c, std::int64_t a) { return inB.test(third(a, c)); },
            out ? &pr : nullptr, out ? &md : nullptr)) {
        if (out)
            *out = Violation{ViolationKind::Trapezoid,
                             {elem_witness(g, pr.first), elem_witness(g, pr.second),
                              elem_witness(g, md.first), elem_witness(g, md.second)},
                             static_cast<int>(g.sub(md.second, md.first))};
        return false;
    }
    return true;
}

bool is_triforce_free_triple(const std::vector<int>& A, const std::vector<int>& B,
                             const std::vector<int>& C, int n) {
    TriSet sols(n);
    for (int a : A) {
        if (a < 0 || a > n) throw std::out_of_range("is_triforce_free_triple: element out of range");
        for (int b : B) {
            int c = n - a - b;
            if (c >= 0 && std::find(C.begin(), C.end(), c) != C.end()) sols.insert(a, b, c);
        }
    }
    for (int b : B)
        if (b < 0 || b > n) throw std::out_of_range("is_triforce_free_triple: element out of range");
    for (int c : C)
        if (c < 0 || c > n) throw std::out_of_range("is_triforce_free_triple: element out of range");
    return is_corner_free_tri(sols);
}

Hypergraph3 build_XG(const AbelianGroup& g, std::int64_t triangle_cap) {
    if (g.order() * g.order() > triangle_cap)
        throw std::length_error("build_XG: triangle cap exceeded");
    Hypergraph3 h;
    h.part_sizes = {static_cast<std::size_t>(g.order()), static_cast<std::size_t>(g.order()),
                    static_cast<std::size_t>(g.order())};
    h.triangles.reserve(static_cast<std::size_t>(g.order() * g.order()));
    for (std::int64_t a = 0; a < g.order(); ++a)
        for (std::int64_t b = 0; b < g.order(); ++b)
            h.triangles.push_back({a, b, g.neg(g.add(a, b))});
    return h;
}

Hypergraph3 build_Mpqr(int p, int q, int r, std::int64_t triangle_cap) {
    if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("build_Mpqr: dims must be >= 1");
    if (std::int64_t(p) * q * r > triangle_cap)
        throw std::length_error("build_Mpqr: triangle cap exceeded");
    Hypergraph3 h;
    h.part_sizes = {static_cast<std::size_t>(p) * q, static_cast<std::size_t>(q) * r,
                    static_cast<std::size_t>(r) * p};
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            for (int k = 0; k < r; ++k)
                h.triangles.push_back({std::int64_t(i) * q + j, std::int64_t(j) * r + k,
                                       std::int64_t(k) * p + i});
    return h;
}

bool check_extremal_conditions(const Hypergraph3& h) {
    // linearity: no two triangles share two vertices
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(h.triangles.size() * 3);
    for (const auto& t : h.triangles) {
        for (int e = 0; e < 3; ++e) {
            std::int64_t u = t[e], v = t[(e + 1) % 3];
            if (u >= (1 << 30) || v >= (1 << 30))
                throw std::length_error("check_extremal_conditions: parts too large");
            std::uint64_t key = (std::uint64_t(e) << 60) | (std::uint64_t(u) << 30) |
                                std::uint64_t(v);
            if (!seen.insert(key).second) return false;
        }
    }
    // common-neighbor condition, each choice of the "third" part
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        std::vector<Bits> ni(h.part_sizes[i], Bits(h.part_sizes[k]));
        std::vector<Bits> nj(h.part_sizes[j], Bits(h.part_sizes[k]));
        for (const auto& t : h.triangles) {
            ni[t[i]].set(t[k]);
            nj[t[j]].set(t[k]);
        }
        for (std::size_t u = 0; u < h.part_sizes[i]; ++u)
            for (std::size_t v = 0; v < h.part_sizes[j]; ++v)
                if ((ni[u] & nj[v]).count() > 1) return false;
    }
    std::uint64_t n = *std::max_element(h.part_sizes.begin(), h.part_sizes.end());
    std::uint64_t tc = h.triangles.size();
    if (tc * tc > n * n * n)
        throw std::logic_error("extremal conditions hold but triangle count exceeds N^{3/2}");
    return true;
}

GroupTriple triple_product(const GroupTriple& t1, const GroupTriple& t2) {
    AbelianGroup gh = AbelianGroup::product(t1.group, t2.group);
    auto prod = [&](const ElemSet& s1, const ElemSet& s2) {
        std::vector<std::int64_t> out;
        out.reserve(s1.size() * s2.size());
        for (auto a : s1.indices())
            for (auto b : s2.indices()) out.push_back(a + t1.group.order() * b);
        return ElemSet(std::move(out));
    };
    return GroupTriple{gh, prod(t1.A, t2.A), prod(t1.B, t2.B), prod(t1.C, t2.C)};
}

GroupTriple cyclic_shift(const GroupTriple& t) { return GroupTriple{t.group, t.B, t.C, t.A}; }

InducedMatching induced_matching_from_3apfree(std::int64_t n, const ElemSet& A) {
    AbelianGroup g = AbelianGroup::cyclic(n);
    // 3AP check: x + z = 2y with x, y, z in A pairwise distinct
    for (auto x : A.indices())
        for (auto z : A.indices()) {
            if (x == z) continue;
            for (auto y : A.indices())
                if (y != x && y != z && g.add(x, z) == g.scale(2, y))
                    throw std::invalid_argument("induced_matching: set is not 3AP-free");
        }
    ElemSet C;
    for (auto a : A.indices()) {
        std::int64_t c = g.neg(g.scale(2, a));
        if (C.contains(c))
            throw std::invalid_argument("induced_matching: x -> -2x collides on A");
        C.insert(c);
    }
    GroupTriple t{g, A, A, C};
    // enumerate the induced triangles and check they form a perfect matching
    std::vector<std::array<std::int64_t, 3>> tris;
    for (auto a : t.A.indices())
        for (auto b : t.B.indices()) {
            std::int64_t c = g.neg(g.add(a, b));
            if (t.C.contains(c)) tris.push_back({a, b, c});
        }
    if (tris.size() != A.size())
        throw std::logic_error("induced_matching: triangle count differs from |A|");
    ElemSet u1, u2, u3;
    for (const auto& tr : tris) {
        if (u1.contains(tr[0]) || u2.contains(tr[1]) || u3.contains(tr[2]))
            throw std::logic_error("induced_matching: triangles are not disjoint");
        u1.insert(tr[0]);
        u2.insert(tr[1]);
        u3.insert(tr[2]);
    }
    return InducedMatching{t, static_cast<std::int64_t>(tris.size())};
}

}  // namespace skc
