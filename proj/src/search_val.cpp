#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>

#include "search_common.hpp"
#include "skc/search.hpp"

namespace skc {

namespace {

using detail::Driver;

std::vector<int> mask_to_elems(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

// Depth-first search over candidate C elements with a representation-count
// suffix bound; feasibility is rechecked with the full predicate on every
// extension, which is exact because freeness is closed under subsets.
struct PlaneCSearch {
    Driver& driver;
    int n;
    std::int64_t item;
    std::vector<int> A, B;
    std::vector<std::pair<int, std::int64_t>> cand;  // (c, representation count)
    std::vector<std::int64_t> suffix;
    std::vector<int> C;
    std::int64_t local = 0;

    void dfs(std::size_t i, std::int64_t count) {
        if (!driver.tick(local)) return;
        if (i == cand.size()) {
            if (count >= driver.incumbent())
                driver.offer(count, item, make_line_triple(n, A, B, C));
            return;
        }
        if (count + suffix[i] <= driver.incumbent()) {
            if (count >= driver.incumbent())
                driver.offer(count, item, make_line_triple(n, A, B, C));
            return;
        }
        C.push_back(cand[i].first);
        if (is_line_trapezoid_free(make_line_triple(n, A, B, C)))
            dfs(i + 1, count + cand[i].second);
        C.pop_back();
        dfs(i + 1, count);
    }
};

}  // namespace

SearchResult val_plane_exact(int n, const Budget& budget) {
    detail::validate_budget(budget);
    if (n < 0) throw std::invalid_argument("val_plane_exact: n must be >= 0");
    if (n > 30) throw std::invalid_argument("val_plane_exact: n too large for exact search");

    SearchResult res;
    res.objective = Objective::ValPlane;
    res.n = n;

    Driver driver(budget);
    {
        std::vector<int> full(n + 1);
        for (int v = 0; v <= n; ++v) full[v] = v;
        driver.offer(n + 1, INT64_MAX, make_line_triple(n, {0}, full, full));
    }

    const std::uint64_t M = 1ull << (n + 1);
    detail::run_items(budget.workers, static_cast<std::int64_t>(M), [&](std::int64_t item) {
        if (driver.stopped()) return;
        std::uint64_t am = static_cast<std::uint64_t>(item);
        std::int64_t local = 0;
        std::vector<int> A = mask_to_elems(am);
        if (A.empty()) return;
        // the triple is symmetric under part permutations, so {A,B} is
        // enumerated unordered
        for (std::uint64_t bm = am; bm < M; ++bm) {
            if (!driver.tick(local)) break;
            std::vector<int> B = mask_to_elems(bm);
            std::int64_t ub = 0;
            for (int a : A) ub += std::popcount(bm & ((1ull << (n - a + 1)) - 1));
            if (ub <= driver.incumbent()) continue;
            std::vector<std::int64_t> r(n + 1, 0);  // r[t] = #{(a,b): a+b = t}
            for (int a : A)
                for (int b : B)
                    if (a + b <= n) ++r[a + b];
            PlaneCSearch cs{driver, n, item, A, B, {}, {}, {}, 0};
            for (int c = 0; c <= n; ++c)
                if (r[n - c] > 0) cs.cand.emplace_back(c, r[n - c]);
            std::stable_sort(cs.cand.begin(), cs.cand.end(),
                             [](const auto& x, const auto& y) { return x.second > y.second; });
            cs.suffix.assign(cs.cand.size() + 1, 0);
            for (std::size_t i = cs.cand.size(); i-- > 0;)
                cs.suffix[i] = cs.suffix[i + 1] + cs.cand[i].second;
            cs.dfs(0, 0);
            local += cs.local;
        }
        driver.flush(local);
    });

    driver.finish(res);
    return res;
}

namespace {

struct GroupCSearch {
    Driver& driver;
    const AbelianGroup& g;
    std::int64_t item;
    ElemSet A, B;
    std::vector<std::pair<std::int64_t, std::int64_t>> cand;  // (c, representation count)
    std::vector<std::int64_t> suffix;
    std::vector<std::int64_t> C;
    std::int64_t local = 0;

    void dfs(std::size_t i, std::int64_t count) {
        if (!driver.tick(local)) return;
        if (i == cand.size() || count + suffix[i] <= driver.incumbent()) {
            if (count >= driver.incumbent()) {
                std::vector<std::int64_t> c = C;
                driver.offer(count, item, GroupTriple{g, A, B, ElemSet(std::move(c))});
            }
            return;
        }
        C.push_back(cand[i].first);
        {
            std::vector<std::int64_t> c = C;
            GroupTriple t{g, A, B, ElemSet(std::move(c))};
            if (is_trapezoid_free(t)) dfs(i + 1, count + cand[i].second);
        }
        C.pop_back();
        dfs(i + 1, count);
    }
};

}  // namespace

SearchResult val_group_exact(const AbelianGroup& g, const Budget& budget,
                             std::int64_t order_cap) {
    detail::validate_budget(budget);
    const std::int64_t N = g.order();
    if (N > order_cap)
        throw std::invalid_argument("val_group_exact: group order exceeds the configured cap");

    SearchResult res;
    res.objective = Objective::ValGroup;
    res.group = g.literal();
    res.n = static_cast<int>(N);

    Driver driver(budget);
    {
        std::vector<std::int64_t> all(N);
        for (std::int64_t i = 0; i < N; ++i) all[i] = i;
        driver.offer(N, INT64_MAX,
                     GroupTriple{g, ElemSet({0}), ElemSet({0}), ElemSet(std::move(all))});
    }

    // translation symmetry pins 0 into both A and B; the part symmetry makes
    // {A,B} unordered
    const std::uint64_t M = 1ull << N;
    detail::run_items(budget.workers, static_cast<std::int64_t>(M >> 1), [&](std::int64_t item) {
        if (driver.stopped()) return;
        std::uint64_t am = static_cast<std::uint64_t>(item) << 1 | 1;
        std::int64_t local = 0;
        std::vector<std::int64_t> avec;
        for (std::int64_t v = 0; v < N; ++v)
            if (am >> v & 1) avec.push_back(v);
        for (std::uint64_t bm = am; bm < M; bm += 2) {
            if (!(bm & 1)) continue;
            if (!driver.tick(local)) break;
            std::vector<std::int64_t> bvec;
            for (std::int64_t v = 0; v < N; ++v)
                if (bm >> v & 1) bvec.push_back(v);
            std::int64_t ub = static_cast<std::int64_t>(avec.size()) * bvec.size();
            if (ub <= driver.incumbent()) continue;
            std::vector<std::int64_t> r(N, 0);  // r[c] = #{(a,b): a+b+c = 0}
            for (auto a : avec)
                for (auto b : bvec) ++r[g.neg(g.add(a, b))];
            GroupCSearch cs{driver, g, item, ElemSet(std::vector<std::int64_t>(avec)),
                            ElemSet(std::vector<std::int64_t>(bvec)), {}, {}, {}, 0};
            for (std::int64_t c = 0; c < N; ++c)
                if (r[c] > 0) cs.cand.emplace_back(c, r[c]);
            std::stable_sort(cs.cand.begin(), cs.cand.end(),
                             [](const auto& x, const auto& y) { return x.second > y.second; });
            cs.suffix.assign(cs.cand.size() + 1, 0);
            for (std::size_t i = cs.cand.size(); i-- > 0;)
                cs.suffix[i] = cs.suffix[i + 1] + cs.cand[i].second;
            cs.dfs(0, 0);
            local += cs.local;
        }
        driver.flush(local);
    });

    driver.finish(res);
    return res;
}

}  // namespace skc
