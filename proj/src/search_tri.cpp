#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

#include "search_common.hpp"
#include "skc/search.hpp"

namespace skc {

namespace {

using detail::Driver;

// Line coordinate and position of a point in each of the three directions:
// direction 0 groups by a (position b), 1 by b (position c), 2 by c
// (position a), matching the predicate's line structure.
inline int line_of(const Point3& p, int d) { return d == 0 ? p.a : d == 1 ? p.b : p.c; }
inline int pos_of(const Point3& p, int d) { return d == 0 ? p.b : d == 1 ? p.c : p.a; }

// Orbits of the coordinate-permutation action on Delta_{n+1} (or single
// points when no symmetry is requested), ordered by decreasing size with
// ties by lexicographically smallest point.
std::vector<std::vector<Point3>> make_orbits(int n, Symmetry symmetry) {
    std::vector<std::vector<Point3>> orbits;
    const TriSet full = TriSet::full(n);
    if (symmetry == Symmetry::None) {
        for (const auto& p : full.points()) orbits.push_back({p});
        return orbits;
    }
    std::set<Point3> seen;
    for (const auto& p : full.points()) {
        if (seen.count(p)) continue;
        int v[3] = {p.a, p.b, p.c};
        std::sort(v, v + 3);
        std::set<Point3> orbit;
        do {
            orbit.insert({v[0], v[1], v[2]});
        } while (std::next_permutation(v, v + 3));
        for (const auto& q : orbit) seen.insert(q);
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    std::stable_sort(orbits.begin(), orbits.end(),
                     [](const auto& x, const auto& y) {
                         if (x.size() != y.size()) return x.size() > y.size();
                         return x.front() < y.front();
                     });
    return orbits;
}

// Incremental line state shared by the three directions, with kill-counter
// trails for backtracking.
struct TriState {
    explicit TriState(int n) : n(n) {
        for (int d = 0; d < 3; ++d) {
            line_pts[d].assign(n + 1, {});
            killed[d].assign(n + 1, 0);
        }
    }

    int n;
    std::vector<std::vector<int>> line_pts[3];
    std::vector<int> killed[3];
    std::vector<Point3> cur;

    struct Undo {
        std::vector<std::pair<int, int>> kills;  // (direction, line)
        int added = 0;
    };

    bool add_point(const Point3& p, Undo& undo) {
        for (int d = 0; d < 3; ++d)
            if (killed[d][line_of(p, d)]) return false;
        for (int d = 0; d < 3; ++d) {
            int v = line_of(p, d), pos = pos_of(p, d);
            for (int q : line_pts[d][v]) {
                int g = std::abs(pos - q);
                for (int l : {v - g, v + g}) {
                    if (l < 0 || l > n) continue;
                    if (!line_pts[d][l].empty()) return false;
                    ++killed[d][l];
                    undo.kills.emplace_back(d, l);
                }
            }
        }
        for (int d = 0; d < 3; ++d) line_pts[d][line_of(p, d)].push_back(pos_of(p, d));
        cur.push_back(p);
        ++undo.added;
        return true;
    }

    bool add_orbit(const std::vector<Point3>& orbit, Undo& undo) {
        for (const auto& p : orbit)
            if (!add_point(p, undo)) {
                remove(undo);
                return false;
            }
        return true;
    }

    void remove(Undo& undo) {
        for (int i = 0; i < undo.added; ++i) {
            const Point3 p = cur.back();
            cur.pop_back();
            for (int d = 0; d < 3; ++d) line_pts[d][line_of(p, d)].pop_back();
        }
        for (auto [d, l] : undo.kills) --killed[d][l];
        undo.kills.clear();
        undo.added = 0;
    }
};

struct TriSearcher {
    Driver& driver;
    const std::vector<std::vector<Point3>>& orbits;
    std::int64_t item;
    TriState state;
    std::int64_t local = 0;

    TriSearcher(Driver& d, int n, const std::vector<std::vector<Point3>>& orbits,
                std::int64_t item)
        : driver(d), orbits(orbits), item(item), state(n) {}

    // Orbits that could still be added: no point on a killed line.  This is
    // a relaxation of true addability, so the resulting bound is admissible,
    // and it only shrinks along a branch.
    std::int64_t live_potential(std::size_t from) const {
        std::int64_t pot = 0;
        for (std::size_t i = from; i < orbits.size(); ++i) {
            bool alive = true;
            for (const auto& p : orbits[i]) {
                for (int d = 0; d < 3 && alive; ++d)
                    if (state.killed[d][line_of(p, d)]) alive = false;
                if (!alive) break;
            }
            if (alive) pot += static_cast<std::int64_t>(orbits[i].size());
        }
        return pot;
    }

    void record() {
        std::int64_t size = static_cast<std::int64_t>(state.cur.size());
        if (size < driver.incumbent()) return;
        TriSet w(state.n);
        for (const auto& p : state.cur) w.insert(p);
        driver.offer(size, item, w);
    }

    void dfs(std::size_t i) {
        if (!driver.tick(local)) return;
        std::int64_t size = static_cast<std::int64_t>(state.cur.size());
        if (i == orbits.size()) {
            record();
            return;
        }
        if (size + live_potential(i) <= driver.incumbent()) {
            record();
            return;
        }
        TriState::Undo undo;
        if (state.add_orbit(orbits[i], undo)) {
            dfs(i + 1);
            state.remove(undo);
        }
        dfs(i + 1);
    }
};

}  // namespace

SearchResult max_skew_tri_exact(int n, Symmetry symmetry, const Budget& budget) {
    detail::validate_budget(budget);
    if (n < 0) throw std::invalid_argument("max_skew_tri_exact: n must be >= 0");

    SearchResult res;
    res.objective = Objective::MaxSkewTri;
    res.n = n;
    res.symmetry = symmetry;

    auto orbits = make_orbits(n, symmetry);

    Driver driver(budget);
    driver.offer(0, INT64_MAX, TriSet(n));

    int prefix = budget.workers > 1 ? std::min<int>(static_cast<int>(orbits.size()), 6) : 0;
    std::int64_t items = 1ll << prefix;

    detail::run_items(budget.workers, items, [&](std::int64_t item) {
        if (driver.stopped()) return;
        TriSearcher searcher(driver, n, orbits, item);
        std::vector<TriState::Undo> undos;
        bool ok = true;
        for (int i = 0; i < prefix && ok; ++i) {
            if (item >> i & 1) {
                undos.emplace_back();
                ok = searcher.state.add_orbit(orbits[i], undos.back());
                if (!ok) undos.pop_back();
            }
        }
        if (ok) searcher.dfs(prefix);
        driver.flush(searcher.local);
    });

    driver.finish(res);
    return res;
}

}  // namespace skc
