#include "skc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace skc::oracle {

bool skew_grid_free_naive(const std::vector<Point2>& pts, int /*n*/) {
    for (const auto& p : pts)
        for (const auto& q : pts) {
            if (p.x != q.x || p.y == q.y) continue;
            int d = q.y - p.y;
            for (const auto& r : pts)
                if (r.x == p.x + d) return false;
        }
    return true;
}

bool bi_skew_free_naive(const std::vector<Point2>& pts, int n) {
    std::vector<Point2> t;
    t.reserve(pts.size());
    for (const auto& p : pts) t.push_back({p.y, p.x});
    return skew_grid_free_naive(pts, n) && skew_grid_free_naive(t, n);
}

bool skew_tri_free_naive(const std::vector<Point3>& pts) {
    for (const auto& p : pts)
        for (const auto& q : pts) {
            if (p == q) continue;
            if (p.a == q.a) {
                int d = q.b - p.b;
                for (const auto& r : pts)
                    if (r.a == p.a + d) return false;
            }
            if (p.b == q.b) {
                int d = q.c - p.c;
                for (const auto& r : pts)
                    if (r.b == p.b + d) return false;
            }
            if (p.c == q.c) {
                int d = q.a - p.a;
                for (const auto& r : pts)
                    if (r.c == p.c + d) return false;
            }
        }
    return true;
}

bool corner_tri_free_naive(const std::vector<Point3>& pts) {
    // p = (x+d, y, z), q = (x, y+d, z), r = (x, y, z+d)
    for (const auto& p : pts)
        for (const auto& q : pts) {
            if (p.c != q.c || p.a == q.a) continue;
            int d = p.a - q.a;
            for (const auto& r : pts)
                if (r.a == q.a && r.b == p.b && r.c == q.c + d) return false;
        }
    return true;
}

bool line_trapezoid_free_naive(int n, const std::vector<int>& A, const std::vector<int>& B,
                               const std::vector<int>& C) {
    // each system, with its fixed pair, must have at most one (a,b,c) solution
    for (int ap : A)
        for (int bp : B) {
            int sols = 0;
            for (int a : A)
                for (int b : B)
                    for (int c : C)
                        if (ap + b + c == n && a + bp + c == n) ++sols;
            if (sols > 1) return false;
        }
    for (int ap : A)
        for (int cp : C) {
            int sols = 0;
            for (int a : A)
                for (int b : B)
                    for (int c : C)
                        if (ap + b + c == n && a + b + cp == n) ++sols;
            if (sols > 1) return false;
        }
    for (int bp : B)
        for (int cp : C) {
            int sols = 0;
            for (int a : A)
                for (int b : B)
                    for (int c : C)
                        if (a + bp + c == n && a + b + cp == n) ++sols;
            if (sols > 1) return false;
        }
    return true;
}

bool group_trapezoid_free_naive(const AbelianGroup& g, const std::vector<std::int64_t>& A,
                                const std::vector<std::int64_t>& B,
                                const std::vector<std::int64_t>& C) {
    auto zero3 = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        return g.add(g.add(a, b), c) == 0;
    };
    for (auto ap : A)
        for (auto bp : B) {
            int sols = 0;
            for (auto a : A)
                for (auto b : B)
                    for (auto c : C)
                        if (zero3(ap, b, c) && zero3(a, bp, c)) ++sols;
            if (sols > 1) return false;
        }
    for (auto ap : A)
        for (auto cp : C) {
            int sols = 0;
            for (auto a : A)
                for (auto b : B)
                    for (auto c : C)
                        if (zero3(ap, b, c) && zero3(a, b, cp)) ++sols;
            if (sols > 1) return false;
        }
    for (auto bp : B)
        for (auto cp : C) {
            int sols = 0;
            for (auto a : A)
                for (auto b : B)
                    for (auto c : C)
                        if (zero3(a, bp, c) && zero3(a, b, cp)) ++sols;
            if (sols > 1) return false;
        }
    return true;
}

namespace {

struct PointDfs {
    std::vector<Point2> cells;
    std::vector<Point2> cur;
    std::int64_t best;
    int n;
    bool bi;

    void run(std::size_t i) {
        if (static_cast<std::int64_t>(cur.size()) > best) best = cur.size();
        if (i == cells.size()) return;
        if (static_cast<std::int64_t>(cur.size() + (cells.size() - i)) <= best) return;
        cur.push_back(cells[i]);
        bool ok = bi ? bi_skew_free_naive(cur, n) : skew_grid_free_naive(cur, n);
        if (ok) run(i + 1);
        cur.pop_back();
        run(i + 1);
    }
};

std::int64_t point_dfs(int n, bool bi, std::int64_t seed) {
    PointDfs d;
    d.n = n;
    d.bi = bi;
    d.best = seed;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) d.cells.push_back({x, y});
    d.run(0);
    return d.best;
}

struct TriDfs {
    std::vector<std::vector<Point3>> orbits;
    std::vector<Point3> cur;
    std::int64_t best;

    void run(std::size_t i, std::size_t remaining) {
        if (static_cast<std::int64_t>(cur.size()) > best) best = cur.size();
        if (i == orbits.size()) return;
        if (static_cast<std::int64_t>(cur.size() + remaining) <= best) return;
        std::size_t sz = orbits[i].size();
        for (const auto& p : orbits[i]) cur.push_back(p);
        if (skew_tri_free_naive(cur)) run(i + 1, remaining - sz);
        cur.resize(cur.size() - sz);
        run(i + 1, remaining - sz);
    }
};

}  // namespace

std::int64_t max_skew_grid_value(int n, std::int64_t seed_incumbent) {
    return point_dfs(n, false, std::max<std::int64_t>(seed_incumbent, 0));
}

std::int64_t max_bi_skew_value(int n, std::int64_t seed_incumbent) {
    return point_dfs(n, true, std::max<std::int64_t>(seed_incumbent, 0));
}

std::int64_t max_skew_tri_value(int n, Symmetry symmetry, std::int64_t seed_incumbent) {
    TriDfs d;
    d.best = std::max<std::int64_t>(seed_incumbent, 0);
    std::size_t total = 0;
    const TriSet full = TriSet::full(n);
    if (symmetry == Symmetry::None) {
        for (const auto& p : full.points()) d.orbits.push_back({p});
    } else {
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
            d.orbits.emplace_back(orbit.begin(), orbit.end());
        }
    }
    for (const auto& o : d.orbits) total += o.size();
    d.run(0, total);
    return d.best;
}

namespace {

struct PlaneCDfs {
    int n;
    std::vector<int> A, B, C;
    std::vector<std::pair<int, std::int64_t>> cand;
    std::vector<std::int64_t> suffix;
    std::int64_t* best;

    void run(std::size_t i, std::int64_t count) {
        if (count > *best) *best = count;
        if (i == cand.size() || count + suffix[i] <= *best) return;
        C.push_back(cand[i].first);
        if (line_trapezoid_free_naive(n, A, B, C)) run(i + 1, count + cand[i].second);
        C.pop_back();
        run(i + 1, count);
    }
};

}  // namespace

std::int64_t val_plane_value(int n, std::int64_t seed_incumbent) {
    std::int64_t best = std::max<std::int64_t>(seed_incumbent, 0);
    const std::uint64_t M = 1ull << (n + 1);
    for (std::uint64_t am = 1; am < M; ++am) {
        std::vector<int> A;
        for (int v = 0; v <= n; ++v)
            if (am >> v & 1) A.push_back(v);
        for (std::uint64_t bm = 1; bm < M; ++bm) {
            std::vector<int> B;
            for (int v = 0; v <= n; ++v)
                if (bm >> v & 1) B.push_back(v);
            std::vector<std::int64_t> r(n + 1, 0);
            for (int a : A)
                for (int b : B)
                    if (a + b <= n) ++r[a + b];
            PlaneCDfs d{n, A, B, {}, {}, {}, &best};
            for (int c = 0; c <= n; ++c)
                if (r[n - c] > 0) d.cand.emplace_back(c, r[n - c]);
            std::stable_sort(d.cand.begin(), d.cand.end(),
                             [](const auto& x, const auto& y) { return x.second > y.second; });
            d.suffix.assign(d.cand.size() + 1, 0);
            for (std::size_t i = d.cand.size(); i-- > 0;)
                d.suffix[i] = d.suffix[i + 1] + d.cand[i].second;
            if (d.suffix[0] > best) d.run(0, 0);
        }
    }
    return best;
}

namespace {

struct GroupCDfs {
    const AbelianGroup* g;
    std::vector<std::int64_t> A, B, C;
    std::vector<std::pair<std::int64_t, std::int64_t>> cand;
    std::vector<std::int64_t> suffix;
    std::int64_t* best;

    void run(std::size_t i, std::int64_t count) {
        if (count > *best) *best = count;
        if (i == cand.size() || count + suffix[i] <= *best) return;
        C.push_back(cand[i].first);
        if (group_trapezoid_free_naive(*g, A, B, C)) run(i + 1, count + cand[i].second);
        C.pop_back();
        run(i + 1, count);
    }
};

}  // namespace

std::int64_t val_group_value(const AbelianGroup& g, std::int64_t seed_incumbent) {
    std::int64_t best = std::max<std::int64_t>(seed_incumbent, 0);
    const std::int64_t N = g.order();
    const std::uint64_t M = 1ull << N;
    for (std::uint64_t am = 1; am < M; ++am) {
        std::vector<std::int64_t> A;
        for (std::int64_t v = 0; v < N; ++v)
            if (am >> v & 1) A.push_back(v);
        for (std::uint64_t bm = 1; bm < M; ++bm) {
            std::vector<std::int64_t> B;
            for (std::int64_t v = 0; v < N; ++v)
                if (bm >> v & 1) B.push_back(v);
            std::vector<std::int64_t> r(N, 0);
            for (auto a : A)
                for (auto b : B) ++r[g.neg(g.add(a, b))];
            GroupCDfs d{&g, A, B, {}, {}, {}, &best};
            for (std::int64_t c = 0; c < N; ++c)
                if (r[c] > 0) d.cand.emplace_back(c, r[c]);
            std::stable_sort(d.cand.begin(), d.cand.end(),
                             [](const auto& x, const auto& y) { return x.second > y.second; });
            d.suffix.assign(d.cand.size() + 1, 0);
            for (std::size_t i = d.cand.size(); i-- > 0;)
                d.suffix[i] = d.suffix[i + 1] + d.cand[i].second;
            if (d.suffix[0] > best) d.run(0, 0);
        }
    }
    return best;
}

std::int64_t convolution_solution_count(const GroupTriple& t) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(t.group.order()), 0);
    for (auto a : t.A.indices())
        for (auto b : t.B.indices()) ++r[static_cast<std::size_t>(t.group.add(a, b))];
    std::int64_t total = 0;
    for (auto c : t.C.indices()) total += r[static_cast<std::size_t>(t.group.neg(c))];
    return total;
}

std::int64_t convolution_second_moment(const GroupTriple& t) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(t.group.order()), 0);
    for (auto a : t.A.indices())
        for (auto b : t.B.indices()) ++r[static_cast<std::size_t>(t.group.add(a, b))];
    std::int64_t total = 0;
    for (auto c : t.C.indices()) {
        std::int64_t v = r[static_cast<std::size_t>(t.group.neg(c))];
        total += v * v;
    }
    return total;
}

double omega_single_closed_form(std::int64_t group_order, std::int64_t product) {
    if (product <= 1) return 3.0;
    double w = 3.0 * std::log(static_cast<double>(group_order)) /
               std::log(static_cast<double>(product));
    return std::min(3.0, std::max(2.0, w));
}

}  // namespace skc::oracle
