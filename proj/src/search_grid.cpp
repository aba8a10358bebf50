#include <bit>
#include <climits>
#include <stdexcept>
#include <unordered_map>

#include "search_common.hpp"
#include "skc/search.hpp"

namespace skc {

namespace {

using detail::Driver;

// Maximum subsets of rows [1..n] whose pairwise distances all lie in a given
// gap set, memoized by the gap bitmask (bit g-1 = gap g allowed).
class RowCliqueSolver {
  public:
    explicit RowCliqueSolver(int n) : n_(n) {}

    // Returns (size, row bitmask with bit r-1 = row r).
    std::pair<int, std::uint64_t> solve(std::uint64_t gaps) {
        auto it = memo_.find(gaps);
        if (it != memo_.end()) return it->second;
        adj_.assign(n_, 0);
        for (int g = 1; g < n_; ++g) {
            if (!(gaps >> (g - 1) & 1)) continue;
            for (int r = 0; r < n_; ++r) {
                if (r - g >= 0) adj_[r] |= 1ull << (r - g);
                if (r + g < n_) adj_[r] |= 1ull << (r + g);
            }
        }
        best_ = 0;
        best_set_ = 0;
        std::uint64_t all = n_ == 64 ? ~0ull : (1ull << n_) - 1;
        expand(all, 0, 0);
        auto res = std::make_pair(best_, best_set_);
        memo_.emplace(gaps, res);
        return res;
    }

  private:
    void expand(std::uint64_t cand, int size, std::uint64_t cur) {
        if (size + std::popcount(cand) <= best_) return;
        if (!cand) {
            best_ = size;
            best_set_ = cur;
            return;
        }
        int r = std::countr_zero(cand);
        std::uint64_t bit = 1ull << r;
        expand(cand & adj_[r], size + 1, cur | bit);
        expand(cand & ~bit, size, cur);
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    int best_ = 0;
    std::uint64_t best_set_ = 0;
    std::unordered_map<std::uint64_t, std::pair<int, std::uint64_t>> memo_;
};

}  // namespace

SearchResult max_skew_grid_exact(int n, const Budget& budget) {
    detail::validate_budget(budget);
    if (n < 1) throw std::invalid_argument("max_skew_grid_exact: n must be >= 1");
    if (n > 62) throw std::invalid_argument("max_skew_grid_exact: n too large for exact search");

    SearchResult res;
    res.objective = Objective::MaxSkewGrid;
    res.n = n;

    Driver driver(budget);
    {
        GridSet seed(n);
        for (int y = 1; y <= n; ++y) seed.insert(1, y);
        driver.offer(n, INT64_MAX, seed);
    }

    int prefix_bits = budget.workers > 1 ? std::min(n, 8) : 0;
    std::int64_t items = 1ll << prefix_bits;
    std::int64_t suffix = 1ll << (n - prefix_bits);

    detail::run_items(budget.workers, items, [&](std::int64_t item) {
        RowCliqueSolver cliques(n);
        std::int64_t local = 0;
        for (std::int64_t lo = 0; lo < suffix; ++lo) {
            if (!driver.tick(local)) break;
            std::uint64_t pattern =
                static_cast<std::uint64_t>(item) << (n - prefix_bits) | static_cast<std::uint64_t>(lo);
            std::int64_t value = 0;
            for (int x = 1; x <= n; ++x) {
                if (!(pattern >> (x - 1) & 1)) continue;
                std::uint64_t gaps = 0;
                for (int g = 1; g < n; ++g) {
                    bool left = x - g < 1 || !(pattern >> (x - g - 1) & 1);
                    bool right = x + g > n || !(pattern >> (x + g - 1) & 1);
                    if (left && right) gaps |= 1ull << (g - 1);
                }
                value += cliques.solve(gaps).first;
            }
            if (value >= driver.incumbent()) {
                GridSet w(n);
                for (int x = 1; x <= n; ++x) {
                    if (!(pattern >> (x - 1) & 1)) continue;
                    std::uint64_t gaps = 0;
                    for (int g = 1; g < n; ++g) {
                        bool left = x - g < 1 || !(pattern >> (x - g - 1) & 1);
                        bool right = x + g > n || !(pattern >> (x + g - 1) & 1);
                        if (left && right) gaps |= 1ull << (g - 1);
                    }
                    std::uint64_t rows = cliques.solve(gaps).second;
                    for (int r = 1; r <= n; ++r)
                        if (rows >> (r - 1) & 1) w.insert(x, r);
                }
                driver.offer(value, static_cast<std::int64_t>(pattern), w);
            }
        }
        std::int64_t flushed = local;
        driver.flush(flushed);
    });

    driver.finish(res);
    return res;
}

namespace {

// Incremental bi-skew state: per-column and per-row point lists plus kill
// counters; a column pair at gap g kills columns x-g and x+g, and the same
// in the row direction.
struct BiState {
    explicit BiState(int n)
        : n(n), col_pts(n + 1), row_pts(n + 1), killed_col(n + 1, 0), killed_row(n + 1, 0) {}

    int n;
    std::vector<std::vector<int>> col_pts, row_pts;
    std::vector<int> killed_col, killed_row;
    std::vector<Point2> cur;

    struct Undo {
        std::vector<int> cols, rows;  // kill counters to decrement
    };

    bool add(int x, int y, Undo& undo) {
        if (killed_col[x] || killed_row[y]) return false;
        for (int yp : col_pts[x]) {
            int g = std::abs(y - yp);
            for (int c : {x - g, x + g}) {
                if (c < 1 || c > n) continue;
                if (!col_pts[c].empty()) {
                    rollback(undo);
                    return false;
                }
                ++killed_col[c];
                undo.cols.push_back(c);
            }
        }
        for (int xp : row_pts[y]) {
            int g = std::abs(x - xp);
            for (int r : {y - g, y + g}) {
                if (r < 1 || r > n) continue;
                if (!row_pts[r].empty()) {
                    rollback(undo);
                    return false;
                }
                ++killed_row[r];
                undo.rows.push_back(r);
            }
        }
        col_pts[x].push_back(y);
        row_pts[y].push_back(x);
        cur.push_back({x, y});
        return true;
    }

    void remove(Undo& undo) {
        const Point2 p = cur.back();
        cur.pop_back();
        col_pts[p.x].pop_back();
        row_pts[p.y].pop_back();
        rollback(undo);
    }

    void rollback(Undo& undo) {
        for (int c : undo.cols) --killed_col[c];
        for (int r : undo.rows) --killed_row[r];
        undo.cols.clear();
        undo.rows.clear();
    }
};

struct BiSearcher {
    Driver& driver;
    int n;
    std::int64_t item;
    BiState state;
    std::int64_t local = 0;

    BiSearcher(Driver& d, int n, std::int64_t item) : driver(d), n(n), item(item), state(n) {}

    void dfs(int idx) {
        if (!driver.tick(local)) return;
        std::int64_t size = static_cast<std::int64_t>(state.cur.size());
        if (idx == n * n) {
            if (size >= driver.incumbent()) {
                GridSet w(n);
                for (const auto& p : state.cur) w.insert(p.x, p.y);
                driver.offer(size, item, w);
            }
            return;
        }
        if (size + (n * n - idx) <= driver.incumbent()) return;
        int x = idx / n + 1, y = idx % n + 1;
        BiState::Undo undo;
        if (state.add(x, y, undo)) {
            dfs(idx + 1);
            state.remove(undo);
        }
        dfs(idx + 1);
    }
};

}  // namespace

SearchResult max_bi_skew_exact(int n, const Budget& budget) {
    detail::validate_budget(budget);
    if (n < 1) throw std::invalid_argument("max_bi_skew_exact: n must be >= 1");

    SearchResult res;
    res.objective = Objective::MaxBiSkew;
    res.n = n;

    Driver driver(budget);
    {
        GridSet seed(n);
        for (int y = 1; y <= n; ++y) seed.insert(1, y);
        driver.offer(n, INT64_MAX, seed);
    }

    int prefix = budget.workers > 1 ? std::min(n * n, 6) : 0;
    std::int64_t items = 1ll << prefix;

    detail::run_items(budget.workers, items, [&](std::int64_t item) {
        if (driver.stopped()) return;
        BiSearcher searcher(driver, n, item);
        std::vector<BiState::Undo> undos;
        bool ok = true;
        for (int idx = 0; idx < prefix && ok; ++idx) {
            if (item >> idx & 1) {
                undos.emplace_back();
                ok = searcher.state.add(idx / n + 1, idx % n + 1, undos.back());
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
