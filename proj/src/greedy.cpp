#include <algorithm>
#include <random>
#include <stdexcept>

#include "search_common.hpp"
#include "skc/search.hpp"

namespace skc {

namespace {

// One element of a candidate solution: a grid cell, a triangular-grid point
// index, or a (part, value) line choice for the val objectives.
using Elem = std::pair<int, int>;

struct Problem {
    std::vector<Elem> elements;
    std::function<bool(const std::vector<Elem>&)> feasible;
    std::function<std::int64_t(const std::vector<Elem>&)> value;
    std::function<Witness(const std::vector<Elem>&)> witness;
    std::vector<Elem> trivial;  // known feasible starting set
};

Problem make_problem(Objective objective, int n) {
    Problem p;
    switch (objective) {
        case Objective::MaxSkewGrid:
        case Objective::MaxBiSkew: {
            for (int x = 1; x <= n; ++x)
                for (int y = 1; y <= n; ++y) p.elements.emplace_back(x, y);
            auto build = [n](const std::vector<Elem>& s) {
                GridSet g(n);
                for (const auto& [x, y] : s) g.insert(x, y);
                return g;
            };
            bool bi = objective == Objective::MaxBiSkew;
            p.feasible = [build, bi](const std::vector<Elem>& s) {
                GridSet g = build(s);
                return bi ? is_bi_skew_corner_free(g) : is_skew_corner_free_grid(g);
            };
            p.value = [](const std::vector<Elem>& s) {
                return static_cast<std::int64_t>(s.size());
            };
            p.witness = [build](const std::vector<Elem>& s) { return Witness(build(s)); };
            for (int y = 1; y <= n; ++y) p.trivial.emplace_back(1, y);
            break;
        }
        case Objective::MaxSkewTri: {
            auto pts = TriSet::full(n).points();
            for (std::size_t i = 0; i < pts.size(); ++i)
                p.elements.emplace_back(static_cast<int>(i), 0);
            auto build = [n, pts](const std::vector<Elem>& s) {
                TriSet t(n);
                for (const auto& [i, unused] : s) t.insert(pts[i]);
                return t;
            };
            p.feasible = [build](const std::vector<Elem>& s) {
                return is_skew_corner_free_tri(build(s));
            };
            p.value = [](const std::vector<Elem>& s) {
                return static_cast<std::int64_t>(s.size());
            };
            p.witness = [build](const std::vector<Elem>& s) { return Witness(build(s)); };
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (pts[i].a == 0) p.trivial.emplace_back(static_cast<int>(i), 0);
            break;
        }
        case Objective::ValPlane: {
            for (int part = 0; part < 3; ++part)
                for (int v = 0; v <= n; ++v) p.elements.emplace_back(part, v);
            auto build = [n](const std::vector<Elem>& s) {
                std::vector<int> sets[3];
                for (const auto& [part, v] : s) sets[part].push_back(v);
                return make_line_triple(n, sets[0], sets[1], sets[2]);
            };
            p.feasible = [build](const std::vector<Elem>& s) {
                return is_line_trapezoid_free(build(s));
            };
            p.value = [build](const std::vector<Elem>& s) { return solution_count(build(s)); };
            p.witness = [build](const std::vector<Elem>& s) { return Witness(build(s)); };
            p.trivial.emplace_back(0, 0);
            for (int v = 0; v <= n; ++v) {
                p.trivial.emplace_back(1, v);
                p.trivial.emplace_back(2, v);
            }
            break;
        }
        case Objective::ValGroup: {
            AbelianGroup g = AbelianGroup::cyclic(std::max(1, n));
            for (int part = 0; part < 3; ++part)
                for (int v = 0; v < g.order(); ++v) p.elements.emplace_back(part, v);
            auto build = [g](const std::vector<Elem>& s) {
                std::vector<std::int64_t> sets[3];
                for (const auto& [part, v] : s) sets[part].push_back(v);
                return GroupTriple{g, ElemSet(std::move(sets[0])), ElemSet(std::move(sets[1])),
                                   ElemSet(std::move(sets[2]))};
            };
            p.feasible = [build](const std::vector<Elem>& s) {
                return is_trapezoid_free(build(s));
            };
            p.value = [build](const std::vector<Elem>& s) {
                return count_zero_sum_triples(build(s));
            };
            p.witness = [build](const std::vector<Elem>& s) { return Witness(build(s)); };
            p.trivial.emplace_back(0, 0);
            p.trivial.emplace_back(1, 0);
            for (int v = 0; v < g.order(); ++v) p.trivial.emplace_back(2, v);
            break;
        }
    }
    return p;
}

}  // namespace

SearchResult greedy_heuristic(Objective objective, int n, std::uint64_t seed, int restarts) {
    if (n < 1) throw std::invalid_argument("greedy_heuristic: n must be >= 1");
    if (restarts < 1) throw std::invalid_argument("greedy_heuristic: restarts must be >= 1");

    Problem p = make_problem(objective, n);
    std::mt19937_64 rng(seed);

    SearchResult res;
    res.objective = objective;
    res.n = n;
    if (objective == Objective::ValGroup) res.group = AbelianGroup::cyclic(n).literal();
    res.status = SearchStatus::LowerBoundOnly;
    auto start = std::chrono::steady_clock::now();

    std::vector<Elem> best;
    std::int64_t best_value = -1;

    auto greedy_fill = [&](std::vector<Elem>& cur) {
        std::vector<Elem> order = p.elements;
        std::shuffle(order.begin(), order.end(), rng);
        for (const auto& e : order) {
            if (std::find(cur.begin(), cur.end(), e) != cur.end()) continue;
            cur.push_back(e);
            if (!p.feasible(cur)) cur.pop_back();
        }
    };

    for (int restart = 0; restart < restarts; ++restart) {
        std::vector<Elem> cur = restart == 0 ? p.trivial : std::vector<Elem>{};
        greedy_fill(cur);
        std::int64_t cur_value = p.value(cur);
        for (int round = 0; round < 20; ++round) {
            std::vector<Elem> trial = cur;
            int k = 1 + static_cast<int>(rng() % 2);
            for (int i = 0; i < k && !trial.empty(); ++i)
                trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(rng() % trial.size()));
            greedy_fill(trial);
            std::int64_t trial_value = p.value(trial);
            if (trial_value > cur_value) {
                cur = std::move(trial);
                cur_value = trial_value;
            }
            ++res.nodes;
        }
        if (cur_value > best_value) {
            best_value = cur_value;
            best = cur;
        }
    }

    res.best_value = best_value;
    res.witness = p.witness(best);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace skc
