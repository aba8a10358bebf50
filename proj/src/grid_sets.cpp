#include "skc/grid_sets.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <stdexcept>

namespace skc {

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::SkewCorner: return "SkewCorner";
        case ViolationKind::BiSkewCorner: return "BiSkewCorner";
        case ViolationKind::Corner: return "Corner";
        case ViolationKind::Triforce: return "Triforce";
        case ViolationKind::Trapezoid: return "Trapezoid";
    }
    return "?";
}

GridSet::GridSet(int n) : n_(n) {
    if (n < 1) throw std::out_of_range("GridSet: n must be positive");
}

void GridSet::insert(int x, int y) {
    if (x < 1 || x > n_ || y < 1 || y > n_)
        throw std::out_of_range("GridSet::insert: point outside [n]^2");
    auto& rows = cols_[x];
    auto it = std::lower_bound(rows.begin(), rows.end(), y);
    if (it != rows.end() && *it == y) return;
    rows.insert(it, y);
    ++size_;
}

bool GridSet::contains(int x, int y) const {
    auto it = cols_.find(x);
    if (it == cols_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), y);
}

std::vector<Point2> GridSet::points() const {
    std::vector<Point2> out;
    out.reserve(size_);
    for (const auto& [x, rows] : cols_)
        for (int y : rows) out.push_back({x, y});
    return out;
}

GridSet GridSet::transpose() const {
    GridSet t(n_);
    for (const auto& [x, rows] : cols_)
        for (int y : rows) t.insert(y, x);
    return t;
}

TriSet::TriSet(int n) : n_(n) {
    if (n < 0) throw std::out_of_range("TriSet: n must be nonnegative");
}

void TriSet::insert(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != n_)
        throw std::out_of_range("TriSet::insert: point not in Delta_{n+1}");
    Point3 p{a, b, c};
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
    if (it != pts_.end() && *it == p) return;
    pts_.insert(it, p);
}

bool TriSet::contains(int a, int b, int c) const {
    return std::binary_search(pts_.begin(), pts_.end(), Point3{a, b, c});
}

TriSet TriSet::permuted(const std::array<int, 3>& perm) const {
    TriSet out(n_);
    for (const auto& p : pts_) {
        int c[3] = {p.a, p.b, p.c};
        out.insert(c[perm[0]], c[perm[1]], c[perm[2]]);
    }
    return out;
}

TriSet TriSet::full(int n) {
    TriSet s(n);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) s.insert(a, b, n - a - b);
    return s;
}

namespace {

// Shared core of the skew predicates.  `lines` maps a line index v in
// [vmin, vmax] to the sorted positions of its points; a line with two points
// at positional distance g forbids any occupancy on lines v-g and v+g.
// Returns the index of some line whose gap hits an occupied line, or -1.
int first_bad_line(const std::map<int, std::vector<int>>& lines, int vmin, int vmax,
                   int posmax) {
    const std::size_t w = static_cast<std::size_t>(std::max(vmax - vmin, posmax)) + 1;
    boost::dynamic_bitset<> occ(w), occ_rev(w), rows(w), gaps(w);
    for (const auto& [v, r] : lines) {
        if (!r.empty()) {
            occ.set(v - vmin);
            occ_rev.set(vmax - v);
        }
    }
    for (const auto& [v, r] : lines) {
        if (r.size() < 2) continue;
        for (int y : r) rows.set(y);
        for (int y : r) gaps |= rows >> y;
        gaps.reset(0);
        if (((occ >> (v - vmin)) & gaps).any() ||
            ((occ_rev >> (vmax - v)) & gaps).any())
            return v;
        for (int y : r) rows.reset(y);
        gaps.reset();
    }
    return vmin - 1;
}

std::map<int, std::vector<int>> tri_lines(const TriSet& s, int dir) {
    // dir 0: lines a=const, position b; dir 1: b=const, position c;
    // dir 2: c=const, position a.
    std::map<int, std::vector<int>> lines;
    for (const auto& p : s.points()) {
        int c[3] = {p.a, p.b, p.c};
        lines[c[dir]].push_back(c[(dir + 1) % 3]);
    }
    for (auto& [v, r] : lines) std::sort(r.begin(), r.end());
    return lines;
}

Point3 tri_point_on_line(const TriSet& s, int dir, int v) {
    for (const auto& p : s.points()) {
        int c[3] = {p.a, p.b, p.c};
        if (c[dir] == v) return p;
    }
    throw std::logic_error("tri_point_on_line: empty line");
}

}  // namespace

bool is_skew_corner_free_grid(const GridSet& s, Violation* out) {
    if (first_bad_line(s.columns(), 1, s.n(), s.n()) >= 1) {
        if (out) {
            // Lexicographically first witness under (x, y, d), d ascending
            // from negative.
            for (const auto& [x, rows] : s.columns()) {
                for (int y : rows) {
                    for (int d = 1 - y; d + y <= s.n(); ++d) {
                        if (d == 0 || !s.contains(x, y + d)) continue;
                        int xd = x + d;
                        if (xd < 1 || xd > s.n()) continue;
                        auto it = s.columns().find(xd);
                        if (it == s.columns().end()) continue;
                        *out = Violation{ViolationKind::SkewCorner,
                                         {{x, y}, {x, y + d}, {xd, it->second.front()}},
                                         d};
                        return false;
                    }
                }
            }
        }
        return false;
    }
    return true;
}

bool is_bi_skew_corner_free(const GridSet& s, Violation* out) {
    if (!is_skew_corner_free_grid(s, out)) return false;
    Violation v;
    if (!is_skew_corner_free_grid(s.transpose(), out ? &v : nullptr)) {
        if (out) {
            for (auto& p : v.witness) std::swap(p[0], p[1]);
            *out = Violation{ViolationKind::BiSkewCorner, v.witness, v.gap};
        }
        return false;
    }
    return true;
}

bool is_skew_corner_free_tri(const TriSet& s, Violation* out) {
    for (int dir = 0; dir < 3; ++dir) {
        auto lines = tri_lines(s, dir);
        if (first_bad_line(lines, 0, s.n(), s.n()) >= 0) {
            if (out) {
                for (const auto& [v, r] : lines) {
                    for (std::size_t i = 0; i < r.size(); ++i) {
                        for (std::size_t j = i + 1; j < r.size(); ++j) {
                            int g = r[j] - r[i];
                            for (int sgn : {-1, +1}) {
                                int v2 = v + sgn * g;
                                if (v2 < 0 || v2 > s.n()) continue;
                                auto it = lines.find(v2);
                                if (it == lines.end() || it->second.empty()) continue;
                                auto mk = [&](int vv, int pos) {
                                    int c[3];
                                    c[dir] = vv;
                                    c[(dir + 1) % 3] = pos;
                                    c[(dir + 2) % 3] = s.n() - vv - pos;
                                    return std::vector<int>{c[0], c[1], c[2]};
                                };
                                Point3 third = tri_point_on_line(s, dir, v2);
                                *out = Violation{
                                    ViolationKind::SkewCorner,
                                    {mk(v, r[i]), mk(v, r[j]),
                                     {third.a, third.b, third.c}},
                                    sgn * g};
                                return false;
                            }
                        }
                    }
                }
            }
            return false;
        }
    }
    return true;
}

bool is_corner_free_tri(const TriSet& s, Violation* out) {
    const auto& pts = s.points();
    for (const auto& p : pts) {
        for (const auto& q : pts) {
            if (p.c != q.c || p.a == q.a) continue;
            int d = p.a - q.a;  // p = (x+d, y, z), q = (x, y+d, z)
            if (q.c + d < 0) continue;
            if (s.contains(q.a, p.b, q.c + d)) {
                if (out)
                    *out = Violation{ViolationKind::Corner,
                                     {{p.a, p.b, p.c},
                                      {q.a, q.b, q.c},
                                      {q.a, p.b, q.c + d}},
                                     d};
                return false;
            }
        }
    }
    return true;
}

GridSet project_tri_to_grid(const TriSet& s) {
    GridSet g(s.n() + 1);
    for (const auto& p : s.points()) g.insert(p.a + 1, p.b + 1);
    return g;
}

}  // namespace skc
