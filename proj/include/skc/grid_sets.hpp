#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skc {

// A point in the 1-indexed square grid [n]^2.
struct Point2 {
    int x = 0, y = 0;
    auto operator<=>(const Point2&) const = default;
};

// A point of the triangular grid: nonnegative coordinates with a+b+c = n.
struct Point3 {
    int a = 0, b = 0, c = 0;
    auto operator<=>(const Point3&) const = default;
};

enum class ViolationKind { SkewCorner, BiSkewCorner, Corner, Triforce, Trapezoid };

const char* violation_kind_name(ViolationKind k);

// Witness of a failed forbidden-configuration predicate: the offending
// points (2..4 of them, encoded as integer tuples) and the nonzero gap.
struct Violation {
    ViolationKind kind;
    std::vector<std::vector<int>> witness;
    int gap = 0;
};

// Finite set of points in [n]^2, stored per column with sorted rows.
class GridSet {
  public:
    explicit GridSet(int n);

    int n() const { return n_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // Inserting an out-of-range point throws std::out_of_range.
    void insert(int x, int y);
    bool contains(int x, int y) const;

    // Columns in increasing x; rows sorted within each column.
    const std::map<int, std::vector<int>>& columns() const { return cols_; }
    std::vector<Point2> points() const;

    GridSet transpose() const;

  private:
    int n_;
    std::size_t size_ = 0;
    std::map<int, std::vector<int>> cols_;
};

// Subset of Delta_{n+1} = {(a,b,c) >= 0 : a+b+c = n}.
class TriSet {
  public:
    explicit TriSet(int n);

    int n() const { return n_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }

    void insert(int a, int b, int c);
    void insert(const Point3& p) { insert(p.a, p.b, p.c); }
    bool contains(int a, int b, int c) const;
    bool contains(const Point3& p) const { return contains(p.a, p.b, p.c); }

    const std::vector<Point3>& points() const { return pts_; }

    // Applies the coordinate permutation perm (a,b,c) -> (p[0],p[1],p[2]).
    TriSet permuted(const std::array<int, 3>& perm) const;

    // All points of Delta_{n+1}.
    static TriSet full(int n);

  private:
    int n_;
    std::vector<Point3> pts_;  // kept sorted
};

// True iff no column contains two points at vertical distance g > 0 while
// column x+g or x-g is occupied.  On failure *out (if non-null) receives the
// lexicographically first violation under (x, y, d) order, d scanned
// negative-to-positive.
bool is_skew_corner_free_grid(const GridSet& s, Violation* out = nullptr);

// Skew corner-free in both orientations (the set and its transpose).
bool is_bi_skew_corner_free(const GridSet& s, Violation* out = nullptr);

// Skew corner-free in the triangular grid: for each coordinate direction,
// two points on a common line forbid the parallel line through the third
// corner position entirely.
bool is_skew_corner_free_tri(const TriSet& s, Violation* out = nullptr);

// No configuration (x+d,y,z), (x,y+d,z), (x,y,z+d) with d != 0.
bool is_corner_free_tri(const TriSet& s, Violation* out = nullptr);

// {(a+1, b+1) : (a,b,c) in s}; injective on Delta, so size is preserved.
GridSet project_tri_to_grid(const TriSet& s);

}  // namespace skc
