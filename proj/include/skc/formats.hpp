#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "skc/constructions.hpp"
#include "skc/grid_sets.hpp"
#include "skc/stpp.hpp"

namespace skc {

// Input that failed to parse; line and column are 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

using PointSet = std::variant<GridSet, TriSet>;

// Text format: header `grid <n>` or `tri <n>`, one point per line, `#`
// starts a comment.  save emits the canonical form (sorted points, no
// comments), so save(load(f)) == f for canonical files.
PointSet load_point_set(const std::string& text);
std::string save_point_set(const PointSet& s);

// Header `line <n>`, then three lines `A <elems>`, `B <elems>`, `C <elems>`.
LineTriple load_line_triple(const std::string& text);
std::string save_line_triple(const LineTriple& t);

// JSON {"group": "Z2xZ3", "triples": [{"S": [[r...]...], "T": ..., "U": ...}]}
// with elements as residue vectors.
StppFamily load_stpp_family(const std::string& text);
std::string save_stpp_family(const StppFamily& f);

// JSON {"group": ..., "pairs": [{"A": ..., "B": ...}]}.
SdppFamily load_sdpp_family(const std::string& text);
std::string save_sdpp_family(const SdppFamily& f);

// Sniffs the payload kind from the header / leading character.
enum class FileKind { Grid, Tri, Line, StppJson, SdppJson };
FileKind sniff_file_kind(const std::string& text);

// Deterministic renderings: grids as dot matrices, triangular sets as
// left-aligned lattices.  Byte-stable for identical inputs.
std::string render_text(const PointSet& s);
std::string render_svg(const PointSet& s);

}  // namespace skc
