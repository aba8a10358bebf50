#include <string>
#include <variant>

#include "doctest.h"
#include "skc/formats.hpp"
#include "skc/search.hpp"

using namespace skc;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("point set files round-trip") {
    std::string grid = "grid 4\n1 1\n2 3\n4 4\n";
    PointSet g = load_point_set(grid);
    CHECK(save_point_set(g) == grid);
    CHECK(std::get<GridSet>(g).contains(2, 3));

    std::string tri = "tri 3\n0 0 3\n1 1 1\n3 0 0\n";
    PointSet t = load_point_set(tri);
    CHECK(save_point_set(t) == tri);
    CHECK(std::get<TriSet>(t).contains(1, 1, 1));

    // comments and unsorted input load fine; save canonicalizes
    PointSet messy = load_point_set("# witness\ngrid 4\n4 4\n1 1\n2 3 # last\n");
    CHECK(save_point_set(messy) == grid);
}

TEST_CASE("parse errors carry line and column") {
    CHECK_THROWS_AS(load_point_set(""), ParseError);
    CHECK_THROWS_AS(load_point_set("grib 3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(load_point_set("grid 3\n1\n"), ParseError);

    try {
        load_point_set("grid 3\n1 1\n9 1\n");
        FAIL("expected out-of-range point to throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column >= 1);
    }
    try {
        load_point_set("tri 3\n1 1 2\n");  // sum != 3
        FAIL("expected sum mismatch to throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(load_stpp_family("{not json"), ParseError);
    CHECK_THROWS_AS(load_stpp_family("{\"group\": \"Z5\"}"), ParseError);
}

TEST_CASE("line triple files round-trip") {
    std::string text = "line 5\nA 0 2\nB 1\nC 0 1 4\n";
    LineTriple t = load_line_triple(text);
    CHECK(t.n == 5);
    CHECK(t.A == std::vector<int>{0, 2});
    CHECK(save_line_triple(t) == text);
    CHECK_THROWS_AS(load_line_triple("line 5\nA 9\nB 0\nC 0\n"), ParseError);
}

TEST_CASE("family files round-trip") {
    std::string stpp_text = save_stpp_family(
        {AbelianGroup::parse("Z2xZ3"),
         {{ElemSet({0, 3}), ElemSet({1}), ElemSet({2, 4})}},
         {}});
    StppFamily f = load_stpp_family(stpp_text);
    CHECK(f.group == AbelianGroup::parse("Z2xZ3"));
    REQUIRE(f.triples.size() == 1);
    CHECK(f.triples[0].S == ElemSet({0, 3}));
    CHECK(save_stpp_family(f) == stpp_text);

    std::string sdpp_text =
        save_sdpp_family({AbelianGroup::cyclic(5), {{ElemSet({0, 1}), ElemSet({0, 2})}}, {}});
    SdppFamily sd = load_sdpp_family(sdpp_text);
    CHECK(sd.pairs[0].B == ElemSet({0, 2}));
    CHECK(save_sdpp_family(sd) == sdpp_text);
}

TEST_CASE("file kind sniffing") {
    CHECK(sniff_file_kind("grid 3\n") == FileKind::Grid);
    CHECK(sniff_file_kind("# c\ntri 3\n") == FileKind::Tri);
    CHECK(sniff_file_kind("line 3\nA\nB\nC\n") == FileKind::Line);
    CHECK(sniff_file_kind("{\"group\": \"Z5\", \"triples\": []}") == FileKind::StppJson);
    CHECK(sniff_file_kind("{\"group\": \"Z5\", \"pairs\": []}") == FileKind::SdppJson);
}

TEST_CASE("rendering is deterministic and marks every point") {
    GridSet g(3);
    g.insert(2, 2);
    PointSet ps{g};
    CHECK(render_text(ps) == render_text(ps));
    CHECK(render_svg(ps) == render_svg(ps));
    CHECK(count_occurrences(render_text(ps), "o") == 1);

    TriSet t(2);
    t.insert(1, 0, 1);
    PointSet ts{t};
    CHECK(count_occurrences(render_text(ts), "o") == 1);

    // render(load(save(x))) == render(x)
    PointSet reloaded = load_point_set(save_point_set(ps));
    CHECK(render_text(reloaded) == render_text(ps));
    CHECK(render_svg(reloaded) == render_svg(ps));
}

TEST_CASE("the optimum 10x10 witness renders with 24 markers") {
    SearchResult r = max_skew_grid_exact(10);
    REQUIRE(r.status == SearchStatus::Optimal);
    REQUIRE(r.best_value == 24);
    const GridSet& w = std::get<GridSet>(r.witness);
    PointSet ps{w};
    CHECK(count_occurrences(render_text(ps), "o") == 24);
    std::string svg = render_svg(ps);
    CHECK(count_occurrences(svg, "<svg") == 1);
    // one filled marker per point on top of the background lattice
    CHECK(count_occurrences(svg, "#e07020") == 24);
}
