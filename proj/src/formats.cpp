#include "skc/formats.hpp"

#include <charconv>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

namespace skc {

namespace {

using json = nlohmann::json;

struct Token {
    std::string text;
    int line = 0, column = 0;
};

// Splits into whitespace-separated tokens with positions; `#` starts a
// comment running to end of line.
std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    Token cur;
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.text.empty()) out.push_back(std::exchange(cur, {}));
            ++line;
            col = 1;
            in_comment = false;
            continue;
        }
        if (ch == '#') in_comment = true;
        if (!in_comment && !std::isspace(static_cast<unsigned char>(ch))) {
            if (cur.text.empty()) {
                cur.line = line;
                cur.column = col;
            }
            cur.text += ch;
        } else if (!cur.text.empty()) {
            out.push_back(std::exchange(cur, {}));
        }
        ++col;
    }
    if (!cur.text.empty()) out.push_back(cur);
    return out;
}

std::int64_t to_int(const Token& t) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || p != t.text.data() + t.text.size())
        throw ParseError(t.line, t.column, "expected an integer, got '" + t.text + "'");
    return v;
}

std::pair<int, int> offset_to_line_col(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(line, col, "invalid JSON: " + std::string(e.what()));
    }
}

ElemSet elem_set_from_json(const AbelianGroup& g, const json& arr, const char* name) {
    if (!arr.is_array()) throw ParseError(1, 1, std::string(name) + " must be an array");
    std::vector<std::int64_t> idx;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != g.rank())
            throw ParseError(1, 1,
                             std::string(name) + ": element is not a residue vector of rank " +
                                 std::to_string(g.rank()));
        std::vector<std::int64_t> res;
        for (const auto& r : e) {
            if (!r.is_number_integer())
                throw ParseError(1, 1, std::string(name) + ": residue is not an integer");
            res.push_back(r.get<std::int64_t>());
        }
        for (std::size_t i = 0; i < res.size(); ++i)
            if (res[i] < 0 || res[i] >= g.factors()[i])
                throw ParseError(1, 1, std::string(name) + ": residue out of range");
        idx.push_back(g.index(res));
    }
    return ElemSet(std::move(idx));
}

json elem_set_to_json(const AbelianGroup& g, const ElemSet& s) {
    json arr = json::array();
    for (auto i : s.indices()) {
        json e = json::array();
        for (auto r : g.residues(i)) e.push_back(r);
        arr.push_back(std::move(e));
    }
    return arr;
}

AbelianGroup group_from_json(const json& j) {
    if (!j.contains("group") || !j["group"].is_string())
        throw ParseError(1, 1, "missing string field 'group'");
    try {
        return AbelianGroup::parse(j["group"].get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(1, 1, std::string("bad group literal: ") + e.what());
    }
}

}  // namespace

PointSet load_point_set(const std::string& text) {
    auto toks = tokenize(text);
    if (toks.empty()) throw ParseError(1, 1, "empty input, expected 'grid <n>' or 'tri <n>'");
    const std::string& kind = toks[0].text;
    if (kind != "grid" && kind != "tri")
        throw ParseError(toks[0].line, toks[0].column,
                         "expected header 'grid <n>' or 'tri <n>', got '" + kind + "'");
    if (toks.size() < 2) throw ParseError(toks[0].line, toks[0].column, "missing grid size");
    std::int64_t n = to_int(toks[1]);
    if (n < (kind == "grid" ? 1 : 0) || n > 1'000'000)
        throw ParseError(toks[1].line, toks[1].column, "size out of range");
    const std::size_t coords = kind == "grid" ? 2 : 3;
    if ((toks.size() - 2) % coords != 0)
        throw ParseError(toks.back().line, toks.back().column,
                         "point list is not a multiple of " + std::to_string(coords) +
                             " coordinates");
    if (kind == "grid") {
        GridSet s(static_cast<int>(n));
        for (std::size_t i = 2; i + 1 < toks.size(); i += 2) {
            std::int64_t x = to_int(toks[i]), y = to_int(toks[i + 1]);
            try {
                s.insert(static_cast<int>(x), static_cast<int>(y));
            } catch (const std::out_of_range&) {
                throw ParseError(toks[i].line, toks[i].column, "point out of range");
            }
        }
        return s;
    }
    TriSet s(static_cast<int>(n));
    for (std::size_t i = 2; i < toks.size(); i += 3) {
        std::int64_t a = to_int(toks[i]), b = to_int(toks[i + 1]), c = to_int(toks[i + 2]);
        try {
            s.insert(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c));
        } catch (const std::out_of_range&) {
            throw ParseError(toks[i].line, toks[i].column,
                             "point not in the triangular grid (need a+b+c = n, all >= 0)");
        }
    }
    return s;
}

std::string save_point_set(const PointSet& s) {
    std::ostringstream os;
    if (const auto* g = std::get_if<GridSet>(&s)) {
        os << "grid " << g->n() << '\n';
        for (const auto& p : g->points()) os << p.x << ' ' << p.y << '\n';
    } else {
        const auto& t = std::get<TriSet>(s);
        os << "tri " << t.n() << '\n';
        for (const auto& p : t.points()) os << p.a << ' ' << p.b << ' ' << p.c << '\n';
    }
    return os.str();
}

LineTriple load_line_triple(const std::string& text) {
    auto toks = tokenize(text);
    if (toks.empty() || toks[0].text != "line")
        throw ParseError(toks.empty() ? 1 : toks[0].line, toks.empty() ? 1 : toks[0].column,
                         "expected header 'line <n>'");
    if (toks.size() < 2) throw ParseError(toks[0].line, toks[0].column, "missing size");
    std::int64_t n = to_int(toks[1]);
    if (n < 0 || n > 1'000'000)
        throw ParseError(toks[1].line, toks[1].column, "size out of range");
    std::vector<int> sets[3];
    int current = -1;
    for (std::size_t i = 2; i < toks.size(); ++i) {
        const auto& t = toks[i];
        if (t.text == "A")
            current = 0;
        else if (t.text == "B")
            current = 1;
        else if (t.text == "C")
            current = 2;
        else {
            if (current < 0)
                throw ParseError(t.line, t.column, "expected a set label A, B or C");
            std::int64_t v = to_int(t);
            if (v < 0 || v > n) throw ParseError(t.line, t.column, "element out of range");
            sets[current].push_back(static_cast<int>(v));
        }
    }
    try {
        return make_line_triple(static_cast<int>(n), sets[0], sets[1], sets[2]);
    } catch (const std::exception& e) {
        throw ParseError(1, 1, e.what());
    }
}

std::string save_line_triple(const LineTriple& t) {
    std::ostringstream os;
    os << "line " << t.n << '\n';
    const std::vector<int>* sets[3] = {&t.A, &t.B, &t.C};
    const char* names = "ABC";
    for (int i = 0; i < 3; ++i) {
        os << names[i];
        for (int v : *sets[i]) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

StppFamily load_stpp_family(const std::string& text) {
    json j = parse_json(text);
    StppFamily f;
    f.group = group_from_json(j);
    if (!j.contains("triples") || !j["triples"].is_array())
        throw ParseError(1, 1, "missing array field 'triples'");
    for (const auto& t : j["triples"]) {
        if (!t.contains("S") || !t.contains("T") || !t.contains("U"))
            throw ParseError(1, 1, "triple needs fields S, T, U");
        f.triples.push_back({elem_set_from_json(f.group, t["S"], "S"),
                             elem_set_from_json(f.group, t["T"], "T"),
                             elem_set_from_json(f.group, t["U"], "U")});
    }
    return f;
}

std::string save_stpp_family(const StppFamily& f) {
    json j;
    j["group"] = f.group.literal();
    j["triples"] = json::array();
    for (const auto& t : f.triples)
        j["triples"].push_back({{"S", elem_set_to_json(f.group, t.S)},
                                {"T", elem_set_to_json(f.group, t.T)},
                                {"U", elem_set_to_json(f.group, t.U)}});
    return j.dump(2) + "\n";
}

SdppFamily load_sdpp_family(const std::string& text) {
    json j = parse_json(text);
    SdppFamily f;
    f.group = group_from_json(j);
    if (!j.contains("pairs") || !j["pairs"].is_array())
        throw ParseError(1, 1, "missing array field 'pairs'");
    for (const auto& p : j["pairs"]) {
        if (!p.contains("A") || !p.contains("B"))
            throw ParseError(1, 1, "pair needs fields A, B");
        f.pairs.push_back({elem_set_from_json(f.group, p["A"], "A"),
                           elem_set_from_json(f.group, p["B"], "B")});
    }
    return f;
}

std::string save_sdpp_family(const SdppFamily& f) {
    json j;
    j["group"] = f.group.literal();
    j["pairs"] = json::array();
    for (const auto& p : f.pairs)
        j["pairs"].push_back({{"A", elem_set_to_json(f.group, p.A)},
                              {"B", elem_set_to_json(f.group, p.B)}});
    return j.dump(2) + "\n";
}

FileKind sniff_file_kind(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') {
            json j = parse_json(text);
            return j.contains("pairs") ? FileKind::SdppJson : FileKind::StppJson;
        }
        break;
    }
    auto toks = tokenize(text);
    if (!toks.empty()) {
        if (toks[0].text == "grid") return FileKind::Grid;
        if (toks[0].text == "tri") return FileKind::Tri;
        if (toks[0].text == "line") return FileKind::Line;
    }
    throw ParseError(1, 1, "unrecognized file kind");
}

std::string render_text(const PointSet& s) {
    std::ostringstream os;
    if (const auto* g = std::get_if<GridSet>(&s)) {
        for (int y = g->n(); y >= 1; --y) {
            for (int x = 1; x <= g->n(); ++x) os << (g->contains(x, y) ? 'o' : '.');
            os << '\n';
        }
    } else {
        const auto& t = std::get<TriSet>(s);
        for (int a = t.n(); a >= 0; --a) {
            for (int i = 0; i < a; ++i) os << ' ';
            for (int b = 0; b <= t.n() - a; ++b) {
                if (b) os << ' ';
                os << (t.contains(a, b, t.n() - a - b) ? 'o' : '.');
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string render_svg(const PointSet& s) {
    constexpr int unit = 20, margin = 20, radius = 5;
    std::ostringstream os;
    auto circle = [&](int cx, int cy, const char* fill) {
        os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << radius
           << "\" fill=\"" << fill << "\"/>\n";
    };
    if (const auto* g = std::get_if<GridSet>(&s)) {
        int side = 2 * margin + (g->n() - 1) * unit;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\""
           << side << "\">\n";
        for (int x = 1; x <= g->n(); ++x)
            for (int y = 1; y <= g->n(); ++y)
                if (!g->contains(x, y))
                    circle(margin + (x - 1) * unit, margin + (g->n() - y) * unit, "#cccccc");
        for (const auto& p : g->points())
            circle(margin + (p.x - 1) * unit, margin + (g->n() - p.y) * unit, "#e07020");
    } else {
        const auto& t = std::get<TriSet>(s);
        // row height 17 approximates unit * sqrt(3)/2 in integers
        int w = 2 * margin + t.n() * unit, h = 2 * margin + t.n() * 17;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
           << "\">\n";
        auto pos = [&](const Point3& p) {
            return std::pair<int, int>{margin + p.b * unit + p.a * unit / 2,
                                       margin + (t.n() - p.a) * 17};
        };
        const TriSet full = TriSet::full(t.n());
        for (const auto& p : full.points())
            if (!t.contains(p)) {
                auto [cx, cy] = pos(p);
                circle(cx, cy, "#cccccc");
            }
        for (const auto& p : t.points()) {
            auto [cx, cy] = pos(p);
            circle(cx, cy, "#e07020");
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace skc
