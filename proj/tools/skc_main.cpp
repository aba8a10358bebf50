// Command-line entry point: verify / search / construct / stpp / render /
// repro subcommands with JSON run reports.
//
// Exit codes: 0 success or predicate holds; 1 predicate fails or bound not
// achieved; 2 usage or parse error; 3 search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "skc/constructions.hpp"
#include "skc/formats.hpp"
#include "skc/grid_sets.hpp"
#include "skc/groups.hpp"
#include "skc/oracles.hpp"
#include "skc/repro.hpp"
#include "skc/search.hpp"
#include "skc/stpp.hpp"

namespace {

using json = nlohmann::json;  // std::map-backed: keys serialize sorted
using namespace skc;

constexpr const char* kVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

json violation_to_json(const Violation& v) {
    json j;
    j["kind"] = violation_kind_name(v.kind);
    j["points"] = v.witness;
    j["gap"] = v.gap;
    return j;
}

std::string violation_to_text(const Violation& v) {
    std::ostringstream os;
    os << violation_kind_name(v.kind) << " violation, gap " << v.gap << ", points:";
    for (const auto& p : v.witness) {
        os << " (";
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
        os << ")";
    }
    return os.str();
}

// Shared report skeleton; keys are emitted in insertion order, with the
// command echo first.
json base_report(const std::string& command) {
    json j;
    j["command"] = command;
    j["version"] = kVersion;
    return j;
}

void emit(const json& report, bool as_json, const std::string& text_summary) {
    if (as_json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << text_summary << '\n';
}

// ---------------------------------------------------------------- verify --

int cmd_verify(const std::string& file, std::string predicate, bool as_json) {
    std::string text = read_file(file);
    FileKind kind = sniff_file_kind(text);

    Violation v;
    bool holds = false;
    std::string what;

    if (kind == FileKind::Grid || kind == FileKind::Tri) {
        PointSet ps = load_point_set(text);
        if (const auto* g = std::get_if<GridSet>(&ps)) {
            if (predicate.empty()) predicate = "skew-grid";
            if (predicate == "skew-grid")
                holds = is_skew_corner_free_grid(*g, &v);
            else if (predicate == "bi-skew")
                holds = is_bi_skew_corner_free(*g, &v);
            else
                throw CLI::ValidationError("unknown grid predicate: " + predicate);
            what = "grid set, " + std::to_string(g->size()) + " points";
        } else {
            const auto& t = std::get<TriSet>(ps);
            if (predicate.empty()) predicate = "skew-tri";
            if (predicate == "skew-tri")
                holds = is_skew_corner_free_tri(t, &v);
            else if (predicate == "corner-tri")
                holds = is_corner_free_tri(t, &v);
            else
                throw CLI::ValidationError("unknown triangular predicate: " + predicate);
            what = "triangular set, " + std::to_string(t.points().size()) + " points";
        }
    } else if (kind == FileKind::Line) {
        LineTriple t = load_line_triple(text);
        if (predicate.empty()) predicate = "line-trapezoid";
        if (predicate != "line-trapezoid")
            throw CLI::ValidationError("unknown line-triple predicate: " + predicate);
        holds = is_line_trapezoid_free(t, &v);
        what = "line triple, sizes " + std::to_string(t.A.size()) + "/" +
               std::to_string(t.B.size()) + "/" + std::to_string(t.C.size());
    } else if (kind == FileKind::StppJson) {
        StppFamily f = load_stpp_family(text);
        if (predicate.empty()) predicate = "stpp";
        if (predicate != "stpp")
            throw CLI::ValidationError("unknown family predicate: " + predicate);
        Verdict verdict = verify_stpp(f);
        holds = verdict.valid();
        what = "STPP family, " + std::to_string(f.triples.size()) + " triples";
        if (!holds) {
            json report = base_report("verify");
            report["input"] = file;
            report["predicate"] = predicate;
            report["holds"] = false;
            report["counterexample"] = verdict.witness;
            emit(report, as_json, what + ": INVALID — " + verdict.witness);
            return kExitFail;
        }
    } else {
        SdppFamily f = load_sdpp_family(text);
        if (predicate.empty()) predicate = "sdpp";
        if (predicate != "sdpp")
            throw CLI::ValidationError("unknown family predicate: " + predicate);
        Verdict verdict = verify_sdpp(f);
        holds = verdict.valid();
        what = "SDPP family, " + std::to_string(f.pairs.size()) + " pairs";
        if (!holds) {
            json report = base_report("verify");
            report["input"] = file;
            report["predicate"] = predicate;
            report["holds"] = false;
            report["counterexample"] = verdict.witness;
            emit(report, as_json, what + ": INVALID — " + verdict.witness);
            return kExitFail;
        }
    }

    json report = base_report("verify");
    report["input"] = file;
    report["predicate"] = predicate;
    report["holds"] = holds;
    if (!holds) report["violation"] = violation_to_json(v);

    std::string summary = what + ": " + predicate + (holds ? " holds" : " FAILS");
    if (!holds) summary += "\n" + violation_to_text(v);
    emit(report, as_json, summary);
    return holds ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- search --

std::optional<std::string> witness_text(const Witness& w) {
    if (const auto* g = std::get_if<GridSet>(&w)) return save_point_set(PointSet{*g});
    if (const auto* t = std::get_if<TriSet>(&w)) return save_point_set(PointSet{*t});
    if (const auto* l = std::get_if<LineTriple>(&w)) return save_line_triple(*l);
    if (const auto* gt = std::get_if<GroupTriple>(&w)) {
        std::ostringstream os;
        os << "# group triple in " << gt->group.literal() << "\n";
        auto part = [&](const char* name, const ElemSet& s) {
            os << name;
            for (auto e : s.indices()) os << ' ' << e;
            os << '\n';
        };
        part("A", gt->A);
        part("B", gt->B);
        part("C", gt->C);
        return os.str();
    }
    return std::nullopt;
}

int cmd_search(const std::string& objective_str, int n, const std::string& group,
               const std::string& symmetry_str, Budget budget, const std::string& out,
               bool as_json) {
    Objective obj;
    if (objective_str == "max-skew-grid")
        obj = Objective::MaxSkewGrid;
    else if (objective_str == "max-skew-tri")
        obj = Objective::MaxSkewTri;
    else if (objective_str == "max-bi-skew")
        obj = Objective::MaxBiSkew;
    else if (objective_str == "val-plane")
        obj = Objective::ValPlane;
    else if (objective_str == "val-group")
        obj = Objective::ValGroup;
    else
        throw CLI::ValidationError("unknown objective: " + objective_str);

    Symmetry sym = Symmetry::None;
    if (symmetry_str == "s3")
        sym = Symmetry::S3;
    else if (!symmetry_str.empty() && symmetry_str != "none")
        throw CLI::ValidationError("unknown symmetry: " + symmetry_str);
    if (sym == Symmetry::S3 && obj != Objective::MaxSkewTri)
        throw CLI::ValidationError("--symmetry s3 applies only to max-skew-tri");

    SearchResult r;
    switch (obj) {
        case Objective::MaxSkewGrid: r = max_skew_grid_exact(n, budget); break;
        case Objective::MaxSkewTri: r = max_skew_tri_exact(n, sym, budget); break;
        case Objective::MaxBiSkew: r = max_bi_skew_exact(n, budget); break;
        case Objective::ValPlane: r = val_plane_exact(n, budget); break;
        case Objective::ValGroup: {
            if (group.empty())
                throw CLI::ValidationError("val-group requires --group");
            r = val_group_exact(AbelianGroup::parse(group), budget);
            break;
        }
    }

    json report = base_report("search");
    report["objective"] = objective_name(r.objective);
    report["n"] = r.n;
    if (!r.group.empty()) report["group"] = r.group;
    report["symmetry"] = symmetry_name(r.symmetry);
    report["value"] = r.best_value;
    report["status"] = search_status_name(r.status);
    report["nodes"] = r.nodes;
    report["seconds"] = r.seconds;
    report["witness_checked"] = check_search_result(r);
    if (auto wt = witness_text(r.witness)) report["witness"] = *wt;

    if (!out.empty()) {
        if (auto wt = witness_text(r.witness)) write_file(out, *wt);
    }

    std::ostringstream os;
    os << objective_name(r.objective) << " n=" << r.n;
    if (!r.group.empty()) os << " group=" << r.group;
    os << " symmetry=" << symmetry_name(r.symmetry) << ": value " << r.best_value << " ("
       << search_status_name(r.status) << ", " << r.nodes << " nodes, " << r.seconds
       << "s)";
    emit(report, as_json, os.str());
    return r.status == SearchStatus::Optimal ? kExitOk : kExitBudget;
}

// ------------------------------------------------------------- construct --

json inequality_json(const InequalityCheck& c) {
    return json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
}

int cmd_construct(const std::string& name, std::int64_t n, const std::string& strategy,
                  const std::string& out, bool as_json) {
    json report = base_report("construct");
    report["name"] = name;
    report["n"] = n;
    json sizes = json::object(), counts = json::object();
    json inequalities = json::array();
    std::string artifact;
    bool holds = true;
    std::string summary;

    if (name == "petrov") {
        PrimitiveSpec spec;
        if (strategy == "half-interval")
            spec.strategy = PrimitiveStrategy::HalfInterval;
        else if (strategy == "fixed-prime-count")
            spec.strategy = PrimitiveStrategy::FixedPrimeCount;
        else if (!strategy.empty() && strategy != "best-of")
            throw CLI::ValidationError("unknown strategy: " + strategy);
        GridSet s = petrov_construction(n, spec);
        holds = is_skew_corner_free_grid(s);
        sizes["set"] = s.size();
        inequalities.push_back(json{{"name", "skew_corner_free"},
                                    {"lhs", holds ? 1 : 0},
                                    {"rhs", 1},
                                    {"holds", holds}});
        artifact = save_point_set(PointSet{s});
        summary = "petrov n=" + std::to_string(n) + ": " + std::to_string(s.size()) +
                  " points, skew-corner-free " + (holds ? "holds" : "FAILS");
    } else if (name == "behrend") {
        auto s = behrend_3ap_free(n);
        holds = is_3ap_free(s);
        sizes["set"] = s.size();
        inequalities.push_back(json{{"name", "three_ap_free"},
                                    {"lhs", holds ? 1 : 0},
                                    {"rhs", 1},
                                    {"holds", holds}});
        std::ostringstream os;
        for (auto e : s) os << e << '\n';
        artifact = os.str();
        summary = "behrend n=" + std::to_string(n) + ": " + std::to_string(s.size()) +
                  " elements, 3AP-free " + (holds ? "holds" : "FAILS");
    } else if (name == "primitive") {
        PrimitiveSpec spec;
        if (strategy == "half-interval")
            spec.strategy = PrimitiveStrategy::HalfInterval;
        else if (strategy == "fixed-prime-count")
            spec.strategy = PrimitiveStrategy::FixedPrimeCount;
        else if (!strategy.empty() && strategy != "best-of")
            throw CLI::ValidationError("unknown strategy: " + strategy);
        auto s = primitive_set(n, spec);
        holds = is_primitive(s);
        sizes["set"] = s.size();
        inequalities.push_back(json{{"name", "primitive"},
                                    {"lhs", holds ? 1 : 0},
                                    {"rhs", 1},
                                    {"holds", holds}});
        std::ostringstream os;
        for (auto e : s) os << e << '\n';
        artifact = os.str();
        summary = "primitive n=" + std::to_string(n) + ": " + std::to_string(s.size()) +
                  " elements, primitive " + (holds ? "holds" : "FAILS");
    } else if (name == "avgbad") {
        auto [triple, rep] = avgbad_construction(n);
        sizes["A"] = rep.size_a;
        sizes["B"] = rep.size_b;
        sizes["C"] = rep.size_c;
        counts["solutions"] = rep.solution_count;
        counts["second_moment"] = rep.second_moment;
        counts["modulus"] = rep.modulus;
        inequalities.push_back(inequality_json(rep.moment_inequality));
        holds = rep.moment_inequality.holds;
        std::ostringstream os;
        os << "avgbad n=" << n << ": |A|=" << rep.size_a << " |B|=" << rep.size_b
           << " |C|=" << rep.size_c << ", solutions " << rep.solution_count
           << ", second moment " << rep.second_moment << " <= |A||B| "
           << (holds ? "holds" : "FAILS");
        summary = os.str();
    } else {
        throw CLI::ValidationError("unknown construction: " + name +
                                   " (petrov, behrend, primitive, avgbad)");
    }

    report["sizes"] = sizes;
    report["counts"] = counts;
    report["inequalities"] = inequalities;
    if (!out.empty() && !artifact.empty()) write_file(out, artifact);

    if (as_json) {
        emit(report, true, "");
    } else {
        std::cout << summary << '\n';
        if (out.empty() && !artifact.empty()) std::cout << artifact;
    }
    return holds ? kExitOk : kExitFail;
}

// ------------------------------------------------------------------ stpp --

int cmd_stpp(const std::string& action, const std::string& file,
             const std::string& points_file, const std::string& out, bool as_json) {
    std::string text = read_file(file);
    json report = base_report("stpp " + action);
    report["input"] = file;

    if (action == "verify") {
        FileKind kind = sniff_file_kind(text);
        Verdict v;
        std::string what;
        if (kind == FileKind::SdppJson) {
            SdppFamily f = load_sdpp_family(text);
            v = verify_sdpp(f);
            what = "SDPP family (" + std::to_string(f.pairs.size()) + " pairs)";
        } else {
            StppFamily f = load_stpp_family(text);
            v = verify_stpp(f);
            what = "STPP family (" + std::to_string(f.triples.size()) + " triples)";
        }
        report["valid"] = v.valid();
        if (!v.valid()) report["counterexample"] = v.witness;
        emit(report, as_json,
             what + ": " + (v.valid() ? "Valid" : "Invalid — " + v.witness));
        return v.valid() ? kExitOk : kExitFail;
    }

    if (action == "omega") {
        StppFamily f = load_stpp_family(text);
        if (!verify_stpp(f).valid()) {
            report["valid"] = false;
            report["counterexample"] = f.verified.witness;
            emit(report, as_json, "family is Invalid — " + f.verified.witness);
            return kExitFail;
        }
        PackingReport pk = packing_bound_check(f);
        OmegaBound ob = omega_bound(f);
        report["valid"] = true;
        report["packing"] = json{{"st", pk.st},
                                 {"tu", pk.tu},
                                 {"us", pk.us},
                                 {"group_order", pk.group_order},
                                 {"holds", pk.holds},
                                 {"slack", pk.slack()}};
        report["omega"] = json{{"value", ob.value},
                               {"improves", ob.improves},
                               {"residual", ob.residual}};
        std::ostringstream os;
        os << "omega bound " << ob.value << (ob.improves ? "" : " (no improvement over 3)")
           << "; packing max(" << pk.st << "," << pk.tu << "," << pk.us
           << ") <= " << pk.group_order;
        emit(report, as_json, os.str());
        return kExitOk;
    }

    if (action == "lift") {
        SdppFamily f = load_sdpp_family(text);
        if (points_file.empty())
            throw CLI::ValidationError(
                "stpp lift needs --points <tri file> with a corner-free index set");
        PointSet ps = load_point_set(read_file(points_file));
        const auto* t = std::get_if<TriSet>(&ps);
        if (!t) throw CLI::ValidationError("--points must be a triangular point set");
        Verdict v = verify_sdpp(f);
        if (!v.valid()) {
            report["valid"] = false;
            report["counterexample"] = v.witness;
            emit(report, as_json, "SDPP family is Invalid — " + v.witness);
            return kExitFail;
        }
        StppFamily lifted = lift_sdpp_to_stpp(f, *t);
        report["valid"] = lifted.verified.valid();
        report["triples"] = lifted.triples.size();
        report["group"] = lifted.group.literal();
        std::string serialized = save_stpp_family(lifted);
        if (!out.empty())
            write_file(out, serialized);
        else if (!as_json)
            std::cout << serialized;
        emit(report, as_json,
             "lifted to STPP family with " + std::to_string(lifted.triples.size()) +
                 " triples in " + lifted.group.literal() + ": " +
                 (lifted.verified.valid() ? "Valid" : "Invalid"));
        return lifted.verified.valid() ? kExitOk : kExitFail;
    }

    if (action == "witness") {
        StppFamily f = load_stpp_family(text);
        if (!verify_stpp(f).valid()) {
            report["valid"] = false;
            emit(report, as_json, "family is Invalid — " + f.verified.witness);
            return kExitFail;
        }
        GroupTriple w = stpp_to_trapezoid_witness(f);
        std::int64_t count = count_zero_sum_triples(w);
        report["group"] = w.group.literal();
        report["sizes"] = json{{"A", w.A.indices().size()},
                               {"B", w.B.indices().size()},
                               {"C", w.C.indices().size()}};
        report["zero_sum_triples"] = count;
        report["trapezoid_free"] = is_trapezoid_free(w);
        if (!out.empty()) {
            if (auto wt = witness_text(Witness{w})) write_file(out, *wt);
        }
        std::ostringstream os;
        os << "trapezoid-free witness in " << w.group.literal() << ": |A|="
           << w.A.indices().size() << " |B|=" << w.B.indices().size()
           << " |C|=" << w.C.indices().size() << ", " << count << " zero-sum triples";
        emit(report, as_json, os.str());
        return kExitOk;
    }

    throw CLI::ValidationError("unknown stpp action: " + action +
                               " (verify, omega, lift, witness)");
}

// ---------------------------------------------------------------- render --

int cmd_render(const std::string& file, const std::string& format, const std::string& out,
               bool /*as_json*/) {
    PointSet ps = load_point_set(read_file(file));
    std::string rendered;
    if (format == "svg")
        rendered = render_svg(ps);
    else if (format == "text-art" || format == "text")
        rendered = render_text(ps);
    else
        throw CLI::ValidationError("unknown format: " + format + " (svg, text-art)");
    if (!out.empty())
        write_file(out, rendered);
    else
        std::cout << rendered;
    return kExitOk;
}

// ----------------------------------------------------------------- repro --

int cmd_repro(bool as_json) {
    ReproConfig cfg = repro_config_from_env();
    auto results = run_acceptance(cfg);
    json report = base_report("repro");
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        arr.push_back(json{
            {"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        if (!as_json)
            std::cout << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL")
                      << "] " << r.name << "\n    " << r.detail << '\n';
    }
    report["criteria"] = arr;
    report["all_pass"] = all;
    if (as_json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << (all ? "all criteria pass" : "SOME CRITERIA FAIL") << '\n';
    return all ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew corner-free sets, trapezoid-free triples and group-theoretic "
                 "matrix multiplication toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON run report on stdout");
    app.fallthrough();  // accept global flags after the subcommand name too

    // verify
    std::string v_file, v_pred;
    auto* verify = app.add_subcommand("verify", "check a predicate on a file");
    verify->add_option("file", v_file, "point set / line triple / family file")
        ->required();
    verify->add_option("--predicate", v_pred,
                       "skew-grid, bi-skew, skew-tri, corner-tri, line-trapezoid, "
                       "stpp, sdpp (default: inferred from the file kind)");

    // search
    std::string s_obj, s_group, s_sym = "none", s_out;
    int s_n = 0;
    Budget budget;
    if (const char* e = std::getenv("SKC_BUDGET_NODES")) budget.max_nodes = std::atoll(e);
    if (const char* e = std::getenv("SKC_BUDGET_SECS")) budget.max_secs = std::atof(e);
    auto* search = app.add_subcommand("search", "run an exact search");
    search
        ->add_option("objective", s_obj,
                     "max-skew-grid, max-skew-tri, max-bi-skew, val-plane, val-group")
        ->required();
    search->add_option("--n", s_n, "instance size");
    search->add_option("--group", s_group, "group literal for val-group (e.g. Z2xZ3)");
    search->add_option("--symmetry", s_sym, "none or s3 (max-skew-tri only)");
    search->add_option("--budget-nodes", budget.max_nodes, "node budget");
    search->add_option("--budget-secs", budget.max_secs, "time budget in seconds");
    search->add_option("--workers", budget.workers, "worker threads");
    search->add_option("--seed", budget.seed, "random seed");
    search->add_option("--out", s_out, "write the witness to this file");

    // construct
    std::string c_name, c_strategy, c_out;
    std::int64_t c_n = 0;
    auto* construct = app.add_subcommand("construct", "run a named construction");
    construct->add_option("name", c_name, "petrov, behrend, primitive, avgbad")
        ->required();
    construct->add_option("--n", c_n, "instance size")->required();
    construct->add_option("--strategy", c_strategy,
                          "best-of, half-interval, fixed-prime-count");
    construct->add_option("--out", c_out, "write the artifact to this file");

    // stpp
    std::string t_action, t_file, t_points, t_out;
    auto* stpp = app.add_subcommand("stpp", "family operations");
    stpp->add_option("action", t_action, "verify, omega, lift, witness")->required();
    stpp->add_option("file", t_file, "family JSON file")->required();
    stpp->add_option("--points", t_points, "corner-free triangular index set for lift");
    stpp->add_option("--out", t_out, "write the result to this file");

    // render
    std::string r_file, r_format = "svg", r_out;
    auto* render = app.add_subcommand("render", "render a point set");
    render->add_option("file", r_file, "point set file")->required();
    render->add_option("--format", r_format, "svg or text-art");
    render->add_option("--out", r_out, "write the rendering to this file");

    // repro
    app.add_subcommand("repro", "run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitOk;
    }

    try {
        if (verify->parsed()) return cmd_verify(v_file, v_pred, as_json);
        if (search->parsed())
            return cmd_search(s_obj, s_n, s_group, s_sym, budget, s_out, as_json);
        if (construct->parsed())
            return cmd_construct(c_name, c_n, c_strategy, c_out, as_json);
        if (stpp->parsed()) return cmd_stpp(t_action, t_file, t_points, t_out, as_json);
        if (render->parsed()) return cmd_render(r_file, r_format, r_out, as_json);
        return cmd_repro(as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
