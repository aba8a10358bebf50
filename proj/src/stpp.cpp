#include "skc/stpp.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace skc {

namespace {

using Bits = boost::dynamic_bitset<>;

std::string elem_str(const AbelianGroup& g, std::int64_t idx) {
    auto r = g.residues(idx);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ')';
    return os.str();
}

// difference set with one representative pair per difference
std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> diff_reps(
    const AbelianGroup& g, const ElemSet& s, const ElemSet& t) {
    std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> out;
    for (auto a : s.indices())
        for (auto b : t.indices()) out.try_emplace(g.sub(a, b), a, b);
    return out;
}

}  // namespace

bool verify_tpp(const AbelianGroup& g, const ElemSet& S, const ElemSet& T, const ElemSet& U,
                std::string* counterexample) {
    const std::int64_t work = static_cast<std::int64_t>(S.size()) * T.size() * U.size();
    if (work * work <= 10'000) {
        for (auto s : S.indices())
            for (auto s2 : S.indices())
                for (auto t : T.indices())
                    for (auto t2 : T.indices())
                        for (auto u : U.indices())
                            for (auto u2 : U.indices()) {
                                if (s == s2 && t == t2 && u == u2) continue;
                                if (g.add(g.sub(s, s2), g.add(g.sub(t, t2), g.sub(u, u2))) == 0) {
                                    if (counterexample) {
                                        std::ostringstream os;
                                        os << "s=" << elem_str(g, s) << " s'=" << elem_str(g, s2)
                                           << " t=" << elem_str(g, t) << " t'=" << elem_str(g, t2)
                                           << " u=" << elem_str(g, u) << " u'=" << elem_str(g, u2);
                                        *counterexample = os.str();
                                    }
                                    return false;
                                }
                            }
        return true;
    }
    auto ds = diff_reps(g, S, S), dt = diff_reps(g, T, T), du = diff_reps(g, U, U);
    for (const auto& [d1, p1] : ds)
        for (const auto& [d2, p2] : dt) {
            std::int64_t d3 = g.neg(g.add(d1, d2));
            auto it = du.find(d3);
            if (it == du.end()) continue;
            if (d1 == 0 && d2 == 0 && d3 == 0) continue;
            if (counterexample) {
                std::ostringstream os;
                os << "s=" << elem_str(g, p1.first) << " s'=" << elem_str(g, p1.second)
                   << " t=" << elem_str(g, p2.first) << " t'=" << elem_str(g, p2.second)
                   << " u=" << elem_str(g, it->second.first)
                   << " u'=" << elem_str(g, it->second.second);
                *counterexample = os.str();
            }
            return false;
        }
    return true;
}

Verdict verify_stpp(StppFamily& f) {
    const AbelianGroup& g = f.group;
    for (const auto& t : f.triples)
        if (t.S.empty() || t.T.empty() || t.U.empty()) {
            f.verified = {Verdict::Invalid, "family contains an empty set"};
            return f.verified;
        }
    for (std::size_t i = 0; i < f.triples.size(); ++i) {
        std::string ce;
        if (!verify_tpp(g, f.triples[i].S, f.triples[i].T, f.triples[i].U, &ce)) {
            f.verified = {Verdict::Invalid, "TPP fails for triple " + std::to_string(i) + ": " + ce};
            return f.verified;
        }
    }
    const std::size_t k = f.triples.size();
    std::vector<ElemSet> A(k), B(k), C(k);
    std::vector<Bits> inC(k);
    for (std::size_t i = 0; i < k; ++i) {
        A[i] = difference_set(g, f.triples[i].S, f.triples[i].T);
        B[i] = difference_set(g, f.triples[i].T, f.triples[i].U);
        C[i] = difference_set(g, f.triples[i].U, f.triples[i].S);
        inC[i] = Bits(static_cast<std::size_t>(g.order()));
        for (auto c : C[i].indices()) inC[i].set(static_cast<std::size_t>(c));
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) {
                if (i == j && j == l) continue;
                for (auto x : A[i].indices())
                    for (auto y : B[j].indices()) {
                        std::int64_t z = g.neg(g.add(x, y));
                        if (inC[l].test(static_cast<std::size_t>(z))) {
                            std::ostringstream os;
                            os << "cross term vanishes at (i,j,k)=(" << i << ',' << j << ',' << l
                               << "): " << elem_str(g, x) << " + " << elem_str(g, y) << " + "
                               << elem_str(g, z) << " = 0";
                            f.verified = {Verdict::Invalid, os.str()};
                            return f.verified;
                        }
                    }
            }
    f.verified = {Verdict::Valid, ""};
    return f.verified;
}

Verdict verify_sdpp(SdppFamily& f) {
    const AbelianGroup& g = f.group;
    for (const auto& p : f.pairs)
        if (p.A.empty() || p.B.empty()) {
            f.verified = {Verdict::Invalid, "family contains an empty set"};
            return f.verified;
        }
    const std::size_t k = f.pairs.size();
    for (std::size_t i = 0; i < k; ++i) {
        auto da = diff_reps(g, f.pairs[i].A, f.pairs[i].A);
        auto db = diff_reps(g, f.pairs[i].B, f.pairs[i].B);
        for (const auto& [d, pa] : da) {
            if (d == 0) continue;
            auto it = db.find(d);
            if (it != db.end()) {
                std::ostringstream os;
                os << "pair " << i << ": a-a' = b-b' with a=" << elem_str(g, pa.first)
                   << " a'=" << elem_str(g, pa.second) << " b=" << elem_str(g, it->second.first)
                   << " b'=" << elem_str(g, it->second.second);
                f.verified = {Verdict::Invalid, os.str()};
                return f.verified;
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (i == l) continue;
            for (std::size_t j = 0; j < k; ++j) {
                auto da = diff_reps(g, f.pairs[i].A, f.pairs[j].A);
                auto db = diff_reps(g, f.pairs[l].B, f.pairs[j].B);
                for (const auto& [d, pa] : da) {
                    auto it = db.find(d);
                    if (it != db.end()) {
                        std::ostringstream os;
                        os << "a_i - a_j' + b_j - b_k' = 0 with (i,j,k)=(" << i << ',' << j << ','
                           << l << "), a_i=" << elem_str(g, pa.first)
                           << " a_j'=" << elem_str(g, pa.second)
                           << " b_j=" << elem_str(g, it->second.second)
                           << " b_k'=" << elem_str(g, it->second.first);
                        f.verified = {Verdict::Invalid, os.str()};
                        return f.verified;
                    }
                }
            }
        }
    f.verified = {Verdict::Valid, ""};
    return f.verified;
}

PackingReport packing_bound_check(const StppFamily& f) {
    if (!f.verified.valid())
        throw std::invalid_argument("packing_bound_check: family must be verified Valid");
    PackingReport rep;
    rep.group_order = f.group.order();
    for (const auto& t : f.triples) {
        rep.st += static_cast<std::int64_t>(t.S.size()) * t.T.size();
        rep.tu += static_cast<std::int64_t>(t.T.size()) * t.U.size();
        rep.us += static_cast<std::int64_t>(t.U.size()) * t.S.size();
    }
    rep.holds = rep.st <= rep.group_order && rep.tu <= rep.group_order &&
                rep.us <= rep.group_order;
    if (!rep.holds)
        throw std::logic_error("packing bound violated by a Valid family (verifier bug)");
    return rep;
}

OmegaBound omega_bound(const StppFamily& f) {
    if (!f.verified.valid())
        throw std::invalid_argument("omega_bound: family must be verified Valid");
    std::vector<double> products;
    bool nontrivial = false;
    for (const auto& t : f.triples) {
        double p = static_cast<double>(t.S.size()) * t.T.size() * t.U.size();
        products.push_back(p);
        if (p > 1.0) nontrivial = true;
    }
    const double order = static_cast<double>(f.group.order());
    auto lhs = [&](double w) {
        double acc = 0;
        for (double p : products) acc += std::pow(p, w / 3.0);
        return acc;
    };
    if (!nontrivial) {
        // constant left side; by the packing bound it never exceeds |G|
        return OmegaBound{3.0, false, std::abs(lhs(3.0) - order)};
    }
    if (lhs(3.0) <= order) return OmegaBound{3.0, false, std::abs(lhs(3.0) - order)};
    double lo = 2.0, hi = 3.0;
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        if (lhs(mid) <= order)
            lo = mid;
        else
            hi = mid;
    }
    double w = 0.5 * (lo + hi);
    return OmegaBound{w, true, std::abs(lhs(w) - order)};
}

double naive_omega_from_packing(std::int64_t group_order, std::int64_t k, std::int64_t n) {
    if (k <= 0 || n <= 1)
        throw std::invalid_argument("naive_omega_from_packing: need k >= 1 and n >= 2");
    return std::log(static_cast<double>(group_order) / static_cast<double>(k)) /
           std::log(static_cast<double>(n));
}

StppFamily lift_sdpp_to_stpp(const SdppFamily& f, const TriSet& s) {
    if (!f.verified.valid())
        throw std::invalid_argument("lift_sdpp_to_stpp: SDPP family must be verified Valid");
    if (!is_corner_free_tri(s))
        throw std::invalid_argument("lift_sdpp_to_stpp: index set is not corner-free");
    if (f.pairs.size() != static_cast<std::size_t>(s.n()) + 1)
        throw std::invalid_argument("lift_sdpp_to_stpp: index range mismatch");
    const AbelianGroup& g = f.group;
    const std::int64_t q = g.order();
    AbelianGroup g3 = AbelianGroup::product(AbelianGroup::product(g, g), g);
    auto pack = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
        return x + q * (y + q * z);
    };
    StppFamily out;
    out.group = g3;
    for (const auto& v : s.points()) {
        StppTriple tr;
        std::vector<std::int64_t> sv, tv, uv;
        for (auto a : f.pairs[v.a].A.indices())
            for (auto b : f.pairs[v.c].B.indices()) sv.push_back(pack(a, 0, b));
        for (auto b : f.pairs[v.a].B.indices())
            for (auto a : f.pairs[v.b].A.indices()) tv.push_back(pack(b, a, 0));
        for (auto b : f.pairs[v.b].B.indices())
            for (auto a : f.pairs[v.c].A.indices()) uv.push_back(pack(0, b, a));
        tr.S = ElemSet(std::move(sv));
        tr.T = ElemSet(std::move(tv));
        tr.U = ElemSet(std::move(uv));
        out.triples.push_back(std::move(tr));
    }
    verify_stpp(out);
    return out;
}

GroupTriple stpp_to_trapezoid_witness(const StppFamily& f) {
    if (!f.verified.valid())
        throw std::invalid_argument("stpp_to_trapezoid_witness: family must be verified Valid");
    const AbelianGroup& g = f.group;
    ElemSet A, B, C;
    for (const auto& t : f.triples) {
        const ElemSet st = difference_set(g, t.S, t.T);
        const ElemSet tu = difference_set(g, t.T, t.U);
        const ElemSet us = difference_set(g, t.U, t.S);
        for (auto d : st.indices()) A.insert(d);
        for (auto d : tu.indices()) B.insert(d);
        for (auto d : us.indices()) C.insert(d);
    }
    GroupTriple out{g, std::move(A), std::move(B), std::move(C)};
    if (!is_trapezoid_free(out))
        throw std::logic_error("stpp witness is not trapezoid-free (verifier bug)");
    if (count_zero_sum_triples(out) != stpp_size_product_sum(f))
        throw std::logic_error("stpp witness count mismatch (verifier bug)");
    return out;
}

StppFamily embed_stpp(const StppFamily& f) {
    CyclicEmbedding phi(f.group);
    StppFamily out;
    out.group = phi.target();
    for (const auto& t : f.triples)
        out.triples.push_back({phi.map_set(t.S), phi.map_set(t.T), phi.map_set(t.U)});
    verify_stpp(out);
    return out;
}

std::int64_t stpp_size_product_sum(const StppFamily& f) {
    std::int64_t acc = 0;
    for (const auto& t : f.triples)
        acc += static_cast<std::int64_t>(t.S.size()) * t.T.size() * t.U.size();
    return acc;
}

}  // namespace skc
