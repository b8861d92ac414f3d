#include "spflag/verify.hpp"

#include "spflag/groebner.hpp"
#include "spflag/linalg.hpp"

#include <chrono>
#include <set>
#include <sstream>

namespace spflag {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

namespace {

std::string weight_str(const DominantWeight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.m.size(); ++i) s += (i ? "," : "") + std::to_string(w.m[i]);
    return s;
}

// Coefficient rows of every monomial multiple of gens landing in multidegree lambda.
RMatrix degree_part(const PlueckerRing& R, const std::vector<SparsePoly>& gens, const DominantWeight& lambda) {
    auto basis = monomials_of_degree(R, lambda);
    std::map<Exponent, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    RMatrix rows;
    for (const auto& g : gens) {
        auto mu = multidegree(R, g.terms().begin()->first);
        DominantWeight rest{lambda.m};
        bool fits = true;
        for (std::size_t k = 0; k < rest.m.size(); ++k)
            if ((rest.m[k] -= mu.m[k]) < 0) fits = false;
        if (!fits) continue;
        for (const auto& m : monomials_of_degree(R, rest)) {
            RVec row(basis.size(), 0);
            const SparsePoly h = g.mul_monomial(m, 1);
            for (const auto& [e, c] : h.terms()) row[pos.at(e)] = c;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// Pluecker index from signed letters.
PlueckerIndex idx(int n, std::initializer_list<int> letters) {
    std::vector<int> raw;
    for (int l : letters) raw.push_back(from_signed(n, l));
    auto s = normalize(raw);
    return s.index;
}

// Reduce v modulo the row space described by an echelon form; primitive afterwards.
RVec reduce_mod(const Rref& E, RVec v) {
    for (std::size_t r = 0; r < E.rows.size(); ++r) {
        Rational f = v[E.pivots[r]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * E.rows[r][c];
    }
    make_primitive(v);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

namespace reference {

DegreePoint example_point() {
    const int n = 2;
    DegreePoint d(num_positive_roots(n), 0);
    d[root_index(n, {1, 1, false})] = 3;
    d[root_index(n, {2, 2, false})] = 1;
    d[root_index(n, {1, 2, false})] = 2;
    d[root_index(n, {1, 1, true})] = 1;
    return d;
}

std::vector<SparsePoly> example_generators(const PlueckerRing& R) {
    const char* text[] = {
        "X[1,2]*X[-2] + X[2,-2]*X[1] - X[1,-2]*X[2]",
        "X[1,-2]*X[-1] + X[-2,-1]*X[1] - X[1,-1]*X[-2]",
        "X[2,-2]*X[-1] + X[-2,-1]*X[2] - X[2,-1]*X[-2]",
        "X[1,2]*X[-1] + X[2,-1]*X[1] - X[1,-1]*X[2]",
        "X[1,2]*X[-2,-1] - X[1,-2]*X[2,-1] + X[1,-1]*X[2,-2]",
        "X[1,-1] + X[2,-2]",
    };
    std::vector<SparsePoly> out;
    for (const char* t : text) out.push_back(parse_poly(t, R.universe(), R.names()));
    return out;
}

namespace {
std::vector<std::pair<PlueckerIndex, SparsePoly>> table(const Chart& chart,
                                                        std::initializer_list<std::pair<std::initializer_list<int>, const char*>> rows) {
    std::vector<std::pair<PlueckerIndex, SparsePoly>> out;
    for (const auto& [J, text] : rows)
        out.emplace_back(idx(chart.n(), J), parse_poly(text, chart.universe(), chart.names()));
    return out;
}
}  // namespace

std::vector<std::pair<PlueckerIndex, SparsePoly>> chart_table(const Chart& chart) {
    return table(chart, {
                            {{1}, "z1"},
                            {{2}, "t3*z1"},
                            {{-2}, "t2*z1"},
                            {{-1}, "t1*z1 + t2*t3*z1"},
                            {{1, 2}, "z2"},
                            {{1, -2}, "t4*z2"},
                            {{1, -1}, "t2*z2 - t3*t4*z2"},
                            {{2, -2}, "t3*t4*z2 - t2*z2"},
                            {{2, -1}, "-t1*z2 - t3^2*t4*z2"},
                            {{-2, -1}, "t2^2*z2 - t1*t4*z2 - 2*t2*t3*t4*z2"},
                        });
}

std::vector<std::pair<PlueckerIndex, SparsePoly>> degenerate_chart_table(const Chart& chart) {
    return table(chart, {
                            {{1}, "z1"},
                            {{2}, "t3*z1"},
                            {{-2}, "t2*z1"},
                            {{-1}, "t1*z1"},
                            {{1, 2}, "z2"},
                            {{1, -2}, "t4*z2"},
                            {{1, -1}, "t2*z2"},
                            {{2, -2}, "-t2*z2"},
                            {{2, -1}, "-t1*z2"},
                            {{-2, -1}, "-t1*t4*z2"},
                        });
}

std::vector<SparsePoly> degenerate_relations(const PlueckerRing& R) {
    const char* text[] = {
        "X[1,2]*X[-2] + X[2,-2]*X[1]",
        "X[1,-2]*X[-1] + X[-2,-1]*X[1]",
        "X[2,-2]*X[-1] - X[2,-1]*X[-2]",
        "X[1,2]*X[-1] + X[2,-1]*X[1]",
        "X[1,2]*X[-2,-1] - X[1,-2]*X[2,-1]",
        "X[1,-1] + X[2,-2]",
    };
    std::vector<SparsePoly> out;
    for (const char* t : text) out.push_back(parse_poly(t, R.universe(), R.names()));
    return out;
}

ConeH c4_example() {
    PlueckerRing R(2);
    const std::size_t m = R.indices().size();
    ConeH c(m);
    auto row = [&](std::initializer_list<std::pair<int, PlueckerIndex>> terms) {
        RVec v(m, 0);
        for (const auto& [a, J] : terms) v[R.var(J)] += a;
        return v;
    };
    c.add_eq(row({{1, idx(2, {1})}}));
    c.add_eq(row({{1, idx(2, {1, 2})}}));
    c.add_eq(row({{1, idx(2, {-2})}, {-1, idx(2, {1, -1})}}));
    c.add_eq(row({{1, idx(2, {1, -1})}, {-1, idx(2, {2, -2})}}));
    c.add_eq(row({{1, idx(2, {-1})}, {-1, idx(2, {2, -1})}}));
    c.add_eq(row({{1, idx(2, {-2, -1})}, {-1, idx(2, {-1})}, {-1, idx(2, {1, -2})}}));
    c.add_geq(row({{1, idx(2, {2})}, {1, idx(2, {1, -2})}, {-1, idx(2, {-2})}}), "s2 + s1,-2 >= s-2");
    c.add_geq(row({{1, idx(2, {2})}, {1, idx(2, {-2})}, {-1, idx(2, {-1})}}), "s2 + s-2 >= s-1");
    c.add_geq(row({{2, idx(2, {-2})}, {-1, idx(2, {-1})}, {-1, idx(2, {1, -2})}}), "2 s-2 >= s-1 + s1,-2");
    return c;
}

}  // namespace reference

SparsePoly three_term(const PlueckerRing& R, const std::vector<int>& S, int a, int b, int c, int d) {
    auto X = [&](int x, int y) {
        auto raw = S;
        raw.push_back(x);
        raw.push_back(y);
        return R.X(raw);
    };
    return X(a, b) * X(c, d) - X(a, c) * X(b, d) + X(a, d) * X(b, c);
}

SparsePoly incidence(const PlueckerRing& R, const std::vector<int>& S, int a, int b, int c) {
    auto X = [&](std::initializer_list<int> extra) {
        auto raw = S;
        raw.insert(raw.end(), extra);
        return R.X(raw);
    };
    return X({a}) * X({b, c}) - X({b}) * X({a, c}) + X({c}) * X({a, b});
}

SparsePoly designated_relation(const PlueckerRing& R, const std::string& label) {
    const int n = R.n();
    if (label.size() < 2) throw UsageError("bad facet label " + label);
    std::vector<int> ix;
    for (const auto& p : split(label.substr(1), ',')) ix.push_back(std::stoi(p));
    const int i = ix.at(0);
    std::vector<int> S;
    for (int a = 1; a < i; ++a) S.push_back(a);
    switch (label[0]) {
        case 'A': return incidence(R, S, i, i + 1, i + 2);
        case 'B': return three_term(R, S, i, i + 1, ix.at(1) + 1, ix.at(1) + 2);
        case 'C': return three_term(R, S, i, i + 1, bar(n, ix.at(1) + 1), bar(n, ix.at(1)));
        case 'D': return three_term(R, S, i, i + 1, bar(n, i + 1), bar(n, i));
        default: throw UsageError("bad facet label " + label);
    }
}

namespace checks {

CheckResult cone_geometry(int n) {
    CheckResult res;
    const std::size_t dim = num_positive_roots(n);
    ConeH K = k_cone_h(n);
    const std::size_t facets = K.count(Relation::Geq);
    RMatrix F = K.matrix(Relation::Geq);
    res.witness["facets"] = facets;
    if (K.count(Relation::Eq) != 0) res.fail("equality rows present");
    if (facets != static_cast<std::size_t>(n * (n - 1))) res.fail("facet count is not n(n-1)");

    auto p = strict_point(K);
    if (!p || !K.contains_strictly(*p)) res.fail("no strict interior point");
    else res.witness["interior_point"] = degree_json(n, *p);

    const std::size_t lin = dim - rank(F, dim);
    res.witness["lineality_dim"] = lin;
    if (lin != static_cast<std::size_t>(n)) res.fail("lineality dimension is not n");
    RMatrix L = lineality_basis(n);
    if (rank(L, dim) != static_cast<std::size_t>(n)) res.fail("lineality basis not independent");
    for (const auto& l : L)
        for (const auto& r : F)
            if (dot(r, l) != 0) res.fail("lineality vector not tight");

    Json drops = Json::array();
    for (std::size_t k = 0; k < K.rows().size(); ++k) {
        ConeH relaxed(dim);
        for (std::size_t o = 0; o < K.rows().size(); ++o) {
            ConeRow r = K.rows()[o];
            if (o == k)
                for (auto& x : r.coeffs) x = -x;
            relaxed.add(r);
        }
        auto w = strict_point(relaxed);
        if (!w) {
            res.fail("row " + K.rows()[k].label + " is redundant");
            continue;
        }
        drops.push_back({{"dropped", K.rows()[k].label}, {"witness", degree_json(n, *w)}});
    }
    res.witness["irredundancy"] = drops;
    // Simplicial: facet normals independent and as many as dim K - dim L.
    if (rank(F, dim) != facets || facets != dim - lin) res.fail("not simplicial");
    res.witness["simplicial"] = rank(F, dim) == facets && facets == dim - lin;
    return res;
}

CheckResult derived_inequalities(int n, Rng& rng, int samples) {
    CheckResult res;
    ConeH D = spflag::derived_inequalities(n);
    std::set<char> families;
    int certified = 0;
    // G with k = j collapses to 0 >= 0.
    std::vector<std::string> vacuous;
    for (const auto& r : D.rows()) {
        families.insert(r.label[0]);
        if (std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& x) { return x == 0; }))
            vacuous.push_back(r.label);
        if (facet_certificate(n, r.coeffs)) ++certified;
        else res.fail("no facet certificate for " + r.label);
    }
    int interior = 0, boundary = 0;
    for (int s = 0; s < samples; ++s) {
        bool on_boundary = s % 4 == 3;
        DegreePoint d = sample_k(n, rng, on_boundary);
        auto m = membership(n, d);
        if (m.kind == Membership::Outside) {
            res.fail("sampler produced an outside point");
            continue;
        }
        bool strict = m.kind == Membership::Interior;
        (strict ? interior : boundary)++;
        for (const auto& r : D.rows()) {
            int sg = sgn(r.eval(d));
            bool identity = std::find(vacuous.begin(), vacuous.end(), r.label) != vacuous.end();
            if (sg < 0 || (strict && sg == 0 && !identity)) {
                res.fail(r.label + (sg < 0 ? " violated" : " not strict at an interior point"));
                res.witness["counterexample"] = degree_json(n, d);
                return res;
            }
        }
    }
    if (interior > 0 && !vacuous.empty()) {
        std::string names;
        for (const auto& l : vacuous) names += (names.empty() ? "" : " ") + l;
        res.fail("not strict at any interior point (row is 0 >= 0): " + names);
    }
    res.witness["rows"] = D.rows().size();
    res.witness["certified"] = certified;
    res.witness["identity_rows"] = vacuous;
    res.witness["families"] = std::string(families.begin(), families.end());
    res.witness["interior_samples"] = interior;
    res.witness["boundary_samples"] = boundary;
    return res;
}

CheckResult example_generators() {
    CheckResult res;
    PlueckerRing R(2);
    auto gens = generators(R).all();
    Json found = Json::array();
    for (const auto& f : reference::example_generators(R)) {
        bool hit = std::any_of(gens.begin(), gens.end(), [&](const SparsePoly& g) { return g == f || g == -f; });
        found.push_back({{"polynomial", R.str(f)}, {"found", hit}});
        if (!hit) res.fail("missing " + R.str(f));
    }
    res.witness["generators"] = gens.size();
    res.witness["reference"] = found;
    Json spans = Json::array();
    for (const auto& lam : weights_up_to_height(2, 3)) {
        if (lam.height() < 2) continue;
        const std::size_t cols = monomials_of_degree(R, lam).size();
        auto a = degree_part(R, gens, lam), b = degree_part(R, reference::example_generators(R), lam);
        bool same = same_row_space(a, b, cols);
        if (!same) res.fail("spans differ in multidegree " + weight_str(lam));
        spans.push_back({{"lambda", weight_str(lam)}, {"dim", rank(a, cols)}, {"equal", same}});
    }
    res.witness["span_by_multidegree"] = spans;
    return res;
}

CheckResult chart_tables() {
    CheckResult res;
    GoodSequence listed{{1, 1, true}, {1, 2, false}, {1, 1, false}, {2, 2, false}};
    if (!is_good_sequence(2, listed)) res.fail("the example enumeration is not a good sequence");
    Chart chart(2, listed);
    Json rows = Json::array();
    for (const auto& [J, f] : reference::chart_table(chart)) {
        bool ok = chart.p(J) == f;
        if (!ok) res.fail("p_J differs at " + index_key(2, J));
        rows.push_back({{"J", index_key(2, J)}, {"p", chart.str(chart.p(J))}, {"match", ok}});
    }
    res.witness["p"] = rows;
    DegreePoint d = reference::example_point();
    Json drows = Json::array();
    const auto& R = chart.ring();
    for (const auto& [J, f] : reference::degenerate_chart_table(chart)) {
        SparsePoly img = chart.phi_d(SparsePoly::variable(R.universe(), R.var(J)), d);
        bool ok = img == f;
        if (!ok) res.fail("phi^d differs at " + index_key(2, J));
        drows.push_back({{"J", index_key(2, J)}, {"image", chart.str(img)}, {"match", ok}});
    }
    res.witness["phi_d"] = drows;
    return res;
}

CheckResult kernel(int n) {
    CheckResult res;
    Chart chart(n);
    const auto& R = chart.ring();
    auto g = generators(R);
    int checked = 0;
    for (const auto& f : g.all()) {
        ++checked;
        if (!chart.phi(f).is_zero()) res.fail("phi does not kill " + R.str(f));
    }
    res.witness["quadratic"] = g.quadratic.size();
    res.witness["linear"] = g.linear.size();
    res.witness["checked"] = checked;
    if (n == 2) {
        DegreePoint d = reference::example_point();
        for (const auto& f : reference::example_generators(R))
            if (!chart.phi(f).is_zero()) res.fail("phi does not kill listed generator " + R.str(f));
        for (const auto& f : reference::degenerate_relations(R))
            if (!chart.phi_d(f, d).is_zero()) res.fail("phi^d does not kill " + R.str(f));
        res.witness["degenerate_relations"] = 6;
    }
    return res;
}

CheckResult counting(int n, int max_height) {
    CheckResult res;
    Json rows = Json::array();
    for (const auto& lam : weights_up_to_height(n, max_height)) {
        std::size_t pts = lattice_points(lam).size();
        std::size_t tabs = enumerate_tableaux(lam).size();
        Integer w = weyl_dim(lam);
        bool ok = Integer(pts) == w && Integer(tabs) == w;
        if (!ok) res.fail("count mismatch at lambda=" + weight_str(lam));
        rows.push_back({{"lambda", weight_str(lam)}, {"points", pts}, {"tableaux", tabs}, {"weyl", w.get_str()}});
    }
    res.witness["weights"] = rows;
    return res;
}

CheckResult minkowski(int n, int max_height) {
    CheckResult res;
    auto ws = weights_up_to_height(n, max_height);
    int pairs = 0;
    for (const auto& a : ws)
        for (const auto& b : ws) {
            if (a.height() + b.height() > max_height) continue;
            ++pairs;
            auto r = minkowski_check(a, b);
            if (!r.equal) res.fail("S(" + weight_str(a) + ")+S(" + weight_str(b) + ") differs");
        }
    res.witness["pairs"] = pairs;
    return res;
}

CheckResult minimization(int n, int max_k, Rng& rng, int interior, int boundary) {
    CheckResult res;
    std::vector<DegreePoint> inner, outer;
    while (static_cast<int>(inner.size()) < interior) {
        auto d = sample_k(n, rng, false);
        if (membership(n, d).kind == Membership::Interior) inner.push_back(d);
    }
    while (static_cast<int>(outer.size()) < boundary) {
        auto d = sample_k(n, rng, true);
        if (membership(n, d).kind == Membership::Boundary) outer.push_back(d);
    }
    auto seq = default_good_sequence(n);
    int pairs = 0, empty = 0, unmatched = 0;
    for (const auto& I : pluecker_indices(n)) {
        if (static_cast<int>(I.size()) > max_k) continue;
        for (const auto& J : pluecker_indices(n)) {
            if (J.size() != I.size()) continue;
            auto M = m_set(n, seq, I, J);
            if (M.empty()) {
                ++empty;
                continue;
            }
            if (!s_IJ(n, I, J)) {
                ++unmatched;
                continue;
            }
            ++pairs;
            for (const auto& d : inner) {
                auto r = argmin_check(n, M, I, J, d);
                if (!r.member || !r.unique) {
                    res.fail("no unique minimum at s_IJ for I=" + index_key(n, I) + " J=" + index_key(n, J));
                    res.witness["counterexample"] = degree_json(n, d);
                    return res;
                }
            }
            for (const auto& d : outer) {
                auto r = argmin_check(n, M, I, J, d);
                if (!r.member || !r.attains) {
                    res.fail("s_IJ not minimal on the boundary for I=" + index_key(n, I) + " J=" + index_key(n, J));
                    res.witness["counterexample"] = degree_json(n, d);
                    return res;
                }
            }
        }
    }
    res.witness["pairs_checked"] = pairs;
    res.witness["pairs_with_empty_M"] = empty;
    res.witness["pairs_without_matching"] = unmatched;
    res.witness["interior_points"] = inner.size();
    res.witness["boundary_points"] = outer.size();
    return res;
}

CheckResult groebner(Rng& rng, int extra_points) {
    CheckResult res;
    const int n = 2;
    Chart chart(n);
    const auto& R = chart.ring();
    auto gens = generators(R).all();
    std::vector<DegreePoint> pts{reference::example_point()};
    while (static_cast<int>(pts.size()) < extra_points + 1) {
        auto d = sample_k(n, rng, false);
        if (membership(n, d).kind == Membership::Interior) pts.push_back(d);
    }
    auto heights = weights_up_to_height(n, 3);
    Json per = Json::array();
    for (std::size_t p = 0; p < pts.size(); ++p) {
        const auto& d = pts[p];
        TropicalPoint v = tropical_point(n, d);
        auto gb = buchberger(gens, MonomialOrder(v));
        auto ins = initial_ideal_generators(gb);
        // phi^d sends every variable to a single nonzero term, so its kernel has no monomials.
        for (const auto& J : R.indices())
            if (chart.phi_d(SparsePoly::variable(R.universe(), R.var(J)), d).size() != 1)
                res.fail("phi^d of a variable is not a monomial");
        bool linear_seen = false;
        for (const auto& f : ins) {
            if (f.size() > 2) res.fail("initial generator with more than two terms: " + R.str(f));
            if (f.size() < 2) res.fail("monomial in the initial ideal: " + R.str(f));
            if (!chart.phi_d(f, d).is_zero()) res.fail("phi^d does not kill " + R.str(f));
            if (total_degree(f.terms().begin()->first) == 1) linear_seen = true;
        }
        if (!linear_seen) res.fail("linear relation missing from the initial ideal");
        Json hil = Json::array();
        for (const auto& lam : heights) {
            Integer h = hilbert_count(R, gb, lam);
            if (h != weyl_dim(lam)) res.fail("Hilbert count differs at lambda=" + weight_str(lam));
            hil.push_back({{"lambda", weight_str(lam)}, {"count", h.get_str()}});
        }
        Json entry = {{"d", degree_json(n, d)}, {"v", tropical_json(n, v)}, {"basis", gb.polys.size()}};
        Json gs = Json::array();
        for (const auto& f : ins) gs.push_back(R.str(f));
        entry["initial"] = gs;
        entry["hilbert"] = hil;
        if (p == 0) {
            auto listed = reference::degenerate_relations(R);
            auto ex = reference::example_generators(R);
            for (std::size_t i = 0; i < ex.size(); ++i)
                if (!equal_up_to_scalar(initial_form(ex[i], v), listed[i]))
                    res.fail("initial form of a listed generator differs from the degenerate relation");
            auto in_gb = buchberger(ins, MonomialOrder(v));
            auto listed_gb = buchberger(listed, MonomialOrder(v));
            for (const auto& f : listed)
                if (!ideal_contains(in_gb, f)) res.fail("degenerate relation not in the initial ideal: " + R.str(f));
            for (const auto& f : ins)
                if (!ideal_contains(listed_gb, f)) res.fail("initial ideal larger than the listed relations");
            entry["matches_listed_relations"] = res.ok();
        }
        per.push_back(entry);
    }
    auto gb0 = buchberger(gens, MonomialOrder(RVec(R.indices().size(), 0)));
    for (const auto& lam : heights)
        if (hilbert_count(R, gb0, lam) != weyl_dim(lam)) res.fail("Hilbert count of the ideal itself differs");
    res.witness["points"] = per;
    return res;
}

CheckResult maximality(int n) {
    CheckResult res;
    ConeH C = c_cone_h(n);
    Chart chart(n);
    const auto& R = chart.ring();
    Json rows = Json::array();
    for (std::size_t k = 0; k < C.rows().size(); ++k) {
        const ConeRow& target = C.rows()[k];
        if (target.rel != Relation::Geq) continue;
        ConeH relaxed(C.dim());
        for (std::size_t o = 0; o < C.rows().size(); ++o) {
            ConeRow r = C.rows()[o];
            if (o == k)
                for (auto& x : r.coeffs) x = -x;
            relaxed.add(r);
        }
        auto s = strict_point(relaxed);
        if (!s) {
            res.fail("no point violating only " + target.label);
            continue;
        }
        SparsePoly f = designated_relation(R, target.label);
        if (f.is_zero() || !chart.phi(f).is_zero()) res.fail("designated relation for " + target.label + " not in the ideal");
        SparsePoly in = initial_form(f, *s);
        if (in.size() != 1) res.fail("initial form across " + target.label + " is not a monomial");
        rows.push_back({{"facet", target.label},
                        {"relation", R.str(f)},
                        {"initial", R.str(in)},
                        {"point", tropical_json(n, *s)}});
    }
    res.witness["certificates"] = rows;
    return res;
}

CheckResult c4_example() {
    CheckResult res;
    ConeH got = c_cone_h(2, SignConvention::MinConvention);
    ConeH ref = reference::c4_example();
    const std::size_t m = got.dim();
    RMatrix ge = got.matrix(Relation::Eq), re = ref.matrix(Relation::Eq);
    bool rows_ok = same_row_space(ge, re, m);
    if (!rows_ok) res.fail("equality row spaces differ");
    res.witness["equality_rank"] = rank(ge, m);
    Rref E = rref(ge, m);

    std::vector<RVec> gi, ri;
    std::vector<std::string> ref_labels;
    for (const auto& r : got.matrix(Relation::Geq)) gi.push_back(reduce_mod(E, r));
    for (const auto& r : ref.rows())
        if (r.rel == Relation::Geq) {
            ri.push_back(reduce_mod(E, r.coeffs));
            ref_labels.push_back(r.label);
        }
    PlueckerRing R(2);
    auto show = [&](const RVec& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) s += (s.empty() ? "" : " ") + std::string(v[i] > 0 ? "+" : "") + to_string(v[i]) + "*s[" + index_key(2, R.indices()[i]) + "]";
        return s + " >= 0";
    };
    // Every computed facet must be one of the listed inequalities.
    for (const auto& g : gi)
        if (std::find(ri.begin(), ri.end(), g) == ri.end()) res.fail("computed facet not listed: " + show(g));
    // Listed rows that are not facets must follow from the facets.
    Json redundant = Json::array();
    for (std::size_t k = 0; k < ri.size(); ++k) {
        if (std::find(gi.begin(), gi.end(), ri[k]) != gi.end()) continue;
        auto mu = solve(transpose(gi, m), ri[k], gi.size());
        bool implied = mu && std::all_of(mu->begin(), mu->end(), [](const Rational& x) { return x >= 0; });
        if (!implied) res.fail("listed inequality does not hold on the computed cone: " + ref_labels[k]);
        else res.fail("listed inequality is not a facet, it is implied by the computed facets: " + ref_labels[k]);
        Json coeffs = Json::array();
        if (mu)
            for (const auto& x : *mu) coeffs.push_back(rational_json(x));
        redundant.push_back({{"row", ref_labels[k]}, {"implied", implied}, {"facet_multipliers", coeffs}});
    }
    res.witness["computed_facets"] = gi.size();
    res.witness["listed_inequalities"] = ri.size();
    res.witness["redundant_listed_rows"] = redundant;

    // The opposite sign convention reverses every inequality.
    ConeH negated = c_cone_h(2, SignConvention::PaperW);
    bool reversed = true;
    for (std::size_t k = 0; k < negated.rows().size(); ++k) {
        if (negated.rows()[k].rel != Relation::Geq) continue;
        RVec neg = negated.rows()[k].coeffs;
        for (auto& x : neg) x = -x;
        if (neg != got.rows()[k].coeffs) reversed = false;
    }
    DegreePoint d = reference::example_point();
    bool listed_hold_negated = ref.contains(tropical_point(2, d, SignConvention::PaperW));
    res.witness["sign_note"] =
        "with v(J) = -deg the listed inequalities reverse; the listed >= form holds for v(J) = +deg";
    res.witness["negated_convention_reverses_rows"] = reversed;
    res.witness["listed_rows_hold_for_negated_point"] = listed_hold_negated;
    if (!reversed) res.fail("sign conventions are not mirror images");
    return res;
}

CheckResult c_cone(int n, Rng& rng, int samples, SignConvention sign) {
    CheckResult res;
    PlueckerRing R(n);
    {
        ConeH C = c_cone_h(n, sign);
        const std::size_t m = C.dim();
        std::size_t dim = m - rank(C.matrix(Relation::Eq), m);
        if (dim != static_cast<std::size_t>(n * n)) res.fail("cone dimension is not n^2");
        for (int s = 0; s < samples; ++s) {
            bool interior = s % 4 != 3;
            DegreePoint d = sample_k(n, rng, !interior);
            auto v = tropical_point(n, d, sign);
            bool in = interior && membership(n, d).kind == Membership::Interior ? C.contains_strictly(v) : C.contains(v);
            if (!in) {
                res.fail("image point outside the cone");
                res.witness["counterexample"] = degree_json(n, d);
                break;
            }
            for (int k = 1; k <= n; ++k)
                if (v[R.var(first_k(k))] != 0) res.fail("v([k]) != 0");
        }
        res.witness["dimension"] = dim;
        res.witness["sign"] = sign == SignConvention::PaperW ? "paper" : "min";
    }
    const std::size_t roots = num_positive_roots(n);
    RMatrix W = weight_matrix(n);
    if (rank(W, roots) != roots) res.fail("weight map not injective");
    // Each inequality pulls back to a facet of K.
    ConeH C = c_cone_h(n);
    RMatrix facets = k_cone_h(n).matrix(Relation::Geq);
    std::set<RVec> pulled;
    for (const auto& r : C.rows()) {
        if (r.rel != Relation::Geq) continue;
        RVec back(roots, 0);
        for (std::size_t j = 0; j < W.size(); ++j)
            for (std::size_t c = 0; c < roots; ++c) back[c] += r.coeffs[j] * W[j][c];
        pulled.insert(back);
    }
    std::set<RVec> target(facets.begin(), facets.end());
    if (pulled != target) res.fail("inequalities do not pull back to the facets of K");
    res.witness["pullback_equals_facets"] = pulled == target;
    // Literal equalities: v([k]) = 0 and v(J) = v(st(J)).
    RMatrix eq = C.matrix(Relation::Eq);
    int literal = 0;
    for (const auto& J : R.indices()) {
        RVec row(R.indices().size(), 0);
        auto st = content(standardize(n, strip_of(n, J)));
        if (st == J) continue;
        row[R.var(J)] += 1;
        row[R.var(st)] -= 1;
        ++literal;
        if (!in_row_space(eq, row)) res.fail("v(J) = v(st(J)) not implied for J=" + index_key(n, J));
    }
    for (int k = 1; k <= n; ++k) {
        RVec row(R.indices().size(), 0);
        row[R.var(first_k(k))] = 1;
        if (!in_row_space(eq, row)) res.fail("v([k]) = 0 not implied");
    }
    res.witness["standardization_equalities"] = literal;
    return res;
}

CheckResult tableaux(int n, int max_height) {
    CheckResult res;
    Chart chart(n);
    for (int k = 1; k <= n; ++k)
        for (const auto& T : enumerate_tableaux(DominantWeight::fundamental(n, k))) {
            const Column& c = T.columns.at(0);
            if (rho_k(chart, c) != rho_closed(n, c)) res.fail("valuation and closed form disagree on a column");
        }
    Json rows = Json::array();
    for (const auto& lam : weights_up_to_height(n, max_height)) {
        auto Ts = enumerate_tableaux(lam);
        std::set<MultiExponent> img;
        for (const auto& T : Ts) {
            if (!is_pbw(n, T)) res.fail("enumerated tableau fails the PBW conditions");
            img.insert(rho_lambda(chart, T));
        }
        auto pts = lattice_points(lam);
        std::set<MultiExponent> target(pts.begin(), pts.end());
        bool bij = img.size() == Ts.size() && img == target;
        if (!bij) res.fail("rho is not a bijection at lambda=" + weight_str(lam));
        rows.push_back({{"lambda", weight_str(lam)}, {"tableaux", Ts.size()}, {"bijective", bij}});
    }
    res.witness["weights"] = rows;
    return res;
}

CheckResult standardization(int n) {
    CheckResult res;
    RMatrix W = weight_matrix(n);
    PlueckerRing R(n);
    int moved = 0;
    for (const auto& J : R.indices()) {
        Column st = standardize(n, strip_of(n, J));
        Tableau T{{st}};
        if (!is_pbw(n, T)) res.fail("standardization not PBW for J=" + index_key(n, J));
        if (standardize(n, st) != st) res.fail("standardization not idempotent");
        auto P = content(st);
        if (weight_of_index(n, P) != weight_of_index(n, J)) res.fail("standardization changes the weight");
        if (W[R.var(P)] != W[R.var(J)]) res.fail("tropical coordinate changes under standardization at J=" + index_key(n, J));
        if (P != J) ++moved;
    }
    res.witness["indices"] = R.indices().size();
    res.witness["moved"] = moved;
    return res;
}

CheckResult decomposition(int n, int max_height) {
    CheckResult res;
    int points = 0;
    for (const auto& lam : weights_up_to_height(n, max_height))
        for (const auto& s : lattice_points(lam)) {
            ++points;
            auto parts = standard_decomposition(s, lam);
            MultiExponent sum(s.size(), 0);
            DominantWeight used{std::vector<int>(n, 0)};
            for (const auto& p : parts) {
                if (!in_fflv(DominantWeight::fundamental(n, p.k), p.piece)) res.fail("piece outside S(omega_k)");
                sum = sum + p.piece;
                used.m[p.k - 1]++;
            }
            if (sum != s || !(used == lam)) res.fail("pieces do not reassemble the point");
        }
    res.witness["points"] = points;
    return res;
}

CheckResult root_system(int n) {
    CheckResult res;
    auto roots = positive_roots(n);
    if (roots.size() != static_cast<std::size_t>(n * n)) res.fail("wrong number of positive roots");
    for (const auto& r : roots)
        if (!in_sp(n, dense(n, root_vector(n, r)))) res.fail("root vector outside sp(2n): " + to_string(r));
    int brackets = 0;
    for (const auto& a : roots)
        for (const auto& b : roots) {
            auto br = bracket(n, a, b);
            auto sum = root_sum(n, a, b);
            if (br.has_value() != sum.has_value() || (br && br->second != *sum))
                res.fail("bracket disagrees with root addition for " + to_string(a) + "," + to_string(b));
            if (br) ++brackets;
        }
    if (!is_good_sequence(n, default_good_sequence(n))) res.fail("default sequence not good");
    res.witness["roots"] = roots.size();
    res.witness["nonzero_brackets"] = brackets;
    return res;
}

CheckResult brackets(int n, Rng& rng, int samples) {
    CheckResult res;
    auto roots = positive_roots(n);
    const std::size_t dim = roots.size();
    DegreePoint zero(dim, 0);
    int pairs = 0;
    for (const auto& a : roots)
        for (const auto& b : roots) {
            auto g = root_sum(n, a, b);
            if (!g) continue;
            ++pairs;
            RVec row(dim, 0);
            row[root_index(n, a)] += 1;
            row[root_index(n, b)] += 1;
            row[root_index(n, *g)] -= 1;
            if (!facet_certificate(n, row)) res.fail("bracket inequality not implied by the facets");
            if (degenerate_bracket_vanishes(n, zero, a, b)) res.fail("bracket vanishes at d = 0");
        }
    for (int s = 0; s < samples; ++s) {
        auto d = sample_k(n, rng, false);
        if (membership(n, d).kind != Membership::Interior) continue;
        for (const auto& a : roots)
            for (const auto& b : roots)
                if (root_sum(n, a, b) && !degenerate_bracket_vanishes(n, d, a, b))
                    res.fail("bracket survives at an interior point");
    }
    res.witness["bracket_pairs"] = pairs;
    return res;
}

}  // namespace checks

Level parse_level(const std::string& s) {
    if (s == "quick") return Level::Quick;
    if (s == "full") return Level::Full;
    throw UsageError("level must be quick or full");
}

std::vector<Report> run_verify(int n, Level level, std::uint64_t seed, SignConvention sign) {
    if (n < 2 || n > 4) throw UsageError("verify supports 2 <= n <= 4");
    Rng rng(seed);
    const bool full = level == Level::Full;
    const int h = n <= 3 ? 3 : 2;
    std::vector<Report> out;
    auto run = [&](std::string suite, std::string anchor, const std::function<CheckResult()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Report r{std::move(suite), std::move(anchor), Status::Pass, {}, Json::object(), 0};
        try {
            CheckResult c = fn();
            r.status = c.status;
            r.detail = c.detail;
            r.witness = c.witness;
        } catch (const ResourceLimit& e) {
            r.status = Status::Skipped;
            r.detail = std::string("resource cap: ") + e.what();
        } catch (const std::exception& e) {
            r.status = Status::Fail;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    };
    auto skip = [&](std::string suite, std::string anchor, std::string why) {
        out.push_back({std::move(suite), std::move(anchor), Status::Skipped, std::move(why), Json::object(), 0});
    };

    run("root_system", "root vectors lie in sp(2n); brackets follow root addition", [&] { return checks::root_system(n); });
    run("cone_geometry", "degree cone: full dimension, facets, lineality, simpliciality",
        [&] { return checks::cone_geometry(n); });
    run("derived_inequalities", "derived inequalities hold on the degree cone, strictly inside",
        [&] { return checks::derived_inequalities(n, rng, full ? 200 : 40); });
    run("bracket_degeneration", "brackets of the degenerate nilradical vanish exactly at strict inequalities",
        [&] { return checks::brackets(n, rng, full ? 50 : 10); });
    run("counting", "lattice points, PBW tableaux and Weyl dimensions agree",
        [&] { return checks::counting(n, h); });
    run("minkowski", "lattice points of the FFLV polytopes are Minkowski additive",
        [&] { return checks::minkowski(n, h); });
    run("standard_decomposition", "standard decomposition peels fundamental pieces",
        [&] { return checks::decomposition(n, h); });
    run("tableaux", "valuation of chart coordinates gives a bijection from tableaux to lattice points",
        [&] { return checks::tableaux(n, h); });
    run("standardization", "standardized strips are PBW and keep the tropical coordinate",
        [&] { return checks::standardization(n); });
    run("minimization", "degree function has its unique minimum on M_I^J at s_IJ",
        [&] { return checks::minimization(n, n, rng, full ? 50 : 10, full ? 20 : 5); });
    if (n <= 3 || full)
        run("kernel", "the chart map kills the defining ideal", [&] { return checks::kernel(n); });
    else
        skip("kernel", "the chart map kills the defining ideal", "n = 4 runs at full level only");
    run("maximality", "crossing any facet of C makes a Pluecker relation monomial",
        [&] { return checks::maximality(n); });
    run("tropical_cone", "image of the degree cone under the weight map is the cone C",
        [&] { return checks::c_cone(n, rng, full ? 100 : 20, sign); });
    const std::string ex = "rank-two worked examples";
    if (n == 2) {
        run("example_generators", "rank-two generators of the Pluecker ideal", [] { return checks::example_generators(); });
        run("chart_tables", "rank-two chart polynomials and their degenerations", [] { return checks::chart_tables(); });
        run("c4_facets", "rank-two facet description of C", [] { return checks::c4_example(); });
        if (full)
            run("groebner", "initial ideals at interior points of C are the toric FFLV ideal",
                [&] { return checks::groebner(rng, 10); });
        else
            skip("groebner", "initial ideals at interior points of C are the toric FFLV ideal", "runs at full level only");
    } else {
        skip("example_generators", "rank-two generators of the Pluecker ideal", ex + " only");
        skip("chart_tables", "rank-two chart polynomials and their degenerations", ex + " only");
        skip("c4_facets", "rank-two facet description of C", ex + " only");
        skip("groebner", "initial ideals at interior points of C are the toric FFLV ideal", "capped at n = 2");
    }
    return out;
}

Json reports_json(int n, Level level, std::uint64_t seed, const std::vector<Report>& reports) {
    Json rs = Json::array();
    bool ok = true;
    for (const auto& r : reports) {
        if (r.status == Status::Fail) ok = false;
        rs.push_back({{"suite", r.suite},
                      {"anchor", r.anchor},
                      {"status", to_string(r.status)},
                      {"detail", r.detail},
                      {"witness", r.witness}});
    }
    return {{"schema", kSchema},
            {"n", n},
            {"level", level == Level::Full ? "full" : "quick"},
            {"seed", seed},
            {"status", ok ? "pass" : "fail"},
            {"reports", rs}};
}

}  // namespace spflag
