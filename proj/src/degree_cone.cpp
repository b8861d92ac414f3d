#include "spflag/degree_cone.hpp"

#include "spflag/linalg.hpp"

#include <map>

namespace spflag {

std::string degree_key(int n, const PositiveRoot& r) {
    (void)n;
    return std::to_string(r.i) + "," + (r.barred ? "-" : "") + std::to_string(r.j);
}

PositiveRoot parse_degree_key(int n, const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw UsageError("bad degree key: " + key);
    int i, j;
    try {
        i = std::stoi(key.substr(0, comma));
        j = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
        throw UsageError("bad degree key: " + key);
    }
    if (i < 1 || i > n) throw UsageError("bad degree key: " + key);
    try {
        return root_at(n, i, from_signed(n, j));
    } catch (const Error&) {
        throw UsageError("bad degree key: " + key);
    }
}

const Rational& d_at(int n, const DegreePoint& d, int i, int q) { return d.at(root_index(n, root_at(n, i, q))); }

namespace {

struct RowBuilder {
    int n;
    RVec v;
    explicit RowBuilder(int n_) : n(n_), v(num_positive_roots(n_), 0) {}
    RowBuilder& add(int c, int i, int q) {
        v[root_index(n, root_at(n, i, q))] += c;
        return *this;
    }
};

std::string lbl(const std::string& f, std::initializer_list<int> idx) {
    std::string s = f;
    bool first = true;
    for (int x : idx) {
        s += (first ? "" : ",") + std::to_string(x);
        first = false;
    }
    return s;
}

}  // namespace

ConeH k_cone_h(int n) {
    ConeH c(num_positive_roots(n));
    for (int i = 1; i < n; ++i)
        c.add_geq(RowBuilder(n).add(1, i, i).add(1, i + 1, i + 1).add(-1, i, i + 1).v, lbl("A", {i}));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            c.add_geq(RowBuilder(n).add(1, i, j).add(1, i + 1, j + 1).add(-1, i, j + 1).add(-1, i + 1, j).v,
                      lbl("B", {i, j}));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            c.add_geq(RowBuilder(n)
                          .add(1, i, bar(n, j + 1))
                          .add(1, i + 1, bar(n, j))
                          .add(-1, i, bar(n, j))
                          .add(-1, i + 1, bar(n, j + 1))
                          .v,
                      lbl("C", {i, j}));
    for (int i = 1; i < n; ++i)
        c.add_geq(RowBuilder(n).add(2, i, bar(n, i + 1)).add(-1, i, bar(n, i)).add(-1, i + 1, bar(n, i + 1)).v,
                  lbl("D", {i}));
    return c;
}

ConeH derived_inequalities(int n) {
    ConeH c(num_positive_roots(n));
    auto B = [n](int m) { return bar(n, m); };
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                c.add_geq(RowBuilder(n).add(1, i, j).add(1, j + 1, k).add(-1, i, k).v, lbl("A", {i, j, k}));
                c.add_geq(RowBuilder(n).add(1, i, j).add(1, j + 1, B(k)).add(-1, i, B(k)).v, lbl("F", {i, j, k}));
            }
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int j = k; j <= n; ++j)
                for (int l = j + 1; l <= n; ++l) {
                    c.add_geq(RowBuilder(n).add(1, i, j).add(1, k, l).add(-1, i, l).add(-1, k, j).v,
                              lbl("B", {i, j, k, l}));
                    c.add_geq(RowBuilder(n).add(1, i, B(l)).add(1, k, B(j)).add(-1, i, B(j)).add(-1, k, B(l)).v,
                              lbl("C", {i, j, k, l}));
                    c.add_geq(RowBuilder(n).add(1, i, B(j)).add(1, k, B(l)).add(-1, i, B(k)).add(-1, j, B(l)).v,
                              lbl("G", {i, j, k, l}));
                    c.add_geq(RowBuilder(n).add(1, i, B(l)).add(1, k, B(j)).add(-1, i, B(k)).add(-1, j, B(l)).v,
                              lbl("H", {i, j, k, l}));
                }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            c.add_geq(RowBuilder(n).add(2, i, B(j)).add(-1, i, B(i)).add(-1, j, B(j)).v, lbl("D", {i, j}));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j + 1 <= n; ++j)
            for (int k = i; k <= j + 1; ++k)
                c.add_geq(RowBuilder(n).add(1, i, j).add(1, k, B(j + 1)).add(-1, i, B(k)).v, lbl("E", {i, j, k}));
    return c;
}

RMatrix lineality_basis(int n) {
    RMatrix out;
    auto roots = positive_roots(n);
    for (int k = 0; k < n; ++k) {
        RVec v(roots.size());
        for (const auto& r : roots) v[root_index(n, r)] = simple_coeffs(n, r)[k];
        out.push_back(std::move(v));
    }
    return out;
}

MembershipResult membership(int n, const DegreePoint& d) {
    if (d.size() != num_positive_roots(n)) throw UsageError("degree point has wrong length");
    MembershipResult m{Membership::Interior, {}, {}};
    const ConeH K = k_cone_h(n);
    for (const auto& r : K.rows()) {
        int s = sgn(r.eval(d));
        if (s == 0) m.tight.push_back(r.label);
        if (s < 0) m.violated.push_back(r.label);
    }
    if (!m.violated.empty()) m.kind = Membership::Outside;
    else if (!m.tight.empty()) m.kind = Membership::Boundary;
    return m;
}

std::optional<RVec> facet_certificate(int n, const RVec& row) {
    RMatrix facets = k_cone_h(n).matrix(Relation::Geq);
    auto mu = solve(transpose(facets, row.size()), row, facets.size());
    if (!mu) return std::nullopt;
    for (const auto& x : *mu)
        if (sgn(x) < 0) return std::nullopt;
    return mu;
}

Rational degree_of(const MultiExponent& s, const DegreePoint& d) {
    Rational t = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) t += d[i] * s[i];
    return t;
}

RMatrix weight_matrix(int n) {
    RMatrix W;
    for (const auto& J : pluecker_indices(n)) {
        auto s = s_IJ(n, first_k(static_cast<int>(J.size())), J);
        if (!s) throw Error("anti-diagonal matching undefined for a first-k index");
        W.push_back(to_rvec(*s));
    }
    return W;
}

TropicalPoint tropical_point(int n, const DegreePoint& d, SignConvention sign) {
    if (d.size() != num_positive_roots(n)) throw UsageError("degree point has wrong length");
    TropicalPoint v;
    for (const auto& row : weight_matrix(n)) {
        Rational x = dot(row, d);
        v.push_back(sign == SignConvention::PaperW ? Rational(-x) : x);
    }
    return v;
}

ConeH c_cone_h(int n, SignConvention sign) {
    PlueckerRing R(n);
    const std::size_t m = R.indices().size();
    ConeH c(m);
    RMatrix W = weight_matrix(n);
    for (auto& y : kernel_basis(transpose(W, num_positive_roots(n)), m)) c.add_eq(y);
    auto coord = [&](int i, std::vector<int> extra) {
        std::vector<int> J;
        for (int a = 1; a < i; ++a) J.push_back(a);
        for (int x : extra) J.push_back(x);
        auto s = normalize(J);
        return R.var(s.index);
    };
    const Rational flip = sign == SignConvention::PaperW ? -1 : 1;
    auto push = [&](std::vector<std::pair<int, std::size_t>> terms, std::string label) {
        RVec v(m, 0);
        for (auto [a, idx] : terms) v[idx] += a;
        for (auto& x : v) x *= flip;
        c.add_geq(v, std::move(label));
    };
    for (int i = 1; i < n; ++i)
        push({{1, coord(i, {i + 1})}, {1, coord(i, {i, i + 2})}, {-1, coord(i, {i + 2})}}, lbl("A", {i}));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            push({{1, coord(i, {j + 1})},
                  {1, coord(i, {i, j + 2})},
                  {-1, coord(i, {j + 2})},
                  {-1, coord(i, {i, j + 1})}},
                 lbl("B", {i, j}));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            push({{1, coord(i, {bar(n, j + 1)})},
                  {1, coord(i, {i, bar(n, j)})},
                  {-1, coord(i, {bar(n, j)})},
                  {-1, coord(i, {i, bar(n, j + 1)})}},
                 lbl("C", {i, j}));
    for (int i = 1; i < n; ++i)
        push({{2, coord(i, {bar(n, i + 1)})}, {-1, coord(i, {bar(n, i)})}, {-1, coord(i, {i, bar(n, i + 1)})}},
             lbl("D", {i}));
    return c;
}

bool degenerate_bracket_vanishes(int n, const DegreePoint& d, const PositiveRoot& a, const PositiveRoot& b) {
    auto g = root_sum(n, a, b);
    if (!g) return true;
    return d[root_index(n, a)] + d[root_index(n, b)] > d[root_index(n, *g)];
}

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

DegreePoint sample_k(int n, Rng& rng, bool boundary) {
    const std::size_t dim = num_positive_roots(n);
    RMatrix B = k_cone_h(n).matrix(Relation::Geq);
    std::vector<Rational> c(B.size());
    for (auto& x : c) x = static_cast<long>(uniform(rng, 1, 6));
    if (boundary && !c.empty()) {
        c[uniform(rng, 0, c.size() - 1)] = 0;
        for (auto& x : c)
            if (uniform(rng, 0, 3) == 0) x = 0;
    }
    RVec d = solve(B, c, dim).value();
    for (const auto& l : lineality_basis(n)) {
        long t = static_cast<long>(uniform(rng, 0, 8)) - 4;
        for (std::size_t i = 0; i < dim; ++i) d[i] += l[i] * t;
    }
    return d;
}

}  // namespace spflag
