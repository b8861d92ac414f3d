#include "doctest.h"

#include "spflag/degree_cone.hpp"
#include "spflag/linalg.hpp"

#include <algorithm>

using namespace spflag;

namespace {

const PositiveRoot a11{1, 1, false}, a12{1, 2, false}, a22{2, 2, false}, a11b{1, 1, true};

// (d11, d22, d12, d11bar) in the usual reading order.
DegreePoint pt(Rational d11, Rational d22, Rational d12, Rational d11b) {
    DegreePoint d(4);
    d[root_index(2, a11)] = d11;
    d[root_index(2, a22)] = d22;
    d[root_index(2, a12)] = d12;
    d[root_index(2, a11b)] = d11b;
    return d;
}

RVec row(std::initializer_list<std::pair<int, PositiveRoot>> terms, int n = 2) {
    RVec v(num_positive_roots(n), 0);
    for (const auto& [c, r] : terms) v[root_index(n, r)] += c;
    return v;
}

bool has_row(const ConeH& c, const RVec& v) {
    return std::any_of(c.rows().begin(), c.rows().end(), [&](const ConeRow& r) { return r.coeffs == v; });
}

}  // namespace

TEST_CASE("facets of K in rank two") {
    auto K = k_cone_h(2);
    REQUIRE(K.rows().size() == 2);
    CHECK(K.count(Relation::Eq) == 0);
    CHECK(K.rows()[0].coeffs == row({{1, a11}, {1, a22}, {-1, a12}}));
    CHECK(K.rows()[0].label == "A1");
    CHECK(K.rows()[1].coeffs == row({{2, a12}, {-1, a11b}, {-1, a22}}));
    CHECK(K.rows()[1].label == "D1");
    for (int n = 1; n <= 5; ++n) CHECK(k_cone_h(n).rows().size() == static_cast<std::size_t>(n * (n - 1)));
}

TEST_CASE("membership") {
    auto zero = membership(2, pt(0, 0, 0, 0));
    CHECK(zero.kind == Membership::Boundary);
    CHECK(zero.tight.size() == 2);
    CHECK(membership(2, pt(3, 1, 2, 1)).kind == Membership::Interior);
    auto out = membership(2, pt(0, 0, 1, 0));
    CHECK(out.kind == Membership::Outside);
    CHECK(out.violated == std::vector<std::string>{"A1"});
    CHECK_THROWS_AS(membership(2, DegreePoint(3, 0)), UsageError);
}

TEST_CASE("derived inequalities") {
    auto D = derived_inequalities(2);
    CHECK(has_row(D, row({{1, a11}, {1, a12}, {-1, a11b}})));
    for (int n = 2; n <= 4; ++n) {
        const auto Dn = derived_inequalities(n);
        for (const auto& r : Dn.rows()) CHECK(facet_certificate(n, r.coeffs).has_value());
    }
    bool e_seen = false;
    const auto D3 = derived_inequalities(3);
    for (const auto& r : D3.rows()) e_seen |= r.label[0] == 'E';
    CHECK(e_seen);
}

TEST_CASE("derived inequalities on samples") {
    for (int n = 2; n <= 4; ++n) {
        Rng rng(100 + n);
        auto D = derived_inequalities(n);
        for (int s = 0; s < 100; ++s) {
            bool boundary = s % 5 == 0;
            auto d = sample_k(n, rng, boundary);
            auto m = membership(n, d);
            REQUIRE(m.kind != Membership::Outside);
            for (const auto& r : D.rows()) {
                bool identity = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& x) { return x == 0; });
                CHECK(r.eval(d) >= 0);
                if (m.kind == Membership::Interior && !identity) CHECK(r.eval(d) > 0);
            }
        }
    }
}

TEST_CASE("identity rows among the derived inequalities") {
    std::vector<std::string> id;
    const auto D = derived_inequalities(3);
    for (const auto& r : D.rows())
        if (std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& x) { return x == 0; })) id.push_back(r.label);
    CHECK(id == std::vector<std::string>{"G1,2,2,3"});
}

TEST_CASE("lineality") {
    auto L = lineality_basis(2);
    REQUIRE(L.size() == 2);
    CHECK(L[0] == pt(1, 0, 1, 2));
    CHECK(L[1] == pt(0, 1, 1, 1));
    for (int n = 2; n <= 5; ++n) {
        auto K = k_cone_h(n);
        for (const auto& l : lineality_basis(n))
            for (const auto& r : K.rows()) CHECK(r.eval(l) == 0);
        const std::size_t dim = num_positive_roots(n);
        CHECK(dim - rank(K.matrix(Relation::Geq), dim) == static_cast<std::size_t>(n));
    }
}

TEST_CASE("irredundant facets") {
    for (int n = 2; n <= 4; ++n) {
        auto K = k_cone_h(n);
        for (std::size_t k = 0; k < K.rows().size(); ++k) {
            ConeH relaxed(K.dim());
            for (std::size_t o = 0; o < K.rows().size(); ++o) {
                ConeRow r = K.rows()[o];
                if (o == k)
                    for (auto& x : r.coeffs) x = -x;
                relaxed.add(r);
            }
            auto w = strict_point(relaxed);
            REQUIRE(w);
            CHECK(K.rows()[k].eval(*w) < 0);
        }
    }
}

TEST_CASE("degree function") {
    auto d = pt(3, 1, 2, 1);
    MultiExponent s(4, 0);
    CHECK(degree_of(s, d) == 0);
    s[root_index(2, a11)] = 1;
    CHECK(degree_of(s, d) == 3);
    s[root_index(2, a22)] = 1;
    CHECK(degree_of(s, d) == 4);
}

TEST_CASE("tropical point of the example") {
    const int n = 2;
    auto v = tropical_point(n, pt(3, 1, 2, 1));
    PlueckerRing R(n);
    std::map<std::string, Rational> want{{"1", 0},     {"2", 3},     {"-2", 2},   {"-1", 1},  {"1,2", 0},
                                         {"1,-2", 1},  {"1,-1", 2},  {"2,-2", 2}, {"2,-1", 1}, {"-2,-1", 2}};
    for (const auto& J : R.indices()) CHECK(v[R.var(J)] == want.at(index_key(n, J)));
    auto w = tropical_point(n, pt(3, 1, 2, 1), SignConvention::PaperW);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(w[i] == -v[i]);
}

TEST_CASE("weight map is injective and fixes first-k coordinates") {
    for (int n = 2; n <= 4; ++n) {
        auto W = weight_matrix(n);
        const std::size_t roots = num_positive_roots(n);
        CHECK(rank(W, roots) == roots);
        PlueckerRing R(n);
        for (int k = 1; k <= n; ++k)
            for (const auto& x : W[R.var(first_k(k))]) CHECK(x == 0);
    }
}

TEST_CASE("tropical cone contains the image of K") {
    for (int n = 2; n <= 3; ++n) {
        auto C = c_cone_h(n);
        CHECK(C.dim() - rank(C.matrix(Relation::Eq), C.dim()) == static_cast<std::size_t>(n * n));
        Rng rng(40 + n);
        for (int s = 0; s < 100; ++s) {
            auto d = sample_k(n, rng, s % 3 == 0);
            CHECK(C.contains(tropical_point(n, d)));
        }
    }
}

TEST_CASE("negated sign convention mirrors the inequalities") {
    auto a = c_cone_h(2), b = c_cone_h(2, SignConvention::PaperW);
    REQUIRE(a.rows().size() == b.rows().size());
    for (std::size_t k = 0; k < a.rows().size(); ++k) {
        if (a.rows()[k].rel == Relation::Eq) continue;
        RVec neg = b.rows()[k].coeffs;
        for (auto& x : neg) x = -x;
        CHECK(neg == a.rows()[k].coeffs);
    }
}

TEST_CASE("bracket degeneration") {
    const int n = 2;
    auto zero = pt(0, 0, 0, 0);
    auto inner = pt(3, 1, 2, 1);
    for (const auto& a : positive_roots(n))
        for (const auto& b : positive_roots(n))
            if (root_sum(n, a, b)) {
                CHECK_FALSE(degenerate_bracket_vanishes(n, zero, a, b));
                CHECK(degenerate_bracket_vanishes(n, inner, a, b));
            }
    // On the facet A1 only: d11 + d22 = d12 and 2 d12 > d11bar + d22.
    auto face = pt(1, 1, 2, 1);
    REQUIRE(membership(n, face).tight == std::vector<std::string>{"A1"});
    for (const auto& a : positive_roots(n))
        for (const auto& b : positive_roots(n))
            if (root_sum(n, a, b)) {
                bool survives = (a == a11 && b == a22) || (a == a22 && b == a11);
                CHECK(degenerate_bracket_vanishes(n, face, a, b) == !survives);
            }
}

TEST_CASE("degree keys") {
    CHECK(degree_key(3, {1, 2, true}) == "1,-2");
    CHECK(parse_degree_key(3, "1,-2") == PositiveRoot{1, 2, true});
    CHECK(parse_degree_key(3, "1,-3") == PositiveRoot{1, 3, false});
    CHECK(parse_degree_key(3, "2,3") == PositiveRoot{2, 3, false});
    CHECK_THROWS_AS(parse_degree_key(3, "3,2"), UsageError);
}
