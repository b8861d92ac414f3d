#include "doctest.h"

#include "spflag/fflv.hpp"

#include <set>

using namespace spflag;

namespace {

// Weyl dimension for sp(2n) in epsilon coordinates, rho = (n, ..., 1).
Rational weyl_oracle(const std::vector<int>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<long> l(n), r(n);
    for (int i = 0; i < n; ++i) {
        long s = 0;
        for (int k = i; k < n; ++k) s += m[k];
        r[i] = n - i;
        l[i] = s + r[i];
    }
    Rational q = 1;
    for (int i = 0; i < n; ++i) {
        q *= Rational(l[i], r[i]);
        for (int j = i + 1; j < n; ++j) {
            q *= Rational(l[i] - l[j], r[i] - r[j]);
            q *= Rational(l[i] + l[j], r[i] + r[j]);
        }
    }
    q.canonicalize();
    return q;
}

MultiExponent e(int n, std::initializer_list<PositiveRoot> roots) {
    MultiExponent s(num_positive_roots(n), 0);
    for (const auto& r : roots) s[root_index(n, r)] += 1;
    return s;
}

const PositiveRoot a11{1, 1, false}, a12{1, 2, false}, a22{2, 2, false}, a11b{1, 1, true};

bool on_common_path(int n, const PositiveRoot& a, const PositiveRoot& b) {
    for (const auto& p : dyck_paths(n)) {
        auto ia = std::find(p.begin(), p.end(), a), ib = std::find(p.begin(), p.end(), b);
        if (ia != p.end() && ib != p.end() && ia < ib) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("Weyl dimensions against the product formula") {
    CHECK(weyl_oracle({1, 0}) == 4);
    CHECK(weyl_oracle({0, 1}) == 5);
    CHECK(weyl_oracle({1, 1}) == 16);
    CHECK(weyl_oracle({1, 0, 0}) == 6);
    CHECK(weyl_oracle({0, 1, 0}) == 14);
    CHECK(weyl_oracle({0, 0, 1}) == 14);
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : weights_up_to_height(n, 3)) CHECK(Rational(weyl_dim(w)) == weyl_oracle(w.m));
}

TEST_CASE("Dyck paths") {
    CHECK(dyck_paths(1) == std::vector<DyckPath>{{a11}});
    auto p2 = dyck_paths(2);
    auto has = [&](const DyckPath& p) { return std::find(p2.begin(), p2.end(), p) != p2.end(); };
    CHECK(has({a11, a12, a22}));
    CHECK(has({a11, a12, a11b}));
    CHECK(has({a11}));
    CHECK(has({a22}));
    for (int n = 1; n <= 4; ++n) {
        auto ps = dyck_paths(n);
        std::set<DyckPath> uniq(ps.begin(), ps.end());
        CHECK(uniq.size() == ps.size());
        for (const auto& p : ps) {
            CHECK(is_simple(n, p.front()));
            CHECK((is_simple(n, p.back()) || (p.back().barred && p.back().i == p.back().j)));
            for (std::size_t s = 0; s + 1 < p.size(); ++s) {
                int c0 = grid_column(n, p[s]), c1 = grid_column(n, p[s + 1]);
                bool right = p[s + 1].i == p[s].i && c1 == c0 + 1;
                bool down = p[s + 1].i == p[s].i + 1 && c1 == c0;
                CHECK((right || down));
            }
        }
    }
}

TEST_CASE("FFLV inequalities") {
    auto c = fflv_h(DominantWeight{{0, 1}});
    bool single = false, triple = false;
    for (const auto& r : c.rows()) {
        if (r.coeffs == RVec{-1, 0, 0, 0} && r.constant == 0) single = true;
        if (r.coeffs == RVec{-1, -1, -1, 0} && r.constant == 1) triple = true;
    }
    CHECK(single);
    CHECK(triple);
    CHECK(lattice_points(DominantWeight{{0, 0}}).size() == 1);
}

TEST_CASE("lattice points of fundamental weights") {
    const int n = 2;
    auto w1 = lattice_points(DominantWeight{{1, 0}});
    std::set<MultiExponent> s1(w1.begin(), w1.end());
    CHECK(s1 == std::set<MultiExponent>{e(n, {}), e(n, {a11}), e(n, {a12}), e(n, {a11b})});
    auto w2 = lattice_points(DominantWeight{{0, 1}});
    std::set<MultiExponent> s2(w2.begin(), w2.end());
    CHECK(s2 == std::set<MultiExponent>{e(n, {}), e(n, {a12}), e(n, {a22}), e(n, {a11b}), e(n, {a22, a11b})});
    CHECK(lattice_points(DominantWeight{{1, 1}}).size() == 16);
}

TEST_CASE("lattice point counts equal Weyl dimensions") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : weights_up_to_height(n, 3)) CHECK(Rational(lattice_points(w).size()) == weyl_oracle(w.m));
}

TEST_CASE("poset on roots") {
    const int n = 2;
    CHECK((poset_less(n, a12, a22) || poset_less(n, a22, a12)));
    CHECK_FALSE(poset_less(n, a22, a11b));
    CHECK_FALSE(poset_less(n, a11b, a22));
    CHECK_FALSE(poset_less(n, a12, a12));
    for (int m = 1; m <= 4; ++m)
        for (const auto& a : positive_roots(m))
            for (const auto& b : positive_roots(m)) CHECK(poset_less(m, a, b) == on_common_path(m, a, b));
}

TEST_CASE("fundamental lattice points are antichains") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<PositiveRoot> sub;
            for (const auto& r : positive_roots(n))
                if (r.i <= k && k <= grid_column(n, r)) sub.push_back(r);
            std::set<MultiExponent> anti;
            for (unsigned mask = 0; mask < (1u << sub.size()); ++mask) {
                bool ok = true;
                for (std::size_t a = 0; a < sub.size() && ok; ++a)
                    for (std::size_t b = 0; b < sub.size() && ok; ++b)
                        if ((mask >> a & 1) && (mask >> b & 1) && on_common_path(n, sub[a], sub[b])) ok = false;
                if (!ok) continue;
                MultiExponent s(num_positive_roots(n), 0);
                for (std::size_t a = 0; a < sub.size(); ++a)
                    if (mask >> a & 1) s[root_index(n, sub[a])] = 1;
                anti.insert(s);
            }
            auto pts = lattice_points(DominantWeight::fundamental(n, k));
            CHECK(std::set<MultiExponent>(pts.begin(), pts.end()) == anti);
            if (n == 2 && k == 2) CHECK(anti.size() == 5);
        }
}

TEST_CASE("standard decomposition") {
    const int n = 2;
    auto zero = standard_decomposition(e(n, {}), DominantWeight{{1, 1}});
    for (const auto& p : zero) CHECK(p.piece == e(n, {}));
    auto one = standard_decomposition(e(n, {a22, a11b}), DominantWeight{{0, 1}});
    REQUIRE(one.size() == 1);
    CHECK(one[0].piece == e(n, {a22, a11b}));
    auto two = standard_decomposition(e(n, {a11, a22, a11b}), DominantWeight{{1, 1}});
    REQUIRE(two.size() == 2);
    CHECK(two[0].k == 2);
    CHECK(two[0].piece == e(n, {a22, a11b}));
    CHECK(two[1].k == 1);
    CHECK(two[1].piece == e(n, {a11}));
    CHECK_THROWS_AS(standard_decomposition(e(n, {a11, a11}), DominantWeight{{0, 1}}), UsageError);
}

TEST_CASE("decomposition pieces reassemble") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& w : weights_up_to_height(n, 3))
            for (const auto& s : lattice_points(w)) {
                MultiExponent sum(s.size(), 0);
                for (const auto& p : standard_decomposition(s, w)) {
                    CHECK(in_fflv(DominantWeight::fundamental(n, p.k), p.piece));
                    sum = sum + p.piece;
                }
                CHECK(sum == s);
            }
}

TEST_CASE("Minkowski property and monotonicity") {
    CHECK(minkowski_check(DominantWeight{{0, 0}}, DominantWeight{{0, 0}}).equal);
    CHECK(minkowski_check(DominantWeight{{1, 0}}, DominantWeight{{0, 1}}).equal);
    CHECK(minkowski_check(DominantWeight{{0, 1, 0}}, DominantWeight{{0, 0, 1}}).equal);
    for (const auto& w : weights_up_to_height(3, 2)) {
        auto small = lattice_points(w);
        for (int k = 1; k <= 3; ++k) {
            auto big = lattice_points(w + DominantWeight::fundamental(3, k));
            std::set<MultiExponent> B(big.begin(), big.end());
            for (const auto& s : small) CHECK(B.count(s) == 1);
        }
    }
}

TEST_CASE("weights parse") {
    CHECK(parse_weight(3, "1,0,2").m == std::vector<int>{1, 0, 2});
    CHECK_THROWS_AS(parse_weight(3, "1,0"), UsageError);
    CHECK_THROWS_AS(parse_weight(2, "1,-1"), UsageError);
}
