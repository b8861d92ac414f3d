#include "doctest.h"

#include "spflag/cone.hpp"
#include "spflag/degree_cone.hpp"
#include "spflag/linalg.hpp"
#include "spflag/poly.hpp"

#include <random>

using namespace spflag;

namespace {

SparsePoly random_poly(const Universe& u, std::mt19937_64& rng, int terms) {
    SparsePoly f(u);
    for (int t = 0; t < terms; ++t) {
        Exponent e(u.num_vars, 0);
        for (auto& x : e) x = static_cast<int>(rng() % 3);
        f.add_term(e, Rational(static_cast<long>(rng() % 7) - 3));
    }
    return f;
}

}  // namespace

TEST_CASE("rationals stay reduced") {
    Rational q = parse_rational("6/-4");
    CHECK(to_string(q) == "-3/2");
    CHECK(q.get_den() > 0);
    CHECK(to_string(parse_rational("0")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rational("x"), UsageError);
    RVec v{Rational(2, 3), Rational(-4, 9)};
    make_primitive(v);
    CHECK(v == RVec{3, -2});
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis({{1, 0}, {0, 1}}, 2).empty());
    CHECK(kernel_basis({{0, 0, 0}}, 3).size() == 3);
    RMatrix m{{1, 2, 3}, {2, 4, 6}};
    auto k = kernel_basis(m, 3);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(dot(m[0], v) == 0);
}

TEST_CASE("equalities of the rank-two tropical cone leave four dimensions") {
    auto C = c_cone_h(2);
    auto eq = C.matrix(Relation::Eq);
    CHECK(kernel_basis(eq, C.dim()).size() == 4);
}

TEST_CASE("initial forms keep the lightest terms") {
    Universe u{UniverseKind::Internal, 0, 3};
    auto x = [&](std::size_t i) { return SparsePoly::variable(u, i); };
    SparsePoly f = x(0) * x(1) + x(1) * x(2) - x(0) * x(0);
    RVec w{1, 1, 0};
    CHECK(initial_form(f, w) == x(1) * x(2));
    CHECK(initial_form(f, RVec{0, 0, 0}) == f);
    SparsePoly mono = x(0).pow(3);
    CHECK(initial_form(mono, w) == mono);
}

TEST_CASE("initial form is idempotent and multiplicative") {
    std::mt19937_64 rng(11);
    Universe u{UniverseKind::Internal, 0, 4};
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_poly(u, rng, 4), g = random_poly(u, rng, 4);
        RVec w(4);
        for (auto& c : w) c = static_cast<long>(rng() % 9) - 4;
        auto inf = initial_form(f, w);
        CHECK(initial_form(inf, w) == inf);
        if (!f.is_zero() && !g.is_zero()) CHECK(initial_form(f * g, w) == inf * initial_form(g, w));
    }
}

TEST_CASE("polynomial text parser") {
    Universe u{UniverseKind::Internal, 0, 3};
    std::vector<std::string> names{"X[1,-2]", "t2", "z1"};
    auto f = parse_poly("-2*t2^2*z1 + X[1,-2] - 1/2*z1", u, names);
    CHECK(f.size() == 3);
    CHECK(f.coefficient({0, 2, 1}) == -2);
    CHECK(f.coefficient({1, 0, 0}) == 1);
    CHECK(f.coefficient({0, 0, 1}) == Rational(-1, 2));
    CHECK(parse_poly(to_string(f, names), u, names) == f);
    CHECK_THROWS_AS(parse_poly("w", u, names), UsageError);
    CHECK_THROWS_AS(parse_poly("", u, names), UsageError);
}

TEST_CASE("Fourier-Motzkin elimination") {
    ConeH c(2);
    c.add_geq({1, 0});
    c.add_geq({-1, 1});
    auto p = fm_eliminate(c, 0);
    bool found = false;
    for (const auto& r : p.rows()) {
        CHECK(r.coeffs[0] == 0);
        if (r.coeffs[1] > 0) found = true;
    }
    CHECK(found);

    ConeH e(1);
    e.add_eq({1});
    auto q = fm_eliminate(e, 0);
    for (const auto& r : q.rows()) CHECK(r.coeffs == RVec{0});

    // K_4 with d_{1,1bar} projected away leaves d11 + d22 >= d12.
    auto K = k_cone_h(2);
    const int n = 2;
    auto proj = fm_eliminate(K, root_index(n, {1, 1, true}));
    proj.normalize();
    std::vector<RVec> rows;
    for (const auto& r : proj.rows())
        if (std::any_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& x) { return x != 0; })) rows.push_back(r.coeffs);
    REQUIRE(rows.size() == 1);
    RVec want(4, 0);
    want[root_index(n, {1, 1, false})] = 1;
    want[root_index(n, {2, 2, false})] = 1;
    want[root_index(n, {1, 2, false})] = -1;
    CHECK(rows[0] == want);
}

TEST_CASE("projection preserves satisfiability") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        ConeH c(3);
        for (int r = 0; r < 4; ++r) {
            RVec v(3);
            for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
            c.add_geq(v, {}, static_cast<long>(rng() % 3));
        }
        auto p = fm_eliminate(c, 2);
        for (int s = 0; s < 10; ++s) {
            RVec y{Rational(static_cast<long>(rng() % 7) - 3), Rational(static_cast<long>(rng() % 7) - 3), 0};
            ConeH fixed(3);
            for (const auto& r : c.rows()) fixed.add(r);
            fixed.add_eq({1, 0, 0}, {}, -y[0]);
            fixed.add_eq({0, 1, 0}, {}, -y[1]);
            bool lifts = feasible_point(fixed).has_value();
            CHECK(p.contains(y) == lifts);
        }
    }
}

TEST_CASE("strict points") {
    auto K = k_cone_h(2);
    auto p = strict_point(K);
    REQUIRE(p);
    CHECK(K.contains_strictly(*p));

    ConeH flat(1);
    flat.add_geq({1});
    flat.add_geq({-1});
    CHECK_FALSE(strict_point(flat).has_value());

    DegreePoint d(4);
    d[root_index(2, {1, 1, false})] = 3;
    d[root_index(2, {2, 2, false})] = 1;
    d[root_index(2, {1, 2, false})] = 2;
    d[root_index(2, {1, 1, true})] = 1;
    CHECK(K.contains_strictly(d));
    DegreePoint e(4);
    e[root_index(2, {1, 2, false})] = -1;
    e[root_index(2, {1, 1, true})] = -3;
    CHECK(K.contains_strictly(e));
}

TEST_CASE("cone normalization") {
    ConeH c(2);
    c.add_geq({Rational(1, 2), Rational(1, 3)});
    c.add_geq({3, 2});
    c.add_eq({-2, 4});
    c.normalize();
    CHECK(c.count(Relation::Geq) == 1);
    CHECK(c.rows().front().coeffs == RVec{3, 2});
    for (const auto& r : c.rows())
        if (r.rel == Relation::Eq) CHECK(r.coeffs == RVec{1, -2});
}
