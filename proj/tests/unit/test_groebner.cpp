#include "doctest.h"

#include "spflag/groebner.hpp"
#include "spflag/chart.hpp"

using namespace spflag;

namespace {

const Universe toy{UniverseKind::Internal, 0, 3};
const std::vector<std::string> xyz{"x", "y", "z"};

SparsePoly tp(const std::string& s) { return parse_poly(s, toy, xyz); }

DegreePoint example() {
    DegreePoint d(4);
    d[root_index(2, {1, 1, false})] = 3;
    d[root_index(2, {2, 2, false})] = 1;
    d[root_index(2, {1, 2, false})] = 2;
    d[root_index(2, {1, 1, true})] = 1;
    return d;
}

SparsePoly s_poly(const SparsePoly& f, const SparsePoly& g, const MonomialOrder& ord) {
    auto a = leading_term(f, ord), b = leading_term(g, ord);
    auto l = lcm(a.exp, b.exp);
    Exponent ua(l.size()), ub(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
        ua[i] = l[i] - a.exp[i];
        ub[i] = l[i] - b.exp[i];
    }
    return f.mul_monomial(ua, 1 / a.coef) - g.mul_monomial(ub, 1 / b.coef);
}

void check_basis(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.polys.size(); ++i) {
        CHECK(leading_term(gb.polys[i], gb.order).exp == gb.leading[i]);
        CHECK(leading_term(gb.polys[i], gb.order).coef == 1);
        for (std::size_t j = i + 1; j < gb.polys.size(); ++j)
            CHECK(normal_form(s_poly(gb.polys[i], gb.polys[j], gb.order), gb).is_zero());
    }
}

}  // namespace

TEST_CASE("monomial order") {
    MonomialOrder ord(RVec{1, 0, 0});
    // Smaller weight ranks higher.
    CHECK(ord.compare({0, 1, 0}, {1, 0, 0}) > 0);
    CHECK(ord.compare({0, 2, 0}, {0, 1, 0}) > 0);
    CHECK(ord.compare({1, 1, 0}, {1, 1, 0}) == 0);
    Rng rng(5);
    auto rnd = [&] {
        Exponent e(3);
        for (auto& x : e) x = static_cast<int>(uniform(rng, 0, 3));
        return e;
    };
    for (int s = 0; s < 300; ++s) {
        auto a = rnd(), b = rnd(), c = rnd();
        CHECK(ord.compare(a, b) == -ord.compare(b, a));
        Exponent ac(3), bc(3);
        for (int i = 0; i < 3; ++i) {
            ac[i] = a[i] + c[i];
            bc[i] = b[i] + c[i];
        }
        CHECK((ord.compare(ac, bc) > 0) == (ord.compare(a, b) > 0));
        if (weight_of(a, ord.weight()) < weight_of(b, ord.weight())) CHECK(ord.compare(a, b) > 0);
    }
}

TEST_CASE("bases of small ideals") {
    MonomialOrder ord(RVec{0, 0, 0});
    auto gb = buchberger({tp("x^2 - y"), tp("x*y - z")}, ord);
    check_basis(gb);
    CHECK(ideal_contains(gb, tp("x^2 - y")));
    CHECK(ideal_contains(gb, tp("y^2 - x*z")));
    CHECK_FALSE(ideal_contains(gb, tp("x - y")));
    auto f = tp("x^3 + y*z + z^2");
    CHECK(normal_form(normal_form(f, gb), gb) == normal_form(f, gb));
    CHECK(ideal_contains(gb, f - normal_form(f, gb)));
    GroebnerLimits tiny{1, 1};
    CHECK_THROWS_AS(buchberger({tp("x^2 - y"), tp("x*y - z"), tp("y*z - x")}, ord, tiny), ResourceLimit);
}

TEST_CASE("Hilbert counts of the rank-two ideal") {
    PlueckerRing R(2);
    auto gb = buchberger(generators(R).all(), MonomialOrder(RVec(R.indices().size(), 0)));
    check_basis(gb);
    CHECK(hilbert_count(R, gb, DominantWeight{{1, 0}}) == 4);
    CHECK(hilbert_count(R, gb, DominantWeight{{0, 1}}) == 5);
    CHECK(hilbert_count(R, gb, DominantWeight{{1, 1}}) == 16);
    CHECK(monomials_of_degree(R, DominantWeight{{0, 1}}).size() == 6);
    for (const auto& w : weights_up_to_height(2, 3)) CHECK(hilbert_count(R, gb, w) == weyl_dim(w));
}

TEST_CASE("initial ideal at the example point") {
    Chart c(2);
    const auto& R = c.ring();
    auto d = example();
    auto v = tropical_point(2, d);
    auto gb = buchberger(generators(R).all(), MonomialOrder(v));
    check_basis(gb);
    auto ins = initial_ideal_generators(gb);
    std::vector<SparsePoly> listed;
    for (const char* t : {"X[1,2]*X[-2] + X[2,-2]*X[1]", "X[1,-2]*X[-1] + X[-2,-1]*X[1]",
                          "X[2,-2]*X[-1] - X[2,-1]*X[-2]", "X[1,2]*X[-1] + X[2,-1]*X[1]",
                          "X[1,2]*X[-2,-1] - X[1,-2]*X[2,-1]", "X[1,-1] + X[2,-2]"})
        listed.push_back(parse_poly(t, R.universe(), R.names()));
    auto in_gb = buchberger(ins, MonomialOrder(v));
    auto listed_gb = buchberger(listed, MonomialOrder(v));
    for (const auto& f : listed) CHECK(ideal_contains(in_gb, f));
    for (const auto& f : ins) {
        CHECK(ideal_contains(listed_gb, f));
        CHECK(f.size() == 2);
        CHECK(c.phi_d(f, d).is_zero());
    }
    for (const auto& w : weights_up_to_height(2, 3)) CHECK(hilbert_count(R, gb, w) == weyl_dim(w));
}
