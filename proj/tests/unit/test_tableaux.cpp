#include "doctest.h"

#include "spflag/tableaux.hpp"

#include <algorithm>
#include <set>

using namespace spflag;

namespace {

const PositiveRoot a22{2, 2, false}, a11b{1, 1, true};

Integer count_of(const DominantWeight& w) { return Integer(static_cast<unsigned long>(enumerate_tableaux(w).size())); }

}  // namespace

TEST_CASE("column conditions") {
    CHECK(column_is_pbw(2, {1, 2}));
    CHECK(column_is_pbw(2, {3, 2}));
    CHECK_FALSE(column_is_pbw(2, {1, 4}));
    CHECK_FALSE(column_is_pbw(2, {2, 1}));
    CHECK_FALSE(column_is_pbw(2, {2, 3}));
    CHECK_FALSE(column_is_pbw(2, {5, 1}));
    CHECK(column_is_pbw(3, {5, 2}));
    CHECK_FALSE(column_is_pbw(3, {1, 6}));
}

TEST_CASE("columns of length two in rank two") {
    auto cols = pbw_columns(2, 2);
    std::set<Column> got(cols.begin(), cols.end());
    CHECK(got == std::set<Column>{{1, 2}, {1, 3}, {3, 2}, {4, 2}, {4, 3}});
    CHECK(pbw_columns(2, 1).size() == 4);
}

TEST_CASE("compatibility of neighbouring columns") {
    CHECK(columns_compatible({1, 2}, {1}));
    CHECK(columns_compatible({1, 3}, {2}));
    CHECK_FALSE(columns_compatible({1, 2}, {3}));
    CHECK_FALSE(columns_compatible({1}, {1, 2}));
}

TEST_CASE("tableau counts") {
    CHECK(enumerate_tableaux(DominantWeight::fundamental(2, 1)).size() == 4);
    CHECK(enumerate_tableaux(DominantWeight::fundamental(2, 2)).size() == 5);
    CHECK(enumerate_tableaux(DominantWeight{{1, 1}}).size() == 16);
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : weights_up_to_height(n, n <= 2 ? 3 : 2))
            if (!w.is_zero()) CHECK(count_of(w) == weyl_dim(w));
}

TEST_CASE("shape") {
    Tableau T{{{1, 3}, {2}}};
    CHECK_FALSE(is_pbw(2, Tableau{{{1, 2}, {3}}}));
    CHECK(shape_of(2, T) == DominantWeight{{1, 1}});
    CHECK(is_pbw(2, T));
    CHECK(column_lengths(DominantWeight{{2, 1}}) == std::vector<int>{2, 1, 1});
    CHECK_THROWS_AS(shape_of(2, Tableau{{{1, 2, 3}}}), UsageError);
}

TEST_CASE("strips and standardization") {
    CHECK(strip_of(2, {2, 3}) == Column{3, 2});
    CHECK(strip_of(2, {1, 4}) == Column{1, 4});
    CHECK(standardize(2, {1, 4}) == Column{3, 2});
    CHECK(content({3, 2}) == PlueckerIndex{2, 3});
    for (int n = 2; n <= 4; ++n)
        for (const auto& J : pluecker_indices(n)) {
            auto c = standardize(n, strip_of(n, J));
            CHECK(column_is_pbw(n, c));
            CHECK(standardize(n, c) == c);
            CHECK(weight_of_index(n, content(c)) == weight_of_index(n, J));
        }
}

TEST_CASE("lattice point of a column") {
    Chart c(2);
    MultiExponent s(4, 0);
    s[root_index(2, a22)] = 1;
    CHECK(rho_k(c, {1, 3}) == s);
    CHECK(rho_closed(2, {1, 3}) == s);
    MultiExponent t(4, 0);
    t[root_index(2, a11b)] = 1;
    CHECK(rho_k(c, {4}) == t);
    for (int n = 2; n <= 3; ++n) {
        Chart ch(n);
        for (int k = 1; k <= n; ++k)
            for (const auto& col : pbw_columns(n, k)) CHECK(rho_k(ch, col) == rho_closed(n, col));
    }
}

TEST_CASE("rho is a bijection onto the FFLV lattice points") {
    for (int n = 2; n <= 3; ++n) {
        Chart c(n);
        for (const auto& w : weights_up_to_height(n, n == 2 ? 3 : 2)) {
            if (w.is_zero()) continue;
            auto pts = lattice_points(w);
            std::set<MultiExponent> want(pts.begin(), pts.end()), got;
            for (const auto& T : enumerate_tableaux(w)) got.insert(rho_lambda(c, T));
            CHECK(got == want);
            CHECK(got.size() == enumerate_tableaux(w).size());
        }
    }
}
