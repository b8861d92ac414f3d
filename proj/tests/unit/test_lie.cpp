#include "doctest.h"

#include "spflag/lie.hpp"

using namespace spflag;

namespace {

IMatrix E(int n, std::initializer_list<std::tuple<int, int, int>> entries) {
    IMatrix m(2 * n, std::vector<int>(2 * n, 0));
    for (auto [r, c, v] : entries) m[r - 1][c - 1] += v;
    return m;
}

}  // namespace

TEST_CASE("positive roots") {
    CHECK(positive_roots(1) == std::vector<PositiveRoot>{{1, 1, false}});
    auto r2 = positive_roots(2);
    CHECK(r2 == std::vector<PositiveRoot>{{1, 1, false}, {1, 2, false}, {2, 2, false}, {1, 1, true}});
    for (int n = 1; n <= 5; ++n) CHECK(positive_roots(n).size() == static_cast<std::size_t>(n * n));
    for (const auto& r : positive_roots(4)) CHECK_FALSE((r.barred && r.j == 4));
}

TEST_CASE("letters") {
    const int n = 3;
    CHECK(bar(n, 1) == 6);
    CHECK(to_signed(n, 5) == -2);
    CHECK(from_signed(n, -3) == 4);
    CHECK(letter_name(n, 4) == "-3");
    CHECK_THROWS(from_signed(n, 4));
}

TEST_CASE("root vectors of sp(4)") {
    const int n = 2;
    // Basis order 1, 2, 2bar, 1bar.
    CHECK(dense(n, root_vector(n, {1, 1, true})) == E(n, {{4, 1, 1}}));
    CHECK(dense(n, root_vector(n, {1, 1, false})) == E(n, {{2, 1, 1}, {4, 3, -1}}));
    CHECK(dense(n, root_vector(n, {1, 2, false})) == E(n, {{3, 1, 1}, {4, 2, 1}}));
}

TEST_CASE("root vectors lie in sp(2n) and are strictly lower triangular") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& r : positive_roots(n)) {
            auto m = dense(n, root_vector(n, r));
            CHECK(in_sp(n, m));
            for (int a = 0; a < 2 * n; ++a)
                for (int b = a; b < 2 * n; ++b) CHECK(m[a][b] == 0);
        }
}

TEST_CASE("brackets") {
    const int n = 2;
    auto b = bracket(n, {1, 1, false}, {2, 2, false});
    REQUIRE(b);
    CHECK(b->second == PositiveRoot{1, 2, false});
    CHECK(b->first != 0);
    CHECK_FALSE(bracket(n, {1, 2, false}, {1, 1, true}));
    for (const auto& r : positive_roots(3)) CHECK_FALSE(bracket(3, r, r));
}

TEST_CASE("bracket is nonzero exactly when the roots add up to a root") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : positive_roots(n))
            for (const auto& b : positive_roots(n)) {
                auto br = bracket(n, a, b);
                auto s = root_sum(n, a, b);
                CHECK(br.has_value() == s.has_value());
                if (br && s) CHECK(br->second == *s);
            }
}

TEST_CASE("heights and simple root expansions") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& r : positive_roots(n)) {
            auto c = simple_coeffs(n, r);
            int sum = 0;
            for (int x : c) sum += x;
            CHECK(sum == height(n, r));
            if (!r.barred) CHECK(sum == r.j - r.i + 1);
            else CHECK(sum == 2 * n - r.j - r.i + 1);
            CHECK(root_with_epsilon(n, epsilon_coords(n, r)) == r);
        }
}

TEST_CASE("good sequences") {
    GoodSequence listed{{1, 1, true}, {1, 2, false}, {1, 1, false}, {2, 2, false}};
    CHECK(is_good_sequence(2, listed));
    CHECK(default_good_sequence(2) == listed);
    GoodSequence rev(listed.rbegin(), listed.rend());
    CHECK_FALSE(is_good_sequence(2, rev));
    CHECK(default_good_sequence(1) == GoodSequence{{1, 1, false}});
    for (int n = 1; n <= 5; ++n) CHECK(is_good_sequence(n, default_good_sequence(n)));
}

TEST_CASE("staircase grid") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& r : positive_roots(n)) CHECK(from_grid(n, r.i, grid_column(n, r)) == r);
    CHECK(root_at(3, 1, bar(3, 3)) == PositiveRoot{1, 3, false});
    CHECK(is_long(2, {1, 1, true}));
    CHECK(is_long(2, {2, 2, false}));
    CHECK_FALSE(is_long(2, {1, 2, false}));
}
