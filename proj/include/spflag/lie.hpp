#pragma once

#include "spflag/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spflag {

// Letters of the barred alphabet are codes 1..2n; code c > n stands for the
// barred letter of 2n+1-c. Externally a letter is a signed integer.
inline int bar(int n, int c) { return 2 * n + 1 - c; }
inline bool is_barred(int n, int c) { return c > n; }
int to_signed(int n, int code);
int from_signed(int n, int s);
std::string letter_name(int n, int code);

struct PositiveRoot {
    int i = 1;
    int j = 1;
    bool barred = false;
    auto operator<=>(const PositiveRoot&) const = default;
};

std::string to_string(const PositiveRoot& r);

std::vector<PositiveRoot> positive_roots(int n);
std::size_t num_positive_roots(int n);
std::size_t root_index(int n, const PositiveRoot& r);
bool is_valid_root(int n, const PositiveRoot& r);

// alpha_{i,q} for a letter code q >= i (the code of nbar collapses onto n).
PositiveRoot root_at(int n, int i, int q);
bool is_simple(int n, const PositiveRoot& r);
bool is_long(int n, const PositiveRoot& r);

// Staircase coordinates: row i, column c in [i, 2n-i].
int grid_column(int n, const PositiveRoot& r);
PositiveRoot from_grid(int n, int i, int c);

std::vector<int> epsilon_coords(int n, const PositiveRoot& r);
std::vector<int> simple_coeffs(int n, const PositiveRoot& r);
std::vector<int> simple_coeffs_of_weight(int n, const std::vector<int>& eps);
int height(int n, const PositiveRoot& r);
std::optional<PositiveRoot> root_with_epsilon(int n, const std::vector<int>& eps);
std::optional<PositiveRoot> root_sum(int n, const PositiveRoot& a, const PositiveRoot& b);

// Matrix entries (row, col, value) with 1-based letter codes.
struct Entry {
    int row;
    int col;
    int value;
};
using SparseMatrix = std::vector<Entry>;
using IMatrix = std::vector<std::vector<int>>;

SparseMatrix root_vector(int n, const PositiveRoot& r);
IMatrix dense(int n, const SparseMatrix& m);
IMatrix symplectic_form(int n);
bool in_sp(int n, const IMatrix& x);

// f_beta applied to the basis vector e_l: (code, coefficient) or nothing.
std::optional<std::pair<int, int>> act(int n, const PositiveRoot& r, int l);

// [f_a, f_b] = c f_gamma, or nothing when the commutator vanishes.
std::optional<std::pair<Rational, PositiveRoot>> bracket(int n, const PositiveRoot& a, const PositiveRoot& b);

using GoodSequence = std::vector<PositiveRoot>;
GoodSequence default_good_sequence(int n);
bool is_good_sequence(int n, const GoodSequence& seq);

}  // namespace spflag
