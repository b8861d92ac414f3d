#include "spflag/lie.hpp"

#include <algorithm>

namespace spflag {

int to_signed(int n, int code) {
    if (code < 1 || code > 2 * n) throw UsageError("letter code out of range");
    return code <= n ? code : -bar(n, code);
}

int from_signed(int n, int s) {
    if (s == 0 || s > n || s < -n) throw UsageError("letter out of range: " + std::to_string(s));
    return s > 0 ? s : 2 * n + 1 + s;
}

std::string letter_name(int n, int code) { return std::to_string(to_signed(n, code)); }

std::string to_string(const PositiveRoot& r) {
    return "a(" + std::to_string(r.i) + "," + (r.barred ? "-" : "") + std::to_string(r.j) + ")";
}

bool is_valid_root(int n, const PositiveRoot& r) {
    if (r.barred) return 1 <= r.i && r.i <= r.j && r.j <= n - 1;
    return 1 <= r.i && r.i <= r.j && r.j <= n;
}

std::vector<PositiveRoot> positive_roots(int n) {
    std::vector<PositiveRoot> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.push_back({i, j, false});
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) out.push_back({i, j, true});
    return out;
}

std::size_t num_positive_roots(int n) { return static_cast<std::size_t>(n) * n; }

std::size_t root_index(int n, const PositiveRoot& r) {
    if (!is_valid_root(n, r)) throw Error("invalid root " + to_string(r));
    std::size_t idx = 0;
    if (!r.barred) {
        for (int a = 1; a < r.i; ++a) idx += n - a + 1;
        return idx + (r.j - r.i);
    }
    idx = static_cast<std::size_t>(n) * (n + 1) / 2;
    for (int a = 1; a < r.i; ++a) idx += n - a;
    return idx + (r.j - r.i);
}

PositiveRoot root_at(int n, int i, int q) {
    PositiveRoot r;
    if (q <= n) r = {i, q, false};
    else if (q == n + 1) r = {i, n, false};
    else r = {i, bar(n, q), true};
    if (!is_valid_root(n, r)) throw Error("no root at (" + std::to_string(i) + "," + std::to_string(q) + ")");
    return r;
}

bool is_simple(int, const PositiveRoot& r) { return !r.barred && r.i == r.j; }
bool is_long(int n, const PositiveRoot& r) { return (r.barred && r.i == r.j) || (!r.barred && r.i == n && r.j == n); }

int grid_column(int n, const PositiveRoot& r) { return r.barred ? 2 * n - r.j : r.j; }

PositiveRoot from_grid(int n, int i, int c) {
    PositiveRoot r = c <= n ? PositiveRoot{i, c, false} : PositiveRoot{i, 2 * n - c, true};
    if (!is_valid_root(n, r)) throw Error("grid position outside the staircase");
    return r;
}

std::vector<int> epsilon_coords(int n, const PositiveRoot& r) {
    std::vector<int> e(n, 0);
    e[r.i - 1] += 1;
    if (r.barred) e[r.j - 1] += 1;
    else if (r.j < n) e[r.j] -= 1;
    else e[n - 1] += 1;
    return e;
}

std::vector<int> simple_coeffs_of_weight(int n, const std::vector<int>& eps) {
    std::vector<int> c(n, 0);
    int s = 0;
    for (int k = 0; k < n; ++k) {
        s += eps[k];
        c[k] = s;
    }
    if (s % 2 != 0) throw Error("weight outside the root lattice");
    c[n - 1] = s / 2;
    return c;
}

std::vector<int> simple_coeffs(int n, const PositiveRoot& r) { return simple_coeffs_of_weight(n, epsilon_coords(n, r)); }

int height(int n, const PositiveRoot& r) {
    int h = 0;
    for (int x : simple_coeffs(n, r)) h += x;
    return h;
}

std::optional<PositiveRoot> root_with_epsilon(int n, const std::vector<int>& eps) {
    for (const auto& r : positive_roots(n))
        if (epsilon_coords(n, r) == eps) return r;
    return std::nullopt;
}

std::optional<PositiveRoot> root_sum(int n, const PositiveRoot& a, const PositiveRoot& b) {
    auto e = epsilon_coords(n, a);
    auto f = epsilon_coords(n, b);
    for (int k = 0; k < n; ++k) e[k] += f[k];
    return root_with_epsilon(n, e);
}

SparseMatrix root_vector(int n, const PositiveRoot& r) {
    if (!is_valid_root(n, r)) throw Error("invalid root " + to_string(r));
    const int i = r.i, j = r.j;
    if (r.barred) {
        if (i == j) return {{bar(n, i), i, 1}};
        return {{bar(n, j), i, 1}, {bar(n, i), j, 1}};
    }
    if (j < n) return {{j + 1, i, 1}, {bar(n, i), bar(n, j + 1), -1}};
    if (i == n) return {{bar(n, n), n, 1}};
    return {{bar(n, n), i, 1}, {bar(n, i), n, 1}};
}

IMatrix dense(int n, const SparseMatrix& m) {
    IMatrix d(2 * n, std::vector<int>(2 * n, 0));
    for (const auto& e : m) d[e.row - 1][e.col - 1] += e.value;
    return d;
}

IMatrix symplectic_form(int n) {
    IMatrix j(2 * n, std::vector<int>(2 * n, 0));
    for (int a = 1; a <= n; ++a) {
        j[a - 1][bar(n, a) - 1] = 1;
        j[bar(n, a) - 1][a - 1] = -1;
    }
    return j;
}

bool in_sp(int n, const IMatrix& x) {
    IMatrix j = symplectic_form(n);
    int m = 2 * n;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            long s = 0;
            for (int c = 0; c < m; ++c) s += static_cast<long>(x[c][a]) * j[c][b] + static_cast<long>(j[a][c]) * x[c][b];
            if (s != 0) return false;
        }
    return true;
}

std::optional<std::pair<int, int>> act(int n, const PositiveRoot& r, int l) {
    for (const auto& e : root_vector(n, r))
        if (e.col == l) return std::make_pair(e.row, e.value);
    return std::nullopt;
}

namespace {

IMatrix mul(const IMatrix& a, const IMatrix& b) {
    std::size_t m = a.size();
    IMatrix c(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

}  // namespace

std::optional<std::pair<Rational, PositiveRoot>> bracket(int n, const PositiveRoot& a, const PositiveRoot& b) {
    IMatrix fa = dense(n, root_vector(n, a)), fb = dense(n, root_vector(n, b));
    IMatrix ab = mul(fa, fb), ba = mul(fb, fa);
    bool zero = true;
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j) {
            ab[i][j] -= ba[i][j];
            if (ab[i][j] != 0) zero = false;
        }
    if (zero) return std::nullopt;
    auto g = root_sum(n, a, b);
    if (!g) throw Error("nonzero commutator without a root sum");
    IMatrix fg = dense(n, root_vector(n, *g));
    std::optional<Rational> c;
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j) {
            if (fg[i][j] == 0) {
                if (ab[i][j] != 0) throw Error("commutator not proportional to a root vector");
                continue;
            }
            Rational q(ab[i][j], fg[i][j]);
            q.canonicalize();
            if (c && *c != q) throw Error("commutator not proportional to a root vector");
            c = q;
        }
    return std::make_pair(*c, *g);
}

GoodSequence default_good_sequence(int n) {
    GoodSequence s = positive_roots(n);
    std::stable_sort(s.begin(), s.end(), [n](const PositiveRoot& a, const PositiveRoot& b) {
        int ha = height(n, a), hb = height(n, b);
        if (ha != hb) return ha > hb;
        if (a.i != b.i) return a.i < b.i;
        return grid_column(n, a) < grid_column(n, b);
    });
    return s;
}

bool is_good_sequence(int n, const GoodSequence& seq) {
    auto all = positive_roots(n);
    if (seq.size() != all.size()) return false;
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    std::sort(all.begin(), all.end());
    if (sorted != all) return false;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            // seq[a] - seq[b] must not be a nonzero nonnegative root combination
            auto ca = simple_coeffs(n, seq[a]), cb = simple_coeffs(n, seq[b]);
            bool nonneg = true, nonzero = false;
            for (int k = 0; k < n; ++k) {
                int d = ca[k] - cb[k];
                if (d < 0) nonneg = false;
                if (d != 0) nonzero = true;
            }
            if (nonneg && nonzero) return false;
        }
    return true;
}

}  // namespace spflag
