#include "spflag/tableaux.hpp"

#include <algorithm>

namespace spflag {

std::vector<int> column_lengths(const DominantWeight& lambda) {
    std::vector<int> out;
    for (int k = lambda.n(); k >= 1; --k)
        for (int r = 0; r < lambda.m[k - 1]; ++r) out.push_back(k);
    return out;
}

DominantWeight shape_of(int n, const Tableau& T) {
    DominantWeight w{std::vector<int>(n, 0)};
    for (const auto& c : T.columns) {
        if (c.empty() || static_cast<int>(c.size()) > n) throw UsageError("column length out of range");
        w.m[c.size() - 1]++;
    }
    return w;
}

bool column_is_pbw(int n, const Column& c) {
    const int mu = static_cast<int>(c.size());
    for (int i = 1; i <= mu; ++i) {
        int t = c[i - 1];
        if (t < 1 || t > 2 * n) return false;
        if (t <= mu && t != i) return false;
        if (t != i)
            for (int i2 = i + 1; i2 <= mu; ++i2)
                if (!(t > c[i2 - 1])) return false;
        if (t == i && i <= n)
            for (int i2 = 1; i2 <= mu; ++i2)
                if (c[i2 - 1] == bar(n, i) && !(i2 < i)) return false;
    }
    return true;
}

bool columns_compatible(const Column& left, const Column& right) {
    if (right.size() > left.size()) return false;
    for (std::size_t i = 0; i < right.size(); ++i) {
        bool ok = false;
        for (std::size_t i2 = i; i2 < left.size() && !ok; ++i2)
            if (left[i2] >= right[i]) ok = true;
        if (!ok) return false;
    }
    return true;
}

bool is_pbw(int n, const Tableau& T) {
    for (std::size_t j = 0; j < T.columns.size(); ++j) {
        if (!column_is_pbw(n, T.columns[j])) return false;
        if (j > 0 && !columns_compatible(T.columns[j - 1], T.columns[j])) return false;
    }
    return true;
}

std::vector<Column> pbw_columns(int n, int length) {
    std::vector<Column> out;
    Column c(length);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == length) {
            if (column_is_pbw(n, c)) out.push_back(c);
            return;
        }
        for (int v = 1; v <= 2 * n; ++v) {
            c[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Tableau> enumerate_tableaux(const DominantWeight& lambda) {
    const int n = lambda.n();
    auto lengths = column_lengths(lambda);
    std::vector<std::vector<Column>> cand(n + 1);
    for (int k = 1; k <= n; ++k) cand[k] = pbw_columns(n, k);
    std::vector<Tableau> out;
    Tableau T;
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == lengths.size()) {
            out.push_back(T);
            return;
        }
        for (const auto& c : cand[lengths[j]]) {
            if (j > 0 && !columns_compatible(T.columns.back(), c)) continue;
            T.columns.push_back(c);
            self(self, j + 1);
            T.columns.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Column strip_of(int n, const PlueckerIndex& J) {
    (void)n;
    const int d = static_cast<int>(J.size());
    Column c(d, 0);
    std::vector<int> rest;
    for (int x : J) {
        if (x <= d) c[x - 1] = x;
        else rest.push_back(x);
    }
    std::size_t r = 0;
    for (int box = d; box >= 1; --box)
        if (c[box - 1] == 0) c[box - 1] = rest[r++];
    return c;
}

Column standardize(int n, Column c) {
    const int d = static_cast<int>(c.size());
    for (int guard = 0; guard <= 4 * d * d + 4; ++guard) {
        bool changed = false;
        for (int i = 1; i <= d && !changed; ++i) {
            if (c[i - 1] != i) continue;
            for (int p = i + 1; p <= d; ++p)
                if (c[p - 1] == bar(n, i)) {
                    c[i - 1] = bar(n, p);
                    c[p - 1] = p;
                    changed = true;
                    break;
                }
        }
        if (!changed) return c;
    }
    throw Error("standardization did not terminate");
}

PlueckerIndex content(const Column& c) {
    PlueckerIndex J = c;
    std::sort(J.begin(), J.end());
    return J;
}

MultiExponent rho_k(const Chart& chart, const Column& c) {
    return chart.project_t(chart.nu_r(chart.p(content(c))));
}

MultiExponent rho_closed(int n, const Column& c) {
    auto s = s_IJ(n, first_k(static_cast<int>(c.size())), content(c));
    if (!s) throw Error("column content has no anti-diagonal matching");
    return *s;
}

MultiExponent rho_lambda(const Chart& chart, const Tableau& T) {
    MultiExponent s(num_positive_roots(chart.n()), 0);
    for (const auto& c : T.columns) s = s + rho_k(chart, c);
    return s;
}

}  // namespace spflag
