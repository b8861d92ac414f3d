#include "spflag/fflv.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spflag {

int DominantWeight::height() const {
    int h = 0;
    for (int x : m) h += x;
    return h;
}

DominantWeight DominantWeight::operator+(const DominantWeight& o) const {
    if (o.m.size() != m.size()) throw Error("weights of different rank");
    DominantWeight r = *this;
    for (std::size_t i = 0; i < m.size(); ++i) r.m[i] += o.m[i];
    return r;
}

DominantWeight DominantWeight::fundamental(int n, int k) {
    DominantWeight w{std::vector<int>(n, 0)};
    w.m.at(k - 1) = 1;
    return w;
}

DominantWeight parse_weight(int n, const std::string& csv) {
    DominantWeight w;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            w.m.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("bad weight entry: " + tok);
        }
        if (w.m.back() < 0) throw UsageError("weight coefficients must be nonnegative");
    }
    if (w.n() != n) throw UsageError("weight needs exactly n coefficients");
    return w;
}

std::vector<DominantWeight> weights_up_to_height(int n, int h) {
    std::vector<DominantWeight> out;
    DominantWeight w{std::vector<int>(n, 0)};
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            if (!w.is_zero()) out.push_back(w);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            w.m[pos] = v;
            self(self, pos + 1, left - v);
        }
        w.m[pos] = 0;
    };
    rec(rec, 0, h);
    return out;
}

MultiExponent operator+(const MultiExponent& a, const MultiExponent& b) {
    MultiExponent r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<DyckPath> dyck_paths(int n) {
    std::vector<DyckPath> out;
    DyckPath cur;
    auto rec = [&](auto&& self, int i, int c) -> void {
        cur.push_back(from_grid(n, i, c));
        const PositiveRoot& r = cur.back();
        if (is_simple(n, r) || (r.barred && r.i == r.j)) out.push_back(cur);
        if (c + 1 <= 2 * n - i) self(self, i, c + 1);
        if (i + 1 <= c && c <= 2 * n - (i + 1)) self(self, i + 1, c);
        cur.pop_back();
    };
    for (int i = 1; i <= n; ++i) rec(rec, i, i);
    return out;
}

int path_bound(const DominantWeight& lambda, const DyckPath& p) {
    const int n = lambda.n();
    int a = p.front().i;
    const PositiveRoot& e = p.back();
    int b = is_simple(n, e) ? e.i : n;
    int s = 0;
    for (int k = a; k <= b; ++k) s += lambda.m[k - 1];
    return s;
}

ConeH fflv_h(const DominantWeight& lambda) {
    const int n = lambda.n();
    const std::size_t d = num_positive_roots(n);
    ConeH c(d);
    for (const auto& r : positive_roots(n)) {
        RVec v(d, 0);
        v[root_index(n, r)] = 1;
        c.add_geq(v, "nonneg " + to_string(r));
    }
    for (const auto& p : dyck_paths(n)) {
        RVec v(d, 0);
        for (const auto& r : p) v[root_index(n, r)] = -1;
        c.add_geq(v, "path " + to_string(p.front()) + "->" + to_string(p.back()), path_bound(lambda, p));
    }
    return c;
}

bool in_fflv(const DominantWeight& lambda, const MultiExponent& s) {
    const int n = lambda.n();
    for (int x : s)
        if (x < 0) return false;
    for (const auto& p : dyck_paths(n)) {
        int t = 0;
        for (const auto& r : p) t += s[root_index(n, r)];
        if (t > path_bound(lambda, p)) return false;
    }
    return true;
}

std::vector<MultiExponent> lattice_points(const DominantWeight& lambda) {
    const int n = lambda.n();
    const std::size_t d = num_positive_roots(n);
    auto paths = dyck_paths(n);
    std::vector<int> bound(paths.size()), sum(paths.size(), 0);
    std::vector<std::vector<std::size_t>> through(d);
    for (std::size_t p = 0; p < paths.size(); ++p) {
        bound[p] = path_bound(lambda, paths[p]);
        for (const auto& r : paths[p]) through[root_index(n, r)].push_back(p);
    }
    std::vector<MultiExponent> out;
    MultiExponent s(d, 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == d) {
            out.push_back(s);
            return;
        }
        int cap = 1 << 30;
        for (auto p : through[idx]) cap = std::min(cap, bound[p] - sum[p]);
        for (int v = 0; v <= cap; ++v) {
            s[idx] = v;
            for (auto p : through[idx]) sum[p] += v;
            self(self, idx + 1);
            for (auto p : through[idx]) sum[p] -= v;
        }
        s[idx] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool poset_less(int n, const PositiveRoot& a, const PositiveRoot& b) {
    return a != b && a.i <= b.i && grid_column(n, a) <= grid_column(n, b);
}

std::vector<DecompositionStep> standard_decomposition(const MultiExponent& s0, const DominantWeight& lambda0) {
    const int n = lambda0.n();
    if (!in_fflv(lambda0, s0)) throw UsageError("standard_decomposition: point outside S(lambda)");
    MultiExponent s = s0;
    DominantWeight lambda = lambda0;
    auto roots = positive_roots(n);
    std::vector<DecompositionStep> out;
    while (!lambda.is_zero()) {
        int k = n;
        while (lambda.m[k - 1] == 0) --k;
        std::vector<PositiveRoot> supp;
        for (const auto& r : roots)
            if (r.i <= k && k <= grid_column(n, r) && s[root_index(n, r)] > 0) supp.push_back(r);
        MultiExponent piece(s.size(), 0);
        for (const auto& r : supp) {
            bool maximal = std::none_of(supp.begin(), supp.end(), [&](const PositiveRoot& o) { return poset_less(n, r, o); });
            if (maximal) piece[root_index(n, r)] = 1;
        }
        for (std::size_t i = 0; i < s.size(); ++i) s[i] -= piece[i];
        lambda.m[k - 1] -= 1;
        out.push_back({k, piece});
    }
    for (int x : s)
        if (x != 0) throw Error("standard_decomposition: leftover multiplicities");
    return out;
}

Integer weyl_dim(const DominantWeight& lambda) {
    const int n = lambda.n();
    std::vector<Integer> a(n), rho(n);
    for (int i = 0; i < n; ++i) {
        int part = 0;
        for (int k = i; k < n; ++k) part += lambda.m[k];
        a[i] = part + n - i;
        rho[i] = n - i;
    }
    Rational q = 1;
    for (int i = 0; i < n; ++i) {
        q *= Rational(a[i], rho[i]);
        for (int j = i + 1; j < n; ++j) {
            q *= Rational(Integer((a[i] - a[j]) * (a[i] + a[j])), Integer((rho[i] - rho[j]) * (rho[i] + rho[j])));
        }
    }
    q.canonicalize();
    if (q.get_den() != 1) throw Error("Weyl dimension not integral");
    return q.get_num();
}

MinkowskiReport minkowski_check(const DominantWeight& lambda, const DominantWeight& mu) {
    auto a = lattice_points(lambda), b = lattice_points(mu);
    std::set<MultiExponent> sums;
    for (const auto& x : a)
        for (const auto& y : b) sums.insert(x + y);
    auto t = lattice_points(lambda + mu);
    std::set<MultiExponent> target(t.begin(), t.end());
    return {sums == target, sums.size(), target.size()};
}

}  // namespace spflag
