#include "spflag/pluecker.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spflag {

std::vector<PlueckerIndex> pluecker_indices(int n) {
    std::vector<PlueckerIndex> out;
    for (int k = 1; k <= n; ++k) {
        PlueckerIndex J(k);
        auto rec = [&](auto&& self, int pos, int from) -> void {
            if (pos == k) {
                out.push_back(J);
                return;
            }
            for (int c = from; c <= 2 * n - (k - pos - 1); ++c) {
                J[pos] = c;
                self(self, pos + 1, c + 1);
            }
        };
        rec(rec, 0, 1);
    }
    return out;
}

PlueckerIndex parse_index(int n, const std::string& csv) {
    std::vector<int> raw;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            raw.push_back(from_signed(n, std::stoi(tok)));
        } catch (const std::invalid_argument&) {
            throw UsageError("bad letter: " + tok);
        }
    }
    if (raw.empty() || static_cast<int>(raw.size()) > n) throw UsageError("index size must be in [1, n]");
    auto s = normalize(raw);
    if (s.sign == 0) throw UsageError("index repeats a letter");
    return s.index;
}

std::string index_key(int n, const PlueckerIndex& J) {
    std::string s;
    for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(to_signed(n, J[i]));
    return s;
}

std::string index_name(int n, const PlueckerIndex& J) { return "X[" + index_key(n, J) + "]"; }

SignedIndex normalize(const std::vector<int>& raw) {
    SignedIndex out{1, raw};
    auto& v = out.index;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                out.sign = -out.sign;
            }
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1]) out.sign = 0;
    return out;
}

PlueckerRing::PlueckerRing(int n) : n_(n) {
    if (n < 1) throw UsageError("rank must be positive");
    indices_ = pluecker_indices(n);
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        var_[indices_[i]] = i;
        names_.push_back(index_name(n, indices_[i]));
    }
    universe_ = Universe{UniverseKind::Pluecker, n, indices_.size()};
}

std::size_t PlueckerRing::var(const PlueckerIndex& J) const {
    auto it = var_.find(J);
    if (it == var_.end()) throw Error("not a Pluecker index");
    return it->second;
}

SparsePoly PlueckerRing::X(const std::vector<int>& raw) const {
    auto s = normalize(raw);
    if (s.sign == 0) return SparsePoly(universe_);
    return SparsePoly::variable(universe_, var(s.index)) * Rational(s.sign);
}

SparsePoly quad_relation(const PlueckerRing& R, const PlueckerIndex& L, const PlueckerIndex& J, int s) {
    const int p = static_cast<int>(L.size()), q = static_cast<int>(J.size());
    if (q > p || s < 1 || s > q) throw UsageError("quad_relation needs 1 <= s <= |J| <= |L|");
    SparsePoly f = R.X(L) * R.X(J);
    std::vector<int> pick(s);
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == s) {
            std::vector<int> L2 = L, J2;
            for (int t = 0; t < s; ++t) {
                L2[pick[t]] = J[t];
                J2.push_back(L[pick[t]]);
            }
            for (int t = s; t < q; ++t) J2.push_back(J[t]);
            f -= R.X(L2) * R.X(J2);
            return;
        }
        for (int r = from; r < p; ++r) {
            pick[pos] = r;
            self(self, pos + 1, r + 1);
        }
    };
    rec(rec, 0, 0);
    return f;
}

namespace {

std::vector<int> complement(int n, const std::vector<int>& I1, const std::vector<int>& I2) {
    std::vector<int> out;
    for (int a = 1; a <= n; ++a)
        if (std::find(I1.begin(), I1.end(), a) == I1.end() && std::find(I2.begin(), I2.end(), a) == I2.end())
            out.push_back(a);
    return out;
}

// Dominance-maximal T from avail with T <= target entrywise, or nothing.
std::optional<std::vector<int>> max_below(const std::vector<int>& avail, const std::vector<int>& target) {
    std::vector<int> t(target.size());
    int ceiling = 1 << 30;
    for (std::size_t k = target.size(); k-- > 0;) {
        int lim = std::min(target[k], ceiling - 1);
        int best = -1;
        for (int a : avail)
            if (a <= lim) best = std::max(best, a);
        if (best < 0) return std::nullopt;
        t[k] = best;
        ceiling = best;
    }
    return t;
}

std::vector<int> sorted_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> tuple_of(int n, const std::vector<int>& I1, const std::vector<int>& I2) {
    std::vector<int> gamma, a, b;
    std::set_intersection(I1.begin(), I1.end(), I2.begin(), I2.end(), std::back_inserter(gamma));
    std::set_difference(I1.begin(), I1.end(), gamma.begin(), gamma.end(), std::back_inserter(a));
    std::set_difference(I2.begin(), I2.end(), gamma.begin(), gamma.end(), std::back_inserter(b));
    std::vector<int> t;
    for (int g : gamma) {
        t.push_back(g);
        t.push_back(bar(n, g));
    }
    for (int x : a) t.push_back(x);
    for (auto it = b.rbegin(); it != b.rend(); ++it) t.push_back(bar(n, *it));
    return t;
}

}  // namespace

bool reverse_admissible(int n, const std::vector<int>& I1r, const std::vector<int>& I2r) {
    auto I1 = sorted_set(I1r), I2 = sorted_set(I2r);
    std::vector<int> gamma;
    std::set_intersection(I1.begin(), I1.end(), I2.begin(), I2.end(), std::back_inserter(gamma));
    return max_below(complement(n, I1, I2), gamma).has_value();
}

SparsePoly linear_relation(const PlueckerRing& R, const std::vector<int>& I1r, const std::vector<int>& I2r) {
    const int n = R.n();
    auto I1 = sorted_set(I1r), I2 = sorted_set(I2r);
    for (int x : I1)
        if (x < 1 || x > n) throw UsageError("linear_relation: entries must lie in [1, n]");
    for (int x : I2)
        if (x < 1 || x > n) throw UsageError("linear_relation: entries must lie in [1, n]");
    if (static_cast<int>(I1.size() + I2.size()) > n) throw UsageError("linear_relation: |I1|+|I2| exceeds n");
    if (reverse_admissible(n, I1, I2)) throw UsageError("linear_relation: tuple is reverse-admissible");
    std::vector<int> gamma;
    std::set_intersection(I1.begin(), I1.end(), I2.begin(), I2.end(), std::back_inserter(gamma));
    const int t = static_cast<int>(gamma.size());
    auto avail = complement(n, I1, I2);
    // 1-based gamma_h = gamma[h-1]
    int h0 = t;
    std::vector<int> lam;
    for (int h = 1; h <= t; ++h) {
        std::vector<int> tail(gamma.begin() + h, gamma.end());
        if (auto T = max_below(avail, tail)) {
            h0 = h;
            lam = *T;
            break;
        }
    }
    int b = h0;
    for (int cand = h0 + 1; cand <= t; ++cand) {
        bool ok = true;
        for (int m = 1; m <= cand - h0; ++m)
            if (lam[m - 1] > gamma[h0 + m - 2]) ok = false;
        if (ok) b = cand;
    }
    std::vector<int> tilde(gamma.begin() + (h0 - 1), gamma.begin() + b), F, I1t, I2t;
    std::set_difference(gamma.begin(), gamma.end(), tilde.begin(), tilde.end(), std::back_inserter(F));
    std::set_difference(I1.begin(), I1.end(), gamma.begin(), gamma.end(), std::back_inserter(I1t));
    std::set_difference(I2.begin(), I2.end(), gamma.begin(), gamma.end(), std::back_inserter(I2t));
    const int size = static_cast<int>(tilde.size());
    SparsePoly S = R.X(tuple_of(n, I1, I2));
    SparsePoly sum(R.universe());
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == size) {
            auto A = I1t, B = I2t;
            for (int x : F) {
                A.push_back(x);
                B.push_back(x);
            }
            for (int x : pick) {
                A.push_back(x);
                B.push_back(x);
            }
            sum += R.X(tuple_of(n, sorted_set(A), sorted_set(B)));
            return;
        }
        for (std::size_t i = from; i < avail.size(); ++i) {
            pick.push_back(avail[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    Rational sign = ((b - h0 + 1) % 2 == 0) ? 1 : -1;
    S -= sum * sign;
    return S;
}

std::vector<SparsePoly> Generators::all() const {
    auto v = quadratic;
    v.insert(v.end(), linear.begin(), linear.end());
    return v;
}

Generators generators(const PlueckerRing& R) {
    const int n = R.n();
    Generators g;
    std::set<SparsePoly::Terms> seen;
    auto keep = [&](std::vector<SparsePoly>& into, const SparsePoly& f) {
        if (f.is_zero()) return;
        if (seen.insert(monic(f).terms()).second) into.push_back(f);
    };
    const auto& idx = R.indices();
    for (const auto& L : idx)
        for (const auto& J : idx) {
            if (J.size() > L.size()) continue;
            for (int s = 1; s <= static_cast<int>(J.size()); ++s) keep(g.quadratic, quad_relation(R, L, J, s));
        }
    for (int mask1 = 0; mask1 < (1 << n); ++mask1)
        for (int mask2 = 0; mask2 < (1 << n); ++mask2) {
            std::vector<int> I1, I2;
            for (int a = 0; a < n; ++a) {
                if (mask1 >> a & 1) I1.push_back(a + 1);
                if (mask2 >> a & 1) I2.push_back(a + 1);
            }
            if (I1.size() + I2.size() == 0 || static_cast<int>(I1.size() + I2.size()) > n) continue;
            if (reverse_admissible(n, I1, I2)) continue;
            keep(g.linear, linear_relation(R, I1, I2));
        }
    return g;
}

DominantWeight multidegree(const PlueckerRing& R, const Exponent& e) {
    DominantWeight w{std::vector<int>(R.n(), 0)};
    for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) w.m[R.indices()[v].size() - 1] += e[v];
    return w;
}

PositiveRoot s_min(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= 2 * n)) throw Error("s_min needs letters i < j");
    if (j <= n) return root_at(n, i, j - 1);
    if (i <= n && j <= bar(n, i)) return root_at(n, i, j);
    if (i <= n) return root_at(n, bar(n, j), bar(n, i));
    return root_at(n, bar(n, j), bar(n, i) - 1);
}

std::optional<MultiExponent> s_IJ(int n, const PlueckerIndex& I, const PlueckerIndex& J) {
    if (I.size() != J.size()) throw UsageError("s_IJ needs |I| = |J|");
    std::vector<int> P, Q;
    std::set_difference(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(P));
    std::set_difference(J.begin(), J.end(), I.begin(), I.end(), std::back_inserter(Q));
    MultiExponent s(num_positive_roots(n), 0);
    const std::size_t m = P.size();
    for (std::size_t r = 0; r < m; ++r) {
        int p = P[r], q = Q[m - 1 - r];
        if (p >= q) return std::nullopt;
        s[root_index(n, s_min(n, p, q))] += 1;
    }
    return s;
}

PlueckerIndex first_k(int k) {
    PlueckerIndex I(k);
    for (int i = 0; i < k; ++i) I[i] = i + 1;
    return I;
}

}  // namespace spflag
