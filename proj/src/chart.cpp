#include "spflag/chart.hpp"

#include <algorithm>
#include <map>

namespace spflag {

std::vector<std::pair<PlueckerIndex, int>> wedge_act(int n, const PositiveRoot& beta, const PlueckerIndex& J) {
    std::vector<std::pair<PlueckerIndex, int>> out;
    for (std::size_t r = 0; r < J.size(); ++r) {
        auto img = act(n, beta, J[r]);
        if (!img) continue;
        std::vector<int> raw = J;
        raw[r] = img->first;
        auto s = normalize(raw);
        if (s.sign == 0) continue;
        out.emplace_back(s.index, s.sign * img->second);
    }
    return out;
}

std::vector<int> weight_of_index(int n, const PlueckerIndex& J) {
    std::vector<int> w(n, 0);
    for (int c : J) {
        if (c <= n) w[c - 1] += 1;
        else w[bar(n, c) - 1] -= 1;
    }
    return w;
}

namespace {

using PolyWedge = std::map<PlueckerIndex, SparsePoly>;

PolyWedge apply_f(int n, const PositiveRoot& beta, const PolyWedge& v) {
    PolyWedge out;
    for (const auto& [J, c] : v)
        for (const auto& [K, s] : wedge_act(n, beta, J)) {
            auto it = out.try_emplace(K, SparsePoly(c.universe())).first;
            it->second += c * Rational(s);
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

Chart::Chart(int n, GoodSequence seq) : n_(n), seq_(std::move(seq)), ring_(n) {
    if (!is_good_sequence(n, seq_)) throw UsageError("not a good sequence");
    universe_ = Universe{UniverseKind::Chart, n, seq_.size() + n};
    for (std::size_t i = 0; i < seq_.size(); ++i) names_.push_back("t" + std::to_string(i + 1));
    for (int k = 1; k <= n; ++k) names_.push_back("z" + std::to_string(k));
    p_.assign(ring_.indices().size(), SparsePoly(universe_));
    for (int k = 1; k <= n; ++k) {
        PolyWedge v;
        v.emplace(first_k(k), SparsePoly::variable(universe_, z_var(k)));
        for (std::size_t pos = seq_.size(); pos-- > 0;) {
            SparsePoly t = SparsePoly::variable(universe_, t_var(pos));
            PolyWedge total = v, term = v;
            SparsePoly tm = SparsePoly::constant(universe_, 1);
            for (int m = 1;; ++m) {
                term = apply_f(n, seq_[pos], term);
                if (term.empty()) break;
                tm = tm * t * Rational(1, m);
                for (const auto& [J, c] : term) {
                    auto it = total.try_emplace(J, SparsePoly(universe_)).first;
                    it->second += c * tm;
                }
            }
            v = std::move(total);
        }
        for (const auto& [J, c] : v) p_[ring_.var(J)] = c;
    }
}

RVec Chart::chart_weight(const DegreePoint& d) const {
    RVec w(universe_.num_vars, 0);
    for (std::size_t i = 0; i < seq_.size(); ++i) w[i] = d.at(root_index(n_, seq_[i]));
    return w;
}

SparsePoly Chart::in_d(const SparsePoly& f, const DegreePoint& d) const { return initial_form(f, chart_weight(d)); }

SparsePoly Chart::substitute(const SparsePoly& f, const std::vector<SparsePoly>& images) const {
    if (!(f.universe() == ring_.universe())) throw UsageError("polynomial is not in the Pluecker ring of this rank");
    SparsePoly out(universe_);
    for (const auto& [e, c] : f.terms()) {
        SparsePoly m = SparsePoly::constant(universe_, c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) m = m * images[v].pow(e[v]);
        out += m;
    }
    return out;
}

SparsePoly Chart::phi(const SparsePoly& f) const { return substitute(f, p_); }

SparsePoly Chart::phi_d(const SparsePoly& f, const DegreePoint& d) const {
    std::vector<SparsePoly> img;
    for (const auto& p : p_) img.push_back(in_d(p, d));
    return substitute(f, img);
}

Exponent Chart::nu_r(const SparsePoly& f) const {
    if (f.is_zero()) throw Error("nu_r of zero");
    // earlier chart variables weigh most: a larger power of t_1 ranks lower
    auto lower = [](const Exponent& a, const Exponent& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    };
    Exponent best = f.terms().begin()->first;
    for (const auto& [e, c] : f.terms())
        if (lower(e, best)) best = e;
    return best;
}

Exponent Chart::nu_r_last_coordinate(const SparsePoly& f) const {
    if (f.is_zero()) throw Error("nu_r of zero");
    auto less_r = [](const Exponent& a, const Exponent& b) {
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };
    Exponent best = f.terms().begin()->first;
    for (const auto& [e, c] : f.terms())
        if (less_r(e, best)) best = e;
    return best;
}

MultiExponent Chart::project_t(const Exponent& e) const {
    MultiExponent s(seq_.size(), 0);
    for (std::size_t i = 0; i < seq_.size(); ++i) s[root_index(n_, seq_[i])] = e[i];
    return s;
}

std::vector<MultiExponent> m_set(int n, const GoodSequence& seq, const PlueckerIndex& I, const PlueckerIndex& J) {
    if (I.size() != J.size()) throw UsageError("m_set needs |I| = |J|");
    auto wi = weight_of_index(n, I), wj = weight_of_index(n, J);
    std::vector<int> target(n);
    for (int k = 0; k < n; ++k) target[k] = wi[k] - wj[k];
    std::vector<int> tc;
    try {
        tc = simple_coeffs_of_weight(n, target);
    } catch (const Error&) {
        return {};
    }
    const std::size_t N = seq.size();
    std::vector<std::vector<int>> rc(N);
    for (std::size_t i = 0; i < N; ++i) rc[i] = simple_coeffs(n, seq[i]);
    std::vector<MultiExponent> out;
    std::vector<int> mult(N, 0), left = tc;
    auto check = [&]() {
        std::map<PlueckerIndex, long> v{{I, 1}};
        for (std::size_t pos = N; pos-- > 0;)
            for (int r = 0; r < mult[pos]; ++r) {
                std::map<PlueckerIndex, long> w;
                for (const auto& [K, c] : v)
                    for (const auto& [L, s] : wedge_act(n, seq[pos], K)) w[L] += c * s;
                std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
                v = std::move(w);
                if (v.empty()) return false;
            }
        auto it = v.find(J);
        return it != v.end() && it->second != 0;
    };
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == N) {
            if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; }) && check()) {
                MultiExponent s(N, 0);
                for (std::size_t i = 0; i < N; ++i) s[root_index(n, seq[i])] = mult[i];
                out.push_back(s);
            }
            return;
        }
        self(self, pos + 1);
        int added = 0;
        while (true) {
            bool ok = true;
            for (int k = 0; k < n; ++k)
                if (left[k] < rc[pos][k]) ok = false;
            if (!ok) break;
            for (int k = 0; k < n; ++k) left[k] -= rc[pos][k];
            ++mult[pos];
            ++added;
            self(self, pos + 1);
        }
        for (int k = 0; k < n; ++k) left[k] += added * rc[pos][k];
        mult[pos] = 0;
    };
    if (std::all_of(tc.begin(), tc.end(), [](int x) { return x >= 0; })) rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

ArgminReport argmin_check(int n, const std::vector<MultiExponent>& M, const PlueckerIndex& I, const PlueckerIndex& J,
                          const DegreePoint& d) {
    ArgminReport r;
    auto s = s_IJ(n, I, J);
    if (!s) return r;
    r.defined = true;
    r.member = std::find(M.begin(), M.end(), *s) != M.end();
    if (!r.member) return r;
    Rational best = degree_of(*s, d);
    int at_min = 0;
    r.attains = true;
    for (const auto& m : M) {
        Rational v = degree_of(m, d);
        if (v < best) r.attains = false;
        if (v == best) ++at_min;
    }
    r.unique = r.attains && at_min == 1;
    return r;
}

}  // namespace spflag
