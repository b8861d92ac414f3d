#include "spflag/groebner.hpp"

#include <deque>
#include <set>

namespace spflag {

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    if (!weight_.empty()) {
        int c = cmp(weight_of(b, weight_), weight_of(a, weight_));
        if (c != 0) return c;
    }
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Term leading_term(const SparsePoly& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw Error("leading term of zero");
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (ord.compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

namespace {

Exponent quotient(const Exponent& a, const Exponent& b) {
    Exponent q(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
    return q;
}

SparsePoly reduce(SparsePoly p, const std::vector<SparsePoly>& G, const std::vector<Exponent>& L,
                  const MonomialOrder& ord) {
    SparsePoly r(p.universe());
    while (!p.is_zero()) {
        Term lt = leading_term(p, ord);
        bool hit = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (!divides(L[i], lt.exp)) continue;
            Rational lc = G[i].coefficient(L[i]);
            p -= G[i].mul_monomial(quotient(lt.exp, L[i]), lt.coef / lc);
            hit = true;
            break;
        }
        if (!hit) {
            r.add_term(lt.exp, lt.coef);
            p.add_term(lt.exp, -lt.coef);
        }
    }
    return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<SparsePoly>& gens, const MonomialOrder& ord, const GroebnerLimits& lim) {
    std::vector<SparsePoly> G;
    std::vector<Exponent> L;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    std::size_t processed = 0;
    auto insert = [&](SparsePoly f) {
        f = reduce(std::move(f), G, L, ord);
        if (f.is_zero()) return;
        Term lt = leading_term(f, ord);
        f *= 1 / lt.coef;
        G.push_back(std::move(f));
        L.push_back(lt.exp);
        if (G.size() > lim.max_basis) throw ResourceLimit("Groebner basis exceeded the size cap");
        for (std::size_t i = 0; i + 1 < G.size(); ++i) {
            pairs.emplace_back(i, G.size() - 1);
            pending.insert({i, G.size() - 1});
        }
    };
    for (const auto& g : gens) insert(g);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        pending.erase({i, j});
        if (++processed > lim.max_pairs) throw ResourceLimit("Groebner pair count exceeded the cap");
        if (coprime(L[i], L[j])) continue;
        Exponent m = lcm(L[i], L[j]);
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k)
            if (k != i && k != j && divides(L[k], m) && !pending.count(std::minmax(i, k)) &&
                !pending.count(std::minmax(j, k)))
                chain = true;
        if (chain) continue;
        SparsePoly s = G[i].mul_monomial(quotient(m, L[i]), 1) - G[j].mul_monomial(quotient(m, L[j]), 1);
        insert(std::move(s));
    }
    // minimal then reduced
    std::vector<SparsePoly> H;
    std::vector<Exponent> HL;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j)
            if (j != i && divides(L[j], L[i]) && (L[j] != L[i] || j < i)) redundant = true;
        if (!redundant) {
            H.push_back(G[i]);
            HL.push_back(L[i]);
        }
    }
    GroebnerBasis gb{ord, {}, {}};
    for (std::size_t i = 0; i < H.size(); ++i) {
        std::vector<SparsePoly> others;
        std::vector<Exponent> OL;
        for (std::size_t j = 0; j < H.size(); ++j)
            if (j != i) {
                others.push_back(H[j]);
                OL.push_back(HL[j]);
            }
        SparsePoly tail = H[i];
        tail.add_term(HL[i], -1);
        SparsePoly r = reduce(tail, others, OL, ord);
        r.add_term(HL[i], 1);
        gb.polys.push_back(std::move(r));
        gb.leading.push_back(HL[i]);
    }
    return gb;
}

SparsePoly normal_form(const SparsePoly& f, const GroebnerBasis& gb) {
    return reduce(f, gb.polys, gb.leading, gb.order);
}

bool ideal_contains(const GroebnerBasis& gb, const SparsePoly& f) { return normal_form(f, gb).is_zero(); }

std::vector<SparsePoly> initial_ideal_generators(const GroebnerBasis& gb) {
    std::vector<SparsePoly> out;
    for (const auto& g : gb.polys) out.push_back(initial_form(g, gb.order.weight()));
    return out;
}

std::vector<Exponent> monomials_of_degree(const PlueckerRing& R, const DominantWeight& lambda) {
    const int n = R.n();
    std::vector<std::vector<std::size_t>> by_size(n + 1);
    for (std::size_t v = 0; v < R.indices().size(); ++v) by_size[R.indices()[v].size()].push_back(v);
    std::vector<Exponent> out;
    Exponent e(R.indices().size(), 0);
    auto rec = [&](auto&& self, int k, int left, std::size_t from) -> void {
        if (k > n) {
            out.push_back(e);
            return;
        }
        if (left == 0) {
            int nk = k + 1;
            self(self, nk, nk <= n ? lambda.m[nk - 1] : 0, 0);
            return;
        }
        const auto& vars = by_size[k];
        for (std::size_t a = from; a < vars.size(); ++a) {
            e[vars[a]]++;
            self(self, k, left - 1, a);
            e[vars[a]]--;
        }
    };
    rec(rec, 1, lambda.m[0], 0);
    return out;
}

Integer hilbert_count(const PlueckerRing& R, const GroebnerBasis& gb, const DominantWeight& lambda) {
    Integer c = 0;
    for (const auto& e : monomials_of_degree(R, lambda)) {
        bool standard = true;
        for (const auto& l : gb.leading)
            if (divides(l, e)) {
                standard = false;
                break;
            }
        if (standard) ++c;
    }
    return c;
}

}  // namespace spflag
