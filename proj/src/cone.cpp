#include "spflag/cone.hpp"

#include "spflag/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spflag {

ConeRow normalized(ConeRow r) {
    RVec all = r.coeffs;
    all.push_back(r.constant);
    make_primitive(all);
    if (r.rel == Relation::Eq) {
        auto it = std::find_if(all.begin(), all.end(), [](const Rational& q) { return sgn(q) != 0; });
        if (it != all.end() && sgn(*it) < 0)
            for (auto& q : all) q = -q;
    }
    r.constant = all.back();
    all.pop_back();
    r.coeffs = std::move(all);
    return r;
}

void ConeH::add(ConeRow r) {
    if (r.coeffs.size() != dim_) throw Error("cone row has wrong length");
    rows_.push_back(std::move(r));
}

void ConeH::add_geq(RVec c, std::string label, Rational constant) {
    add(ConeRow{std::move(c), std::move(constant), Relation::Geq, std::move(label)});
}

void ConeH::add_eq(RVec c, std::string label, Rational constant) {
    add(ConeRow{std::move(c), std::move(constant), Relation::Eq, std::move(label)});
}

std::size_t ConeH::count(Relation rel) const {
    return std::count_if(rows_.begin(), rows_.end(), [&](const ConeRow& r) { return r.rel == rel; });
}

RMatrix ConeH::matrix(Relation rel) const {
    RMatrix m;
    for (const auto& r : rows_)
        if (r.rel == rel) m.push_back(r.coeffs);
    return m;
}

void ConeH::normalize() {
    std::vector<ConeRow> out;
    for (auto& r : rows_) {
        ConeRow n = normalized(r);
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
    }
    rows_ = std::move(out);
}

bool ConeH::contains(const RVec& x) const {
    for (const auto& r : rows_) {
        Rational v = r.eval(x);
        if (r.rel == Relation::Eq ? sgn(v) != 0 : sgn(v) < 0) return false;
    }
    return true;
}

bool ConeH::contains_strictly(const RVec& x) const {
    for (const auto& r : rows_) {
        Rational v = r.eval(x);
        if (r.rel == Relation::Eq ? sgn(v) != 0 : sgn(v) <= 0) return false;
    }
    return true;
}

namespace {

bool is_trivial(const ConeRow& r) {
    return std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// Row = a + f*b, where b is used to cancel a coefficient.
ConeRow combine(const ConeRow& a, const Rational& fa, const ConeRow& b, const Rational& fb) {
    ConeRow r;
    r.rel = (a.rel == Relation::Eq && b.rel == Relation::Eq) ? Relation::Eq : Relation::Geq;
    r.coeffs.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = fa * a.coeffs[i] + fb * b.coeffs[i];
    r.constant = fa * a.constant + fb * b.constant;
    return normalized(std::move(r));
}

void push_unique(std::vector<ConeRow>& rows, std::set<std::pair<RVec, std::string>>& seen, ConeRow r) {
    RVec key = r.coeffs;
    key.push_back(r.constant);
    if (seen.insert({key, r.rel == Relation::Eq ? "=" : ">"}).second) rows.push_back(std::move(r));
}

std::vector<ConeRow> eliminate(const std::vector<ConeRow>& rows, std::size_t v) {
    const ConeRow* eq = nullptr;
    for (const auto& r : rows)
        if (r.rel == Relation::Eq && sgn(r.coeffs[v]) != 0) {
            eq = &r;
            break;
        }
    std::vector<ConeRow> out;
    std::set<std::pair<RVec, std::string>> seen;
    if (eq) {
        for (const auto& r : rows) {
            if (&r == eq) continue;
            if (sgn(r.coeffs[v]) == 0) {
                push_unique(out, seen, normalized(r));
                continue;
            }
            ConeRow c = combine(r, 1, *eq, -r.coeffs[v] / eq->coeffs[v]);
            c.rel = r.rel;
            c.label = r.label;
            push_unique(out, seen, normalized(std::move(c)));
        }
        return out;
    }
    std::vector<const ConeRow*> pos, neg;
    for (const auto& r : rows) {
        int s = sgn(r.coeffs[v]);
        if (s == 0) push_unique(out, seen, normalized(r));
        else if (r.rel == Relation::Eq) throw Error("unreachable: equation left during elimination");
        else (s > 0 ? pos : neg).push_back(&r);
    }
    for (auto* p : pos)
        for (auto* q : neg)
            push_unique(out, seen, combine(*p, -q->coeffs[v], *q, p->coeffs[v]));
    return out;
}

std::size_t pick_variable(const std::vector<ConeRow>& rows, const std::vector<std::size_t>& todo) {
    std::size_t best = todo.front();
    std::optional<long long> best_cost;
    for (auto v : todo) {
        long long pos = 0, neg = 0;
        for (const auto& r : rows) {
            int s = sgn(r.coeffs[v]);
            if (s == 0) continue;
            if (r.rel == Relation::Eq) return v;
            (s > 0 ? pos : neg)++;
        }
        long long cost = pos * neg - pos - neg;
        if (!best_cost || cost < *best_cost) {
            best = v;
            best_cost = cost;
        }
    }
    return best;
}

// Interval for coordinate v given all other coordinates of x.
struct Bounds {
    std::optional<Rational> lo, hi, fixed;
    bool empty = false;
};

Bounds bounds_for(const std::vector<ConeRow>& rows, std::size_t v, const RVec& x) {
    Bounds b;
    for (const auto& r : rows) {
        const Rational& a = r.coeffs[v];
        Rational rest = r.constant;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (i != v && sgn(r.coeffs[i]) != 0) rest += r.coeffs[i] * x[i];
        if (sgn(a) == 0) {
            if (r.rel == Relation::Eq ? sgn(rest) != 0 : sgn(rest) < 0) b.empty = true;
            continue;
        }
        Rational t = -rest / a;
        if (r.rel == Relation::Eq) {
            if (b.fixed && *b.fixed != t) b.empty = true;
            b.fixed = t;
        } else if (sgn(a) > 0) {
            if (!b.lo || t > *b.lo) b.lo = t;
        } else {
            if (!b.hi || t < *b.hi) b.hi = t;
        }
    }
    if (b.lo && b.hi && *b.lo > *b.hi) b.empty = true;
    if (b.fixed && ((b.lo && *b.fixed < *b.lo) || (b.hi && *b.fixed > *b.hi))) b.empty = true;
    return b;
}

Rational ceil_q(const Rational& q) {
    Integer z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(z);
}

Rational floor_q(const Rational& q) {
    Integer z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(z);
}

Rational choose(const Bounds& b) {
    if (b.fixed) return *b.fixed;
    if (b.lo && b.hi) {
        Rational c = ceil_q(*b.lo);
        return c <= *b.hi ? c : *b.lo;
    }
    if (b.lo) return ceil_q(*b.lo);
    if (b.hi) return floor_q(*b.hi);
    return 0;
}

// Fourier-Motzkin with back-substitution over coordinates [0, dim). Coordinates
// listed in keep are eliminated last and pinned by the caller's chooser.
std::optional<RVec> fm_solve(std::vector<ConeRow> rows, std::size_t dim, std::optional<std::size_t> eps) {
    std::vector<std::size_t> todo;
    for (std::size_t v = 0; v < dim; ++v)
        if (!eps || v != *eps) todo.push_back(v);
    std::vector<std::pair<std::size_t, std::vector<ConeRow>>> stages;
    while (!todo.empty()) {
        std::size_t v = pick_variable(rows, todo);
        todo.erase(std::find(todo.begin(), todo.end(), v));
        std::vector<ConeRow> involved;
        for (const auto& r : rows)
            if (sgn(r.coeffs[v]) != 0) involved.push_back(r);
        rows = eliminate(rows, v);
        stages.emplace_back(v, std::move(involved));
        for (const auto& r : rows)
            if (is_trivial(r) && (r.rel == Relation::Eq ? sgn(r.constant) != 0 : sgn(r.constant) < 0))
                return std::nullopt;
    }
    RVec x(dim, 0);
    if (eps) {
        Bounds b = bounds_for(rows, *eps, x);
        if (b.empty) return std::nullopt;
        Rational e = b.fixed ? *b.fixed : (b.hi ? std::min(*b.hi, Rational(1)) : Rational(1));
        if (sgn(e) <= 0 || (b.lo && e < *b.lo)) return std::nullopt;
        x[*eps] = e;
    } else {
        for (const auto& r : rows)
            if (r.rel == Relation::Eq ? sgn(r.constant) != 0 : sgn(r.constant) < 0) return std::nullopt;
    }
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        Bounds b = bounds_for(it->second, it->first, x);
        if (b.empty) return std::nullopt;
        x[it->first] = choose(b);
    }
    return x;
}

std::optional<RVec> greedy(const ConeH& c, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> rank_of(c.dim());
    for (std::size_t p = 0; p < order.size(); ++p) rank_of[order[p]] = p;
    std::vector<std::vector<const ConeRow*>> at(c.dim());
    for (const auto& r : c.rows()) {
        std::optional<std::size_t> last;
        for (std::size_t i = 0; i < c.dim(); ++i)
            if (sgn(r.coeffs[i]) != 0 && (!last || rank_of[i] > rank_of[*last])) last = i;
        if (!last) {
            if (r.rel == Relation::Eq ? sgn(r.constant) != 0 : sgn(r.constant) <= 0) return std::nullopt;
            continue;
        }
        at[*last].push_back(&r);
    }
    RVec x(c.dim(), 0);
    for (auto v : order) {
        std::optional<Rational> lo, hi, fixed;
        for (const ConeRow* r : at[v]) {
            Rational rest = r->constant;
            for (std::size_t i = 0; i < c.dim(); ++i)
                if (i != v && sgn(r->coeffs[i]) != 0) rest += r->coeffs[i] * x[i];
            Rational t = -rest / r->coeffs[v];
            if (r->rel == Relation::Eq) {
                if (fixed && *fixed != t) return std::nullopt;
                fixed = t;
            } else if (sgn(r->coeffs[v]) > 0) {
                if (!lo || t > *lo) lo = t;
            } else if (!hi || t < *hi) {
                hi = t;
            }
        }
        Rational val;
        if (fixed) val = *fixed;
        else if (lo && hi) {
            if (*lo >= *hi) return std::nullopt;
            val = (*lo + *hi) / 2;
        } else if (lo) val = floor_q(*lo) + 1;
        else if (hi) val = ceil_q(*hi) - 1;
        else val = 0;
        x[v] = val;
    }
    if (!c.contains_strictly(x)) return std::nullopt;
    return x;
}

std::optional<RVec> independent_solve(const ConeH& c) {
    RMatrix a;
    RVec b;
    for (const auto& r : c.rows()) {
        a.push_back(r.coeffs);
        b.push_back((r.rel == Relation::Eq ? Rational(0) : Rational(1)) - r.constant);
    }
    if (a.empty() || rank(a, c.dim()) != a.size()) return std::nullopt;
    auto x = solve(a, b, c.dim());
    if (x && c.contains_strictly(*x)) return x;
    return std::nullopt;
}

}  // namespace

ConeH fm_eliminate(const ConeH& c, std::size_t idx) {
    if (idx >= c.dim()) throw UsageError("fm_eliminate: coordinate out of range");
    ConeH out(c.dim());
    for (auto& r : eliminate(c.rows(), idx))
        if (!is_trivial(r) || (r.rel == Relation::Eq ? sgn(r.constant) != 0 : sgn(r.constant) < 0))
            out.add(std::move(r));
    return out;
}

std::optional<RVec> strict_point(const ConeH& c, const std::vector<std::size_t>& order) {
    if (auto x = greedy(c, order)) return x;
    if (auto x = independent_solve(c)) return x;
    std::size_t e = c.dim();
    std::vector<ConeRow> rows;
    for (const auto& r : c.rows()) {
        ConeRow s = r;
        s.coeffs.push_back(r.rel == Relation::Eq ? Rational(0) : Rational(-1));
        rows.push_back(normalized(std::move(s)));
    }
    auto x = fm_solve(std::move(rows), c.dim() + 1, e);
    if (!x) return std::nullopt;
    x->pop_back();
    if (!c.contains_strictly(*x)) throw Error("strict_point: back-substitution produced an invalid point");
    return x;
}

std::optional<RVec> strict_point(const ConeH& c) {
    std::vector<std::size_t> order(c.dim());
    std::iota(order.begin(), order.end(), 0);
    return strict_point(c, order);
}

std::optional<RVec> feasible_point(const ConeH& c) {
    std::vector<ConeRow> rows;
    for (const auto& r : c.rows()) rows.push_back(normalized(r));
    auto x = fm_solve(std::move(rows), c.dim(), std::nullopt);
    if (x && !c.contains(*x)) throw Error("feasible_point: back-substitution produced an invalid point");
    return x;
}

}  // namespace spflag
