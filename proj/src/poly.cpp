#include "spflag/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace spflag {

Rational weight_of(const Exponent& e, const RVec& w) {
    if (e.size() != w.size()) throw Error("weight length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) s += w[i] * e[i];
    return s;
}

int total_degree(const Exponent& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

SparsePoly SparsePoly::constant(Universe u, const Rational& c) {
    SparsePoly p(u);
    p.add_term(Exponent(u.num_vars, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(Universe u, std::size_t idx) {
    if (idx >= u.num_vars) throw Error("variable index out of range");
    Exponent e(u.num_vars, 0);
    e[idx] = 1;
    return monomial(u, e);
}

SparsePoly SparsePoly::monomial(Universe u, Exponent e, const Rational& c) {
    if (e.size() != u.num_vars) throw Error("exponent length mismatch");
    SparsePoly p(u);
    p.add_term(e, c);
    return p;
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Rational SparsePoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::check(const SparsePoly& o) const {
    if (!(universe_ == o.universe_)) throw Error("polynomials from different universes");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check(b);
    SparsePoly r(a.universe_);
    Exponent e(a.universe_.num_vars);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

SparsePoly SparsePoly::mul_monomial(const Exponent& m, const Rational& c) const {
    SparsePoly r(universe_);
    for (const auto& [e, v] : terms_) {
        Exponent s = e;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
        r.terms_.emplace_hint(r.terms_.end(), std::move(s), v * c);
    }
    return r;
}

SparsePoly SparsePoly::pow(int k) const {
    SparsePoly r = constant(universe_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

SparsePoly initial_form(const SparsePoly& f, const RVec& w) {
    SparsePoly r(f.universe());
    if (f.is_zero()) return r;
    bool first = true;
    Rational best;
    for (const auto& [e, c] : f.terms()) {
        Rational s = weight_of(e, w);
        if (first || s < best) {
            best = s;
            first = false;
        }
    }
    for (const auto& [e, c] : f.terms())
        if (weight_of(e, w) == best) r.add_term(e, c);
    return r;
}

SparsePoly monic(const SparsePoly& f) {
    if (f.is_zero()) return f;
    return f * Rational(1 / f.terms().rbegin()->second);
}

bool equal_up_to_scalar(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return monic(a) == monic(b);
}

std::string to_string(const SparsePoly& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = total_degree(e) > 0 && a == 1;
        if (!unit) os << a.get_str();
        bool need_star = !unit;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

SparsePoly parse_poly(const std::string& text, const Universe& u, const std::vector<std::string>& names) {
    SparsePoly f(u);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto fail = [&](const std::string& why) { throw UsageError("cannot parse polynomial: " + why + " in '" + text + "'"); };
    skip();
    if (pos == text.size()) fail("empty input");
    if (text.substr(pos) == "0") return f;
    while (pos < text.size()) {
        Rational sign = 1;
        skip();
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip();
        }
        Rational coef = 1;
        Exponent e(u.num_vars, 0);
        bool any = false;
        while (true) {
            skip();
            if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])))) {
                std::size_t end = pos;
                while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/')) ++end;
                coef *= parse_rational(text.substr(pos, end - pos));
                pos = end;
            } else {
                std::size_t end = pos;
                int depth = 0;
                while (end < text.size()) {
                    char c = text[end];
                    if (c == '[') ++depth;
                    if (c == ']') --depth;
                    if (depth == 0 && (c == '*' || c == '^' || c == '+' || c == ' ' || (c == '-' && end > pos))) break;
                    ++end;
                }
                std::string name = text.substr(pos, end - pos);
                auto it = std::find(names.begin(), names.end(), name);
                if (it == names.end()) fail("unknown variable '" + name + "'");
                pos = end;
                int power = 1;
                if (pos < text.size() && text[pos] == '^') {
                    std::size_t p2 = ++pos;
                    while (p2 < text.size() && std::isdigit(static_cast<unsigned char>(text[p2]))) ++p2;
                    if (p2 == pos) fail("missing exponent");
                    power = std::stoi(text.substr(pos, p2 - pos));
                    pos = p2;
                }
                e[static_cast<std::size_t>(it - names.begin())] += power;
            }
            any = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        f.add_term(e, sign * coef);
        skip();
        if (pos < text.size() && text[pos] != '+' && text[pos] != '-') fail("unexpected character");
    }
    return f;
}

}  // namespace spflag
