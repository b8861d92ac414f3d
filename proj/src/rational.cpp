#include "spflag/rational.hpp"

namespace spflag {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw UsageError("empty rational");
    if (s.front() == '+') s.erase(s.begin());
    Rational q;
    if (q.set_str(s, 10) != 0) throw UsageError("bad rational: " + std::string(text));
    if (q.get_den() == 0) throw UsageError("zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
}

Rational dot(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw Error("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

RVec to_rvec(const std::vector<int>& v) {
    RVec r;
    r.reserve(v.size());
    for (int x : v) r.emplace_back(x);
    return r;
}

void make_primitive(RVec& v) {
    Integer l = 1, g = 0;
    for (const auto& x : v) {
        if (sgn(x) == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g == 0) return;
    for (auto& x : v) x /= g;
}

}  // namespace spflag
