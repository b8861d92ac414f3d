#pragma once

#include "spflag/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace spflag {

enum class UniverseKind { Pluecker, Chart, Internal };

struct Universe {
    UniverseKind kind = UniverseKind::Internal;
    int rank = 0;
    std::size_t num_vars = 0;
    bool operator==(const Universe&) const = default;
};

using Exponent = std::vector<int>;

Rational weight_of(const Exponent& e, const RVec& w);
int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);

class SparsePoly {
public:
    using Terms = std::map<Exponent, Rational>;

    SparsePoly() = default;
    explicit SparsePoly(Universe u) : universe_(u) {}

    static SparsePoly constant(Universe u, const Rational& c);
    static SparsePoly variable(Universe u, std::size_t idx);
    static SparsePoly monomial(Universe u, Exponent e, const Rational& c = 1);

    const Universe& universe() const { return universe_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponent& e, const Rational& c);
    Rational coefficient(const Exponent& e) const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const Rational& c);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly operator-() const { return *this * Rational(-1); }
    SparsePoly mul_monomial(const Exponent& e, const Rational& c) const;
    SparsePoly pow(int k) const;

    bool operator==(const SparsePoly& o) const {
        return universe_ == o.universe_ && terms_ == o.terms_;
    }

private:
    void check(const SparsePoly& o) const;
    Universe universe_;
    Terms terms_;
};

// Terms of minimal weight.
SparsePoly initial_form(const SparsePoly& f, const RVec& w);

// Same up to a nonzero global scalar.
bool equal_up_to_scalar(const SparsePoly& a, const SparsePoly& b);
// Divides by the leading (largest exponent) coefficient.
SparsePoly monic(const SparsePoly& f);

std::string to_string(const SparsePoly& f, const std::vector<std::string>& names);

// Reads sums of terms like "-2*t2*t3^2*z1"; names may contain brackets and commas.
SparsePoly parse_poly(const std::string& text, const Universe& u, const std::vector<std::string>& names);

}  // namespace spflag
