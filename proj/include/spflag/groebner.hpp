#pragma once

#include "spflag/fflv.hpp"
#include "spflag/pluecker.hpp"
#include "spflag/poly.hpp"

namespace spflag {

// Refines the min-weight order: smaller weight is larger, then degree, then lex.
class MonomialOrder {
public:
    explicit MonomialOrder(RVec weight) : weight_(std::move(weight)) {}
    const RVec& weight() const { return weight_; }
    // <0, 0, >0 as a is smaller, equal, larger than b
    int compare(const Exponent& a, const Exponent& b) const;

private:
    RVec weight_;
};

struct Term {
    Exponent exp;
    Rational coef;
};
Term leading_term(const SparsePoly& f, const MonomialOrder& ord);

class ResourceLimit : public Error {
public:
    using Error::Error;
};

struct GroebnerLimits {
    std::size_t max_basis = 2000;
    std::size_t max_pairs = 200000;
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<SparsePoly> polys;  // reduced, leading coefficient 1
    std::vector<Exponent> leading;
};

GroebnerBasis buchberger(const std::vector<SparsePoly>& gens, const MonomialOrder& ord,
                         const GroebnerLimits& lim = {});
SparsePoly normal_form(const SparsePoly& f, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const SparsePoly& f);

// Generators of in_v(I) read off a basis computed for the order refining v.
std::vector<SparsePoly> initial_ideal_generators(const GroebnerBasis& gb);

// Monomials of multidegree lambda in the Pluecker ring.
std::vector<Exponent> monomials_of_degree(const PlueckerRing& R, const DominantWeight& lambda);
Integer hilbert_count(const PlueckerRing& R, const GroebnerBasis& gb, const DominantWeight& lambda);

}  // namespace spflag
