#pragma once

#include "spflag/cone.hpp"
#include "spflag/fflv.hpp"
#include "spflag/pluecker.hpp"

#include <random>

namespace spflag {

// Degree functions on the positive roots, indexed by root_index.
using DegreePoint = RVec;
using TropicalPoint = RVec;  // indexed like PlueckerRing::indices()
using Rng = std::mt19937_64;

// MinConvention: v(J) = +deg(s_{[k],J}); PaperW: v(J) = -deg(s_{[k],J}).
enum class SignConvention { MinConvention, PaperW };

std::string degree_key(int n, const PositiveRoot& r);
PositiveRoot parse_degree_key(int n, const std::string& key);

// d at alpha_{i,q} for a letter code q.
const Rational& d_at(int n, const DegreePoint& d, int i, int q);

ConeH k_cone_h(int n);
ConeH derived_inequalities(int n);
RMatrix lineality_basis(int n);

enum class Membership { Interior, Boundary, Outside };
struct MembershipResult {
    Membership kind;
    std::vector<std::string> tight;
    std::vector<std::string> violated;
};
MembershipResult membership(int n, const DegreePoint& d);

// Nonnegative multipliers expressing row in the facet rows of K, if any.
std::optional<RVec> facet_certificate(int n, const RVec& row);

Rational degree_of(const MultiExponent& s, const DegreePoint& d);

RMatrix weight_matrix(int n);
TropicalPoint tropical_point(int n, const DegreePoint& d, SignConvention sign = SignConvention::MinConvention);
ConeH c_cone_h(int n, SignConvention sign = SignConvention::MinConvention);

// In the associated graded algebra [f_a, f_b] dies exactly when d_a + d_b > d_{a+b}.
bool degenerate_bracket_vanishes(int n, const DegreePoint& d, const PositiveRoot& a, const PositiveRoot& b);

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);
// Random point of K: interior when boundary is false, else on at least one facet.
DegreePoint sample_k(int n, Rng& rng, bool boundary);

}  // namespace spflag
