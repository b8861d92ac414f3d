#pragma once

#include "spflag/fflv.hpp"
#include "spflag/poly.hpp"

#include <map>
#include <optional>

namespace spflag {

// Strictly increasing tuple of letter codes.
using PlueckerIndex = std::vector<int>;

std::vector<PlueckerIndex> pluecker_indices(int n);
PlueckerIndex parse_index(int n, const std::string& csv);
std::string index_key(int n, const PlueckerIndex& J);  // comma-joined signed letters
std::string index_name(int n, const PlueckerIndex& J);

struct SignedIndex {
    int sign = 0;  // 0 when the tuple repeats a letter
    PlueckerIndex index;
};
SignedIndex normalize(const std::vector<int>& raw);

class PlueckerRing {
public:
    explicit PlueckerRing(int n);

    int n() const { return n_; }
    const Universe& universe() const { return universe_; }
    const std::vector<PlueckerIndex>& indices() const { return indices_; }
    std::size_t var(const PlueckerIndex& J) const;
    const std::vector<std::string>& names() const { return names_; }

    // Signed coordinate of an arbitrary tuple.
    SparsePoly X(const std::vector<int>& raw) const;
    std::string str(const SparsePoly& f) const { return to_string(f, names_); }

private:
    int n_;
    Universe universe_;
    std::vector<PlueckerIndex> indices_;
    std::map<PlueckerIndex, std::size_t> var_;
    std::vector<std::string> names_;
};

SparsePoly quad_relation(const PlueckerRing& R, const PlueckerIndex& L, const PlueckerIndex& J, int s);

bool reverse_admissible(int n, const std::vector<int>& I1, const std::vector<int>& I2);
SparsePoly linear_relation(const PlueckerRing& R, const std::vector<int>& I1, const std::vector<int>& I2);

struct Generators {
    std::vector<SparsePoly> quadratic;
    std::vector<SparsePoly> linear;
    std::vector<SparsePoly> all() const;
};
Generators generators(const PlueckerRing& R);

// Multidegree of a monomial in the Pluecker ring: counts of each index size.
DominantWeight multidegree(const PlueckerRing& R, const Exponent& e);

// Root assigned to a pair of letters i < j.
PositiveRoot s_min(int n, int i, int j);
// Anti-diagonal matching of I\J against J\I; nothing when some pair is not increasing.
std::optional<MultiExponent> s_IJ(int n, const PlueckerIndex& I, const PlueckerIndex& J);
PlueckerIndex first_k(int k);

}  // namespace spflag
