#pragma once

#include "spflag/cone.hpp"
#include "spflag/lie.hpp"

#include <vector>

namespace spflag {

// lambda = sum m_k omega_k
struct DominantWeight {
    std::vector<int> m;

    int n() const { return static_cast<int>(m.size()); }
    int height() const;
    bool is_zero() const { return height() == 0; }
    DominantWeight operator+(const DominantWeight& o) const;
    bool operator==(const DominantWeight&) const = default;
    static DominantWeight fundamental(int n, int k);
};

DominantWeight parse_weight(int n, const std::string& csv);
std::vector<DominantWeight> weights_up_to_height(int n, int h);

// Multiplicities indexed by root_index.
using MultiExponent = std::vector<int>;
MultiExponent operator+(const MultiExponent& a, const MultiExponent& b);

using DyckPath = std::vector<PositiveRoot>;
std::vector<DyckPath> dyck_paths(int n);
int path_bound(const DominantWeight& lambda, const DyckPath& p);

ConeH fflv_h(const DominantWeight& lambda);
bool in_fflv(const DominantWeight& lambda, const MultiExponent& s);
std::vector<MultiExponent> lattice_points(const DominantWeight& lambda);

// a strictly before b on some Dyck path.
bool poset_less(int n, const PositiveRoot& a, const PositiveRoot& b);

struct DecompositionStep {
    int k;
    MultiExponent piece;
};
// Greedy splitting s = s_1 + ... + s_h with s_r in S(omega_{k_r}).
std::vector<DecompositionStep> standard_decomposition(const MultiExponent& s, const DominantWeight& lambda);

Integer weyl_dim(const DominantWeight& lambda);

struct MinkowskiReport {
    bool equal = false;
    std::size_t sums = 0;
    std::size_t target = 0;
};
MinkowskiReport minkowski_check(const DominantWeight& lambda, const DominantWeight& mu);

}  // namespace spflag
