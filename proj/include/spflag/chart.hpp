#pragma once

#include "spflag/degree_cone.hpp"
#include "spflag/pluecker.hpp"

namespace spflag {

// f_beta acting on e_J in the exterior power; terms with signs.
std::vector<std::pair<PlueckerIndex, int>> wedge_act(int n, const PositiveRoot& beta, const PlueckerIndex& J);

std::vector<int> weight_of_index(int n, const PlueckerIndex& J);  // epsilon coordinates

class Chart {
public:
    explicit Chart(int n) : Chart(n, default_good_sequence(n)) {}
    Chart(int n, GoodSequence seq);

    int n() const { return n_; }
    const GoodSequence& sequence() const { return seq_; }
    const Universe& universe() const { return universe_; }
    const PlueckerRing& ring() const { return ring_; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t t_var(std::size_t pos) const { return pos; }
    std::size_t z_var(int k) const { return seq_.size() + k - 1; }

    const SparsePoly& p(const PlueckerIndex& J) const { return p_.at(ring_.var(J)); }

    // Degree of each chart variable: d at the root for t_i, zero for z_k.
    RVec chart_weight(const DegreePoint& d) const;
    SparsePoly in_d(const SparsePoly& f, const DegreePoint& d) const;

    SparsePoly phi(const SparsePoly& f) const;
    SparsePoly phi_d(const SparsePoly& f, const DegreePoint& d) const;

    // Minimal exponent when a ranks below b as soon as a - b has a positive
    // leading entry, so higher roots in the good sequence are split off first.
    Exponent nu_r(const SparsePoly& f) const;
    // Minimal exponent when a > b whenever the last nonzero entry of a - b is positive.
    Exponent nu_r_last_coordinate(const SparsePoly& f) const;
    MultiExponent project_t(const Exponent& e) const;

    std::string str(const SparsePoly& f) const { return to_string(f, names_); }

private:
    SparsePoly substitute(const SparsePoly& f, const std::vector<SparsePoly>& images) const;

    int n_;
    GoodSequence seq_;
    Universe universe_;
    PlueckerRing ring_;
    std::vector<std::string> names_;
    std::vector<SparsePoly> p_;  // images of X_J, including z_k
};

// s with e_J^*(f^s e_I) != 0, f^s ordered by the good sequence.
std::vector<MultiExponent> m_set(int n, const GoodSequence& seq, const PlueckerIndex& I, const PlueckerIndex& J);

struct ArgminReport {
    bool defined = false;   // anti-diagonal matching exists
    bool member = false;    // s_IJ lies in M_I^J
    bool attains = false;   // its degree is minimal
    bool unique = false;    // and it is the only minimizer
};
ArgminReport argmin_check(int n, const std::vector<MultiExponent>& M, const PlueckerIndex& I, const PlueckerIndex& J,
                          const DegreePoint& d);

}  // namespace spflag
