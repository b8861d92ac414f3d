#pragma once

#include "spflag/rational.hpp"

#include <optional>
#include <string>

namespace spflag {

enum class Relation { Eq, Geq };

// coeffs . x + constant  (= or >=)  0
struct ConeRow {
    RVec coeffs;
    Rational constant = 0;
    Relation rel = Relation::Geq;
    std::string label;

    Rational eval(const RVec& x) const { return dot(coeffs, x) + constant; }
    bool operator==(const ConeRow& o) const {
        return coeffs == o.coeffs && constant == o.constant && rel == o.rel;
    }
};

class ConeH {
public:
    ConeH() = default;
    explicit ConeH(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    const std::vector<ConeRow>& rows() const { return rows_; }
    std::vector<ConeRow>& rows() { return rows_; }

    void add(ConeRow r);
    void add_geq(RVec c, std::string label = {}, Rational constant = 0);
    void add_eq(RVec c, std::string label = {}, Rational constant = 0);

    std::size_t count(Relation rel) const;
    RMatrix matrix(Relation rel) const;

    // Primitive integer rows, equations with positive leading entry, duplicates dropped.
    void normalize();

    bool contains(const RVec& x) const;
    bool contains_strictly(const RVec& x) const;  // equations exact, inequalities strict

private:
    std::size_t dim_ = 0;
    std::vector<ConeRow> rows_;
};

ConeRow normalized(ConeRow r);

// Projection along coordinate idx; the result has a zero column at idx.
ConeH fm_eliminate(const ConeH& c, std::size_t idx);

// A point satisfying equations exactly and inequalities strictly.
std::optional<RVec> strict_point(const ConeH& c);
std::optional<RVec> strict_point(const ConeH& c, const std::vector<std::size_t>& order);

// A point satisfying every row (non-strict).
std::optional<RVec> feasible_point(const ConeH& c);

}  // namespace spflag
