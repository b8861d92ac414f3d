#pragma once

#include "spflag/rational.hpp"

#include <optional>

namespace spflag {

struct Rref {
    RMatrix rows;                 // nonzero rows only
    std::vector<std::size_t> pivots;
};

Rref rref(RMatrix m, std::size_t cols);
std::size_t rank(const RMatrix& m, std::size_t cols);

// Basis of {x : m x = 0}; one vector per free column.
RMatrix kernel_basis(const RMatrix& m, std::size_t cols);

// Some x with m x = b (free coordinates zero), or nothing.
std::optional<RVec> solve(const RMatrix& m, const RVec& b, std::size_t cols);

// Row spaces compared through their reduced echelon forms.
bool same_row_space(const RMatrix& a, const RMatrix& b, std::size_t cols);
bool in_row_space(const RMatrix& m, const RVec& v);

RMatrix transpose(const RMatrix& m, std::size_t cols);

}  // namespace spflag
