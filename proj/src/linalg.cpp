#include "spflag/linalg.hpp"

namespace spflag {

Rref rref(RMatrix m, std::size_t cols) {
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const RMatrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

RMatrix kernel_basis(const RMatrix& m, std::size_t cols) {
    Rref e = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    RMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RVec v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RVec> solve(const RMatrix& m, const RVec& b, std::size_t cols) {
    RMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Rref e = rref(aug, cols + 1);
    RVec x(cols, 0);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == cols) return std::nullopt;
        x[e.pivots[i]] = e.rows[i][cols];
    }
    return x;
}

bool same_row_space(const RMatrix& a, const RMatrix& b, std::size_t cols) {
    return rref(a, cols).rows == rref(b, cols).rows;
}

bool in_row_space(const RMatrix& m, const RVec& v) {
    if (m.empty()) {
        for (auto& x : v)
            if (sgn(x) != 0) return false;
        return true;
    }
    RMatrix ext = m;
    ext.push_back(v);
    return rank(ext, v.size()) == rank(m, v.size());
}

RMatrix transpose(const RMatrix& m, std::size_t cols) {
    RMatrix t(cols, RVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace spflag
