#pragma once

#include "spflag/chart.hpp"
#include "spflag/fflv.hpp"

namespace spflag {

using Column = std::vector<int>;  // letter codes, top to bottom

struct Tableau {
    std::vector<Column> columns;  // left to right, weakly decreasing lengths
    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;
};

std::vector<int> column_lengths(const DominantWeight& lambda);
DominantWeight shape_of(int n, const Tableau& T);

bool column_is_pbw(int n, const Column& c);
bool columns_compatible(const Column& left, const Column& right);
bool is_pbw(int n, const Tableau& T);

std::vector<Column> pbw_columns(int n, int length);
std::vector<Tableau> enumerate_tableaux(const DominantWeight& lambda);

Column strip_of(int n, const PlueckerIndex& J);
Column standardize(int n, Column c);
PlueckerIndex content(const Column& c);

MultiExponent rho_k(const Chart& chart, const Column& c);
MultiExponent rho_closed(int n, const Column& c);
MultiExponent rho_lambda(const Chart& chart, const Tableau& T);

}  // namespace spflag
