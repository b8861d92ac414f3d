#pragma once

#include "spflag/chart.hpp"
#include "spflag/cone.hpp"
#include "spflag/degree_cone.hpp"
#include "spflag/tableaux.hpp"

#include "json.hpp"

namespace spflag {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json poly_json(const SparsePoly& f, const std::vector<std::string>& names);
SparsePoly poly_from_json(const Json& j, const Universe& u, const std::vector<std::string>& names);

Json degree_json(int n, const DegreePoint& d);
DegreePoint degree_from_json(int n, const Json& j);

Json tropical_json(int n, const TropicalPoint& v);
TropicalPoint tropical_from_json(int n, const Json& j);

Json exponent_json(int n, const MultiExponent& s);
Json cone_json(const ConeH& c);
Json tableau_json(int n, const Tableau& T);
Tableau tableau_from_json(int n, const Json& j);

Json read_json_file(const std::string& path);

}  // namespace spflag
