#include "spflag/json_io.hpp"

#include <fstream>

namespace spflag {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw UsageError("expected a rational as a string or integer");
}

Json poly_json(const SparsePoly& f, const std::vector<std::string>& names) {
    Json terms = Json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        Json exp = Json::array();
        for (std::size_t v = 0; v < it->first.size(); ++v)
            if (it->first[v]) exp.push_back(Json::array({names.at(v), it->first[v]}));
        terms.push_back({{"coef", rational_json(it->second)}, {"exp", exp}});
    }
    return {{"schema", kSchema}, {"terms", terms}};
}

SparsePoly poly_from_json(const Json& j, const Universe& u, const std::vector<std::string>& names) {
    if (!j.is_object() || !j.contains("terms")) throw UsageError("polynomial JSON needs a terms array");
    SparsePoly f(u);
    for (const auto& t : j.at("terms")) {
        Exponent e(u.num_vars, 0);
        for (const auto& pr : t.at("exp")) {
            std::size_t v;
            if (pr.at(0).is_string()) {
                auto it = std::find(names.begin(), names.end(), pr.at(0).get<std::string>());
                if (it == names.end()) throw UsageError("unknown variable " + pr.at(0).get<std::string>());
                v = static_cast<std::size_t>(it - names.begin());
            } else {
                v = pr.at(0).get<std::size_t>();
                if (v >= u.num_vars) throw UsageError("variable index out of range");
            }
            int p = pr.at(1).get<int>();
            if (p < 0) throw UsageError("negative exponent");
            e[v] += p;
        }
        f.add_term(e, rational_from_json(t.at("coef")));
    }
    return f;
}

Json degree_json(int n, const DegreePoint& d) {
    Json j = Json::object();
    for (const auto& r : positive_roots(n)) j[degree_key(n, r)] = rational_json(d[root_index(n, r)]);
    return j;
}

DegreePoint degree_from_json(int n, const Json& j) {
    if (!j.is_object()) throw UsageError("degree point must be a JSON object");
    DegreePoint d(num_positive_roots(n), 0);
    std::vector<bool> seen(d.size(), false);
    for (const auto& [key, val] : j.items()) {
        if (key == "schema") continue;
        auto idx = root_index(n, parse_degree_key(n, key));
        Rational q = rational_from_json(val);
        if (seen[idx] && d[idx] != q) throw UsageError("conflicting values for " + key);
        d[idx] = q;
        seen[idx] = true;
    }
    for (bool s : seen)
        if (!s) throw UsageError("degree point misses a root");
    return d;
}

Json tropical_json(int n, const TropicalPoint& v) {
    Json j = Json::object();
    auto idx = pluecker_indices(n);
    for (std::size_t i = 0; i < idx.size(); ++i) j[index_key(n, idx[i])] = rational_json(v[i]);
    return j;
}

TropicalPoint tropical_from_json(int n, const Json& j) {
    if (!j.is_object()) throw UsageError("weight must be a JSON object");
    PlueckerRing R(n);
    TropicalPoint v(R.indices().size(), 0);
    std::vector<bool> seen(v.size(), false);
    for (const auto& [key, val] : j.items()) {
        if (key == "schema") continue;
        auto var = R.var(parse_index(n, key));
        v[var] = rational_from_json(val);
        seen[var] = true;
    }
    for (bool s : seen)
        if (!s) throw UsageError("weight misses a Pluecker index");
    return v;
}

Json exponent_json(int n, const MultiExponent& s) {
    Json j = Json::object();
    for (const auto& r : positive_roots(n))
        if (int c = s[root_index(n, r)]) j[degree_key(n, r)] = c;
    return j;
}

Json cone_json(const ConeH& c) {
    Json rows = Json::array();
    for (const auto& r : c.rows()) {
        Json coeffs = Json::array();
        for (const auto& q : r.coeffs) coeffs.push_back(rational_json(q));
        rows.push_back({{"label", r.label},
                        {"relation", r.rel == Relation::Eq ? "eq" : "geq"},
                        {"coeffs", coeffs},
                        {"constant", rational_json(r.constant)}});
    }
    return {{"schema", kSchema}, {"dim", c.dim()}, {"rows", rows}};
}

Json tableau_json(int n, const Tableau& T) {
    Json cols = Json::array();
    for (const auto& c : T.columns) {
        Json col = Json::array();
        for (int x : c) col.push_back(to_signed(n, x));
        cols.push_back(col);
    }
    return cols;
}

Tableau tableau_from_json(int n, const Json& j) {
    Json cols = j.is_object() ? j.at("columns") : j;
    if (!cols.is_array()) throw UsageError("tableau must be an array of columns");
    Tableau T;
    for (const auto& col : cols) {
        Column c;
        for (const auto& x : col) c.push_back(from_signed(n, x.get<int>()));
        if (c.empty() || static_cast<int>(c.size()) > n) throw UsageError("column length out of range");
        T.columns.push_back(c);
    }
    return T;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("bad JSON in " + path + ": " + e.what());
    }
}

}  // namespace spflag
