#include "spflag/groebner.hpp"
#include "spflag/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spflag;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

DominantWeight weight_of(const std::vector<int>& m) {
    for (int x : m)
        if (x < 0) throw UsageError("weight coefficients must be nonnegative");
    if (m.empty()) throw UsageError("empty weight");
    return DominantWeight{m};
}

SignConvention sign_of(const std::string& s) {
    if (s == "min") return SignConvention::MinConvention;
    if (s == "paper") return SignConvention::PaperW;
    throw UsageError("sign must be 'min' or 'paper'");
}

}  // namespace

PYBIND11_MODULE(_spflag, m) {
    m.doc() = "FFLV polytopes, degree cones and Pluecker ideals for symplectic flag varieties";
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    m.def("lattice_points", [](const std::vector<int>& lambda) {
        auto w = weight_of(lambda);
        Json out = Json::array();
        for (const auto& s : lattice_points(w)) out.push_back(exponent_json(w.n(), s));
        return to_py(out);
    }, py::arg("lam"));
    m.def("weyl_dim", [](const std::vector<int>& lambda) { return weyl_dim(weight_of(lambda)).get_str(); },
          py::arg("lam"));
    m.def("k_cone", [](int n) { return to_py(cone_json(k_cone_h(n))); }, py::arg("n"));
    m.def("c_cone", [](int n, const std::string& sign) { return to_py(cone_json(c_cone_h(n, sign_of(sign)))); },
          py::arg("n"), py::arg("sign") = "min");
    m.def("membership", [](int n, const py::dict& d) {
        auto r = membership(n, degree_from_json(n, from_py(d)));
        const char* kind = r.kind == Membership::Interior ? "interior" : r.kind == Membership::Boundary ? "boundary" : "outside";
        return to_py({{"membership", kind}, {"tight", r.tight}, {"violated", r.violated}});
    }, py::arg("n"), py::arg("d"));
    m.def("interior_point", [](int n) {
        auto p = strict_point(k_cone_h(n));
        if (!p) throw Error("no interior point found");
        return to_py(degree_json(n, *p));
    }, py::arg("n"));
    m.def("tropical_point", [](int n, const py::dict& d, const std::string& sign) {
        return to_py(tropical_json(n, tropical_point(n, degree_from_json(n, from_py(d)), sign_of(sign))));
    }, py::arg("n"), py::arg("d"), py::arg("sign") = "min");
    m.def("generators", [](int n) {
        PlueckerRing R(n);
        std::vector<std::string> out;
        for (const auto& f : generators(R).all()) out.push_back(R.str(f));
        return out;
    }, py::arg("n"));
    m.def("initial_ideal", [](int n, const py::dict& weight) {
        PlueckerRing R(n);
        auto gb = buchberger(generators(R).all(), MonomialOrder(tropical_from_json(n, from_py(weight))));
        std::vector<std::string> out;
        for (const auto& f : initial_ideal_generators(gb)) out.push_back(R.str(f));
        return out;
    }, py::arg("n"), py::arg("weight"));
    m.def("hilbert_count", [](const py::dict& weight, const std::vector<int>& lambda) {
        auto w = weight_of(lambda);
        PlueckerRing R(w.n());
        auto gb = buchberger(generators(R).all(), MonomialOrder(tropical_from_json(w.n(), from_py(weight))));
        return hilbert_count(R, gb, w).get_str();
    }, py::arg("weight"), py::arg("lam"));
    m.def("chart_polynomial", [](int n, const std::string& J) {
        Chart c(n);
        return c.str(c.p(parse_index(n, J)));
    }, py::arg("n"), py::arg("J"));
    m.def("degenerate_chart", [](int n, const py::dict& d) {
        Chart c(n);
        auto dp = degree_from_json(n, from_py(d));
        const auto& R = c.ring();
        std::map<std::string, std::string> out;
        for (const auto& K : R.indices())
            out[index_key(n, K)] = c.str(c.phi_d(SparsePoly::variable(R.universe(), R.var(K)), dp));
        return out;
    }, py::arg("n"), py::arg("d"));
    m.def("tableaux", [](const std::vector<int>& lambda) {
        auto w = weight_of(lambda);
        Json out = Json::array();
        for (const auto& T : enumerate_tableaux(w)) out.push_back(tableau_json(w.n(), T));
        return to_py(out);
    }, py::arg("lam"));
    m.def("rho", [](int n, const py::list& tableau) {
        auto T = tableau_from_json(n, from_py(tableau));
        if (!is_pbw(n, T)) throw UsageError("tableau violates the PBW conditions");
        Chart c(n);
        return to_py(exponent_json(n, rho_lambda(c, T)));
    }, py::arg("n"), py::arg("tableau"));
    m.def("verify", [](int n, const std::string& level, std::uint64_t seed) {
        auto lvl = parse_level(level);
        return to_py(reports_json(n, lvl, seed, run_verify(n, lvl, seed)));
    }, py::arg("n"), py::arg("level") = "quick", py::arg("seed") = 0);
}
