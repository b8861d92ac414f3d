#include "spflag/groebner.hpp"
#include "spflag/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace spflag;

namespace {

void check_rank(int n) {
    if (n < 1 || n > 6) throw UsageError("--n must lie in 1..6");
}

SignConvention parse_sign(const std::string& s) {
    if (s == "min") return SignConvention::MinConvention;
    if (s == "paper") return SignConvention::PaperW;
    throw UsageError("--sign must be paper or min");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SparsePoly read_poly(const std::string& path, const Universe& u, const std::vector<std::string>& names) {
    std::string text = slurp(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return poly_from_json(Json::parse(text), u, names);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return parse_poly(text, u, names);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symplectic flag varieties: FFLV polytopes, degree cones, Pluecker ideals, tableaux"};
    app.require_subcommand(1);

    int n = 0;
    std::string lambda, point, weight, sign = "min", poly, J, tableau, level = "quick", json_out;
    std::uint64_t seed = 0;
    bool as_json = false;
    int rc = 0;

    auto rank_opt = [&](CLI::App* c) { c->add_option("--n", n, "rank")->required(); };

    auto* fflv = app.add_subcommand("fflv", "FFLV polytopes");
    fflv->require_subcommand(1);
    auto* fflv_points = fflv->add_subcommand("points", "lattice points of FFLV(lambda)");
    rank_opt(fflv_points);
    fflv_points->add_option("--lambda", lambda, "m1,...,mn")->required();
    fflv_points->add_flag("--json", as_json);

    auto* cone = app.add_subcommand("cone", "degree cone and tropical cone");
    cone->require_subcommand(1);
    auto* cone_facets = cone->add_subcommand("facets", "facets of the degree cone");
    rank_opt(cone_facets);
    auto* cone_check = cone->add_subcommand("check", "classify a degree point");
    rank_opt(cone_check);
    cone_check->add_option("--point", point, "degree point JSON")->required();
    auto* cone_interior = cone->add_subcommand("interior", "an interior point of the degree cone");
    rank_opt(cone_interior);
    auto* cone_trop = cone->add_subcommand("trop", "tropical point of a degree point");
    rank_opt(cone_trop);
    cone_trop->add_option("--point", point, "degree point JSON")->required();
    cone_trop->add_option("--sign", sign, "paper|min");
    auto* cone_c = cone->add_subcommand("c", "facet description of the tropical cone");
    rank_opt(cone_c);
    cone_c->add_option("--sign", sign, "paper|min");

    auto* ideal = app.add_subcommand("ideal", "Pluecker ideal");
    ideal->require_subcommand(1);
    auto* ideal_gens = ideal->add_subcommand("generators", "quadratic and linear generators");
    rank_opt(ideal_gens);
    ideal_gens->add_flag("--json", as_json);
    auto* ideal_initial = ideal->add_subcommand("initial", "initial ideal for a weight");
    rank_opt(ideal_initial);
    ideal_initial->add_option("--weight", weight, "weight JSON")->required();
    auto* ideal_hilbert = ideal->add_subcommand("hilbert", "standard monomial count in one multidegree");
    rank_opt(ideal_hilbert);
    ideal_hilbert->add_option("--weight", weight, "weight JSON")->required();
    ideal_hilbert->add_option("--lambda", lambda, "m1,...,mn")->required();

    auto* chart = app.add_subcommand("chart", "birational chart");
    chart->require_subcommand(1);
    auto* chart_pj = chart->add_subcommand("pj", "chart polynomial of a Pluecker coordinate");
    rank_opt(chart_pj);
    chart_pj->add_option("--J", J, "signed letters, e.g. 2,-1")->required();
    auto* chart_phi = chart->add_subcommand("phi", "image of a polynomial under the chart map");
    rank_opt(chart_phi);
    chart_phi->add_option("--poly", poly, "polynomial file (JSON or text)")->required();
    auto* chart_deg = chart->add_subcommand("degenerate", "degenerate chart images");
    rank_opt(chart_deg);
    chart_deg->add_option("--d", point, "degree point JSON")->required();

    auto* tab = app.add_subcommand("tab", "PBW tableaux");
    tab->require_subcommand(1);
    auto* tab_enum = tab->add_subcommand("enumerate", "PBW-semistandard tableaux of a shape");
    rank_opt(tab_enum);
    tab_enum->add_option("--lambda", lambda, "m1,...,mn")->required();
    auto* tab_rho = tab->add_subcommand("rho", "lattice point of a tableau");
    rank_opt(tab_rho);
    tab_rho->add_option("--tableau", tableau, "tableau JSON")->required();

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    rank_opt(verify);
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--level", level, "quick|full");
    verify->add_option("--json", json_out, "write the report here");
    verify->add_option("--sign", sign, "paper|min");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        check_rank(n);
        if (*fflv_points) {
            auto lam = parse_weight(n, lambda);
            auto pts = lattice_points(lam);
            if (as_json) {
                Json arr = Json::array();
                for (const auto& s : pts) arr.push_back(exponent_json(n, s));
                print_json({{"schema", kSchema}, {"lambda", lambda}, {"count", pts.size()}, {"points", arr}});
            } else {
                for (const auto& s : pts) std::cout << exponent_json(n, s).dump() << "\n";
                std::cout << pts.size() << " points\n";
            }
        } else if (*cone_facets) {
            print_json(cone_json(k_cone_h(n)));
        } else if (*cone_check) {
            auto d = degree_from_json(n, read_json_file(point));
            auto m = membership(n, d);
            const char* kind = m.kind == Membership::Interior ? "interior" : m.kind == Membership::Boundary ? "boundary" : "outside";
            print_json({{"schema", kSchema}, {"membership", kind}, {"tight", m.tight}, {"violated", m.violated}});
        } else if (*cone_interior) {
            auto p = strict_point(k_cone_h(n));
            if (!p) throw Error("no interior point found");
            print_json(degree_json(n, *p));
        } else if (*cone_trop) {
            auto d = degree_from_json(n, read_json_file(point));
            print_json(tropical_json(n, tropical_point(n, d, parse_sign(sign))));
        } else if (*cone_c) {
            print_json(cone_json(c_cone_h(n, parse_sign(sign))));
        } else if (*ideal_gens) {
            PlueckerRing R(n);
            auto g = generators(R);
            if (as_json) {
                Json q = Json::array(), l = Json::array();
                for (const auto& f : g.quadratic) q.push_back(poly_json(f, R.names()));
                for (const auto& f : g.linear) l.push_back(poly_json(f, R.names()));
                print_json({{"schema", kSchema}, {"quadratic", q}, {"linear", l}});
            } else {
                for (const auto& f : g.all()) std::cout << R.str(f) << "\n";
            }
        } else if (*ideal_initial || *ideal_hilbert) {
            PlueckerRing R(n);
            auto v = tropical_from_json(n, read_json_file(weight));
            auto gb = buchberger(generators(R).all(), MonomialOrder(v));
            if (*ideal_initial) {
                for (const auto& f : initial_ideal_generators(gb)) std::cout << R.str(f) << "\n";
            } else {
                auto lam = parse_weight(n, lambda);
                std::cout << hilbert_count(R, gb, lam).get_str() << "\n";
            }
        } else if (*chart_pj) {
            Chart c(n);
            std::cout << c.str(c.p(parse_index(n, J))) << "\n";
        } else if (*chart_phi) {
            Chart c(n);
            auto f = read_poly(poly, c.ring().universe(), c.ring().names());
            std::cout << c.str(c.phi(f)) << "\n";
        } else if (*chart_deg) {
            Chart c(n);
            auto d = degree_from_json(n, read_json_file(point));
            const auto& R = c.ring();
            for (const auto& K : R.indices())
                std::cout << index_key(n, K) << " -> "
                          << c.str(c.phi_d(SparsePoly::variable(R.universe(), R.var(K)), d)) << "\n";
        } else if (*tab_enum) {
            auto Ts = enumerate_tableaux(parse_weight(n, lambda));
            for (const auto& T : Ts) std::cout << tableau_json(n, T).dump() << "\n";
            std::cout << Ts.size() << " tableaux\n";
        } else if (*tab_rho) {
            auto T = tableau_from_json(n, read_json_file(tableau));
            if (!is_pbw(n, T)) throw UsageError("tableau violates the PBW conditions");
            Chart c(n);
            print_json(exponent_json(n, rho_lambda(c, T)));
        } else if (*verify) {
            auto lvl = parse_level(level);
            auto reports = run_verify(n, lvl, seed, parse_sign(sign));
            bool ok = true;
            for (const auto& r : reports) {
                std::cout << (r.status == Status::Pass ? "PASS " : r.status == Status::Fail ? "FAIL " : "SKIP ") << r.suite
                          << "  (" << r.anchor << ")";
                if (!r.detail.empty()) std::cout << "  " << r.detail;
                std::cout << "\n";
                if (r.status == Status::Fail) ok = false;
            }
            if (!json_out.empty()) {
                std::ofstream out(json_out);
                if (!out) throw UsageError("cannot write " + json_out);
                out << reports_json(n, lvl, seed, reports).dump(2) << "\n";
            }
            rc = ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "usage error: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
