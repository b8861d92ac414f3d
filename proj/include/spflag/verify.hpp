#pragma once

#include "spflag/degree_cone.hpp"
#include "spflag/json_io.hpp"

#include <functional>
#include <string>
#include <vector>

namespace spflag {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct CheckResult {
    Status status = Status::Pass;
    std::string detail;
    Json witness = Json::object();

    bool ok() const { return status != Status::Fail; }
    void fail(const std::string& why) {
        status = Status::Fail;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

struct Report {
    std::string suite;
    std::string anchor;
    Status status = Status::Pass;
    std::string detail;
    Json witness;
    double seconds = 0;
};

// Reference data from the worked rank-two examples.
namespace reference {
DegreePoint example_point();  // d11=3, d22=1, d12=2, d11bar=1
std::vector<SparsePoly> example_generators(const PlueckerRing& R);
std::vector<std::pair<PlueckerIndex, SparsePoly>> chart_table(const Chart& chart);
std::vector<std::pair<PlueckerIndex, SparsePoly>> degenerate_chart_table(const Chart& chart);
std::vector<SparsePoly> degenerate_relations(const PlueckerRing& R);
ConeH c4_example();
}  // namespace reference

namespace checks {
CheckResult cone_geometry(int n);
CheckResult derived_inequalities(int n, Rng& rng, int samples);
CheckResult example_generators();
CheckResult chart_tables();
CheckResult kernel(int n);
CheckResult counting(int n, int max_height);
CheckResult minkowski(int n, int max_height);
CheckResult minimization(int n, int max_k, Rng& rng, int interior, int boundary);
CheckResult groebner(Rng& rng, int extra_points);
CheckResult maximality(int n);
CheckResult c4_example();
CheckResult c_cone(int n, Rng& rng, int samples, SignConvention sign = SignConvention::MinConvention);
CheckResult tableaux(int n, int max_height);
CheckResult standardization(int n);
CheckResult decomposition(int n, int max_height);
CheckResult root_system(int n);
CheckResult brackets(int n, Rng& rng, int samples);
}  // namespace checks

// Plücker relation X_{Sab}X_{Scd} - X_{Sac}X_{Sbd} + X_{Sad}X_{Sbc}.
SparsePoly three_term(const PlueckerRing& R, const std::vector<int>& S, int a, int b, int c, int d);
// Incidence relation X_{Sa}X_{Sbc} - X_{Sb}X_{Sac} + X_{Sc}X_{Sab}.
SparsePoly incidence(const PlueckerRing& R, const std::vector<int>& S, int a, int b, int c);
// The relation used to certify maximality across the given facet row of C.
SparsePoly designated_relation(const PlueckerRing& R, const std::string& label);

enum class Level { Quick, Full };
Level parse_level(const std::string& s);

std::vector<Report> run_verify(int n, Level level, std::uint64_t seed,
                               SignConvention sign = SignConvention::MinConvention);
Json reports_json(int n, Level level, std::uint64_t seed, const std::vector<Report>& reports);

}  // namespace spflag
