// One line per acceptance criterion; exit status is nonzero if any line fails.
#include "spflag/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace spflag;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void add(const std::string& tag, const CheckResult& r) {
        if (r.status == Status::Fail) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + tag + ": " + r.detail;
        } else if (r.status == Status::Skipped) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + tag + ": skipped";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<Outcome()>& body) {
    auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit > 0 && secs >= limit) {
        o.ok = false;
        o.detail += (o.detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
    }
    if (!o.ok) ++failures;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << name << " [" << buf << "]";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << std::endl;
}

}  // namespace

int main() {
    criterion(1, "cone geometry n=2..5", 10, [] {
        Outcome o;
        for (int n = 2; n <= 5; ++n) o.add("n=" + std::to_string(n), checks::cone_geometry(n));
        return o;
    });
    criterion(2, "derived inequalities n=2..4, 200 samples", 0, [] {
        Outcome o;
        for (int n = 2; n <= 4; ++n) {
            Rng rng(1000 + n);
            o.add("n=" + std::to_string(n), checks::derived_inequalities(n, rng, 200));
        }
        return o;
    });
    criterion(3, "rank-two generators", 0, [] {
        Outcome o;
        o.add("generators", checks::example_generators());
        return o;
    });
    criterion(4, "chart tables", 0, [] {
        Outcome o;
        o.add("chart", checks::chart_tables());
        return o;
    });
    criterion(5, "kernel of the chart maps", 0, [] {
        Outcome o;
        for (int n = 2; n <= 3; ++n) o.add("n=" + std::to_string(n), checks::kernel(n));
        return o;
    });
    criterion(6, "lattice points, tableaux, Weyl dimensions", 60, [] {
        Outcome o;
        for (int n = 1; n <= 3; ++n) {
            o.add("counting n=" + std::to_string(n), checks::counting(n, 3));
            o.add("tableaux n=" + std::to_string(n), checks::tableaux(n, 3));
        }
        return o;
    });
    criterion(7, "Minkowski property", 0, [] {
        Outcome o;
        for (int n = 1; n <= 3; ++n) o.add("n=" + std::to_string(n), checks::minkowski(n, 3));
        return o;
    });
    criterion(8, "degree minimization", 0, [] {
        Outcome o;
        for (int n = 2; n <= 3; ++n) {
            Rng rng(2000 + n);
            o.add("n=" + std::to_string(n), checks::minimization(n, n, rng, 50, 20));
        }
        return o;
    });
    criterion(9, "Groebner degeneration n=2", 120, [] {
        Outcome o;
        Rng rng(3000);
        o.add("groebner", checks::groebner(rng, 10));
        return o;
    });
    criterion(10, "maximality certificates", 0, [] {
        Outcome o;
        for (int n = 2; n <= 3; ++n) o.add("n=" + std::to_string(n), checks::maximality(n));
        return o;
    });
    criterion(11, "rank-two tropical cone", 0, [] {
        Outcome o;
        auto r = checks::c4_example();
        o.add("c4", r);
        o.detail += (o.detail.empty() ? "" : "; ") + std::string("facets ") + r.witness["computed_facets"].dump() +
                    ", listed " + r.witness["listed_inequalities"].dump() + ", redundant listed rows " +
                    r.witness["redundant_listed_rows"].dump() + "; sign: " +
                    r.witness["sign_note"].get<std::string>() + ", listed rows hold for v(J) = -deg: " +
                    r.witness["listed_rows_hold_for_negated_point"].dump();
        return o;
    });
    return failures == 0 ? 0 : 1;
}
