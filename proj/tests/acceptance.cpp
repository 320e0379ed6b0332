// Acceptance suite: one PASS/FAIL line per criterion, with the time taken and
// the time limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "parsep/cli.hpp"
#include "parsep/family.hpp"
#include "parsep/injection.hpp"
#include "parsep/series.hpp"
#include "parsep/verify.hpp"

using namespace parsep;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> body;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string failure_summary(const VerificationReport& r) {
    if (r.ok()) return {};
    const Failure& f = r.failures.front();
    std::ostringstream s;
    s << r.failures.size() << " failures, first: n=" << f.n << " case=" << f.case_id << " check=" << f.check
      << " input=" << f.input;
    return s.str();
}

Outcome family_ground_truth() {
    std::ostringstream out, err;
    const int code = cli::run({"count", "--family", "od_eu", "--n", "5"}, out, err);
    if (code != 0 || out.str() != "3\n") return fail("count printed '" + out.str() + "'");
    std::vector<std::vector<int>> got;
    for (const auto& p : enumerate_family(families::od_eu, 5)) got.push_back(p.vec());
    if (got != std::vector<std::vector<int>>{{5}, {4, 1}, {2, 2, 1}}) return fail("enumeration mismatch");
    return {true, "p_od_eu(5)=3, members (5),(4,1),(2,2,1)"};
}

Outcome series_golden() {
    const Series d = diff_series(100);
    const std::vector<std::pair<int, int>> golden{{3, -1},   {5, -1},   {7, -2},  {8, -1},  {9, -2},
                                                  {11, -4},  {12, -1},  {13, -4}, {15, -8}, {17, -8},
                                                  {18, 2},   {50, 816}, {51, 18}};
    for (const auto& [k, v] : golden) {
        if (d[k] != v) return fail("coefficient of q^" + std::to_string(k) + " is " + d[k].get_str());
    }
    return {true, "13 coefficients exact at order 100"};
}

Outcome triple_agreement() {
    const Series eu = series_p_eu_od(200);
    const Series od = series_p_od_eu(200);
    const CountTable ceu = count_table(families::eu_od, 200);
    const CountTable cod = count_table(families::od_eu, 200);
    for (int n = 0; n <= 200; ++n) {
        if (eu[n] != ceu.counts[n]) return fail("eu_od series/DP mismatch at n=" + std::to_string(n));
        if (od[n] != cod.counts[n]) return fail("od_eu series/DP mismatch at n=" + std::to_string(n));
    }
    for (int n = 0; n <= 40; ++n) {
        const auto beu = oracle::family_members(families::eu_od, n).size();
        const auto bod = oracle::family_members(families::od_eu, n).size();
        if (ceu.counts[n] != static_cast<unsigned long>(beu) || enumerate_family(families::eu_od, n).size() != beu)
            return fail("eu_od brute force mismatch at n=" + std::to_string(n));
        if (cod.counts[n] != static_cast<unsigned long>(bod) || enumerate_family(families::od_eu, n).size() != bod)
            return fail("od_eu brute force mismatch at n=" + std::to_string(n));
    }
    return {true, "series = DP for n<=200, = brute force for n<=40"};
}

Outcome inequality_range() {
    const auto core = verify_inequality(50, 400, CountMethod::series);
    if (!core.ok()) return fail(failure_summary(core));
    const auto extended = verify_inequality(401, 1000, CountMethod::series);
    if (!extended.ok()) return fail(failure_summary(extended));
    return {true, "strict on 50..400 and 401..1000"};
}

Outcome worked_examples() {
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> examples{
        {{8, 8, 8, 7, 5, 3}, {11, 9, 7, 4, 4, 4}},
        {{6, 6, 6, 4, 3, 1}, {11, 5, 4, 2, 2, 2}},
        {{8, 8, 7, 5, 3, 1}, {13, 7, 5, 3, 2, 2}},
        {{6, 3, 1}, {5, 3, 2}},
        {{10, 9, 7, 5, 3, 1}, {9, 7, 5, 4, 2, 2, 2, 2, 2}},
        {{14, 13, 11, 9, 7}, {15, 13, 11, 3, 2, 2, 2, 2, 2, 2}},
        {{10, 9, 3}, {7, 5, 2, 2, 2, 2, 2}},
        {{30, 28, 27}, {35, 33, 5, 2, 2, 2, 2, 2, 2}},
        {{10, 8, 6, 1}, {11, 8, 6}},
        {{26, 26, 26, 25}, {33, 31, 29, 2, 2, 2, 2, 2}},
        {{38, 36, 36, 36, 33}, {43, 41, 39, 35, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2}},
    };
    for (const auto& [in, expected] : examples) {
        const Partition lambda(in);
        const Partition mu = apply_psi(lambda);
        if (mu != Partition(expected)) return fail("psi(" + to_string(lambda) + ") = " + to_string(mu));
        if (apply_psi_inverse(mu) != lambda) return fail("inverse of " + to_string(mu) + " differs");
    }
    return {true, "11 images exact, 11 inverses recovered"};
}

Outcome exhaustive() {
    const auto r = verify_exhaustive_range(0, 60);
    if (!r.ok()) return fail(failure_summary(r));
    std::size_t tested = 0;
    for (const CaseTally& t : r.per_case) tested += t.tested;
    return {true, std::to_string(r.a_members) + " A members, " + std::to_string(tested) + " above threshold, " +
                      std::to_string(r.b_members) + " B members"};
}

Outcome sampled() {
    std::size_t checked = 0;
    for (int n : {373, 374, 400, 500}) {
        const auto r = verify_sampled(n, 1000, static_cast<std::uint64_t>(n));
        if (!r.ok()) return fail(failure_summary(r));
        for (const CaseTally& t : r.per_case) checked += t.tested;
    }
    std::ostringstream a, b;
    write_report_text(a, verify_sampled(373, 200, 11));
    write_report_text(b, verify_sampled(373, 200, 11));
    if (a.str() != b.str()) return fail("reports differ under a fixed seed");
    return {true, std::to_string(checked) + " samples passed, deterministic under seed"};
}

Outcome witnesses() {
    const auto r = verify_witnesses(kWitnessMinN, 1000);
    if (!r.ok()) return fail(failure_summary(r));
    return {true, std::to_string(r.witnesses_checked) + " witnesses outside every B_j"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "family ground truth", 1.0, family_ground_truth},
        {2, "series golden values", 5.0, series_golden},
        {3, "triple-method count agreement", 120.0, triple_agreement},
        {4, "inequality range", 60.0, inequality_range},
        {5, "worked examples", 1.0, worked_examples},
        {6, "exhaustive check n<=60", 600.0, exhaustive},
        {7, "sampled check at 373,374,400,500", 300.0, sampled},
        {8, "strictness witnesses 373..1000", 60.0, witnesses},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.ok = false;
            o.detail += " (over time limit)";
        }
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "  [" << std::fixed
                  << std::setprecision(2) << secs << "s / " << c.limit_seconds << "s]  " << o.detail << std::endl;
    }
    std::cout << "NOTE  9. the theorem covers all n >= 373; criteria 6-8 check it finitely" << std::endl;
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
