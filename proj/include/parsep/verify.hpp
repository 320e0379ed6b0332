#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "parsep/family.hpp"
#include "parsep/injection.hpp"

namespace parsep {

enum class VerifyMode { exhaustive, sampled, inequality, witnesses };
enum class CountMethod { series, dp, both };

std::string to_string(VerifyMode m);
std::string to_string(CountMethod m);

/// Per-case tallies. `skipped` counts members classified into the case at a
/// weight below the case's threshold; they are never counted as passed.
struct CaseTally {
    std::size_t tested = 0;
    std::size_t passed = 0;
    std::size_t skipped = 0;
};

/// One failed check, replayable from its fields alone.
struct Failure {
    std::int64_t n = 0;
    std::string input;  // canonical text form of the partition under test
    int case_id = 0;    // 0 when no case applies
    std::string check;
    std::string detail;

    friend auto operator<=>(const Failure&, const Failure&) = default;
};

/// |A_j(n)| and |B_j(n)| by predicate counting.
struct CaseCount {
    int n = 0;
    int case_id = 0;
    std::size_t a_count = 0;
    std::size_t b_count = 0;
    bool compared = false;  // true when n >= min_n, so equality is required
};

struct InequalityRow {
    int n = 0;
    mpz_class p_eu_od;
    mpz_class p_od_eu;
    bool holds = false;  // p_eu_od(n) > p_od_eu(n)
};

struct VerificationReport {
    VerifyMode mode = VerifyMode::exhaustive;
    int n_lo = 0;
    int n_hi = 0;
    std::size_t samples = 0;     // sampled mode: draws per weight
    std::uint64_t seed = 0;      // sampled mode
    std::array<CaseTally, CaseId::kCount> per_case{};    // forward checks on A members
    std::array<CaseTally, CaseId::kCount> inverse_case{};  // backward checks on B members
    std::size_t a_members = 0;
    std::size_t b_members = 0;
    std::size_t b_unmatched = 0;   // B members outside every B_j
    std::size_t witnesses_checked = 0;
    std::vector<CaseCount> counts;
    std::vector<InequalityRow> inequality;
    std::vector<Failure> failures;

    bool ok() const noexcept { return failures.empty(); }

    /// Folds another report over an adjacent weight range into this one.
    void merge(const VerificationReport& other);
};

/// Exhaustive check at one weight (n <= cutoff, else ResourceError).
VerificationReport verify_exhaustive(int n, int cutoff = kDefaultEnumerationCutoff);

/// Exhaustive checks for every weight in [lo, hi], merged.
VerificationReport verify_exhaustive_range(int lo, int hi, int cutoff = kDefaultEnumerationCutoff);

/// Per-member checks on `samples` uniform draws from A_od^eu(n), plus the
/// witness check when n >= 373.
VerificationReport verify_sampled(int n, std::size_t samples, std::uint64_t seed);

/// p_eu^od(n) > p_od^eu(n) for n in [lo, hi]. With CountMethod::both the
/// series and DP counts are cross-checked and any mismatch is a failure.
VerificationReport verify_inequality(int lo, int hi, CountMethod method);

/// witness(n) has weight n, lies in B_eu^od(n) and matches no B_j, for
/// every n in [lo, hi]. Requires 373 <= lo <= hi.
VerificationReport verify_witnesses(int lo, int hi);

/// One record per line; see docs/report-format.md.
void write_report_text(std::ostream& out, const VerificationReport& r);

/// JSON document; see docs/report-format.md.
void write_report_json(std::ostream& out, const VerificationReport& r);

}  // namespace parsep
