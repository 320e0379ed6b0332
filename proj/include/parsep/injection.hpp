#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "parsep/partition.hpp"

namespace parsep {

/// Index 1..17 of one case of the injection psi: A_od^eu(n) -> B_eu^od(n).
class CaseId {
public:
    static constexpr int kCount = 17;

    /// Throws DomainError outside 1..17.
    explicit CaseId(int index);

    int index() const noexcept { return index_; }
    friend bool operator==(CaseId, CaseId) = default;
    friend auto operator<=>(CaseId, CaseId) = default;

private:
    int index_;
};

/// Static description of one case.
///
/// `min_n` is the smallest weight at which psi is defined on the case. For
/// case 9 the domain is additionally restricted to n = 4k - 1.
struct CaseRule {
    int index;
    int min_n;
    std::string_view a_condition;  // structural condition on lambda in A_j
    std::string_view b_condition;  // structural condition on mu in B_j
};

const std::array<CaseRule, CaseId::kCount>& case_rules();

int case_min_n(CaseId c);

/// Whether the A-side condition of case c holds. Defined on A_od^eu only.
bool a_predicate(CaseId c, const Partition& lambda);

/// Whether the B-side condition of case c holds. Defined on B_eu^od only.
bool b_predicate(CaseId c, const Partition& mu);

/// Every case whose A-side table row matches, evaluated row by row.
std::vector<CaseId> matching_a_cases(const Partition& lambda);

/// Every case whose B-side table row matches.
std::vector<CaseId> matching_b_cases(const Partition& mu);

/// Decision-tree classification of a member of A_od^eu. Defined for every
/// weight; thresholds are only enforced by apply_psi.
/// Throws DomainError if lambda is not in A_od^eu.
CaseId classify_A(const Partition& lambda);

/// The unique B_j predicate matching mu, or nullopt if none does.
/// Throws DomainError if mu is not in B_eu^od and InvariantViolation if two
/// predicates match.
std::optional<CaseId> classify_B(const Partition& mu);

/// mu = psi(lambda).
/// Throws DomainError if lambda is outside A_od^eu or below the matched
/// case's threshold, InvariantViolation if the case formula yields something
/// other than a member of B_eu^od of the same weight.
Partition apply_psi(const Partition& lambda);

/// Same as apply_psi, with the case already known.
Partition apply_psi(CaseId c, const Partition& lambda);

/// lambda = psi^{-1}(mu) for mu in some B_j at or above its threshold.
/// Throws DomainError if mu matches no B_j or is below the threshold.
Partition apply_psi_inverse(const Partition& mu);

Partition apply_psi_inverse(CaseId c, const Partition& mu);

/// Smallest weight for which the strictness witnesses are defined.
inline constexpr int kWitnessMinN = 373;

/// A member of B_eu^od(n) outside every B_j(n): for n = 6k + j,
/// (2k+3, 2k+1, 2k+j-8, 2, 2) when j is odd and
/// (2k+1, 2k-1, 2k+j-7, 3, 2, 2) when j is even.
/// Throws DomainError for n < 373.
Partition witness(int n);

}  // namespace parsep
