#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// shares code with the library paths it checks.

#include <gmpxx.h>

#include <vector>

#include "parsep/family.hpp"

namespace oracle {

using Parts = std::vector<int>;

/// Every partition of n, lexicographically decreasing.
std::vector<Parts> all_partitions(int n);

/// Family membership written directly from the definition: split by parity,
/// check each block's repetition rule, compare the block extremes.
bool member(const Parts& parts, parsep::FamilyId f);

/// all_partitions(n) filtered by member(), in the same order.
std::vector<Parts> family_members(parsep::FamilyId f, int n);

/// Number of partitions of n (all parts), by the Euler pentagonal recurrence.
std::vector<mpz_class> partition_numbers(int max_n);

/// Coefficients of prod_{k>=1, 2k<=order} (1 - q^{2k}) expanded term by term
/// from the full subset sum (feasible for small orders only).
std::vector<mpz_class> euler_even_product_by_subsets(int order);

}  // namespace oracle
