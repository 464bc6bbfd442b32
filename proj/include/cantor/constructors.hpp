#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cantor/digits.hpp"

namespace cantor {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An admissible vector with m+1 entries, any m >= 1, N >= 1.
/// m = 1 gives (0, [1]); m >= 2 builds the subset S of {0,1}^(l+1) with
/// 2^l <= m < 2^(l+1): the lexicographically smaller representative of each
/// complement pair, then complements in ascending code order starting with
/// the all-ones word, until #S = m+1.
TranslationVector construct_admissible(int m, int alphabet_cap);

/// Closed-form self-similarity predicate for Gamma union (Gamma + t):
/// true iff t1 has exactly one nonzero digit j with 1 <= j <= (N+1)/2.
bool corollary_m1(const DigitString& t1, int alphabet_cap);

/// All admissible vectors with m nonzero entries and tau <= tau_max, in
/// digit-compare-lexicographic order on tuples. Throws BudgetError when the
/// candidate count exceeds the budget.
std::vector<TranslationVector> enumerate_admissible(
    int m, int alphabet_cap, int tau_max,
    std::uint64_t budget = 20'000'000, int jobs = 1);

/// All nonzero digit strings with highest index <= tau_max, sorted by
/// digit_compare (the enumeration's candidate pool).
std::vector<DigitString> all_digit_strings(int alphabet_cap, int tau_max);

}  // namespace cantor
