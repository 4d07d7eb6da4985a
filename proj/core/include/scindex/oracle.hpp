#pragma once

// Brute-force reference for the index engine. Each index is recomputed from
// its defining predicate: every candidate value is tested directly against the
// unsorted multiset of papers, with weights evaluated from the closed form in
// arbitrary precision. Quadratic or worse; meant for test-sized profiles.

#include "scindex/indices.hpp"

#include <cstddef>

namespace scindex {

inline constexpr std::size_t kOracleMaxPapers = 64;

/// Throws std::length_error when the profile has more than kOracleMaxPapers papers.
[[nodiscard]] IndexValues oracle_indices(const AuthorProfile& profile, WeightPolicy policy,
                                         CoreBasis basis = CoreBasis::WeightedCitations);

}  // namespace scindex
