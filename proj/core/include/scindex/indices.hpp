#pragma once

// Author-level citation indices.
//
// Every index here is invariant to the order of papers in the profile. Where
// a core (the set of papers attaining an index) has to be chosen among papers
// tied on the ranking value, the tie rule is:
//   weighted core: higher weighted citations, then higher raw citations,
//                  then lexicographically smaller paper_id;
//   raw core:      higher raw citations, then smaller paper_id.

#include "scindex/rational.hpp"
#include "scindex/records.hpp"
#include "scindex/weights.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scindex {

enum class CoreBasis {
    WeightedCitations,  // core = papers forming the weighted h-core
    RawCitations,       // core = top-h papers by raw citations
};

[[nodiscard]] std::string_view to_string(CoreBasis basis) noexcept;

struct WeightedCitation {
    std::string paper_id;
    std::uint64_t raw = 0;
    Rational weight;
    Exact weighted;  // raw * weight
};

struct HCore {
    std::int64_t index_value = 0;
    std::vector<std::string> members;  // best first
    CoreBasis core_basis = CoreBasis::WeightedCitations;
};

/// Weight credited to the profile's author for one paper. Alphabetical author
/// lists fall back to equal weights under the positional policy.
[[nodiscard]] Rational paper_weight(const PaperRecord& paper, WeightPolicy policy);

/// Classic Hirsch index.
[[nodiscard]] std::int64_t h_index(const AuthorProfile& profile);

/// The top-h papers by raw citations.
[[nodiscard]] HCore h_core(const AuthorProfile& profile);

/// One entry per paper, in profile order. Throws std::invalid_argument naming
/// the paper when a record breaks its invariants.
[[nodiscard]] std::vector<WeightedCitation> weighted_citations(const AuthorProfile& profile, WeightPolicy policy);

/// Hirsch rule over weighted citations (h_p for positional, h_e for equal).
[[nodiscard]] HCore weighted_h_index(const AuthorProfile& profile, WeightPolicy policy);

/// Sum of weighted citations over every paper (psi_p / psi_e).
[[nodiscard]] Exact weighted_citation_aggregate(const AuthorProfile& profile, WeightPolicy policy);

/// Sum of weighted citations over a core (xi_p / xi_e). The default basis sums
/// the weighted h-core; RawCitations sums the top-h papers by raw citations.
[[nodiscard]] Exact weighted_citation_h_cut(const AuthorProfile& profile, WeightPolicy policy,
                                            CoreBasis basis = CoreBasis::WeightedCitations);

/// Hirsch rule over c / sqrt(k).
[[nodiscard]] std::int64_t adaptive_pure_h(const AuthorProfile& profile);

/// Hirsch rule over c / k.
[[nodiscard]] std::int64_t fractional_h(const AuthorProfile& profile);

/// Papers ranked by raw citations; effective rank r(i) = sum of 1/k over the
/// first i papers. Result is the largest r(i) with c_i >= r(i), else 0.
[[nodiscard]] Exact modified_h(const AuthorProfile& profile);

/// Every index for one policy, as produced by either the fast path or the
/// exhaustive oracle.
struct IndexValues {
    std::int64_t h = 0;
    std::int64_t h_w = 0;
    Exact psi_w;
    Exact xi_w;
    std::int64_t h_a = 0;
    std::int64_t h_f = 0;
    Exact h_m;

    friend bool operator==(const IndexValues&, const IndexValues&) = default;
};

[[nodiscard]] IndexValues compute_indices(const AuthorProfile& profile, WeightPolicy policy, CoreBasis basis);

}  // namespace scindex
