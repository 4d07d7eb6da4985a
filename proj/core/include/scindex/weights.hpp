#pragma once

// Author weight assignment.
//
// A paper with k authors splits one unit of credit among them. Under the
// positional policy the author at position j (1-based) receives
//
//     w_j = 2 (k - j + 1) / (k (k + 1))
//
// i.e. (k - j + 1) parts out of 1 + 2 + ... + k. Under the equal policy every
// author receives 1/k. All values are exact rationals.

#include "scindex/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace scindex {

/// Largest author count accepted by the weight functions. Keeps k(k+1)
/// comfortably inside 64 bits.
inline constexpr std::int64_t kMaxAuthors = 1'000'000;

enum class WeightPolicy { Positional, Equal };

[[nodiscard]] std::string_view to_string(WeightPolicy policy) noexcept;

/// Weight of the author at position j of k. Throws std::domain_error naming
/// (k, j) when k is outside 1..kMaxAuthors or j outside 1..k.
[[nodiscard]] Rational positional_weight(std::int64_t k, std::int64_t j);

/// 1/k. Throws std::domain_error when k is outside 1..kMaxAuthors.
[[nodiscard]] Rational equal_weight(std::int64_t k);

struct WeightVector {
    std::int64_t author_count = 0;
    WeightPolicy policy = WeightPolicy::Positional;
    std::vector<Rational> weights;

    [[nodiscard]] Rational sum() const;
};

[[nodiscard]] WeightVector weight_vector(std::int64_t k, WeightPolicy policy);

/// Positional weight vectors for k = 1..k_max.
[[nodiscard]] std::vector<WeightVector> weight_table(std::int64_t k_max);

/// w_1 - w_k under the positional policy: 2(k-1) / (k(k+1)).
[[nodiscard]] Rational first_last_gap(std::int64_t k);

/// Positional minus equal weight at position j: (k + 1 - 2j) / (k(k+1)).
/// Positive in the first half of the author list, negative in the second.
[[nodiscard]] Rational positional_vs_equal_gap(std::int64_t k, std::int64_t j);

/// Amount by which the first author gains (and the last author loses)
/// relative to equal weights: (k-1) / (k(k+1)).
[[nodiscard]] Rational symmetry_gap(std::int64_t k);

// ---------------------------------------------------------------------------
//  Rendering
// ---------------------------------------------------------------------------

/// How a positional weight is spelled when rendered as a fraction.
enum class FractionForm {
    Reduced,    // lowest terms: 3/10
    Unreduced,  // (k - j + 1) over k(k+1)/2: 3/10, 3/6
};

/// The fraction text for the positional weight at (k, j).
[[nodiscard]] std::string positional_fraction(std::int64_t k, std::int64_t j, FractionForm form);

struct WeightTableStyle {
    bool exact = false;                      // fractions instead of decimals
    FractionForm form = FractionForm::Reduced;
    int decimal_places = 4;                  // decimal mode; trailing zeros trimmed
};

/// One row per k, weights in author order, columns aligned. No header.
void write_weight_table(std::ostream& out, std::int64_t k_max, const WeightTableStyle& style);

/// CSV with header k,j,numerator,denominator,decimal (decimal has 9 places).
void write_weight_csv(std::ostream& out, std::int64_t k_max, FractionForm form);

}  // namespace scindex
