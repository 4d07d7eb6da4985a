#include "scindex/weights.hpp"

#include "reference_weights.hpp"

#include <gtest/gtest.h>

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace scindex {
namespace {

Rational parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    std::int64_t num = 0;
    std::int64_t den = 1;
    std::from_chars(text.data(), text.data() + (slash == std::string_view::npos ? text.size() : slash), num);
    if (slash != std::string_view::npos) {
        std::from_chars(text.data() + slash + 1, text.data() + text.size(), den);
    }
    return Rational(num, den);
}

TEST(PositionalWeight, Examples) {
    EXPECT_EQ(positional_weight(4, 2), Rational(3, 10));
    EXPECT_EQ(positional_weight(1, 1), Rational(1));
    EXPECT_EQ(positional_weight(10, 10), Rational(1, 55));
    EXPECT_EQ(positional_weight(10, 9), Rational(2, 55));
}

TEST(PositionalWeight, RejectsOutOfRange) {
    EXPECT_THROW((void)positional_weight(3, 0), std::domain_error);
    EXPECT_THROW((void)positional_weight(3, 4), std::domain_error);
    EXPECT_THROW((void)positional_weight(0, 1), std::domain_error);
    EXPECT_THROW((void)positional_weight(kMaxAuthors + 1, 1), std::domain_error);
    try {
        (void)positional_weight(2, 3);
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("k=2, j=3"), std::string::npos);
    }
}

TEST(EqualWeight, Examples) {
    EXPECT_EQ(equal_weight(2), Rational(1, 2));
    EXPECT_EQ(equal_weight(5), Rational(1, 5));
    EXPECT_EQ(equal_weight(1), positional_weight(1, 1));
    EXPECT_THROW((void)equal_weight(0), std::domain_error);
}

TEST(WeightVector, Examples) {
    EXPECT_EQ(weight_vector(3, WeightPolicy::Positional).weights,
              (std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 6)}));
    EXPECT_EQ(weight_vector(3, WeightPolicy::Equal).weights,
              (std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
    EXPECT_EQ(weight_vector(2, WeightPolicy::Positional).weights,
              (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
    EXPECT_THROW((void)weight_vector(0, WeightPolicy::Equal), std::domain_error);
}

TEST(WeightTable, MatchesReference) {
    const auto table = weight_table(10);
    ASSERT_EQ(table.size(), 10u);
    std::size_t entries = 0;
    for (std::size_t k = 0; k < table.size(); ++k) {
        const auto& printed = testing::kReferenceWeights[k];
        ASSERT_EQ(table[k].weights.size(), printed.size());
        for (std::size_t j = 0; j < printed.size(); ++j) {
            EXPECT_EQ(table[k].weights[j], parse_fraction(printed[j])) << "k=" << k + 1 << " j=" << j + 1;
            EXPECT_EQ(positional_fraction(static_cast<std::int64_t>(k + 1), static_cast<std::int64_t>(j + 1),
                                          FractionForm::Unreduced),
                      printed[j]);
            ++entries;
        }
    }
    EXPECT_EQ(entries, 55u);
    EXPECT_EQ(weight_table(1).size(), 1u);
    EXPECT_EQ(weight_table(2)[1].weights, (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
    EXPECT_THROW((void)weight_table(0), std::domain_error);
}

TEST(Gaps, Examples) {
    EXPECT_EQ(first_last_gap(1), Rational(0));
    EXPECT_EQ(first_last_gap(2), Rational(1, 3));
    EXPECT_EQ(first_last_gap(3), Rational(1, 3));

    EXPECT_EQ(positional_vs_equal_gap(2, 1), Rational(1, 6));
    EXPECT_NEAR(positional_vs_equal_gap(2, 1).to_double(), 0.1666, 1e-4);
    EXPECT_EQ(positional_vs_equal_gap(5, 3), Rational(0));
    EXPECT_EQ(positional_vs_equal_gap(1, 1), Rational(0));
    EXPECT_THROW((void)positional_vs_equal_gap(4, 5), std::domain_error);

    EXPECT_EQ(symmetry_gap(1), Rational(0));
    EXPECT_EQ(symmetry_gap(2), Rational(1, 6));
    EXPECT_EQ(symmetry_gap(9), Rational(4, 45));
    EXPECT_THROW((void)symmetry_gap(0), std::domain_error);
}

TEST(WeightInvariants, SumMonotonicityAndBounds) {
    for (std::int64_t k = 1; k <= 1000; ++k) {
        for (auto policy : {WeightPolicy::Positional, WeightPolicy::Equal}) {
            ASSERT_EQ(weight_vector(k, policy).sum(), Rational(1)) << "k=" << k;
        }
        const auto w = weight_vector(k, WeightPolicy::Positional).weights;
        for (std::size_t j = 1; j < w.size(); ++j) {
            ASSERT_GT(w[j - 1], w[j]) << "k=" << k;
        }
        for (const auto& x : w) {
            ASSERT_GT(x, Rational(0));
            ASSERT_LE(x, Rational(1));
        }
        ASSERT_EQ(w.front(), Rational(2, k + 1));
        if (k > 1) {
            ASSERT_LT(w.front(), Rational(1));
        }
    }
}

TEST(WeightInvariants, GapIdentitiesAndAntisymmetry) {
    for (std::int64_t k = 1; k <= 1000; ++k) {
        ASSERT_EQ(first_last_gap(k), positional_weight(k, 1) - positional_weight(k, k));
        ASSERT_EQ(symmetry_gap(k), positional_vs_equal_gap(k, 1));
        ASSERT_EQ(symmetry_gap(k), -positional_vs_equal_gap(k, k));
        for (std::int64_t j = 1; j <= k; ++j) {
            const Rational gap = positional_vs_equal_gap(k, j);
            ASSERT_EQ(gap, positional_weight(k, j) - equal_weight(k));
            ASSERT_EQ(gap, -positional_vs_equal_gap(k, k + 1 - j));
            // sign: positive before the midpoint, zero at it, negative after
            const std::int64_t twice = 2 * j;
            ASSERT_EQ(gap > Rational(0), twice < k + 1);
            ASSERT_EQ(gap == Rational(0), twice == k + 1);
        }
    }
}

TEST(WeightInvariants, GapsVanish) {
    // both gaps plateau between two and three authors
    EXPECT_EQ(first_last_gap(2), first_last_gap(3));
    EXPECT_EQ(symmetry_gap(2), symmetry_gap(3));
    for (std::int64_t k = 4; k <= 10'000; ++k) {
        ASSERT_LT(first_last_gap(k), first_last_gap(k - 1));
        ASSERT_LT(symmetry_gap(k), symmetry_gap(k - 1));
    }
    EXPECT_LT(first_last_gap(1'000'000), Rational(1, 100'000));
}

TEST(WeightRendering, TableModes) {
    std::ostringstream one;
    write_weight_table(one, 1, {});
    EXPECT_EQ(one.str(), "1\n");

    std::ostringstream exact;
    write_weight_table(exact, 3, WeightTableStyle{true, FractionForm::Unreduced, 4});
    EXPECT_EQ(exact.str(), "1\n2/3  1/3\n3/6  2/6  1/6\n");

    std::ostringstream reduced;
    write_weight_table(reduced, 3, WeightTableStyle{true, FractionForm::Reduced, 4});
    EXPECT_EQ(reduced.str(), "1\n2/3  1/3\n1/2  1/3  1/6\n");

    std::ostringstream decimal;
    write_weight_table(decimal, 2, WeightTableStyle{false, FractionForm::Reduced, 4});
    EXPECT_EQ(decimal.str(), "1\n0.6667  0.3333\n");
}

TEST(WeightRendering, Csv) {
    std::ostringstream out;
    write_weight_csv(out, 4, FractionForm::Reduced);
    const std::string text = out.str();
    EXPECT_EQ(text.rfind("k,j,numerator,denominator,decimal\n", 0), 0u);
    EXPECT_NE(text.find("\n4,2,3,10,0.300000000\n"), std::string::npos);

    std::ostringstream unreduced;
    write_weight_csv(unreduced, 3, FractionForm::Unreduced);
    EXPECT_NE(unreduced.str().find("\n3,1,3,6,0.500000000\n"), std::string::npos);
}

}  // namespace
}  // namespace scindex
