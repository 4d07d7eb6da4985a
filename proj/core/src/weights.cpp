#include "scindex/weights.hpp"

#include "scindex/decimal.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace scindex {

namespace {

void check_count(std::int64_t k) {
    if (k < 1 || k > kMaxAuthors) {
        throw std::domain_error("author count k=" + std::to_string(k) + " outside 1.." + std::to_string(kMaxAuthors));
    }
}

void check_position(std::int64_t k, std::int64_t j) {
    if (k < 1 || k > kMaxAuthors || j < 1 || j > k) {
        throw std::domain_error("invalid author position (k=" + std::to_string(k) + ", j=" + std::to_string(j) + ")");
    }
}

}  // namespace

std::string_view to_string(WeightPolicy policy) noexcept {
    switch (policy) {
        case WeightPolicy::Positional: return "positional";
        case WeightPolicy::Equal: return "equal";
    }
    return "unknown";
}

Rational positional_weight(std::int64_t k, std::int64_t j) {
    check_position(k, j);
    return Rational(2 * (k - j + 1), k * (k + 1));
}

Rational equal_weight(std::int64_t k) {
    check_count(k);
    return Rational(1, k);
}

Rational WeightVector::sum() const {
    Rational total;
    for (const auto& w : weights) {
        total += w;
    }
    return total;
}

WeightVector weight_vector(std::int64_t k, WeightPolicy policy) {
    check_count(k);
    WeightVector v{k, policy, {}};
    v.weights.reserve(static_cast<std::size_t>(k));
    for (std::int64_t j = 1; j <= k; ++j) {
        v.weights.push_back(policy == WeightPolicy::Positional ? positional_weight(k, j) : equal_weight(k));
    }
    return v;
}

std::vector<WeightVector> weight_table(std::int64_t k_max) {
    check_count(k_max);
    std::vector<WeightVector> rows;
    rows.reserve(static_cast<std::size_t>(k_max));
    for (std::int64_t k = 1; k <= k_max; ++k) {
        rows.push_back(weight_vector(k, WeightPolicy::Positional));
    }
    return rows;
}

Rational first_last_gap(std::int64_t k) {
    check_count(k);
    return Rational(2 * (k - 1), k * (k + 1));
}

Rational positional_vs_equal_gap(std::int64_t k, std::int64_t j) {
    check_position(k, j);
    return Rational(k + 1 - 2 * j, k * (k + 1));
}

Rational symmetry_gap(std::int64_t k) {
    check_count(k);
    return Rational(k - 1, k * (k + 1));
}

std::string positional_fraction(std::int64_t k, std::int64_t j, FractionForm form) {
    if (form == FractionForm::Reduced) {
        return positional_weight(k, j).str();
    }
    check_position(k, j);
    if (k == 1) {
        return "1";
    }
    return std::to_string(k - j + 1) + "/" + std::to_string(k * (k + 1) / 2);
}

void write_weight_table(std::ostream& out, std::int64_t k_max, const WeightTableStyle& style) {
    check_count(k_max);
    std::vector<std::vector<std::string>> cells;
    std::size_t width = 0;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        auto& row = cells.emplace_back();
        for (std::int64_t j = 1; j <= k; ++j) {
            row.push_back(style.exact ? positional_fraction(k, j, style.form)
                                      : format_trimmed(positional_weight(k, j).to_exact(), style.decimal_places));
            width = std::max(width, row.back().size());
        }
    }
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                line += "  ";
            }
            line += row[i];
            if (i + 1 < row.size()) {
                line.append(width - row[i].size(), ' ');
            }
        }
        out << line << '\n';
    }
}

void write_weight_csv(std::ostream& out, std::int64_t k_max, FractionForm form) {
    check_count(k_max);
    out << "k,j,numerator,denominator,decimal\n";
    for (std::int64_t k = 1; k <= k_max; ++k) {
        for (std::int64_t j = 1; j <= k; ++j) {
            const Rational w = positional_weight(k, j);
            std::int64_t num = w.numerator();
            std::int64_t den = w.denominator();
            if (form == FractionForm::Unreduced) {
                num = k - j + 1;
                den = k * (k + 1) / 2;
            }
            out << k << ',' << j << ',' << num << ',' << den << ',' << format_fixed(w, 9) << '\n';
        }
    }
}

}  // namespace scindex
