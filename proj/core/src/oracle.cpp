#include "scindex/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace scindex {

namespace {

// Weight straight from the closed forms, in arbitrary precision.
Exact closed_form_weight(const PaperRecord& p, WeightPolicy policy) {
    const Exact k(p.num_authors);
    if (policy == WeightPolicy::Equal || p.alphabetical) {
        return Exact(1) / k;
    }
    const Exact j(p.author_position);
    return Exact(2) * (k - j + 1) / (k * (k + 1));
}

struct Item {
    const PaperRecord* paper;
    Exact weighted;
};

// Largest candidate h in 0..n for which at least h items satisfy pred(item, h).
template <typename Pred>
std::int64_t exhaustive_h(const std::vector<Item>& items, Pred pred) {
    std::int64_t best = 0;
    for (std::int64_t h = 0; h <= static_cast<std::int64_t>(items.size()); ++h) {
        std::int64_t count = 0;
        for (const auto& it : items) {
            if (pred(it, h)) {
                ++count;
            }
        }
        if (count >= h) {
            best = h;
        }
    }
    return best;
}

bool raw_precedes(const Item& a, const Item& b) {
    if (a.paper->citations != b.paper->citations) {
        return a.paper->citations > b.paper->citations;
    }
    return a.paper->paper_id < b.paper->paper_id;
}

bool weighted_precedes(const Item& a, const Item& b) {
    if (a.weighted != b.weighted) {
        return a.weighted > b.weighted;
    }
    return raw_precedes(a, b);
}

// Sum of weighted citations over items with fewer than h predecessors.
template <typename Precedes>
Exact core_sum(const std::vector<Item>& items, std::int64_t h, Precedes precedes) {
    Exact total = 0;
    for (const auto& it : items) {
        std::int64_t ahead = 0;
        for (const auto& other : items) {
            if (&other != &it && precedes(other, it)) {
                ++ahead;
            }
        }
        if (ahead < h) {
            total += it.weighted;
        }
    }
    return total;
}

}  // namespace

IndexValues oracle_indices(const AuthorProfile& profile, WeightPolicy policy, CoreBasis basis) {
    if (profile.papers.size() > kOracleMaxPapers) {
        throw std::length_error("oracle refuses profiles with more than " + std::to_string(kOracleMaxPapers) +
                                " papers");
    }
    std::vector<Item> items;
    for (const auto& p : profile.papers) {
        if (auto problem = check_record(p)) {
            throw std::invalid_argument("paper '" + p.paper_id + "': " + *problem);
        }
        items.push_back({&p, Exact(p.citations) * closed_form_weight(p, policy)});
    }

    IndexValues v;
    v.h = exhaustive_h(items, [](const Item& it, std::int64_t h) { return Exact(it.paper->citations) >= Exact(h); });
    v.h_w = exhaustive_h(items, [](const Item& it, std::int64_t h) { return it.weighted >= Exact(h); });

    v.psi_w = 0;
    for (const auto& it : items) {
        v.psi_w += it.weighted;
    }

    v.xi_w = basis == CoreBasis::WeightedCitations ? core_sum(items, v.h_w, weighted_precedes)
                                                   : core_sum(items, v.h, raw_precedes);

    // c / sqrt(k) >= h  <=>  c^2 >= h^2 k   (both sides non-negative)
    v.h_a = exhaustive_h(items, [](const Item& it, std::int64_t h) {
        const Exact c(it.paper->citations);
        return c * c >= Exact(h) * Exact(h) * Exact(it.paper->num_authors);
    });
    v.h_f = exhaustive_h(items, [](const Item& it, std::int64_t h) {
        return Exact(it.paper->citations) / Exact(it.paper->num_authors) >= Exact(h);
    });

    // Effective rank of each paper: sum of 1/k over itself and every paper
    // ranked ahead of it by raw citations.
    v.h_m = 0;
    for (const auto& it : items) {
        Exact rank = 0;
        for (const auto& other : items) {
            if (&other == &it || raw_precedes(other, it)) {
                rank += Exact(1) / Exact(other.paper->num_authors);
            }
        }
        if (Exact(it.paper->citations) >= rank && rank > v.h_m) {
            v.h_m = rank;
        }
    }
    return v;
}

}  // namespace scindex
