#include "scindex/indices.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scindex {

namespace {

using u128 = unsigned __int128;

struct Scored {
    const PaperRecord* paper;
    Rational weight;
};

// a.c * a.w  vs  b.c * b.w, compared exactly. Bounded by kMaxCitations and
// kMaxAuthors, the cross products stay below 2^128.
int compare_weighted(const Scored& a, const Scored& b) {
    const u128 lhs = u128(a.paper->citations) * u128(a.weight.numerator()) * u128(b.weight.denominator());
    const u128 rhs = u128(b.paper->citations) * u128(b.weight.numerator()) * u128(a.weight.denominator());
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool weighted_at_least(const Scored& s, std::int64_t h) {
    return u128(s.paper->citations) * u128(s.weight.numerator()) >= u128(h) * u128(s.weight.denominator());
}

bool raw_before(const PaperRecord* a, const PaperRecord* b) {
    if (a->citations != b->citations) {
        return a->citations > b->citations;
    }
    return a->paper_id < b->paper_id;
}

std::vector<const PaperRecord*> raw_order(const AuthorProfile& profile) {
    std::vector<const PaperRecord*> order;
    order.reserve(profile.papers.size());
    for (const auto& p : profile.papers) {
        order.push_back(&p);
    }
    std::sort(order.begin(), order.end(), raw_before);
    return order;
}

// Largest h such that the first h sorted entries all satisfy at_least(entry, rank).
// The predicate must be monotone along the sorted order.
template <typename Range, typename AtLeast>
std::int64_t hirsch(const Range& sorted, AtLeast at_least) {
    std::int64_t h = 0;
    for (const auto& entry : sorted) {
        if (!at_least(entry, h + 1)) {
            break;
        }
        ++h;
    }
    return h;
}

std::vector<Scored> weighted_order(const AuthorProfile& profile, WeightPolicy policy) {
    std::vector<Scored> scored;
    scored.reserve(profile.papers.size());
    for (const auto& p : profile.papers) {
        scored.push_back({&p, paper_weight(p, policy)});
    }
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (const int c = compare_weighted(a, b); c != 0) {
            return c > 0;
        }
        return raw_before(a.paper, b.paper);
    });
    return scored;
}

void check_all(const AuthorProfile& profile) {
    for (const auto& p : profile.papers) {
        if (auto problem = check_record(p)) {
            throw std::invalid_argument("paper '" + p.paper_id + "': " + *problem);
        }
    }
}

}  // namespace

std::string_view to_string(CoreBasis basis) noexcept {
    return basis == CoreBasis::WeightedCitations ? "weighted" : "raw";
}

Rational paper_weight(const PaperRecord& paper, WeightPolicy policy) {
    if (policy == WeightPolicy::Equal || paper.alphabetical) {
        return equal_weight(paper.num_authors);
    }
    return positional_weight(paper.num_authors, paper.author_position);
}

std::int64_t h_index(const AuthorProfile& profile) {
    return h_core(profile).index_value;
}

HCore h_core(const AuthorProfile& profile) {
    const auto order = raw_order(profile);
    HCore core;
    core.core_basis = CoreBasis::RawCitations;
    core.index_value = hirsch(order, [](const PaperRecord* p, std::int64_t h) {
        return p->citations >= static_cast<std::uint64_t>(h);
    });
    for (std::int64_t i = 0; i < core.index_value; ++i) {
        core.members.push_back(order[static_cast<std::size_t>(i)]->paper_id);
    }
    return core;
}

std::vector<WeightedCitation> weighted_citations(const AuthorProfile& profile, WeightPolicy policy) {
    check_all(profile);
    std::vector<WeightedCitation> out;
    out.reserve(profile.papers.size());
    for (const auto& p : profile.papers) {
        const Rational w = paper_weight(p, policy);
        out.push_back({p.paper_id, p.citations, w, Exact(p.citations) * w.to_exact()});
    }
    return out;
}

HCore weighted_h_index(const AuthorProfile& profile, WeightPolicy policy) {
    const auto order = weighted_order(profile, policy);
    HCore core;
    core.core_basis = CoreBasis::WeightedCitations;
    core.index_value = hirsch(order, weighted_at_least);
    for (std::int64_t i = 0; i < core.index_value; ++i) {
        core.members.push_back(order[static_cast<std::size_t>(i)].paper->paper_id);
    }
    return core;
}

Exact weighted_citation_aggregate(const AuthorProfile& profile, WeightPolicy policy) {
    Exact total = 0;
    for (const auto& p : profile.papers) {
        total += Exact(p.citations) * paper_weight(p, policy).to_exact();
    }
    return total;
}

Exact weighted_citation_h_cut(const AuthorProfile& profile, WeightPolicy policy, CoreBasis basis) {
    Exact total = 0;
    if (basis == CoreBasis::WeightedCitations) {
        const auto order = weighted_order(profile, policy);
        const auto h = static_cast<std::size_t>(hirsch(order, weighted_at_least));
        for (std::size_t i = 0; i < h; ++i) {
            total += Exact(order[i].paper->citations) * order[i].weight.to_exact();
        }
        return total;
    }
    const auto order = raw_order(profile);
    const auto h = static_cast<std::size_t>(hirsch(order, [](const PaperRecord* p, std::int64_t rank) {
        return p->citations >= static_cast<std::uint64_t>(rank);
    }));
    for (std::size_t i = 0; i < h; ++i) {
        total += Exact(order[i]->citations) * paper_weight(*order[i], policy).to_exact();
    }
    return total;
}

std::int64_t adaptive_pure_h(const AuthorProfile& profile) {
    check_all(profile);
    // c / sqrt(k) is ordered by c^2 / k; c^2 <= 10^24 and k <= 10^6.
    std::vector<const PaperRecord*> order = raw_order(profile);
    std::stable_sort(order.begin(), order.end(), [](const PaperRecord* a, const PaperRecord* b) {
        const u128 ca = a->citations;
        const u128 cb = b->citations;
        return ca * ca * u128(b->num_authors) > cb * cb * u128(a->num_authors);
    });
    return hirsch(order, [](const PaperRecord* p, std::int64_t h) {
        const u128 c = p->citations;
        return c * c >= u128(h) * u128(h) * u128(p->num_authors);
    });
}

std::int64_t fractional_h(const AuthorProfile& profile) {
    check_all(profile);
    std::vector<const PaperRecord*> order = raw_order(profile);
    std::stable_sort(order.begin(), order.end(), [](const PaperRecord* a, const PaperRecord* b) {
        return u128(a->citations) * u128(b->num_authors) > u128(b->citations) * u128(a->num_authors);
    });
    return hirsch(order, [](const PaperRecord* p, std::int64_t h) {
        return u128(p->citations) >= u128(h) * u128(p->num_authors);
    });
}

Exact modified_h(const AuthorProfile& profile) {
    check_all(profile);
    Exact rank = 0;
    Exact best = 0;
    for (const PaperRecord* p : raw_order(profile)) {
        rank += Exact(1) / Exact(p->num_authors);
        if (Exact(p->citations) < rank) {
            break;
        }
        best = rank;
    }
    return best;
}

IndexValues compute_indices(const AuthorProfile& profile, WeightPolicy policy, CoreBasis basis) {
    IndexValues v;
    v.h = h_index(profile);
    v.h_w = weighted_h_index(profile, policy).index_value;
    v.psi_w = weighted_citation_aggregate(profile, policy);
    v.xi_w = weighted_citation_h_cut(profile, policy, basis);
    v.h_a = adaptive_pure_h(profile);
    v.h_f = fractional_h(profile);
    v.h_m = modified_h(profile);
    return v;
}

}  // namespace scindex
