#include "scindex/records.hpp"

#include "scindex/weights.hpp"

#include <stdexcept>
#include <unordered_set>

namespace scindex {

std::uint64_t AuthorProfile::total_citations() const noexcept {
    std::uint64_t total = 0;
    for (const auto& p : papers) {
        total += p.citations;
    }
    return total;
}

std::optional<std::string> check_record(const PaperRecord& record) {
    if (record.paper_id.empty()) {
        return "paper_id is empty";
    }
    if (record.citations > kMaxCitations) {
        return "citations exceeds " + std::to_string(kMaxCitations);
    }
    if (record.num_authors < 1 || record.num_authors > kMaxAuthors) {
        return "num_authors must be in 1.." + std::to_string(kMaxAuthors);
    }
    if (record.author_position < 1 || record.author_position > record.num_authors) {
        return "author_position " + std::to_string(record.author_position) + " outside 1.." +
               std::to_string(record.num_authors);
    }
    return std::nullopt;
}

void validate_profile(const AuthorProfile& profile) {
    std::unordered_set<std::string> seen;
    for (const auto& p : profile.papers) {
        if (auto problem = check_record(p)) {
            throw std::invalid_argument("paper '" + p.paper_id + "' of author '" + profile.author_id + "': " + *problem);
        }
        if (!seen.insert(p.paper_id).second) {
            throw std::invalid_argument("duplicate paper_id '" + p.paper_id + "' for author '" + profile.author_id + "'");
        }
    }
}

const AuthorProfile* CitationDataset::find(const std::string& author_id) const noexcept {
    for (const auto& a : authors) {
        if (a.author_id == author_id) {
            return &a;
        }
    }
    return nullptr;
}

}  // namespace scindex
