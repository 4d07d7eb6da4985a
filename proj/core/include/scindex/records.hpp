#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scindex {

/// Upper bound on a single paper's citation count. Keeps the squared
/// comparisons used by the adaptive index inside 128-bit arithmetic.
inline constexpr std::uint64_t kMaxCitations = 1'000'000'000'000ULL;

/// One paper as seen by one of its authors.
struct PaperRecord {
    std::string paper_id;
    std::uint64_t citations = 0;
    std::int64_t num_authors = 1;
    std::int64_t author_position = 1;
    /// Author list is alphabetical, so position carries no contribution signal.
    bool alphabetical = false;

    friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

struct AuthorProfile {
    std::string author_id;
    std::vector<PaperRecord> papers;

    [[nodiscard]] std::uint64_t total_citations() const noexcept;

    friend bool operator==(const AuthorProfile&, const AuthorProfile&) = default;
};

/// Returns a description of the first invariant the record breaks, if any.
[[nodiscard]] std::optional<std::string> check_record(const PaperRecord& record);

/// Throws std::invalid_argument naming the paper when a record is invalid or
/// a paper_id repeats within the profile.
void validate_profile(const AuthorProfile& profile);

struct CitationDataset {
    std::vector<AuthorProfile> authors;
    std::string source;  // path, format and load time

    [[nodiscard]] const AuthorProfile* find(const std::string& author_id) const noexcept;
};

}  // namespace scindex
