#pragma once

// Per-author index reports, rankings and figure-data export.

#include "scindex/indices.hpp"
#include "scindex/ingest.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scindex {

enum class PolicySelection { Positional, Equal, Both };

[[nodiscard]] std::string_view to_string(PolicySelection selection) noexcept;

struct ReportOptions {
    PolicySelection policy = PolicySelection::Both;
    CoreBasis core_basis = CoreBasis::WeightedCitations;
    int rounding = 2;        // decimal places at serialization
    unsigned threads = 1;    // 0 = hardware concurrency
};

/// Every index for one author. Policy-specific fields are empty when that
/// policy was not requested.
struct IndexReport {
    std::string author_id;
    std::int64_t n_papers = 0;
    std::uint64_t total_citations = 0;
    std::int64_t h = 0;
    std::optional<std::int64_t> h_p;
    std::optional<std::int64_t> h_e;
    std::optional<Exact> psi_p;
    std::optional<Exact> psi_e;
    std::optional<Exact> xi_p;
    std::optional<Exact> xi_e;
    std::int64_t h_a = 0;
    std::int64_t h_f = 0;
    Exact h_m;

    friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

[[nodiscard]] IndexReport compute_report(const AuthorProfile& profile, const ReportOptions& options = {});

/// One report per author, in dataset order, independent of thread count.
[[nodiscard]] std::vector<IndexReport> compute_reports(const CitationDataset& dataset,
                                                       const ReportOptions& options = {});

/// Names accepted by rank_authors / index_value.
[[nodiscard]] const std::vector<std::string_view>& index_names();

/// Throws std::invalid_argument for an unknown name. Empty when the index
/// belongs to a policy that was not computed.
[[nodiscard]] std::optional<Exact> index_value(const IndexReport& report, std::string_view name);

struct RankingEntry {
    std::int64_t rank = 0;
    std::string author_id;
    Exact value;
};

struct AuthorRanking {
    std::string by;
    std::vector<RankingEntry> entries;
    std::vector<std::vector<std::string>> ties;  // groups of two or more sharing a rank
};

/// Descending by the named index. Tied authors share a rank and the next rank
/// skips by the size of the group (1, 2, 2, 4). Within a tie group authors are
/// listed by higher xi_p, then higher total citations, then author_id.
/// Throws std::invalid_argument for an unknown or uncomputed index.
[[nodiscard]] AuthorRanking rank_authors(const std::vector<IndexReport>& reports, std::string_view by);

enum class ReportFormat { Json, Table };

/// Full document: parameters, author reports and the ranking.
void emit_report(std::ostream& out, const std::vector<IndexReport>& reports, const AuthorRanking& ranking,
                 ReportFormat format, const ReportOptions& options);

/// The ranking alone.
void emit_ranking(std::ostream& out, const AuthorRanking& ranking, ReportFormat format, int rounding);

struct FigureOptions {
    std::int64_t k_max = 10;  // weight-curve range
    ReportOptions report;
};

inline constexpr int kFigurePlaces = 9;

/// Writes fig_weights.csv, fig_gaps.csv, fig_citations_raw.csv,
/// fig_citations_positional.csv and fig_citations_equal.csv into out_dir
/// (created if missing) and returns their paths. Citation series list every
/// paper ranked by raw citations; in_h_core marks the top-h papers.
/// Throws IoError when a file cannot be written.
std::vector<std::filesystem::path> emit_figure_data(const CitationDataset& dataset, const FigureOptions& options,
                                                    const std::filesystem::path& out_dir);

}  // namespace scindex
