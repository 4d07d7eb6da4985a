#pragma once

// Loading citation datasets from CSV and JSON.
//
// CSV: UTF-8, header row mandatory, columns
//     author_id,paper_id,citations,num_authors,author_position[,alphabetical]
// LF or CRLF line endings; fields may be double-quoted. Rows are addressed by
// their 1-based line number, so the header is row 1.
//
// JSON: a single top-level array
//     [{"author_id": "...", "papers": [{"paper_id": "...", "citations": 0,
//       "num_authors": 1, "author_position": 1, "alphabetical": false}]}]
// Records are addressed with JSON pointers ("/0/papers/3/num_authors").
//
// A load succeeds iff no errors were found; warnings never block.

#include "scindex/records.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scindex {

enum class InputFormat { Csv, Json };

struct Issue {
    std::string location;            // "row 7" or a JSON pointer
    std::string field;               // column / key name, empty for whole-record issues
    std::string message;
    std::optional<std::size_t> row;  // CSV only
};

struct ValidationReport {
    std::vector<Issue> errors;
    std::vector<Issue> warnings;

    [[nodiscard]] bool ok() const noexcept { return errors.empty(); }
};

struct LoadOptions {
    /// Unknown JSON keys and unknown CSV columns become warnings instead of errors.
    bool lenient = false;
};

struct LoadResult {
    std::optional<CitationDataset> dataset;  // set iff report.ok()
    ValidationReport report;
};

/// Raised when an input cannot be opened or read.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] LoadResult parse_csv(std::istream& in, std::string_view source_name, const LoadOptions& options = {});
[[nodiscard]] LoadResult parse_json(std::string_view text, std::string_view source_name,
                                    const LoadOptions& options = {});

/// Throw IoError when the file cannot be read.
[[nodiscard]] LoadResult load_csv(const std::filesystem::path& path, const LoadOptions& options = {});
[[nodiscard]] LoadResult load_json(const std::filesystem::path& path, const LoadOptions& options = {});

/// ".json" (any case) selects JSON, everything else CSV.
[[nodiscard]] InputFormat detect_format(const std::filesystem::path& path);
[[nodiscard]] LoadResult load_dataset(const std::filesystem::path& path, const LoadOptions& options = {});

void write_csv(const CitationDataset& dataset, std::ostream& out);
void write_json(const CitationDataset& dataset, std::ostream& out);

/// One line per issue, then "<n> errors, <m> warnings".
void write_validation_report(const ValidationReport& report, std::ostream& out);

}  // namespace scindex
