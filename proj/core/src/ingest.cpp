#include "scindex/ingest.hpp"

#include "scindex/weights.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace scindex {

namespace {

using nlohmann::json;

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::array<char, 32> buf{};
    std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf.data();
}

std::string provenance(std::string_view source, std::string_view format) {
    return std::string(source) + " (" + std::string(format) + ", loaded " + timestamp_utc() + ")";
}

std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("error reading '" + path.string() + "'");
    }
    return text;
}

// Base-10 digits only; no sign, no whitespace. Leading zeros are fine.
template <typename Int>
std::optional<Int> parse_digits(std::string_view text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        return std::nullopt;
    }
    Int value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

// Collects records for one dataset and performs the checks shared by both
// input formats.
class DatasetBuilder {
public:
    /// Authors keep first-seen order.
    AuthorProfile& author(const std::string& author_id) {
        auto [it, inserted] = index_.try_emplace(author_id, authors_.size());
        if (inserted) {
            authors_.push_back(AuthorProfile{author_id, {}});
        }
        return authors_[it->second];
    }

    [[nodiscard]] bool has_author(const std::string& author_id) const { return index_.count(author_id) != 0; }

    /// Records the paper unless its id repeats. Returns the location of the
    /// earlier occurrence on a repeat.
    std::optional<std::string> add(const std::string& author_id, PaperRecord paper, std::string location) {
        auto key = author_id + '\x1f' + paper.paper_id;
        auto [it, inserted] = seen_.try_emplace(std::move(key), std::move(location));
        if (!inserted) {
            return it->second;
        }
        author(author_id).papers.push_back(std::move(paper));
        return std::nullopt;
    }

    std::vector<AuthorProfile> take() { return std::move(authors_); }

private:
    std::vector<AuthorProfile> authors_;
    std::unordered_map<std::string, std::size_t> index_;
    std::unordered_map<std::string, std::string> seen_;
};

// ---------------------------------------------------------------------------
//  CSV
// ---------------------------------------------------------------------------

constexpr std::array<std::string_view, 5> kRequiredColumns = {"author_id", "paper_id", "citations", "num_authors",
                                                              "author_position"};
constexpr std::string_view kAlphabeticalColumn = "alphabetical";

// Splits one line into fields. Returns an error message on malformed quoting.
std::optional<std::string> split_csv_line(std::string_view line, std::vector<std::string>& fields) {
    fields.clear();
    std::size_t i = 0;
    while (true) {
        std::string field;
        if (i < line.size() && line[i] == '"') {
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    closed = true;
                    break;
                }
                field += line[i++];
            }
            if (!closed) {
                return "unterminated quoted field";
            }
            if (i < line.size() && line[i] != ',') {
                return "unexpected character after closing quote";
            }
        } else {
            const std::size_t end = line.find(',', i);
            const std::string_view raw = line.substr(i, end == std::string_view::npos ? line.size() - i : end - i);
            if (raw.find('"') != std::string_view::npos) {
                return "quote inside unquoted field";
            }
            field.assign(raw);
            i += raw.size();
        }
        fields.push_back(std::move(field));
        if (i >= line.size()) {
            return std::nullopt;
        }
        ++i;  // past ','
        if (i == line.size()) {
            fields.emplace_back();
            return std::nullopt;
        }
    }
}

Issue row_issue(std::size_t row, std::string field, std::string message) {
    return Issue{"row " + std::to_string(row), std::move(field), std::move(message), row};
}

std::string quote_csv(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

// ---------------------------------------------------------------------------
//  JSON
// ---------------------------------------------------------------------------

std::string pointer(const std::string& base, std::string_view key) {
    std::string escaped;
    for (char c : key) {
        if (c == '~') {
            escaped += "~0";
        } else if (c == '/') {
            escaped += "~1";
        } else {
            escaped += c;
        }
    }
    return base + "/" + escaped;
}

std::string pointer(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

class JsonReader {
public:
    JsonReader(ValidationReport& report, const LoadOptions& options) : report_(report), options_(options) {}

    void error(const std::string& location, std::string field, std::string message) {
        report_.errors.push_back({location, std::move(field), std::move(message), std::nullopt});
    }

    void unknown_keys(const json& object, const std::string& base, std::initializer_list<std::string_view> known) {
        for (const auto& [key, value] : object.items()) {
            if (std::find(known.begin(), known.end(), key) != known.end()) {
                continue;
            }
            Issue issue{pointer(base, key), key, "unknown field", std::nullopt};
            (options_.lenient ? report_.warnings : report_.errors).push_back(std::move(issue));
        }
    }

    std::optional<std::string> string_field(const json& object, const std::string& base, std::string_view key) {
        const std::string loc = pointer(base, key);
        const auto it = object.find(key);
        if (it == object.end()) {
            error(loc, std::string(key), "missing required field");
            return std::nullopt;
        }
        if (!it->is_string()) {
            error(loc, std::string(key), "expected a string");
            return std::nullopt;
        }
        auto value = it->get<std::string>();
        if (value.empty()) {
            error(loc, std::string(key), "must not be empty");
            return std::nullopt;
        }
        return value;
    }

    std::optional<std::uint64_t> uint_field(const json& object, const std::string& base, std::string_view key) {
        const std::string loc = pointer(base, key);
        const auto it = object.find(key);
        if (it == object.end()) {
            error(loc, std::string(key), "missing required field");
            return std::nullopt;
        }
        if (!it->is_number_unsigned()) {
            error(loc, std::string(key), it->is_number() ? "expected a non-negative integer" : "expected a number");
            return std::nullopt;
        }
        return it->get<std::uint64_t>();
    }

private:
    ValidationReport& report_;
    const LoadOptions& options_;
};

}  // namespace

LoadResult parse_csv(std::istream& in, std::string_view source_name, const LoadOptions& options) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("error reading '" + std::string(source_name) + "'");
    }
    if (text.rfind("\xEF\xBB\xBF", 0) == 0) {
        text.erase(0, 3);
    }

    LoadResult result;
    ValidationReport& report = result.report;
    DatasetBuilder builder;

    std::vector<std::string> lines;
    {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string::npos) {
                if (start < text.size()) {
                    lines.push_back(text.substr(start));
                }
                break;
            }
            lines.push_back(text.substr(start, end - start));
            start = end + 1;
        }
        for (auto& line : lines) {
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
        }
    }

    if (lines.empty()) {
        report.errors.push_back(row_issue(1, "", "missing header row"));
        return result;
    }

    // Header
    std::vector<std::string> fields;
    std::map<std::string, std::size_t, std::less<>> column;
    std::optional<std::size_t> alpha_col;
    if (auto problem = split_csv_line(lines[0], fields)) {
        report.errors.push_back(row_issue(1, "", "malformed header: " + *problem));
        return result;
    }
    const std::size_t width = fields.size();
    for (std::size_t c = 0; c < fields.size(); ++c) {
        const std::string& name = fields[c];
        const bool known = std::find(kRequiredColumns.begin(), kRequiredColumns.end(), name) != kRequiredColumns.end() ||
                           name == kAlphabeticalColumn;
        if (!known) {
            Issue issue = row_issue(1, name, "unknown column '" + name + "'");
            (options.lenient ? report.warnings : report.errors).push_back(std::move(issue));
            continue;
        }
        if (!column.emplace(name, c).second) {
            report.errors.push_back(row_issue(1, name, "duplicate column '" + name + "'"));
        }
    }
    for (auto name : kRequiredColumns) {
        if (column.find(name) == column.end()) {
            report.errors.push_back(row_issue(1, std::string(name), "missing column '" + std::string(name) + "'"));
        }
    }
    if (auto it = column.find(kAlphabeticalColumn); it != column.end()) {
        alpha_col = it->second;
    }
    if (!report.ok()) {
        return result;
    }
    const auto col = [&](std::string_view name) { return column.find(name)->second; };

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t row = i + 1;
        if (lines[i].empty()) {
            if (i + 1 < lines.size()) {
                report.warnings.push_back(row_issue(row, "", "blank line skipped"));
            }
            continue;
        }
        if (auto problem = split_csv_line(lines[i], fields)) {
            report.errors.push_back(row_issue(row, "", *problem));
            continue;
        }
        if (fields.size() != width) {
            report.errors.push_back(row_issue(
                row, "", "expected " + std::to_string(width) + " fields, found " + std::to_string(fields.size())));
            continue;
        }

        const std::size_t before = report.errors.size();
        const std::string& author_id = fields[col("author_id")];
        PaperRecord paper;
        paper.paper_id = fields[col("paper_id")];
        if (author_id.empty()) {
            report.errors.push_back(row_issue(row, "author_id", "must not be empty"));
        }
        if (paper.paper_id.empty()) {
            report.errors.push_back(row_issue(row, "paper_id", "must not be empty"));
        }

        const std::string& citations = fields[col("citations")];
        if (auto v = parse_digits<std::uint64_t>(citations); !v) {
            report.errors.push_back(row_issue(row, "citations", "not a non-negative integer: '" + citations + "'"));
        } else if (*v > kMaxCitations) {
            report.errors.push_back(row_issue(row, "citations", "exceeds " + std::to_string(kMaxCitations)));
        } else {
            paper.citations = *v;
        }

        const std::string& num_authors = fields[col("num_authors")];
        bool have_k = false;
        if (auto v = parse_digits<std::int64_t>(num_authors); !v) {
            report.errors.push_back(row_issue(row, "num_authors", "not a positive integer: '" + num_authors + "'"));
        } else if (*v < 1 || *v > kMaxAuthors) {
            report.errors.push_back(
                row_issue(row, "num_authors", "must be in 1.." + std::to_string(kMaxAuthors) + ", got " + num_authors));
        } else {
            paper.num_authors = *v;
            have_k = true;
        }

        const std::string& position = fields[col("author_position")];
        if (auto v = parse_digits<std::int64_t>(position); !v) {
            report.errors.push_back(row_issue(row, "author_position", "not a positive integer: '" + position + "'"));
        } else if (*v < 1 || (have_k && *v > paper.num_authors) || (!have_k && *v > kMaxAuthors)) {
            report.errors.push_back(row_issue(
                row, "author_position",
                "position " + position + " outside 1.." + (have_k ? std::to_string(paper.num_authors) : "num_authors")));
        } else {
            paper.author_position = *v;
        }

        if (alpha_col) {
            const std::string& flag = fields[*alpha_col];
            if (flag == "true") {
                paper.alphabetical = true;
            } else if (flag != "false") {
                report.errors.push_back(row_issue(row, "alphabetical", "expected true or false, got '" + flag + "'"));
            }
        }

        if (report.errors.size() != before) {
            continue;
        }
        if (auto first = builder.add(author_id, std::move(paper), "row " + std::to_string(row))) {
            report.errors.push_back(row_issue(row, "paper_id",
                                              "duplicate paper_id '" + fields[col("paper_id")] + "' for author '" +
                                                  author_id + "' (first seen at " + *first + ")"));
        }
    }

    if (report.ok()) {
        result.dataset = CitationDataset{builder.take(), provenance(source_name, "csv")};
    }
    return result;
}

LoadResult parse_json(std::string_view text, std::string_view source_name, const LoadOptions& options) {
    LoadResult result;
    ValidationReport& report = result.report;
    JsonReader reader(report, options);

    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        report.errors.push_back({"byte " + std::to_string(e.byte), "", "malformed JSON: " + std::string(e.what()),
                                 std::nullopt});
        return result;
    }
    if (!doc.is_array()) {
        reader.error("", "", "top-level value must be an array of authors");
        return result;
    }

    DatasetBuilder builder;
    for (std::size_t a = 0; a < doc.size(); ++a) {
        const std::string base = pointer("", a);
        const json& entry = doc[a];
        if (!entry.is_object()) {
            reader.error(base, "", "author entry must be an object");
            continue;
        }
        reader.unknown_keys(entry, base, {"author_id", "papers"});
        auto author_id = reader.string_field(entry, base, "author_id");
        if (author_id && builder.has_author(*author_id)) {
            reader.error(pointer(base, "author_id"), "author_id", "duplicate author_id '" + *author_id + "'");
            author_id.reset();
        }
        const auto papers = entry.find("papers");
        if (papers == entry.end()) {
            reader.error(pointer(base, "papers"), "papers", "missing required field");
            continue;
        }
        if (!papers->is_array()) {
            reader.error(pointer(base, "papers"), "papers", "expected an array");
            continue;
        }
        if (author_id) {
            builder.author(*author_id);
        }
        for (std::size_t p = 0; p < papers->size(); ++p) {
            const std::string pbase = pointer(pointer(base, "papers"), p);
            const json& obj = (*papers)[p];
            if (!obj.is_object()) {
                reader.error(pbase, "", "paper entry must be an object");
                continue;
            }
            const std::size_t before = report.errors.size();
            reader.unknown_keys(obj, pbase, {"paper_id", "citations", "num_authors", "author_position", "alphabetical"});
            PaperRecord paper;
            const auto paper_id = reader.string_field(obj, pbase, "paper_id");
            const auto citations = reader.uint_field(obj, pbase, "citations");
            const auto num_authors = reader.uint_field(obj, pbase, "num_authors");
            const auto position = reader.uint_field(obj, pbase, "author_position");
            if (citations && *citations > kMaxCitations) {
                reader.error(pointer(pbase, "citations"), "citations", "exceeds " + std::to_string(kMaxCitations));
            }
            const bool k_ok = num_authors && *num_authors >= 1 && *num_authors <= std::uint64_t(kMaxAuthors);
            if (num_authors && !k_ok) {
                reader.error(pointer(pbase, "num_authors"), "num_authors",
                             "must be in 1.." + std::to_string(kMaxAuthors) + ", got " + std::to_string(*num_authors));
            }
            if (position && (*position < 1 || (k_ok && *position > *num_authors) || *position > std::uint64_t(kMaxAuthors))) {
                reader.error(pointer(pbase, "author_position"), "author_position",
                             "position " + std::to_string(*position) + " outside 1.." +
                                 (k_ok ? std::to_string(*num_authors) : std::string("num_authors")));
            }
            if (const auto alpha = obj.find("alphabetical"); alpha != obj.end()) {
                if (!alpha->is_boolean()) {
                    reader.error(pointer(pbase, "alphabetical"), "alphabetical", "expected a boolean");
                } else {
                    paper.alphabetical = alpha->get<bool>();
                }
            }
            if (report.errors.size() != before || !author_id) {
                continue;
            }
            paper.paper_id = *paper_id;
            paper.citations = *citations;
            paper.num_authors = static_cast<std::int64_t>(*num_authors);
            paper.author_position = static_cast<std::int64_t>(*position);
            if (auto first = builder.add(*author_id, std::move(paper), pbase)) {
                reader.error(pointer(pbase, "paper_id"), "paper_id",
                             "duplicate paper_id '" + *paper_id + "' (first seen at " + *first + ")");
            }
        }
    }

    if (report.ok()) {
        result.dataset = CitationDataset{builder.take(), provenance(source_name, "json")};
    }
    return result;
}

LoadResult load_csv(const std::filesystem::path& path, const LoadOptions& options) {
    std::istringstream in(read_all(path));
    return parse_csv(in, path.string(), options);
}

LoadResult load_json(const std::filesystem::path& path, const LoadOptions& options) {
    return parse_json(read_all(path), path.string(), options);
}

InputFormat detect_format(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".json" ? InputFormat::Json : InputFormat::Csv;
}

LoadResult load_dataset(const std::filesystem::path& path, const LoadOptions& options) {
    return detect_format(path) == InputFormat::Json ? load_json(path, options) : load_csv(path, options);
}

void write_csv(const CitationDataset& dataset, std::ostream& out) {
    bool any_alpha = false;
    for (const auto& a : dataset.authors) {
        for (const auto& p : a.papers) {
            any_alpha = any_alpha || p.alphabetical;
        }
    }
    out << "author_id,paper_id,citations,num_authors,author_position" << (any_alpha ? ",alphabetical" : "") << '\n';
    for (const auto& a : dataset.authors) {
        for (const auto& p : a.papers) {
            out << quote_csv(a.author_id) << ',' << quote_csv(p.paper_id) << ',' << p.citations << ',' << p.num_authors
                << ',' << p.author_position;
            if (any_alpha) {
                out << ',' << (p.alphabetical ? "true" : "false");
            }
            out << '\n';
        }
    }
}

void write_json(const CitationDataset& dataset, std::ostream& out) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& a : dataset.authors) {
        nlohmann::ordered_json papers = nlohmann::ordered_json::array();
        for (const auto& p : a.papers) {
            nlohmann::ordered_json obj;
            obj["paper_id"] = p.paper_id;
            obj["citations"] = p.citations;
            obj["num_authors"] = p.num_authors;
            obj["author_position"] = p.author_position;
            if (p.alphabetical) {
                obj["alphabetical"] = true;
            }
            papers.push_back(std::move(obj));
        }
        nlohmann::ordered_json entry;
        entry["author_id"] = a.author_id;
        entry["papers"] = std::move(papers);
        doc.push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
}

void write_validation_report(const ValidationReport& report, std::ostream& out) {
    const auto line = [&out](std::string_view kind, const Issue& issue) {
        out << kind << ": " << (issue.location.empty() ? "/" : issue.location);
        if (!issue.field.empty()) {
            out << " [" << issue.field << "]";
        }
        out << ": " << issue.message << '\n';
    };
    for (const auto& e : report.errors) {
        line("error", e);
    }
    for (const auto& w : report.warnings) {
        line("warning", w);
    }
    out << report.errors.size() << (report.errors.size() == 1 ? " error, " : " errors, ") << report.warnings.size()
        << (report.warnings.size() == 1 ? " warning" : " warnings") << '\n';
}

}  // namespace scindex
