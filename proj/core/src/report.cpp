#include "scindex/report.hpp"

#include "scindex/decimal.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace scindex {

namespace {

using ojson = nlohmann::ordered_json;

bool wants(PolicySelection sel, WeightPolicy policy) {
    return sel == PolicySelection::Both || (sel == PolicySelection::Positional) == (policy == WeightPolicy::Positional);
}

ojson real(const Exact& value, int places) { return to_double(round_half_even(value, places)); }

template <typename T>
ojson optional_int(const std::optional<T>& v) {
    return v ? ojson(*v) : ojson(nullptr);
}

ojson optional_real(const std::optional<Exact>& v, int places) { return v ? real(*v, places) : ojson(nullptr); }

bool is_integral_index(std::string_view name) {
    return name != "psi_p" && name != "psi_e" && name != "xi_p" && name != "xi_e" && name != "h_m";
}

ojson value_json(std::string_view by, const Exact& value, int places) {
    if (is_integral_index(by)) {
        return static_cast<std::int64_t>(boost::multiprecision::numerator(value));
    }
    return real(value, places);
}

std::string value_text(std::string_view by, const Exact& value, int places) {
    return is_integral_index(by) ? format_fixed(value, 0) : format_fixed(value, places);
}

ojson ranking_json(const AuthorRanking& ranking, int places) {
    ojson doc;
    doc["by"] = ranking.by;
    ojson entries = ojson::array();
    for (const auto& e : ranking.entries) {
        ojson row;
        row["rank"] = e.rank;
        row["author_id"] = e.author_id;
        row["value"] = value_json(ranking.by, e.value, places);
        entries.push_back(std::move(row));
    }
    doc["entries"] = std::move(entries);
    doc["ties"] = ranking.ties;
    return doc;
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) {
            width[c] = std::max(width[c], r[c].size());
        }
    }
    const auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) {
                line += "  ";
            }
            // First column left-aligned, numbers right-aligned.
            const std::string pad(width[c] - cells[c].size(), ' ');
            line += c == 0 ? cells[c] + pad : pad + cells[c];
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out << line << '\n';
    };
    emit(header);
    for (const auto& r : rows) {
        emit(r);
    }
}

std::string opt_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }
std::string opt_text(const std::optional<Exact>& v, int places) { return v ? format_fixed(*v, places) : "-"; }

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    return out;
}

void close_output(std::ofstream& out, const std::filesystem::path& path) {
    out.close();
    if (!out) {
        throw IoError("error writing '" + path.string() + "'");
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + '"';
}

}  // namespace

std::string_view to_string(PolicySelection selection) noexcept {
    switch (selection) {
        case PolicySelection::Positional: return "positional";
        case PolicySelection::Equal: return "equal";
        case PolicySelection::Both: return "both";
    }
    return "unknown";
}

IndexReport compute_report(const AuthorProfile& profile, const ReportOptions& options) {
    IndexReport r;
    r.author_id = profile.author_id;
    r.n_papers = static_cast<std::int64_t>(profile.papers.size());
    r.total_citations = profile.total_citations();
    r.h = h_index(profile);
    if (wants(options.policy, WeightPolicy::Positional)) {
        r.h_p = weighted_h_index(profile, WeightPolicy::Positional).index_value;
        r.psi_p = weighted_citation_aggregate(profile, WeightPolicy::Positional);
        r.xi_p = weighted_citation_h_cut(profile, WeightPolicy::Positional, options.core_basis);
    }
    if (wants(options.policy, WeightPolicy::Equal)) {
        r.h_e = weighted_h_index(profile, WeightPolicy::Equal).index_value;
        r.psi_e = weighted_citation_aggregate(profile, WeightPolicy::Equal);
        r.xi_e = weighted_citation_h_cut(profile, WeightPolicy::Equal, options.core_basis);
    }
    r.h_a = adaptive_pure_h(profile);
    r.h_f = fractional_h(profile);
    r.h_m = modified_h(profile);
    return r;
}

std::vector<IndexReport> compute_reports(const CitationDataset& dataset, const ReportOptions& options) {
    const std::size_t n = dataset.authors.size();
    std::vector<IndexReport> reports(n);
    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            reports[i] = compute_report(dataset.authors[i], options);
        }
        return reports;
    }

    // Each slot is written by exactly one worker; output order is the dataset order.
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < n; i = next++) {
                    reports[i] = compute_report(dataset.authors[i], options);
                }
            } catch (...) {
                failures[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    return reports;
}

const std::vector<std::string_view>& index_names() {
    static const std::vector<std::string_view> names = {"h",    "h_p",  "h_e", "psi_p", "psi_e", "xi_p",
                                                        "xi_e", "h_a",  "h_f", "h_m",   "n_papers"};
    return names;
}

std::optional<Exact> index_value(const IndexReport& r, std::string_view name) {
    const auto wrap = [](const auto& v) -> std::optional<Exact> {
        if (!v) {
            return std::nullopt;
        }
        return Exact(*v);
    };
    if (name == "h") return Exact(r.h);
    if (name == "h_p") return wrap(r.h_p);
    if (name == "h_e") return wrap(r.h_e);
    if (name == "psi_p") return r.psi_p;
    if (name == "psi_e") return r.psi_e;
    if (name == "xi_p") return r.xi_p;
    if (name == "xi_e") return r.xi_e;
    if (name == "h_a") return Exact(r.h_a);
    if (name == "h_f") return Exact(r.h_f);
    if (name == "h_m") return r.h_m;
    if (name == "n_papers") return Exact(r.n_papers);
    throw std::invalid_argument("unknown index '" + std::string(name) + "'");
}

AuthorRanking rank_authors(const std::vector<IndexReport>& reports, std::string_view by) {
    struct Keyed {
        const IndexReport* report;
        Exact value;
        Exact xi_p;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(reports.size());
    for (const auto& r : reports) {
        auto v = index_value(r, by);
        if (!v) {
            throw std::invalid_argument("index '" + std::string(by) + "' was not computed for this policy selection");
        }
        keyed.push_back({&r, std::move(*v), r.xi_p.value_or(Exact(0))});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.xi_p != b.xi_p) return a.xi_p > b.xi_p;
        if (a.report->total_citations != b.report->total_citations) {
            return a.report->total_citations > b.report->total_citations;
        }
        return a.report->author_id < b.report->author_id;
    });

    AuthorRanking ranking;
    ranking.by = std::string(by);
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        std::int64_t rank = static_cast<std::int64_t>(i) + 1;
        if (i > 0 && keyed[i].value == keyed[i - 1].value) {
            rank = ranking.entries.back().rank;
        }
        ranking.entries.push_back({rank, keyed[i].report->author_id, keyed[i].value});
    }
    for (std::size_t i = 0; i < ranking.entries.size();) {
        std::size_t j = i;
        while (j < ranking.entries.size() && ranking.entries[j].rank == ranking.entries[i].rank) {
            ++j;
        }
        if (j - i > 1) {
            auto& group = ranking.ties.emplace_back();
            for (std::size_t t = i; t < j; ++t) {
                group.push_back(ranking.entries[t].author_id);
            }
        }
        i = j;
    }
    return ranking;
}

void emit_ranking(std::ostream& out, const AuthorRanking& ranking, ReportFormat format, int rounding) {
    if (format == ReportFormat::Json) {
        out << ranking_json(ranking, rounding).dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : ranking.entries) {
        rows.push_back({std::to_string(e.rank), e.author_id, value_text(ranking.by, e.value, rounding)});
    }
    write_table(out, {"rank", "author_id", ranking.by}, rows);
}

void emit_report(std::ostream& out, const std::vector<IndexReport>& reports, const AuthorRanking& ranking,
                 ReportFormat format, const ReportOptions& options) {
    const int places = options.rounding;
    if (format == ReportFormat::Json) {
        ojson doc;
        doc["parameters"]["policy"] = to_string(options.policy);
        doc["parameters"]["core_basis"] = to_string(options.core_basis);
        doc["parameters"]["rounding"] = places;
        ojson authors = ojson::array();
        for (const auto& r : reports) {
            ojson a;
            a["author_id"] = r.author_id;
            a["n_papers"] = r.n_papers;
            a["total_citations"] = r.total_citations;
            a["h"] = r.h;
            a["h_p"] = optional_int(r.h_p);
            a["h_e"] = optional_int(r.h_e);
            a["psi_p"] = optional_real(r.psi_p, places);
            a["psi_e"] = optional_real(r.psi_e, places);
            a["xi_p"] = optional_real(r.xi_p, places);
            a["xi_e"] = optional_real(r.xi_e, places);
            a["h_a"] = r.h_a;
            a["h_f"] = r.h_f;
            a["h_m"] = real(r.h_m, places);
            authors.push_back(std::move(a));
        }
        doc["authors"] = std::move(authors);
        doc["ranking"] = ranking_json(ranking, places);
        out << doc.dump(2) << '\n';
        return;
    }

    out << "policy=" << to_string(options.policy) << " core_basis=" << to_string(options.core_basis)
        << " rounding=" << places << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) {
        rows.push_back({r.author_id, std::to_string(r.n_papers), std::to_string(r.h), opt_text(r.h_p),
                        opt_text(r.h_e), opt_text(r.psi_p, places), opt_text(r.psi_e, places),
                        opt_text(r.xi_p, places), opt_text(r.xi_e, places), std::to_string(r.h_a),
                        std::to_string(r.h_f), format_fixed(r.h_m, places)});
    }
    write_table(out,
                {"author_id", "n_papers", "h", "h_p", "h_e", "psi_p", "psi_e", "xi_p", "xi_e", "h_a", "h_f", "h_m"},
                rows);
    out << '\n';
    emit_ranking(out, ranking, format, places);
}

std::vector<std::filesystem::path> emit_figure_data(const CitationDataset& dataset, const FigureOptions& options,
                                                    const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());
    }

    std::vector<std::filesystem::path> written;

    {
        const auto path = out_dir / "fig_weights.csv";
        auto out = open_output(path);
        out << "k,j,weight\n";
        for (std::int64_t k = 1; k <= options.k_max; ++k) {
            for (std::int64_t j = 1; j <= k; ++j) {
                out << k << ',' << j << ',' << format_fixed(positional_weight(k, j), kFigurePlaces) << '\n';
            }
        }
        close_output(out, path);
        written.push_back(path);
    }
    {
        const auto path = out_dir / "fig_gaps.csv";
        auto out = open_output(path);
        out << "k,first_author_gap,last_author_gap\n";
        for (std::int64_t k = 1; k <= options.k_max; ++k) {
            out << k << ',' << format_fixed(positional_vs_equal_gap(k, 1), kFigurePlaces) << ','
                << format_fixed(positional_vs_equal_gap(k, k), kFigurePlaces) << '\n';
        }
        close_output(out, path);
        written.push_back(path);
    }

    struct Series {
        const char* file;
        std::optional<WeightPolicy> policy;  // empty = raw citations
    };
    const Series series[] = {{"fig_citations_raw.csv", std::nullopt},
                             {"fig_citations_positional.csv", WeightPolicy::Positional},
                             {"fig_citations_equal.csv", WeightPolicy::Equal}};
    for (const auto& s : series) {
        const auto path = out_dir / s.file;
        auto out = open_output(path);
        out << "author_id,paper_rank,paper_id,value,in_h_core\n";
        for (const auto& author : dataset.authors) {
            std::vector<const PaperRecord*> order;
            for (const auto& p : author.papers) {
                order.push_back(&p);
            }
            std::sort(order.begin(), order.end(), [](const PaperRecord* a, const PaperRecord* b) {
                return a->citations != b->citations ? a->citations > b->citations : a->paper_id < b->paper_id;
            });
            const auto h = static_cast<std::size_t>(h_index(author));
            for (std::size_t i = 0; i < order.size(); ++i) {
                const PaperRecord& p = *order[i];
                Exact value(p.citations);
                if (s.policy) {
                    value *= paper_weight(p, *s.policy).to_exact();
                }
                out << csv_field(author.author_id) << ',' << (i + 1) << ',' << csv_field(p.paper_id) << ','
                    << format_fixed(value, kFigurePlaces) << ',' << (i < h ? "true" : "false") << '\n';
            }
        }
        close_output(out, path);
        written.push_back(path);
    }
    return written;
}

}  // namespace scindex
