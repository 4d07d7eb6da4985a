#include "cli.hpp"

#include "scindex/ingest.hpp"
#include "scindex/report.hpp"
#include "scindex/weights.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace scindex::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationFailed : std::runtime_error {
    explicit ValidationFailed(ValidationReport r) : std::runtime_error("validation failed"), report(std::move(r)) {}
    ValidationReport report;
};

struct Config {
    std::string input;
    std::string input_format = "auto";
    std::string output;
    std::string out_dir;
    std::string policy = "both";
    std::string core_basis = "weighted";
    std::optional<int> rounding;
    std::string format = "json";
    std::string by = "h";
    bool lenient = false;
    unsigned threads = 1;

    std::int64_t k_max = 10;
    bool exact = false;
    bool unreduced = false;
    int places = 4;
};

int default_rounding() {
    const char* env = std::getenv("SCINDEX_ROUNDING");
    if (env == nullptr || *env == '\0') {
        return 2;
    }
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used != std::string_view(env).size() || v < 0 || v > 30) {
            throw std::out_of_range("rounding");
        }
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("SCINDEX_ROUNDING must be an integer in 0..30, got '") + env + "'");
    }
}

ReportOptions report_options(const Config& cfg) {
    ReportOptions opts;
    opts.policy = cfg.policy == "positional" ? PolicySelection::Positional
                  : cfg.policy == "equal"    ? PolicySelection::Equal
                                             : PolicySelection::Both;
    opts.core_basis = cfg.core_basis == "raw" ? CoreBasis::RawCitations : CoreBasis::WeightedCitations;
    opts.rounding = cfg.rounding ? *cfg.rounding : default_rounding();
    opts.threads = cfg.threads;
    return opts;
}

LoadResult load(const Config& cfg, std::istream& in) {
    const LoadOptions options{cfg.lenient};
    const bool json = cfg.input_format == "json" ||
                      (cfg.input_format == "auto" && cfg.input != "-" && detect_format(cfg.input) == InputFormat::Json);
    if (cfg.input == "-") {
        if (json) {
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            return parse_json(text, "<stdin>", options);
        }
        return parse_csv(in, "<stdin>", options);
    }
    return json ? load_json(cfg.input, options) : load_csv(cfg.input, options);
}

CitationDataset load_valid(const Config& cfg, std::istream& in, std::ostream& err) {
    LoadResult result = load(cfg, in);
    if (!result.report.ok()) {
        throw ValidationFailed(std::move(result.report));
    }
    for (const auto& w : result.report.warnings) {
        err << "warning: " << w.location << (w.field.empty() ? "" : " [" + w.field + "]") << ": " << w.message << '\n';
    }
    return std::move(*result.dataset);
}

void check_index_name(const std::string& by) {
    const auto& names = index_names();
    if (std::find(names.begin(), names.end(), by) != names.end()) {
        return;
    }
    std::string list;
    for (auto n : names) {
        list += (list.empty() ? "" : ", ") + std::string(n);
    }
    throw UsageError("unknown index '" + by + "'; valid names: " + list);
}

// Writes to --output when given, otherwise to out.
template <typename Fn>
void with_output(const Config& cfg, std::ostream& out, Fn&& fn) {
    if (cfg.output.empty() || cfg.output == "-") {
        fn(out);
        return;
    }
    std::ostringstream buffer;
    fn(buffer);
    std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot write '" + cfg.output + "'");
    }
    file << buffer.str();
    file.close();
    if (!file) {
        throw IoError("error writing '" + cfg.output + "'");
    }
}

void add_input_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--input,-i", cfg.input, "Dataset file (.csv or .json); '-' reads stdin")->required();
    cmd->add_option("--input-format", cfg.input_format, "Input format")
        ->check(CLI::IsMember({"auto", "csv", "json"}));
    cmd->add_flag("--lenient", cfg.lenient, "Downgrade unknown fields/columns to warnings");
}

void add_report_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--policy", cfg.policy, "Weight policy")->check(CLI::IsMember({"positional", "equal", "both"}));
    cmd->add_option("--core-basis", cfg.core_basis, "Core used for weighted citation h-cuts")
        ->check(CLI::IsMember({"weighted", "raw"}));
    cmd->add_option("--rounding", cfg.rounding, "Decimal places for reals (default 2 or $SCINDEX_ROUNDING)")
        ->check(CLI::Range(0, 30));
    cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    cmd->add_option("--output,-o", cfg.output, "Write the document here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Author-level citation indices with positional and equal authorship weights", "scindex"};
    app.require_subcommand(1);

    auto* weights = app.add_subcommand("weights", "Print the positional weight table");
    weights->add_option("--k-max", cfg.k_max, "Largest author count");
    weights->add_flag("--exact", cfg.exact, "Print fractions instead of decimals");
    weights->add_flag("--unreduced", cfg.unreduced, "Fractions over k(k+1)/2 rather than lowest terms");
    weights->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "csv"}));
    weights->add_option("--places", cfg.places, "Decimal places in table mode")->check(CLI::Range(0, 30));

    auto* compute = app.add_subcommand("compute", "Compute every index for every author");
    add_input_options(compute, cfg);
    add_report_options(compute, cfg);
    compute->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    compute->add_option("--by", cfg.by, "Index used for the ranking section");

    auto* rank = app.add_subcommand("rank", "Rank authors by one index");
    add_input_options(rank, cfg);
    add_report_options(rank, cfg);
    rank->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    rank->add_option("--by", cfg.by, "Index to rank by")->required();

    auto* validate = app.add_subcommand("validate", "Check a dataset and list problems");
    add_input_options(validate, cfg);

    auto* figures = app.add_subcommand("figure-data", "Write the CSV series behind weight and citation plots");
    add_input_options(figures, cfg);
    figures->add_option("--out", cfg.out_dir, "Output directory")->required();
    figures->add_option("--k-max", cfg.k_max, "Largest author count in the weight curves");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (weights->parsed()) {
            if (cfg.k_max < 1 || cfg.k_max > kMaxAuthors) {
                throw UsageError("--k-max must be in 1.." + std::to_string(kMaxAuthors));
            }
            const FractionForm form = cfg.unreduced ? FractionForm::Unreduced : FractionForm::Reduced;
            if (cfg.format == "csv") {
                write_weight_csv(out, cfg.k_max, form);
            } else {
                write_weight_table(out, cfg.k_max, WeightTableStyle{cfg.exact, form, cfg.places});
            }
            return kOk;
        }

        if (validate->parsed()) {
            const LoadResult result = load(cfg, in);
            write_validation_report(result.report, out);
            return result.report.ok() ? kOk : kValidation;
        }

        if (figures->parsed()) {
            if (cfg.k_max < 1 || cfg.k_max > kMaxAuthors) {
                throw UsageError("--k-max must be in 1.." + std::to_string(kMaxAuthors));
            }
            const CitationDataset dataset = load_valid(cfg, in, err);
            FigureOptions options;
            options.k_max = cfg.k_max;
            for (const auto& path : emit_figure_data(dataset, options, cfg.out_dir)) {
                out << path.string() << '\n';
            }
            return kOk;
        }

        // compute / rank
        check_index_name(cfg.by);
        const ReportOptions options = report_options(cfg);
        const CitationDataset dataset = load_valid(cfg, in, err);
        const auto reports = compute_reports(dataset, options);
        const AuthorRanking ranking = rank_authors(reports, cfg.by);
        const ReportFormat format = cfg.format == "table" ? ReportFormat::Table : ReportFormat::Json;
        with_output(cfg, out, [&](std::ostream& os) {
            if (compute->parsed()) {
                emit_report(os, reports, ranking, format, options);
            } else {
                emit_ranking(os, ranking, format, options.rounding);
            }
        });
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ValidationFailed& e) {
        write_validation_report(e.report, err);
        return kValidation;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace scindex::cli
