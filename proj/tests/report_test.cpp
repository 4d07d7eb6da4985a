#include "scindex/decimal.hpp"
#include "scindex/report.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace scindex {
namespace {

using testing::load_fixture;
using testing::read_file;

IndexReport stub(const std::string& id, std::int64_t h, std::int64_t h_e, double xi_p = 0, std::uint64_t total = 0) {
    IndexReport r;
    r.author_id = id;
    r.h = h;
    r.h_e = h_e;
    r.xi_p = Exact(static_cast<std::int64_t>(xi_p * 100)) / 100;
    r.total_citations = total;
    return r;
}

TEST(ComputeReports, TwoAuthors) {
    const auto reports = compute_reports(load_fixture("two_authors.csv"));
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_EQ(reports[0].h, 10);
    EXPECT_EQ(reports[1].h, 10);
    EXPECT_EQ(reports[0].h_p, 8);
    EXPECT_EQ(reports[1].h_p, 7);
    EXPECT_EQ(reports[1].xi_p, Exact(316) / 3);
    EXPECT_EQ(reports[0].n_papers, 12);
    EXPECT_LE(*reports[0].h_p, reports[0].h);
    EXPECT_LE(*reports[0].h_e, reports[0].h);
}

TEST(ComputeReports, EmptyDataset) { EXPECT_TRUE(compute_reports(CitationDataset{}).empty()); }

TEST(ComputeReports, PolicySelection) {
    ReportOptions opts;
    opts.policy = PolicySelection::Positional;
    const auto r = compute_reports(load_fixture("two_authors.csv"), opts);
    EXPECT_TRUE(r[0].h_p.has_value());
    EXPECT_FALSE(r[0].h_e.has_value());
    EXPECT_FALSE(r[0].xi_e.has_value());
    EXPECT_THROW((void)rank_authors(r, "h_e"), std::invalid_argument);
}

TEST(ComputeReports, ThreadCountDoesNotChangeResults) {
    CitationDataset ds;
    std::mt19937_64 rng(5);
    for (int a = 0; a < 40; ++a) {
        auto p = testing::random_profile(rng);
        p.author_id = "author" + std::to_string(a);
        ds.authors.push_back(std::move(p));
    }
    ReportOptions serial;
    ReportOptions parallel;
    parallel.threads = 4;
    EXPECT_EQ(compute_reports(ds, serial), compute_reports(ds, parallel));
    parallel.threads = 0;
    EXPECT_EQ(compute_reports(ds, serial), compute_reports(ds, parallel));
}

TEST(RankAuthors, SharedRanksSkip) {
    const std::vector<IndexReport> reports = {stub("A", 84, 43, 4568.91), stub("B", 73, 40, 4109.18),
                                              stub("C", 67, 36, 3469.41), stub("D", 62, 33, 2634.85),
                                              stub("E", 58, 33, 3724.68)};
    const auto ranking = rank_authors(reports, "h_e");
    ASSERT_EQ(ranking.entries.size(), 5u);
    EXPECT_EQ(ranking.entries[0].author_id, "A");
    EXPECT_EQ(ranking.entries[1].author_id, "B");
    EXPECT_EQ(ranking.entries[2].author_id, "C");
    EXPECT_EQ(ranking.entries[3].rank, 4);
    EXPECT_EQ(ranking.entries[4].rank, 4);
    // within the tie, higher xi_p first
    EXPECT_EQ(ranking.entries[3].author_id, "E");
    EXPECT_EQ(ranking.entries[4].author_id, "D");
    ASSERT_EQ(ranking.ties.size(), 1u);
    EXPECT_EQ(ranking.ties[0], (std::vector<std::string>{"E", "D"}));
}

TEST(RankAuthors, SingleAndIdentical) {
    auto one = rank_authors({stub("solo", 3, 2)}, "h");
    ASSERT_EQ(one.entries.size(), 1u);
    EXPECT_EQ(one.entries[0].rank, 1);
    EXPECT_TRUE(one.ties.empty());

    auto twins = rank_authors({stub("y", 3, 2), stub("x", 3, 2)}, "h");
    EXPECT_EQ(twins.entries[0].rank, 1);
    EXPECT_EQ(twins.entries[1].rank, 1);
    EXPECT_EQ(twins.entries[0].author_id, "x");
    ASSERT_EQ(twins.ties.size(), 1u);
    EXPECT_EQ(twins.ties[0].size(), 2u);

    // tie on value and xi_p: total citations decide
    auto by_total = rank_authors({stub("a", 3, 2, 1.0, 10), stub("b", 3, 2, 1.0, 20)}, "h");
    EXPECT_EQ(by_total.entries[0].author_id, "b");
}

TEST(RankAuthors, RankAfterTieSkipsGroupSize) {
    const auto r = rank_authors({stub("a", 5, 1), stub("b", 5, 1), stub("c", 4, 1)}, "h");
    EXPECT_EQ(r.entries[2].rank, 3);
}

TEST(RankAuthors, UnknownIndex) {
    EXPECT_THROW((void)rank_authors({stub("a", 1, 1)}, "g"), std::invalid_argument);
}

TEST(RankAuthors, FiveAuthorsLowestHOvertakes) {
    const auto reports = compute_reports(load_fixture("five_authors.csv"));
    const auto by_h = rank_authors(reports, "h");
    const auto by_hp = rank_authors(reports, "h_p");
    std::vector<std::string> h_order;
    for (const auto& e : by_h.entries) {
        h_order.push_back(e.author_id);
    }
    EXPECT_EQ(h_order, (std::vector<std::string>{"A", "B", "C", "D", "E"}));
    const auto pos = [&](const std::string& id) {
        for (std::size_t i = 0; i < by_hp.entries.size(); ++i) {
            if (by_hp.entries[i].author_id == id) {
                return i;
            }
        }
        return by_hp.entries.size();
    };
    EXPECT_LT(pos("E"), pos("D"));
}

TEST(RankAuthors, SingleAuthorPapersRankIdentically) {
    CitationDataset ds;
    std::mt19937_64 rng(9);
    for (int a = 0; a < 12; ++a) {
        auto p = testing::random_profile(rng, {15, 30, 1, true, 0.0});
        p.author_id = "s" + std::to_string(a);
        ds.authors.push_back(std::move(p));
    }
    const auto reports = compute_reports(ds);
    const auto by_h = rank_authors(reports, "h");
    for (const char* other : {"h_p", "h_e"}) {
        const auto r = rank_authors(reports, other);
        for (std::size_t i = 0; i < r.entries.size(); ++i) {
            EXPECT_EQ(r.entries[i].author_id, by_h.entries[i].author_id);
            EXPECT_EQ(r.entries[i].rank, by_h.entries[i].rank);
        }
    }
}

TEST(EmitReport, JsonSchemaAndRounding) {
    const auto reports = compute_reports(load_fixture("two_authors.csv"));
    const auto ranking = rank_authors(reports, "h");
    std::ostringstream out;
    emit_report(out, reports, ranking, ReportFormat::Json, ReportOptions{});
    const std::string text = out.str();
    const auto doc = nlohmann::json::parse(text);
    EXPECT_EQ(doc["parameters"]["core_basis"], "weighted");
    EXPECT_EQ(doc["parameters"]["rounding"], 2);
    EXPECT_EQ(doc["authors"].size(), 2u);
    EXPECT_EQ(doc["authors"][1]["xi_p"].get<double>(), 105.33);
    EXPECT_NE(text.find("\"xi_p\": 105.33"), std::string::npos);
    EXPECT_EQ(doc["ranking"]["by"], "h");
    EXPECT_EQ(doc["ranking"]["ties"].size(), 1u);
    // key order is fixed
    EXPECT_LT(text.find("\"parameters\""), text.find("\"authors\""));
    EXPECT_LT(text.find("\"authors\""), text.find("\"ranking\""));
    EXPECT_LT(text.find("\"h_p\""), text.find("\"h_e\""));

    std::ostringstream again;
    emit_report(again, reports, ranking, ReportFormat::Json, ReportOptions{});
    EXPECT_EQ(text, again.str());
}

TEST(EmitReport, RawBasisRounding) {
    ReportOptions opts;
    opts.core_basis = CoreBasis::RawCitations;
    const auto reports = compute_reports(load_fixture("two_authors.csv"), opts);
    std::ostringstream out;
    emit_report(out, reports, rank_authors(reports, "xi_p"), ReportFormat::Json, opts);
    const auto doc = nlohmann::json::parse(out.str());
    EXPECT_EQ(doc["authors"][0]["xi_p"].get<double>(), 4333.83);
    EXPECT_EQ(doc["authors"][1]["xi_p"].get<double>(), 123.33);
    EXPECT_EQ(doc["ranking"]["entries"][0]["author_id"], "A");
}

TEST(EmitReport, Table) {
    const auto reports = compute_reports(load_fixture("two_authors.csv"));
    std::ostringstream out;
    emit_report(out, reports, rank_authors(reports, "h_p"), ReportFormat::Table, ReportOptions{});
    const std::string text = out.str();
    EXPECT_NE(text.find("author_id"), std::string::npos);
    EXPECT_NE(text.find("105.33"), std::string::npos);
    EXPECT_NE(text.find("\nA "), std::string::npos);
    EXPECT_NE(text.find("\nB "), std::string::npos);
}

class FigureData : public ::testing::Test {
protected:
    void SetUp() override { dir_ = testing::temp_dir("fig"); }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::filesystem::path dir_;
};

TEST_F(FigureData, WritesFiveFiles) {
    const auto ds = load_fixture("two_authors.csv");
    const auto files = emit_figure_data(ds, FigureOptions{}, dir_);
    ASSERT_EQ(files.size(), 5u);
    for (const auto& f : files) {
        EXPECT_TRUE(std::filesystem::exists(f)) << f;
    }

    const auto weights = testing::read_file(dir_ / "fig_weights.csv");
    std::size_t rows = 0;
    for (char c : weights) {
        rows += c == '\n';
    }
    EXPECT_EQ(rows, 56u);  // header + 55
    EXPECT_NE(weights.find("\n4,2,0.300000000\n"), std::string::npos);

    const auto gaps = testing::read_file(dir_ / "fig_gaps.csv");
    EXPECT_NE(gaps.find("\n2,0.166666667,-0.166666667\n"), std::string::npos);
}

TEST_F(FigureData, CitationSeries) {
    const auto ds = load_fixture("two_authors.csv");
    (void)emit_figure_data(ds, FigureOptions{}, dir_);
    const auto raw = read_file(dir_ / "fig_citations_raw.csv");
    EXPECT_NE(raw.find("A,1,1,1048.000000000,true\n"), std::string::npos);
    EXPECT_NE(raw.find("A,10,10,10.000000000,true\n"), std::string::npos);
    EXPECT_NE(raw.find("A,11,11,8.000000000,false\n"), std::string::npos);

    const auto pos = read_file(dir_ / "fig_citations_positional.csv");
    EXPECT_NE(pos.find("A,1,1,698.666666667,true\n"), std::string::npos);
    EXPECT_NE(pos.find("A,2,2,997.000000000,true\n"), std::string::npos);  // not monotone

    const auto eq = read_file(dir_ / "fig_citations_equal.csv");
    EXPECT_NE(eq.find("A,8,8,5.000000000,true\n"), std::string::npos);  // 15 / 3
}

TEST_F(FigureData, SeriesSumToAggregate) {
    std::mt19937_64 rng(3);
    CitationDataset ds;
    for (int a = 0; a < 10; ++a) {
        auto p = testing::random_profile(rng);
        p.author_id = "r" + std::to_string(a);
        ds.authors.push_back(std::move(p));
    }
    (void)emit_figure_data(ds, FigureOptions{}, dir_);
    const auto reports = compute_reports(ds);
    std::map<std::string, double> sums;
    std::map<std::string, std::vector<double>> raw_series;
    std::istringstream pos(read_file(dir_ / "fig_citations_positional.csv"));
    std::istringstream raw(read_file(dir_ / "fig_citations_raw.csv"));
    std::string line;
    std::getline(pos, line);
    while (std::getline(pos, line)) {
        std::istringstream f(line);
        std::string author, rank, paper, value;
        std::getline(f, author, ',');
        std::getline(f, rank, ',');
        std::getline(f, paper, ',');
        std::getline(f, value, ',');
        sums[author] += std::stod(value);
    }
    std::getline(raw, line);
    while (std::getline(raw, line)) {
        std::istringstream f(line);
        std::string author, rank, paper, value;
        std::getline(f, author, ',');
        std::getline(f, rank, ',');
        std::getline(f, paper, ',');
        std::getline(f, value, ',');
        raw_series[author].push_back(std::stod(value));
    }
    for (const auto& r : reports) {
        // each value carries at most 5e-10 rounding error
        EXPECT_NEAR(sums[r.author_id], to_double(*r.psi_p), 1e-9 * static_cast<double>(r.n_papers + 1));
        const auto& series = raw_series[r.author_id];
        EXPECT_TRUE(std::is_sorted(series.rbegin(), series.rend()));
    }
}

TEST(FigureDataErrors, UnwritableDirectory) {
    const auto file = std::filesystem::temp_directory_path() / "scindex_not_a_dir";
    { std::ofstream(file) << "x"; }
    EXPECT_THROW((void)emit_figure_data(CitationDataset{}, FigureOptions{}, file / "sub"), IoError);
    std::filesystem::remove(file);
}

}  // namespace
}  // namespace scindex
