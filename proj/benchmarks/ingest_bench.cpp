#include "scindex/ingest.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

namespace {

using namespace scindex;

std::string synthetic_csv(int rows) {
    std::mt19937_64 rng(7);
    std::ostringstream out;
    out << "author_id,paper_id,citations,num_authors,author_position\n";
    for (int i = 0; i < rows; ++i) {
        const auto k = 1 + rng() % 8;
        out << "author" << i % 97 << ",paper" << i << ',' << rng() % 5000 << ',' << k << ',' << 1 + rng() % k
            << '\n';
    }
    return out.str();
}

void BM_ParseCsv(benchmark::State& state) {
    const std::string text = synthetic_csv(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::istringstream in(text);
        benchmark::DoNotOptimize(parse_csv(in, "bench"));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseCsv)->Arg(1000)->Arg(100000);

void BM_ParseJson(benchmark::State& state) {
    std::istringstream csv(synthetic_csv(static_cast<int>(state.range(0))));
    const auto loaded = parse_csv(csv, "bench");
    std::ostringstream json;
    write_json(*loaded.dataset, json);
    const std::string text = json.str();
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_json(text, "bench"));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseJson)->Arg(1000)->Arg(100000);

}  // namespace
